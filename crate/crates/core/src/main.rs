fn main() {
    std::process::exit(pvg::cli::main());
}
