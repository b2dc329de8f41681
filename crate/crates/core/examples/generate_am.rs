// Generate an amplitude-modulated test signal and write it as CSV.
//
// Run with `cargo run --example generate_am -- [out.csv]`.

use pvg::series::io::write_series;
use pvg::{generate_am, AmSignalParams, TimeSeries};

pub fn run_example() -> pvg::Result<TimeSeries> {
    let params = AmSignalParams { noise_std: 0.0, ..AmSignalParams::default() };
    generate_am(&params)
}

fn main() -> pvg::Result<()> {
    let signal = run_example()?;
    println!("samples: {}, dt: {} s, rms: {:.6}", signal.len(), signal.dt(), signal.rms());
    match std::env::args().nth(1) {
        Some(path) => pvg::series::io::save_series(&signal, path.as_ref())?,
        None => {
            let head = TimeSeries::new(signal.values()[..5].to_vec(), signal.dt())?;
            write_series(&head, std::io::stdout())?;
        }
    }
    Ok(())
}
