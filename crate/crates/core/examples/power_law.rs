// Fit a power law to a degree sequence whose histogram follows k^-2.

use pvg::metrics::{power_law_exponent, PowerLawFit};

/// Degrees 1, 2, 4, ..., 64 with counts proportional to k^-2.
pub fn run_example() -> pvg::Result<PowerLawFit> {
    let mut degrees = Vec::new();
    for i in 0..7u32 {
        let k = 1usize << i;
        degrees.extend(std::iter::repeat_n(k, 1usize << (2 * (6 - i))));
    }
    power_law_exponent(&degrees)
}

fn main() -> pvg::Result<()> {
    let fit = run_example()?;
    println!("gamma = {:.6}, R^2 = {:.6}, distinct degrees = {}", fit.gamma, fit.r2, fit.support);
    Ok(())
}
