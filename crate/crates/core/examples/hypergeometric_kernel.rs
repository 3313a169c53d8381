//! The hypergeometric kernel: series form against closed form.

use zmeasures::kernel::{KernelMatrix, KernelSpec, Method};
use zmeasures::partition::HalfInt;
use zmeasures::scalar::c64;

fn main() -> zmeasures::Result<()> {
    let points: Vec<HalfInt> = (-3..3).map(|k| HalfInt::from_twice(2 * k + 1)).collect();
    for xi in [0.1, 0.5, 0.8] {
        let ks = KernelSpec::new(c64(1.0, 2.0), c64(1.0, -2.0), xi)?;
        let closed = KernelMatrix::build(&points, &ks, Method::Closed, 1e-15)?;
        let series = KernelMatrix::build(&points, &ks, Method::Series, 1e-15)?;
        println!("xi = {xi}: max |series - closed| = {:.2e}", closed.max_difference(&series));
        let diag: Vec<String> = closed.entries.iter().enumerate().map(|(a, row)| format!("{:.4}", row[a].re)).collect();
        println!("  density K(x,x) on -5/2..5/2: {}", diag.join(" "));
    }
    Ok(())
}
