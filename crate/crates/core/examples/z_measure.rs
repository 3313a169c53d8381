//! The z-measure M_n in exact arithmetic, and the mixed measure M in floats.

use zmeasures::measure::{mixed_weight, normalize_check, size_distribution, zmeasure_n, Params};
use zmeasures::partition::enumerate_partitions;
use zmeasures::scalar::{c64, GaussRat, Scalar};

fn main() -> zmeasures::Result<()> {
    let p = Params::new(GaussRat::from_i64(2), GaussRat::from_i64(3), GaussRat::from_i64(0))?;
    println!("M_4 with z = 2, z' = 3:");
    for lambda in enumerate_partitions(4) {
        println!("  {:<10} {}", format!("({lambda})"), zmeasure_n(&lambda, &p)?.to_text());
    }
    for n in 0..=10 {
        assert_eq!(normalize_check(n, &p)?, GaussRat::from_i64(1));
    }
    println!("sum over |lambda| = n is exactly 1 for n <= 10");

    // principal series: z' is the complex conjugate of z
    let q = Params::new(c64(0.5, 1.0), c64(0.5, -1.0), c64(0.4, 0.0))?;
    let sizes = size_distribution(&q, 6)?;
    println!("\nmixed measure, z = 1/2 + i, xi = 0.4");
    for (n, w) in sizes.iter().enumerate() {
        let shell: f64 = enumerate_partitions(n).iter().map(|l| mixed_weight(l, &q).unwrap().re).sum();
        println!("  P(|lambda| = {n}) = {:.6}  (sum over shell {:.6})", w.re, shell);
    }
    Ok(())
}
