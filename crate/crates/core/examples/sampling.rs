//! Exact sampling from the mixed measure with a fixed seed.

use std::collections::BTreeMap;

use zmeasures::measure::{sample, sample_fit, Params};
use zmeasures::scalar::c64;

fn main() -> zmeasures::Result<()> {
    let p = Params::new(c64(0.3, 0.0), c64(0.7, 0.0), c64(0.3, 0.0))?;
    let s = sample(&p, 20_000, 40, 7, 1e-12)?;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for l in &s.draws {
        *counts.entry(l.size()).or_default() += 1;
    }
    for (n, c) in counts {
        println!("|lambda| = {n:>2}: {c}");
    }
    let largest = s.draws.iter().max_by_key(|l| l.size()).unwrap();
    println!("largest draw: ({largest})");
    let fit = sample_fit(&s.draws, &p, 40, 8)?;
    println!("chi2 = {:.2} on {} dof, p = {:.3}", fit.statistic, fit.dof, fit.p_value);
    Ok(())
}
