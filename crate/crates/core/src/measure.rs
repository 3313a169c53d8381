//! The z-measures
//!
//! ```text
//! M_n(λ) = n!/(zz')_n · ∏_{□ ∈ λ} (z + c(□))(z' + c(□)) / h(□)²
//! ```
//!
//! and their negative binomial mixture
//! `M(λ) = (1−ξ)^{zz'} ξ^{|λ|} (zz')_{|λ|}/|λ|! · M_{|λ|}(λ)`.

use std::collections::btree_map::{BTreeMap, Entry};

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::kerov::KerovParams;
use crate::partition::{enumerate_partitions, partitions_up_to, HalfInt, MayaSet, Partition};
use crate::scalar::{Scalar, C64};
use crate::sl2me::{poch_rising, SeriesClass};

/// `(z, z', ξ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<S> {
    pub z: S,
    pub zp: S,
    pub xi: S,
}

impl<S: Scalar> Params<S> {
    /// Fails unless `ξ` is real with `0 ≤ ξ < 1`.
    pub fn new(z: S, zp: S, xi: S) -> Result<Self> {
        let x = xi.to_c64();
        if x.im != 0.0 || !(0.0..1.0).contains(&x.re) {
            return Err(Error::XiOutOfRange(x.re));
        }
        Ok(Params { z, zp, xi })
    }

    pub fn zzp(&self) -> S {
        self.z.clone() * self.zp.clone()
    }

    pub fn series_class(&self) -> SeriesClass {
        SeriesClass::classify(&self.z, &self.zp)
    }

    pub fn kerov(&self) -> KerovParams<S> {
        KerovParams::new(self.z.clone(), self.zp.clone())
    }

    pub fn to_c64(&self) -> Params<C64> {
        Params { z: self.z.to_c64(), zp: self.zp.to_c64(), xi: self.xi.to_c64() }
    }
}

/// `∏_{□} (z + c)(z' + c)/h²`.
fn content_product<S: Scalar>(lambda: &Partition, z: &S, zp: &S) -> S {
    let hooks = lambda.hook_lengths();
    lambda.squares().zip(hooks).fold(S::one(), |acc, (sq, h)| {
        let c = S::from_i64(sq.content());
        let h = S::from_i64(h as i64);
        acc * (z.clone() + c.clone()) * (zp.clone() + c) / (h.clone() * h)
    })
}

fn factorial_scalar<S: Scalar>(n: usize) -> S {
    (1..=n as i64).fold(S::one(), |acc, k| acc * S::from_i64(k))
}

/// `M_n(λ)` with `n = |λ|`.
pub fn zmeasure_n<S: Scalar>(lambda: &Partition, p: &Params<S>) -> Result<S> {
    let n = lambda.size();
    let poch = poch_rising(&p.zzp(), n);
    if poch.is_zero() {
        return Err(Error::PochhammerZero { n });
    }
    Ok(factorial_scalar::<S>(n) / poch * content_product(lambda, &p.z, &p.zp))
}

/// `Σ_{|λ| = n} M_n(λ)`.
pub fn normalize_check<S: Scalar>(n: usize, p: &Params<S>) -> Result<S> {
    let poch = poch_rising(&p.zzp(), n);
    if poch.is_zero() {
        return Err(Error::PochhammerZero { n });
    }
    let sum = enumerate_partitions(n)
        .iter()
        .fold(S::zero(), |acc, l| acc + content_product(l, &p.z, &p.zp));
    Ok(factorial_scalar::<S>(n) / poch * sum)
}

/// `(1−ξ)^{zz'}`; exact backends need integral `zz'`.
pub fn vacuum_mass<S: Scalar>(p: &Params<S>) -> Result<S> {
    let base = S::one() - p.xi.clone();
    S::real_pow(&base, &p.zzp()).ok_or_else(|| {
        Error::NotExact(format!("(1-xi)^(zz') with zz' = {}", p.zzp().to_text()))
    })
}

/// `M(λ) = (1−ξ)^{zz'} ξ^{|λ|} ∏ (z + c)(z' + c)/h²`.
pub fn mixed_weight<S: Scalar>(lambda: &Partition, p: &Params<S>) -> Result<S> {
    Ok(mixed_weight_with(lambda, p, &vacuum_mass(p)?))
}

fn mixed_weight_with<S: Scalar>(lambda: &Partition, p: &Params<S>, vacuum: &S) -> S {
    let xi_n = (0..lambda.size()).fold(S::one(), |acc, _| acc * p.xi.clone());
    vacuum.clone() * xi_n * content_product(lambda, &p.z, &p.zp)
}

/// `(1−ξ)^{zz'} ξⁿ (zz')_n / n!` for `n = 0, …, n_max`.
pub fn size_distribution<S: Scalar>(p: &Params<S>, n_max: usize) -> Result<Vec<S>> {
    let mut term = vacuum_mass(p)?;
    let zzp = p.zzp();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(term.clone());
        term = term * p.xi.clone() * (zzp.clone() + S::from_i64(n as i64)) / S::from_i64(n as i64 + 1);
    }
    Ok(out)
}

/// Mass of `{|λ| > N}` under the mixture.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TailBound {
    pub truncation_size: usize,
    pub bound: f64,
    /// `true` when the mixture is a probability measure and `bound` is a
    /// genuine upper bound; otherwise `bound` is the size of the last
    /// included shell, a heuristic.
    pub rigorous: bool,
}

/// `Σ_{n > N} (1−ξ)^{zz'} ξⁿ (zz')_n / n!` for real `zz' > 0`, summed with a
/// geometric bound on the remainder.
pub fn negative_binomial_tail(zzp: f64, xi: f64, n_max: usize) -> f64 {
    if xi == 0.0 {
        return 0.0;
    }
    let log_vac = zzp * (1.0 - xi).ln();
    // log of the n = N+1 term
    let mut log_term = log_vac;
    for n in 0..=n_max {
        log_term += xi.ln() + (zzp + n as f64).ln() - (n as f64 + 1.0).ln();
    }
    let mut term = log_term.exp();
    let mut sum = 0.0;
    let mut n = n_max + 1;
    loop {
        sum += term;
        let ratio = xi * (zzp + n as f64) / (n as f64 + 1.0);
        let rho = ratio.max(xi);
        if rho < 1.0 && term * rho / (1.0 - rho) <= 1e-17 * sum.max(f64::MIN_POSITIVE) {
            return sum + term * rho / (1.0 - rho);
        }
        term *= ratio;
        n += 1;
        if n > n_max + 100_000 {
            return sum + term / (1.0 - xi);
        }
    }
}

fn tail_for<S: Scalar>(p: &Params<S>, n_max: usize, last_shell: f64) -> TailBound {
    let zzp = p.zzp().to_c64();
    if p.series_class().is_positive() && zzp.im.abs() < 1e-12 && zzp.re > 0.0 {
        TailBound {
            truncation_size: n_max,
            bound: negative_binomial_tail(zzp.re, p.xi.to_c64().re, n_max),
            rigorous: true,
        }
    } else {
        TailBound { truncation_size: n_max, bound: last_shell, rigorous: false }
    }
}

/// All `|λ| ≤ N` with their Maya sets and mixture weights, enumerated once and
/// reused across point sets.
#[derive(Clone, Debug)]
pub struct CorrelationTable<S> {
    entries: Vec<(MayaSet, S)>,
    tail: TailBound,
}

impl<S: Scalar> CorrelationTable<S> {
    pub fn new(p: &Params<S>, n_max: usize) -> Result<Self> {
        let vacuum = vacuum_mass(p)?;
        let mut last_shell = 0.0;
        let entries: Vec<(MayaSet, S)> = partitions_up_to(n_max)
            .into_iter()
            .map(|l| {
                let w = mixed_weight_with(&l, p, &vacuum);
                if l.size() == n_max {
                    last_shell += w.abs_f64();
                }
                (l.maya(), w)
            })
            .collect();
        Ok(CorrelationTable { entries, tail: tail_for(p, n_max, last_shell) })
    }

    /// `Σ_{|λ| ≤ N, X ⊂ S(λ)} M(λ)`.
    pub fn rho(&self, x: &[HalfInt]) -> S {
        self.entries
            .iter()
            .filter(|(s, _)| x.iter().all(|&k| s.contains(k)))
            .fold(S::zero(), |acc, (_, w)| acc + w.clone())
    }

    /// `Σ_{|λ| ≤ N} M(λ)`.
    pub fn total(&self) -> S {
        self.rho(&[])
    }

    pub fn tail(&self) -> TailBound {
        self.tail
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `ρ(X) = M({λ : X ⊂ S(λ)})` summed over `|λ| ≤ N`.
pub fn brute_corr<S: Scalar>(x: &[HalfInt], p: &Params<S>, n_max: usize) -> Result<(S, TailBound)> {
    let table = CorrelationTable::new(p, n_max)?;
    Ok((table.rho(x), table.tail()))
}

/// Draws from the mixture truncated at `|λ| ≤ N` and renormalised.
#[derive(Clone, Debug)]
pub struct Sample {
    pub draws: Vec<Partition>,
    pub tail: TailBound,
}

/// Exact sampler: `n` from the truncated negative binomial law, then `λ` from
/// `M_n` over all partitions of `n`. Uses `ChaCha8Rng::seed_from_u64(seed)`, so
/// the output depends only on the arguments.
pub fn sample(p: &Params<C64>, count: usize, n_max: usize, seed: u64, max_tail: f64) -> Result<Sample> {
    let class = p.series_class();
    let zzp = p.zzp();
    if !class.is_positive() || zzp.re <= 0.0 {
        return Err(Error::NotPositiveSeries(format!("z={}, zp={}", p.z.to_text(), p.zp.to_text())));
    }
    let tail = tail_for(p, n_max, 0.0);
    if tail.bound > max_tail {
        return Err(Error::TailTooLarge { bound: tail.bound, allowed: max_tail });
    }
    let sizes: Vec<f64> = size_distribution(p, n_max)?.iter().map(|w| w.re).collect();
    let size_index = WeightedIndex::new(&sizes).map_err(|e| Error::NotPositiveSeries(e.to_string()))?;
    let mut shells: BTreeMap<usize, (Vec<Partition>, WeightedIndex<f64>)> = BTreeMap::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(count);
    for _ in 0..count {
        let n = size_index.sample(&mut rng);
        if let Entry::Vacant(slot) = shells.entry(n) {
            let parts = enumerate_partitions(n);
            let weights = parts
                .iter()
                .map(|l| zmeasure_n(l, p).map(|w| w.re.max(0.0)))
                .collect::<Result<Vec<f64>>>()?;
            let index = WeightedIndex::new(&weights).map_err(|e| Error::NotPositiveSeries(e.to_string()))?;
            slot.insert((parts, index));
        }
        let (parts, index) = &shells[&n];
        draws.push(parts[index.sample(&mut rng)].clone());
    }
    Ok(Sample { draws, tail })
}

/// Pearson goodness-of-fit result.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Pearson χ² of `observed` counts against `expected` probabilities (which
/// should sum to 1). Bins with expected count below 5 are pooled.
pub fn chi_square(observed: &[u64], expected: &[f64]) -> ChiSquare {
    assert_eq!(observed.len(), expected.len());
    let total: u64 = observed.iter().sum();
    let total = total as f64;
    let mut bins: Vec<(f64, f64)> = observed.iter().zip(expected).map(|(&o, &e)| (o as f64, e * total)).collect();
    bins.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut pooled: Vec<(f64, f64)> = Vec::new();
    let mut acc = (0.0, 0.0);
    for (o, e) in bins {
        if e >= 5.0 && acc.1 == 0.0 {
            pooled.push((o, e));
            continue;
        }
        acc = (acc.0 + o, acc.1 + e);
        if acc.1 >= 5.0 {
            pooled.push(acc);
            acc = (0.0, 0.0);
        }
    }
    if acc.1 > 0.0 {
        match pooled.first_mut() {
            Some(first) => {
                first.0 += acc.0;
                first.1 += acc.1;
            }
            None => pooled.push(acc),
        }
    }
    let statistic: f64 = pooled.iter().map(|&(o, e)| (o - e) * (o - e) / e).sum();
    let dof = pooled.len().saturating_sub(1);
    let p_value = if dof == 0 {
        1.0
    } else {
        1.0 - ChiSquared::new(dof as f64).expect("positive dof").cdf(statistic)
    };
    ChiSquare { statistic, dof, p_value }
}

/// Goodness of fit of `draws` against the sampler's own law: one bin per
/// partition with `|λ| ≤ max_size`, one bin for the rest.
pub fn sample_fit(draws: &[Partition], p: &Params<C64>, n_max: usize, max_size: usize) -> Result<ChiSquare> {
    let sizes = size_distribution(p, n_max)?;
    let mass: f64 = sizes.iter().map(|w| w.re).sum();
    let vacuum = vacuum_mass(p)?;
    let bins = partitions_up_to(max_size.min(n_max));
    let mut expected: Vec<f64> = bins.iter().map(|l| mixed_weight_with(l, p, &vacuum).re / mass).collect();
    let rest = 1.0 - expected.iter().sum::<f64>();
    expected.push(rest.max(0.0));
    let index: BTreeMap<&Partition, usize> = bins.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut observed = vec![0u64; expected.len()];
    for l in draws {
        let bin = index.get(l).copied().unwrap_or(bins.len());
        observed[bin] += 1;
    }
    Ok(chi_square(&observed, &expected))
}
