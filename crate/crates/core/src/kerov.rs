//! Kerov's operators on the span of the partition basis `{δ_λ}`.
//!
//! ```text
//! U_r δ_λ = Σ_{μ = λ + rim hook} (−1)^{height+1} (z  + Σ c(□)/r²) δ_μ
//! D_r δ_λ = Σ_{μ = λ − rim hook} (−1)^{height+1} (z' + Σ c(□)/r²) δ_μ
//! ```
//!
//! For `r = 1` the hooks are single squares, the sign is `+1` and
//! `L δ_λ = (zz' + 2|λ|) δ_λ`. For `r > 1`, `L_r` is taken to be `[D_r, U_r]`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_up_to, Partition};
use crate::scalar::{Scalar, C64};
use crate::sl2me::poch_rising;
use crate::vector::SparseVector;

/// Linear combination of partition basis vectors.
pub type PartitionVector<S> = SparseVector<Partition, S>;

/// `(z, z', r)`; `r = 1` gives the classical operators.
#[derive(Clone, Debug, PartialEq)]
pub struct KerovParams<S> {
    pub z: S,
    pub zp: S,
    pub r: usize,
}

impl<S: Scalar> KerovParams<S> {
    pub fn new(z: S, zp: S) -> Self {
        KerovParams { z, zp, r: 1 }
    }

    pub fn with_r(z: S, zp: S, r: usize) -> Self {
        assert!(r >= 1, "rim hook length must be positive");
        KerovParams { z, zp, r }
    }

    /// `zz'`.
    pub fn zzp(&self) -> S {
        self.z.clone() * self.zp.clone()
    }

    /// The transpose of `D` is `U` with `z` replaced by `z'`.
    pub fn swapped(&self) -> Self {
        KerovParams { z: self.zp.clone(), zp: self.z.clone(), r: self.r }
    }

    fn hook_weight(&self, base: &S, sign: i64, content_sum: i64) -> S {
        let r2 = (self.r * self.r) as i64;
        let w = base.clone() + S::from_ratio(content_sum, r2);
        if sign < 0 {
            -w
        } else {
            w
        }
    }
}

/// Which generator an exponential is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    U,
    D,
}

/// `U_r v`.
pub fn apply_u<S: Scalar>(v: &PartitionVector<S>, p: &KerovParams<S>) -> PartitionVector<S> {
    let mut out = PartitionVector::zero();
    for (lambda, c) in v.iter() {
        if p.r == 1 {
            for (mu, sq) in lambda.addable_corners() {
                out.add_term(mu, c.clone() * (p.z.clone() + S::from_i64(sq.content())));
            }
        } else {
            for hook in lambda.addable_rim_hooks(p.r) {
                let w = p.hook_weight(&p.z, hook.sign(), hook.content_sum);
                out.add_term(hook.target, c.clone() * w);
            }
        }
    }
    out
}

/// `D_r v`.
pub fn apply_d<S: Scalar>(v: &PartitionVector<S>, p: &KerovParams<S>) -> PartitionVector<S> {
    let mut out = PartitionVector::zero();
    for (lambda, c) in v.iter() {
        if p.r == 1 {
            for (mu, sq) in lambda.removable_corners() {
                out.add_term(mu, c.clone() * (p.zp.clone() + S::from_i64(sq.content())));
            }
        } else {
            for hook in lambda.removable_rim_hooks(p.r) {
                let w = p.hook_weight(&p.zp, hook.sign(), hook.content_sum);
                out.add_term(hook.target, c.clone() * w);
            }
        }
    }
    out
}

/// `L v`: diagonal `zz' + 2|λ|` for `r = 1`, `[D_r, U_r] v` otherwise.
pub fn apply_l<S: Scalar>(v: &PartitionVector<S>, p: &KerovParams<S>) -> PartitionVector<S> {
    if p.r == 1 {
        let zzp = p.zzp();
        PartitionVector::from_terms(
            v.iter()
                .map(|(l, c)| (l.clone(), c.clone() * (zzp.clone() + S::from_i64(2 * l.size() as i64)))),
        )
    } else {
        commutator(Generator::D, Generator::U, v, p)
    }
}

pub fn apply<S: Scalar>(g: Generator, v: &PartitionVector<S>, p: &KerovParams<S>) -> PartitionVector<S> {
    match g {
        Generator::U => apply_u(v, p),
        Generator::D => apply_d(v, p),
    }
}

/// `[A, B] v = A(Bv) − B(Av)`.
pub fn commutator<S: Scalar>(a: Generator, b: Generator, v: &PartitionVector<S>, p: &KerovParams<S>) -> PartitionVector<S> {
    let ab = apply(a, &apply(b, v, p), p);
    let ba = apply(b, &apply(a, v, p), p);
    &ab - &ba
}

/// `e^{t X} v`.
///
/// `D` is locally nilpotent, so the `D` series is summed to the end. `U`
/// raises sizes by `r`; its series is cut after the step where every new
/// component exceeds `size_cap`, and components of size `> size_cap` are
/// dropped. Every retained component is exact.
pub fn exp_apply<S: Scalar>(g: Generator, t: &S, v: &PartitionVector<S>, p: &KerovParams<S>, size_cap: usize) -> PartitionVector<S> {
    let mut total = match g {
        Generator::U => v.truncate(size_cap),
        Generator::D => v.clone(),
    };
    let mut power = total.clone();
    let mut k = 0i64;
    loop {
        k += 1;
        power = apply(g, &power, p);
        if g == Generator::U {
            power = power.truncate(size_cap);
        }
        if power.is_empty() {
            break;
        }
        power = power.scale(&(t.clone() / S::from_i64(k)));
        total = &total + &power;
    }
    total
}

/// `(Uⁿ δ_∅, δ_λ)(Dⁿ δ_λ, δ_∅) / (n! (zz')_n)` with `n = |λ|`, computed by
/// applying the operators.
pub fn matrix_element_mn<S: Scalar>(lambda: &Partition, p: &KerovParams<S>) -> Result<S> {
    let n = lambda.size();
    let denom = poch_rising(&p.zzp(), n) * S::from_i64(factorial_i64(n)?);
    if denom.is_zero() {
        return Err(Error::PochhammerZero { n });
    }
    let classical = KerovParams::new(p.z.clone(), p.zp.clone());
    let mut up = PartitionVector::vacuum();
    let mut down = PartitionVector::basis(lambda.clone());
    for _ in 0..n {
        up = apply_u(&up, &classical);
        down = apply_d(&down, &classical);
    }
    Ok(up.coeff(lambda) * down.coeff(&Partition::empty()) / denom)
}

fn factorial_i64(n: usize) -> Result<i64> {
    use num_traits::ToPrimitive;
    factorial(n)
        .to_i64()
        .ok_or_else(|| Error::NotExact(format!("{n}! does not fit in 64 bits")))
}

/// `(e^{σD} e^{σU} δ_∅, δ_∅)` with the `U` series kept up to size `size_cap`.
pub fn vacuum_pairing<S: Scalar>(sigma: &S, p: &KerovParams<S>, size_cap: usize) -> S {
    let up = exp_apply(Generator::U, sigma, &PartitionVector::vacuum(), p, size_cap);
    let down = exp_apply(Generator::D, sigma, &up, p, size_cap);
    down.coeff(&Partition::empty())
}

/// Outcome of [`verify_du`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct DuReport {
    /// Largest `|LHS − RHS|` over inputs `|λ| ≤ size_cap/2` and output
    /// components of size `≤ size_cap/2`.
    pub max_discrepancy: f64,
    /// Largest size reached by the `e^{αU}` series on the left.
    pub series_cap: usize,
    /// Geometric estimate of the omitted `U` powers.
    pub tail_estimate: f64,
    pub inputs_checked: usize,
}

/// Hard limit on the number of `U` powers summed on the left of [`verify_du`].
pub const MAX_DU_LEVELS: usize = 400;

/// Checks `e^{βD} e^{αU} = e^{α'U} (1−αβ)^{−L} e^{β'D}` with
/// `α' = α/(1−αβ)`, `β' = β/(1−αβ)` on every `δ_λ` with `|λ| ≤ size_cap/2`.
///
/// The right side is exact on components of size `≤ size_cap/2`. On the left,
/// the `k`-th power of `U` contributes `(α^k/k!) (e^{βD} U^k δ_λ, δ_μ)`, which
/// is evaluated as a pairing with `e^{βU'} δ_μ`, `U'` being `U` with `z` and
/// `z'` exchanged. Powers are added until two consecutive contributions fall
/// below `tol / 1000` past size `size_cap`.
pub fn verify_du(alpha: C64, beta: C64, p: &KerovParams<C64>, size_cap: usize, tol: f64) -> Result<DuReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::BadTolerance(tol));
    }
    let ab = alpha * beta;
    if ab.norm() >= 1.0 {
        return Err(Error::AlphaBetaTooLarge(ab.norm()));
    }
    let one = C64::new(1.0, 0.0);
    let alpha2 = alpha / (one - ab);
    let beta2 = beta / (one - ab);
    let half = size_cap / 2;
    let r = p.r;
    let dual = p.swapped();
    let outputs = partitions_up_to(half);
    let mut dual_levels: BTreeMap<Partition, Vec<PartitionVector<C64>>> = outputs
        .iter()
        .map(|mu| (mu.clone(), vec![PartitionVector::basis(mu.clone())]))
        .collect();
    let mut report = DuReport { max_discrepancy: 0.0, series_cap: size_cap, tail_estimate: 0.0, inputs_checked: 0 };
    for lambda in &outputs {
        let start = PartitionVector::basis(lambda.clone());
        let rhs = exp_apply(Generator::D, &beta2, &start, p, half);
        let mut scaled = PartitionVector::zero();
        for (mu, c) in rhs.iter() {
            let eig = l_eigenvalue(mu, p)?;
            scaled.add_term(mu.clone(), *c * (one - ab).powc(-eig));
        }
        let rhs = exp_apply(Generator::U, &alpha2, &scaled, p, half);

        let mut lhs = PartitionVector::<C64>::zero();
        let mut level = start;
        let mut small_run = 0;
        let mut previous = f64::INFINITY;
        for k in 0.. {
            if k > MAX_DU_LEVELS {
                return Err(Error::NonConvergent(format!("e^(aU) series on {lambda}")));
            }
            if k > 0 {
                level = apply_u(&level, p).scale(&(alpha / k as f64));
            }
            let size = lambda.size() + k * r;
            let mut contribution = 0.0f64;
            for mu in &outputs {
                if mu.size() > size || !(size - mu.size()).is_multiple_of(r) {
                    continue;
                }
                let j = (size - mu.size()) / r;
                let pair = dual_level(dual_levels.get_mut(mu).expect("output"), j, beta, &dual);
                let c: C64 = level.iter().map(|(nu, w)| *w * pair.coeff(nu)).sum();
                contribution = contribution.max(c.norm());
                lhs.add_term(mu.clone(), c);
            }
            if size > size_cap && contribution < tol / 1000.0 {
                small_run += 1;
            } else {
                small_run = 0;
            }
            if small_run >= 2 {
                let ratio = if previous > 0.0 { (contribution / previous).min(0.5) } else { 0.0 };
                let tail = contribution * ratio / (1.0 - ratio);
                report.tail_estimate = report.tail_estimate.max(tail);
                report.series_cap = report.series_cap.max(size);
                break;
            }
            previous = contribution;
        }
        report.max_discrepancy = report.max_discrepancy.max((&lhs - &rhs).max_abs());
        report.inputs_checked += 1;
    }
    Ok(report)
}

fn dual_level<'a>(
    levels: &'a mut Vec<PartitionVector<C64>>,
    j: usize,
    beta: C64,
    dual: &KerovParams<C64>,
) -> &'a PartitionVector<C64> {
    while levels.len() <= j {
        let n = levels.len();
        let next = apply_u(&levels[n - 1], dual).scale(&(beta / n as f64));
        levels.push(next);
    }
    &levels[j]
}

/// Eigenvalue of `L_r` on `δ_μ`; fails if `[D_r, U_r] δ_μ` is not a multiple
/// of `δ_μ`.
pub fn l_eigenvalue<S: Scalar>(mu: &Partition, p: &KerovParams<S>) -> Result<S> {
    let image = apply_l(&PartitionVector::basis(mu.clone()), p);
    let eig = image.coeff(mu);
    if image.iter().any(|(l, _)| l != mu) {
        return Err(Error::NotExact(format!("L is not diagonal on {mu}")));
    }
    Ok(eig)
}
