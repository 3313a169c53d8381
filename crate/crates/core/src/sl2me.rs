//! Matrix elements of the sl(2)-module `V` with basis `v_k`, `k ∈ ℤ+½`,
//!
//! ```text
//! U v_k = (z  + k + ½) v_{k+1}
//! L v_k = (2k + z + z') v_k
//! D v_k = (z' + k − ½) v_{k−1}
//! ```
//!
//! and of its dual `V*`. The coefficient of `v_j` in `e^{αU} e^{βD} v_i` is a
//! Gauss hypergeometric function; [`mc`] evaluates the closed form and
//! [`mc_series_oracle`] expands the two exponentials directly from the ladder
//! actions, which gives an independent check.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::HalfInt;
use crate::scalar::{Scalar, C64};

/// Hard cap on the number of hypergeometric terms.
pub const MAX_SERIES_TERMS: usize = 10_000;

/// `(x)_n = x(x+1)…(x+n−1)`.
pub fn poch_rising<S: Scalar>(x: &S, n: usize) -> S {
    (0..n).fold(S::one(), |acc, k| acc * (x.clone() + S::from_i64(k as i64)))
}

/// `(a)_{↓s} = a(a−1)…(a−s+1)`.
pub fn poch_falling<S: Scalar>(a: &S, s: usize) -> S {
    (0..s).fold(S::one(), |acc, k| acc * (a.clone() - S::from_i64(k as i64)))
}

/// Positivity regimes of the parameters `(z, z')`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "lowercase", tag = "tag", content = "n")]
pub enum SeriesClass {
    /// `z' = z̄`, `z ∉ ℝ`.
    Principal,
    /// `z, z' ∈ (n, n+1)` for the stored `n`.
    Complementary(i64),
    Generic,
}

impl SeriesClass {
    pub fn classify<S: Scalar>(z: &S, zp: &S) -> Self {
        if !z.is_real() && *zp == z.conj() {
            return SeriesClass::Principal;
        }
        if z.is_real() && zp.is_real() {
            let (a, b) = (z.to_c64().re, zp.to_c64().re);
            if a.fract() != 0.0 && b.fract() != 0.0 && a.floor() == b.floor() {
                return SeriesClass::Complementary(a.floor() as i64);
            }
        }
        SeriesClass::Generic
    }

    pub fn is_positive(self) -> bool {
        !matches!(self, SeriesClass::Generic)
    }
}

/// Parameters of the module `V` and of the group element `e^{αU} e^{βD}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleParams<S> {
    pub z: S,
    pub zp: S,
    pub alpha: S,
    pub beta: S,
}

impl<S: Scalar> ModuleParams<S> {
    pub fn new(z: S, zp: S, alpha: S, beta: S) -> Self {
        ModuleParams { z, zp, alpha, beta }
    }

    pub fn alpha_beta(&self) -> S {
        self.alpha.clone() * self.beta.clone()
    }

    /// Same module with `(z, z') ↦ (z + m, z' + m)`.
    pub fn shifted(&self, m: i64) -> Self {
        ModuleParams {
            z: self.z.clone() + S::from_i64(m),
            zp: self.zp.clone() + S::from_i64(m),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }
}

/// A truncated series value together with the first omitted term.
#[derive(Clone, Debug, PartialEq)]
pub struct Truncated<S> {
    pub value: S,
    pub bound: S,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(Error::BadTolerance(tol))
    }
}

fn series_2f1(a: C64, b: C64, c: f64, x: C64, tol: f64) -> Result<C64> {
    if x.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!("|x| = {} after transformation", x.norm())));
    }
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        let num = (a + kf) * (b + kf);
        if num == C64::new(0.0, 0.0) {
            return Ok(sum);
        }
        term *= num / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
        if term.norm() <= tol * sum.norm() {
            small += 1;
            if small == 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergent(format!("no convergence after {MAX_SERIES_TERMS} terms")))
}

/// Gauss hypergeometric function `₂F₁(a, b; c; x)` for a positive integer `c`.
///
/// For `Re x < 0` the Pfaff transformation
/// `F(a,b;c;x) = (1−x)^{−a} F(a, c−b; c; x/(x−1))` is applied first; it maps
/// the whole left half plane into the unit disc and turns the alternating
/// series into one with positive ratio for real parameters.
pub fn gauss_2f1(a: C64, b: C64, c: usize, x: C64, tol: f64) -> Result<C64> {
    check_tol(tol)?;
    if c == 0 {
        return Err(Error::NonPositive("c"));
    }
    let cf = c as f64;
    if x.re < 0.0 {
        let y = x / (x - 1.0);
        let prefactor = (C64::new(1.0, 0.0) - x).powc(-a);
        return Ok(prefactor * series_2f1(a, C64::new(cf, 0.0) - b, cf, y, tol)?);
    }
    series_2f1(a, b, cf, x, tol)
}

/// Partial sum `Σ_{k<order}` of the ₂F₁ series in any backend, with the
/// `k = order` term as the bound.
pub fn gauss_2f1_partial<S: Scalar>(a: &S, b: &S, c: usize, x: &S, order: usize) -> Truncated<S> {
    let mut term = S::one();
    let mut sum = S::zero();
    for k in 0..order {
        sum = sum + term.clone();
        let kk = S::from_i64(k as i64);
        term = term * (a.clone() + kk.clone()) * (b.clone() + kk.clone()) * x.clone()
            / ((S::from_i64(c as i64) + kk) * S::from_i64(k as i64 + 1));
    }
    Truncated { value: sum, bound: term }
}

/// Which half of the piecewise closed form to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    /// The `i ≤ j` formula.
    Up,
    /// The `i ≥ j` formula.
    Down,
}

impl Branch {
    pub fn natural(i: HalfInt, j: HalfInt) -> Self {
        if i <= j {
            Branch::Up
        } else {
            Branch::Down
        }
    }
}

/// `step^n/n! · (x)_n`, built factor by factor.
fn scaled_rising<S: Scalar>(step: &S, x: &S, n: usize) -> S {
    (0..n).fold(S::one(), |acc, t| {
        acc * step.clone() * (x.clone() + S::from_i64(t as i64)) / S::from_i64(t as i64 + 1)
    })
}

/// Prefactor and hypergeometric parameters `(pre, a, b, c)` of the closed form
/// for `mc(i, j)`.
fn mc_parts<S: Scalar>(i: HalfInt, j: HalfInt, p: &ModuleParams<S>, branch: Branch) -> (S, S, S, usize) {
    let half = S::from_ratio(1, 2);
    match branch {
        Branch::Up => {
            let n = (j - i).max(0) as usize;
            let ih: S = i.to_scalar();
            let pre = scaled_rising(&p.alpha, &(p.z.clone() + ih.clone() + half.clone()), n);
            let a = -p.z.clone() - ih.clone() + half.clone();
            let b = -p.zp.clone() - ih + half;
            (pre, a, b, n + 1)
        }
        Branch::Down => {
            let n = (i - j).max(0) as usize;
            let jh: S = j.to_scalar();
            let pre = scaled_rising(&p.beta, &(p.zp.clone() + jh.clone() + half.clone()), n);
            let a = -p.z.clone() - jh.clone() + half.clone();
            let b = -p.zp.clone() - jh + half;
            (pre, a, b, n + 1)
        }
    }
}

fn mc_star_parts<S: Scalar>(i: HalfInt, j: HalfInt, p: &ModuleParams<S>, branch: Branch) -> (S, S, S, usize) {
    let half = S::from_ratio(1, 2);
    match branch {
        Branch::Up => {
            let n = (j - i).max(0) as usize;
            let ih: S = i.to_scalar();
            let jh: S = j.to_scalar();
            let pre = scaled_rising(&(-p.beta.clone()), &(p.zp.clone() + ih + half.clone()), n);
            let a = p.z.clone() + jh.clone() + half.clone();
            let b = p.zp.clone() + jh + half;
            (pre, a, b, n + 1)
        }
        Branch::Down => {
            let n = (i - j).max(0) as usize;
            let ih: S = i.to_scalar();
            let jh: S = j.to_scalar();
            let pre = scaled_rising(&(-p.alpha.clone()), &(p.z.clone() + jh + half.clone()), n);
            let a = p.z.clone() + ih.clone() + half.clone();
            let b = p.zp.clone() + ih + half;
            (pre, a, b, n + 1)
        }
    }
}

/// Coefficient of `v_j` in `e^{αU} e^{βD} v_i`.
pub fn mc(i: HalfInt, j: HalfInt, p: &ModuleParams<C64>, tol: f64) -> Result<C64> {
    mc_branch(i, j, p, Branch::natural(i, j), tol)
}

/// [`mc`] forced onto one branch; only meaningful when the branch applies
/// (`i ≤ j` for `Up`, `i ≥ j` for `Down`).
pub fn mc_branch(i: HalfInt, j: HalfInt, p: &ModuleParams<C64>, branch: Branch, tol: f64) -> Result<C64> {
    let (pre, a, b, c) = mc_parts(i, j, p, branch);
    if pre == C64::new(0.0, 0.0) {
        return Ok(pre);
    }
    Ok(pre * gauss_2f1(a, b, c, p.alpha_beta(), tol)?)
}

/// Coefficient of `v*_j` in `e^{αU} e^{βD} v*_i` for the dual action.
pub fn mc_star(i: HalfInt, j: HalfInt, p: &ModuleParams<C64>, tol: f64) -> Result<C64> {
    mc_star_branch(i, j, p, Branch::natural(i, j), tol)
}

pub fn mc_star_branch(i: HalfInt, j: HalfInt, p: &ModuleParams<C64>, branch: Branch, tol: f64) -> Result<C64> {
    let (pre, a, b, c) = mc_star_parts(i, j, p, branch);
    if pre == C64::new(0.0, 0.0) {
        return Ok(pre);
    }
    Ok(pre * gauss_2f1(a, b, c, p.alpha_beta(), tol)?)
}

/// Closed form of [`mc`] in any backend with the hypergeometric factor
/// truncated to `order` terms.
pub fn mc_truncated<S: Scalar>(i: HalfInt, j: HalfInt, p: &ModuleParams<S>, branch: Branch, order: usize) -> Truncated<S> {
    let (pre, a, b, c) = mc_parts(i, j, p, branch);
    let f = gauss_2f1_partial(&a, &b, c, &p.alpha_beta(), order);
    Truncated { value: pre.clone() * f.value, bound: pre * f.bound }
}

/// Closed form of [`mc_star`] with a truncated hypergeometric factor.
pub fn mc_star_truncated<S: Scalar>(i: HalfInt, j: HalfInt, p: &ModuleParams<S>, branch: Branch, order: usize) -> Truncated<S> {
    let (pre, a, b, c) = mc_star_parts(i, j, p, branch);
    let f = gauss_2f1_partial(&a, &b, c, &p.alpha_beta(), order);
    Truncated { value: pre.clone() * f.value, bound: pre * f.bound }
}

/// Finite-support vector in `V` (or `V*`).
pub type ModuleVector<S> = BTreeMap<HalfInt, S>;

/// Ladder operators of `V` and `V*` acting on finitely supported vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    U,
    D,
    DualU,
    DualD,
}

impl Ladder {
    /// Image of a basis vector: `(coefficient, new index)`.
    pub fn on_basis<S: Scalar>(self, k: HalfInt, z: &S, zp: &S) -> (S, HalfInt) {
        let kk: S = k.to_scalar();
        let half = S::from_ratio(1, 2);
        match self {
            Ladder::U => (z.clone() + kk + half, k.shift(1)),
            Ladder::D => (zp.clone() + kk - half, k.shift(-1)),
            Ladder::DualU => (-(z.clone() + kk - half), k.shift(-1)),
            Ladder::DualD => (-(zp.clone() + kk + half), k.shift(1)),
        }
    }

    pub fn apply<S: Scalar>(self, v: &ModuleVector<S>, z: &S, zp: &S) -> ModuleVector<S> {
        let mut out = ModuleVector::new();
        for (&k, coeff) in v {
            let (c, target) = self.on_basis(k, z, zp);
            let entry = out.entry(target).or_insert_with(S::zero);
            *entry = entry.clone() + c * coeff.clone();
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// `Σ_{s ≤ order} t^s X^s/s! v`.
fn exp_ladder<S: Scalar>(op: Ladder, t: &S, v: &ModuleVector<S>, z: &S, zp: &S, order: usize) -> ModuleVector<S> {
    let mut total = v.clone();
    let mut power = v.clone();
    for s in 1..=order {
        power = op.apply(&power, z, zp);
        let scale = t.clone() / S::from_i64(s as i64);
        for c in power.values_mut() {
            *c = c.clone() * scale.clone();
        }
        for (&k, c) in &power {
            let entry = total.entry(k).or_insert_with(S::zero);
            *entry = entry.clone() + c.clone();
        }
    }
    total
}

/// Coefficient of `v_j` in `Σ_{s,t ≤ order} (α^s U^s/s!)(β^t D^t/t!) v_i`,
/// expanded from the ladder actions alone.
pub fn mc_series_oracle<S: Scalar>(i: HalfInt, j: HalfInt, p: &ModuleParams<S>, order: usize) -> S {
    let start = ModuleVector::from([(i, S::one())]);
    let after_d = exp_ladder(Ladder::D, &p.beta, &start, &p.z, &p.zp, order);
    let after_u = exp_ladder(Ladder::U, &p.alpha, &after_d, &p.z, &p.zp, order);
    after_u.get(&j).cloned().unwrap_or_else(S::zero)
}

/// Dual counterpart of [`mc_series_oracle`].
pub fn mc_star_series_oracle<S: Scalar>(i: HalfInt, j: HalfInt, p: &ModuleParams<S>, order: usize) -> S {
    let start = ModuleVector::from([(i, S::one())]);
    let after_d = exp_ladder(Ladder::DualD, &p.beta, &start, &p.z, &p.zp, order);
    let after_u = exp_ladder(Ladder::DualU, &p.alpha, &after_d, &p.z, &p.zp, order);
    after_u.get(&j).cloned().unwrap_or_else(S::zero)
}

/// Diagonal entry `Q(v_k, v_k)` of the invariant Hermitian form.
///
/// Principal series: 1. Complementary series: `Γ(z'+k+½)/Γ(z+k+½)`, divided by
/// its value at `k = −½` and built from the exact step ratio
/// `Q_{k+1}/Q_k = (z'+k+½)/(z+k+½)`.
pub fn q_norm<S: Scalar>(k: HalfInt, class: SeriesClass, z: &S, zp: &S) -> Result<S> {
    match class {
        SeriesClass::Principal => Ok(S::one()),
        SeriesClass::Generic => Err(Error::NotPositiveSeries("generic".into())),
        SeriesClass::Complementary(_) => {
            let half = S::from_ratio(1, 2);
            let base = HalfInt::MINUS_HALF;
            let mut q = S::one();
            let mut m = base;
            while m < k {
                let mm: S = m.to_scalar();
                q = q * (zp.clone() + mm.clone() + half.clone()) / (z.clone() + mm + half.clone());
                m = m.shift(1);
            }
            while m > k {
                m = m.shift(-1);
                let mm: S = m.to_scalar();
                q = q * (z.clone() + mm.clone() + half.clone()) / (zp.clone() + mm + half.clone());
            }
            Ok(q)
        }
    }
}

/// `Q(u, v) = Σ_k Q(v_k, v_k) u_k conj(v_k)`.
pub fn q_form<S: Scalar>(u: &ModuleVector<S>, v: &ModuleVector<S>, class: SeriesClass, z: &S, zp: &S) -> Result<S> {
    let mut total = S::zero();
    for (k, a) in u {
        if let Some(b) = v.get(k) {
            total = total + q_norm(*k, class, z, zp)? * a.clone() * b.conj();
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c64, gauss, GaussRat};

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(poch_rising(&gauss(7, 3, 1, 1), 0), GaussRat::from_i64(1));
        assert_eq!(poch_rising(&GaussRat::from_i64(2), 3), GaussRat::from_i64(24));
        assert_eq!(poch_rising(&gauss(1, 2, 0, 1), 2), gauss(3, 4, 0, 1));
        assert_eq!(poch_falling(&gauss(7, 3, 1, 1), 0), GaussRat::from_i64(1));
        assert_eq!(poch_falling(&GaussRat::from_i64(3), 2), GaussRat::from_i64(6));
        assert_eq!(poch_falling(&gauss(1, 2, 0, 1), 2), gauss(-1, 4, 0, 1));
    }

    #[test]
    fn hypergeometric_examples() {
        let one = c64(1.0, 0.0);
        let v = gauss_2f1(c64(0.3, 1.0), c64(-2.0, 0.5), 3, c64(0.0, 0.0), 1e-15).unwrap();
        assert_eq!(v, one);
        let b = c64(0.7, -0.2);
        let x = c64(0.4, 0.1);
        let v = gauss_2f1(c64(-1.0, 0.0), b, 1, x, 1e-15).unwrap();
        assert!((v - (one - b * x)).norm() < 1e-15);
        // −ln(1−x)/x at x = ½ is 2 ln 2
        let v = gauss_2f1(one, one, 2, c64(0.5, 0.0), 1e-16).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14, "{v}");
        assert!(gauss_2f1(one, one, 2, c64(0.5, 0.0), 0.0).is_err());
        assert!(gauss_2f1(one, one, 2, c64(1.5, 0.0), 1e-12).is_err());
    }

    #[test]
    fn pfaff_branch_agrees_with_direct_series() {
        let a = c64(0.7, 0.2);
        let b = c64(-0.3, 0.0);
        for x in [-0.1, -0.3, -0.45] {
            let direct = series_2f1(a, b, 2.0, c64(x, 0.0), 1e-16).unwrap();
            let pfaff = gauss_2f1(a, b, 2, c64(x, 0.0), 1e-16).unwrap();
            assert!((direct - pfaff).norm() < 1e-13);
        }
        // x < −1: only the transformed series converges; compare with ln
        // F(1,1;2;x) = −ln(1−x)/x
        let v = gauss_2f1(c64(1.0, 0.0), c64(1.0, 0.0), 2, c64(-1.5, 0.0), 1e-16).unwrap();
        assert!((v.re - (2.5f64).ln() / 1.5).abs() < 1e-14);
    }

    #[test]
    fn identity_group_element() {
        let p = ModuleParams::new(c64(0.3, 0.1), c64(0.7, 0.0), c64(0.0, 0.0), c64(0.0, 0.0));
        for i in [-5, -1, 1, 3] {
            for j in [-5, -1, 1, 3] {
                let v = mc(h(i), h(j), &p, 1e-15).unwrap();
                let w = mc_star(h(i), h(j), &p, 1e-15).unwrap();
                let e = if i == j { 1.0 } else { 0.0 };
                assert_eq!(v, c64(e, 0.0));
                assert_eq!(w, c64(e, 0.0));
            }
        }
    }

    #[test]
    fn beta_zero_is_pure_raising() {
        let (z, zp, alpha) = (c64(0.3, 0.0), c64(0.7, 0.0), c64(0.4, 0.0));
        let p = ModuleParams::new(z, zp, alpha, c64(0.0, 0.0));
        let i = h(-3);
        for j in [-3, -1, 1, 3, 5] {
            let n = (h(j) - i) as usize;
            let fact: f64 = (1..=n).map(|t| t as f64).product();
            let expected = alpha.powu(n as u32) / fact * poch_rising(&(z + i.to_f64() + 0.5), n);
            let got = mc(i, h(j), &p, 1e-15).unwrap();
            assert!((got - expected).norm() < 1e-14);
            let oracle = mc_series_oracle(i, h(j), &p, n);
            assert!((got - oracle).norm() < 1e-14);
        }
    }

    #[test]
    fn alpha_zero_dual_is_pure_lowering_of_dual() {
        let (z, zp, beta) = (c64(0.3, 0.0), c64(0.7, 0.2), c64(0.35, 0.0));
        let p = ModuleParams::new(z, zp, c64(0.0, 0.0), beta);
        let i = h(-1);
        for j in [-1, 1, 3, 5] {
            let n = (h(j) - i) as usize;
            let fact: f64 = (1..=n).map(|t| t as f64).product();
            let expected = (-beta).powu(n as u32) / fact * poch_rising(&(zp + i.to_f64() + 0.5), n);
            let got = mc_star(i, h(j), &p, 1e-15).unwrap();
            assert!((got - expected).norm() < 1e-14);
        }
    }

    #[test]
    fn diagonal_at_minus_half() {
        // i = j = −½ reduces to F(½ − z − i, ½ − z' − i; 1; αβ) = F(0.7, 0.3; 1; 1/16)
        let p = ModuleParams::new(c64(0.3, 0.0), c64(0.7, 0.0), c64(0.25, 0.0), c64(0.25, 0.0));
        let v = mc(h(-1), h(-1), &p, 1e-16).unwrap();
        let f = gauss_2f1(c64(0.7, 0.0), c64(0.3, 0.0), 1, c64(1.0 / 16.0, 0.0), 1e-16).unwrap();
        assert!((v - f).norm() < 1e-15);
        let oracle = mc_series_oracle(h(-1), h(-1), &p, 40);
        assert!((v - oracle).norm() < 1e-14);
    }

    #[test]
    fn oracle_examples() {
        let p = ModuleParams::new(c64(2.0, 0.0), c64(3.0, 0.0), c64(0.2, 0.0), c64(0.2, 0.0));
        assert_eq!(mc_series_oracle(h(1), h(3), &p, 0), c64(0.0, 0.0));
        assert_eq!(mc_series_oracle(h(1), h(1), &p, 0), c64(1.0, 0.0));
        let v = mc(h(1), h(1), &p, 1e-16).unwrap();
        let o = mc_series_oracle(h(1), h(1), &p, 30);
        assert!((v - o).norm() < 1e-12);
    }

    #[test]
    fn exact_branches_agree_on_diagonal() {
        let p = ModuleParams::new(gauss(1, 3, 1, 2), gauss(5, 2, 0, 1), gauss(1, 4, 0, 1), gauss(-1, 5, 1, 7));
        for i in [-7, -3, 1, 5] {
            let up = mc_truncated(h(i), h(i), &p, Branch::Up, 12);
            let down = mc_truncated(h(i), h(i), &p, Branch::Down, 12);
            assert_eq!(up, down);
            let up = mc_star_truncated(h(i), h(i), &p, Branch::Up, 12);
            let down = mc_star_truncated(h(i), h(i), &p, Branch::Down, 12);
            assert_eq!(up, down);
        }
    }

    #[test]
    fn exact_terminating_case_is_exact() {
        // with β = 0 both sides are finite sums
        let p = ModuleParams::new(gauss(1, 3, 1, 2), gauss(5, 2, 0, 1), gauss(2, 7, 0, 1), GaussRat::from_i64(0));
        for j in [-3, -1, 1, 3] {
            let closed = mc_truncated(h(-3), h(j), &p, Branch::Up, 1);
            let oracle = mc_series_oracle(h(-3), h(j), &p, 4);
            assert_eq!(closed.value, oracle);
        }
    }

    #[test]
    fn q_norm_cases() {
        let z = c64(0.3, 0.0);
        let zp = c64(0.7, 0.0);
        let class = SeriesClass::classify(&z, &zp);
        assert_eq!(class, SeriesClass::Complementary(0));
        for k in -9..9 {
            let k = h(2 * k + 1);
            let a = q_norm(k, class, &z, &zp).unwrap();
            let b = q_norm(k.shift(1), class, &z, &zp).unwrap();
            // Γ(x+1) = xΓ(x) gives this ratio
            let expected = (zp + k.to_f64() + 0.5) / (z + k.to_f64() + 0.5);
            assert!((b / a - expected).norm() < 1e-13);
        }
        let equal = q_norm(h(7), SeriesClass::Complementary(0), &z, &z).unwrap();
        assert_eq!(equal, c64(1.0, 0.0));
        let principal = SeriesClass::classify(&c64(1.0, 2.0), &c64(1.0, -2.0));
        assert_eq!(principal, SeriesClass::Principal);
        assert_eq!(q_norm(h(5), principal, &c64(1.0, 2.0), &c64(1.0, -2.0)).unwrap(), c64(1.0, 0.0));
        assert!(q_norm(h(1), SeriesClass::Generic, &z, &zp).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(SeriesClass::classify(&c64(2.0, 0.0), &c64(3.0, 0.0)), SeriesClass::Generic);
        assert_eq!(SeriesClass::classify(&c64(1.2, 0.0), &c64(1.9, 0.0)), SeriesClass::Complementary(1));
        assert_eq!(SeriesClass::classify(&c64(-0.5, 0.0), &c64(0.5, 0.0)), SeriesClass::Generic);
        assert_eq!(SeriesClass::classify(&gauss(1, 1, 2, 1), &gauss(1, 1, -2, 1)), SeriesClass::Principal);
    }
}
