//! The hypergeometric kernel
//!
//! ```text
//! K(i, j) = Σ_{m = −½, −3/2, …} mc⟨i, m⟩ mc*⟨j, m⟩
//!         = (β z' mc⟨i, ½⟩ mc*⟨j, −½⟩ − α(αβ − 1) z mc⟨i, −½⟩ mc*⟨j, ½⟩) / (i − j)
//! ```
//!
//! at `α = √ξ/(ξ−1)`, `β = √ξ`, whose minors give the correlation functions of
//! the mixed z-measure, together with its rim-hook analogue `K_r`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kerov::{exp_apply, Generator, KerovParams, PartitionVector};
use crate::partition::{class_index, residue, residues, HalfInt, MayaSet};
use crate::scalar::{c64, Scalar, C64};
use crate::sl2me::{mc, mc_star, ModuleParams, SeriesClass, MAX_SERIES_TERMS};

/// Largest point set accepted by [`rho_det`].
pub const MAX_POINTS: usize = 12;

/// Parameters of the kernel: `(z, z')`, the mixing parameter `ξ` and the rim
/// hook length `r` (`1` for the classical kernel).
#[derive(Clone, Debug, PartialEq)]
pub struct KernelSpec {
    pub z: C64,
    pub zp: C64,
    pub xi: f64,
    pub r: usize,
}

impl KernelSpec {
    pub fn new(z: C64, zp: C64, xi: f64) -> Result<Self> {
        Self::with_r(z, zp, xi, 1)
    }

    pub fn with_r(z: C64, zp: C64, xi: f64, r: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&xi) {
            return Err(Error::XiOutOfRange(xi));
        }
        if r == 0 {
            return Err(Error::NonPositive("r"));
        }
        Ok(KernelSpec { z, zp, xi, r })
    }

    /// `√ξ/(ξ−1)`.
    pub fn alpha(&self) -> C64 {
        c64(self.xi.sqrt() / (self.xi - 1.0), 0.0)
    }

    /// `√ξ`.
    pub fn beta(&self) -> C64 {
        c64(self.xi.sqrt(), 0.0)
    }

    pub fn module_params(&self) -> ModuleParams<C64> {
        ModuleParams::new(self.z, self.zp, self.alpha(), self.beta())
    }

    /// Parameters `(z − ½ + c/r, z' − ½ + c/r)` of the residue-`c` component.
    pub fn component_spec(&self, c: HalfInt) -> KernelSpec {
        let shift = c64(c.to_f64() / self.r as f64 - 0.5, 0.0);
        KernelSpec { z: self.z + shift, zp: self.zp + shift, xi: self.xi, r: 1 }
    }

    pub fn series_class(&self) -> SeriesClass {
        SeriesClass::classify(&self.z, &self.zp)
    }
}

/// How off-diagonal entries are evaluated. The diagonal always uses the
/// series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Closed,
}

/// `Σ_{m<0} mc⟨i, m⟩ mc*⟨j, m⟩` for arbitrary module parameters. Summation
/// stops once `m < min(i, j)` and three consecutive terms are below
/// `tol · |partial sum|`.
pub fn k_series_general(i: HalfInt, j: HalfInt, p: &ModuleParams<C64>, tol: f64) -> Result<C64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::BadTolerance(tol));
    }
    let floor = i.min(j);
    let mut sum = C64::new(0.0, 0.0);
    let mut small = 0;
    let mut m = HalfInt::MINUS_HALF;
    for _ in 0..MAX_SERIES_TERMS {
        let term = mc(i, m, p, tol * 1e-3)? * mc_star(j, m, p, tol * 1e-3)?;
        sum += term;
        if m < floor {
            if term.norm() <= tol * sum.norm() {
                small += 1;
                if small == 3 {
                    return Ok(sum);
                }
            } else {
                small = 0;
            }
        }
        m = m.shift(-1);
    }
    Err(Error::NonConvergent(format!("kernel series at ({i}, {j})")))
}

/// Closed form for `i ≠ j` with arbitrary `(α, β)`; falls back to the series
/// on the diagonal.
pub fn k_closed_general(i: HalfInt, j: HalfInt, p: &ModuleParams<C64>, tol: f64) -> Result<C64> {
    if i == j {
        return k_series_general(i, j, p, tol);
    }
    let (half, minus) = (HalfInt::HALF, HalfInt::MINUS_HALF);
    let t = tol * 1e-3;
    let first = p.beta * p.zp * mc(i, half, p, t)? * mc_star(j, minus, p, t)?;
    let second = p.alpha * (p.alpha_beta() - 1.0) * p.z * mc(i, minus, p, t)? * mc_star(j, half, p, t)?;
    Ok((first - second) / (i - j) as f64)
}

/// Series form of the classical kernel.
pub fn k_series(i: HalfInt, j: HalfInt, ks: &KernelSpec, tol: f64) -> Result<C64> {
    k_series_general(i, j, &ks.module_params(), tol)
}

/// Closed form of the classical kernel; `i = j` delegates to [`k_series`].
pub fn k_closed(i: HalfInt, j: HalfInt, ks: &KernelSpec, tol: f64) -> Result<C64> {
    k_closed_general(i, j, &ks.module_params(), tol)
}

/// Closed form written with the coefficients `z'√ξ` and `z√ξ/(ξ−1)²`.
pub fn k_closed_specialized(i: HalfInt, j: HalfInt, ks: &KernelSpec, tol: f64) -> Result<C64> {
    if i == j {
        return k_series(i, j, ks, tol);
    }
    let p = ks.module_params();
    let (half, minus) = (HalfInt::HALF, HalfInt::MINUS_HALF);
    let s = ks.xi.sqrt();
    let t = tol * 1e-3;
    let first = ks.zp * s * mc(i, half, &p, t)? * mc_star(j, minus, &p, t)?;
    let second = ks.z * (s / ((ks.xi - 1.0) * (ks.xi - 1.0))) * mc(i, minus, &p, t)? * mc_star(j, half, &p, t)?;
    Ok((first - second) / (i - j) as f64)
}

fn classical(i: HalfInt, j: HalfInt, ks: &KernelSpec, method: Method, tol: f64) -> Result<C64> {
    match method {
        Method::Series => k_series(i, j, ks, tol),
        Method::Closed => k_closed(i, j, ks, tol),
    }
}

/// Rim-hook kernel: `0` across residue classes, otherwise the classical
/// kernel of the residue-`c` component at the re-indexed points.
pub fn k_r(i: HalfInt, j: HalfInt, ks: &KernelSpec, method: Method, tol: f64) -> Result<C64> {
    if ks.r == 1 {
        return classical(i, j, ks, method, tol);
    }
    let c = residue(i, ks.r);
    if residue(j, ks.r) != c {
        return Ok(C64::new(0.0, 0.0));
    }
    classical(class_index(i, ks.r), class_index(j, ks.r), &ks.component_spec(c), method, tol)
}

/// Kernel entry for any `r`.
pub fn kernel_entry(i: HalfInt, j: HalfInt, ks: &KernelSpec, method: Method, tol: f64) -> Result<C64> {
    k_r(i, j, ks, method, tol)
}

/// Determinant with the estimated 1-norm condition number of the matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Determinant {
    pub value: C64,
    pub condition: f64,
}

/// `[K(x_a, x_b)]` over an ordered point list.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelMatrix {
    pub points: Vec<HalfInt>,
    pub entries: Vec<Vec<C64>>,
}

impl KernelMatrix {
    pub fn build(points: &[HalfInt], ks: &KernelSpec, method: Method, tol: f64) -> Result<Self> {
        let entries = points
            .iter()
            .map(|&i| points.iter().map(|&j| kernel_entry(i, j, ks, method, tol)).collect())
            .collect::<Result<Vec<Vec<C64>>>>()?;
        Ok(KernelMatrix { points: points.to_vec(), entries })
    }

    pub fn determinant(&self) -> Determinant {
        det_lu(&self.entries)
    }

    /// Largest entrywise difference to another matrix over the same points.
    pub fn max_difference(&self, other: &KernelMatrix) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `ρ(X) = det[K(x_a, x_b)]`.
pub fn rho_det(x: &[HalfInt], ks: &KernelSpec, tol: f64) -> Result<C64> {
    Ok(rho_det_report(x, ks, tol)?.value)
}

/// [`rho_det`] with the condition estimate.
pub fn rho_det_report(x: &[HalfInt], ks: &KernelSpec, tol: f64) -> Result<Determinant> {
    if x.len() > MAX_POINTS {
        return Err(Error::TooManyPoints(x.len(), MAX_POINTS));
    }
    Ok(KernelMatrix::build(x, ks, Method::Closed, tol)?.determinant())
}

/// `det` of the full `K_r` matrix and the product of the per-residue minors.
pub fn block_factorization(x: &[HalfInt], ks: &KernelSpec, tol: f64) -> Result<(C64, C64)> {
    let full = rho_det(x, ks, tol)?;
    let mut product = C64::new(1.0, 0.0);
    for c in residues(ks.r) {
        let block: Vec<HalfInt> = x.iter().copied().filter(|&k| residue(k, ks.r) == c).collect();
        product *= rho_det(&block, ks, tol)?;
    }
    Ok((full, product))
}

/// Determinant by LU with partial pivoting.
pub fn det_lu(a: &[Vec<C64>]) -> Determinant {
    let n = a.len();
    if n == 0 {
        return Determinant { value: C64::new(1.0, 0.0), condition: 1.0 };
    }
    let mut lu: Vec<Vec<C64>> = a.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n).max_by(|&x, &y| lu[x][col].norm().total_cmp(&lu[y][col].norm())).expect("non-empty");
        if lu[pivot][col].norm() == 0.0 {
            return Determinant { value: C64::new(0.0, 0.0), condition: f64::INFINITY };
        }
        if pivot != col {
            lu.swap(pivot, col);
            perm.swap(pivot, col);
            det = -det;
        }
        det *= lu[col][col];
        for row in col + 1..n {
            let (upper, lower) = lu.split_at_mut(row);
            let (pivot_row, target) = (&upper[col], &mut lower[0]);
            let f = target[col] / pivot_row[col];
            target[col] = f;
            for (x, &p) in target[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                *x -= f * p;
            }
        }
    }
    let norm_a = one_norm(a);
    let mut norm_inv = 0.0f64;
    for e in 0..n {
        // solve A x = e_e via P A = L U
        let mut y: Vec<C64> = perm.iter().map(|&p| if p == e { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }).collect();
        for row in 0..n {
            for k in 0..row {
                let delta = lu[row][k] * y[k];
                y[row] -= delta;
            }
        }
        for row in (0..n).rev() {
            for k in row + 1..n {
                let delta = lu[row][k] * y[k];
                y[row] -= delta;
            }
            y[row] /= lu[row][row];
        }
        norm_inv = norm_inv.max(y.iter().map(|v| v.norm()).sum());
    }
    Determinant { value: det, condition: norm_a * norm_inv }
}

fn one_norm(a: &[Vec<C64>]) -> f64 {
    (0..a.len()).map(|c| a.iter().map(|row| row[c].norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Fraction-free (Bareiss) determinant, exact in exact backends.
pub fn det_bareiss<S: Scalar>(a: &[Vec<S>]) -> S {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a.to_vec();
    let mut sign = S::one();
    let mut prev = S::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone()) / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        S::one()
    } else {
        sign * m[n - 1][n - 1].clone()
    }
}

/// Brute-force rim-hook correlations: the weights
/// `W_r(λ) = (e^{√ξ U_r} δ_∅, δ_λ)(e^{√ξ D_r} δ_λ, δ_∅)` for `|λ| ≤ N`,
/// with the normalisation `Z_r` compared to `∏_c (1−ξ)^{−z_c z'_c}`.
#[derive(Clone, Debug)]
pub struct RimHookTable {
    entries: Vec<(MayaSet, C64)>,
    /// `Σ_{|λ| ≤ N} W_r(λ)`.
    pub z_truncated: C64,
    /// `∏_c (1−ξ)^{−z_c z'_c}`.
    pub z_predicted: C64,
    /// Bound on the relative effect of the omitted sizes, from
    /// `Σ_{m > N/r} |(Σ_c z_c z'_c)_m| ξ^m / m!`.
    pub tail: f64,
    /// `true` when every component is in a positive regime.
    pub rigorous: bool,
}

impl RimHookTable {
    pub fn new(ks: &KernelSpec, n_max: usize) -> Result<Self> {
        let sigma = c64(ks.xi.sqrt(), 0.0);
        let up = exp_apply(
            Generator::U,
            &sigma,
            &PartitionVector::vacuum(),
            &KerovParams::with_r(ks.z, ks.zp, ks.r),
            n_max,
        );
        // (e^{σ D_r} δ_λ, δ_∅) is the δ_λ coefficient of e^{σ U_r} δ_∅ with z and z' exchanged
        let down = exp_apply(
            Generator::U,
            &sigma,
            &PartitionVector::vacuum(),
            &KerovParams::with_r(ks.zp, ks.z, ks.r),
            n_max,
        );
        let entries: Vec<(MayaSet, C64)> = up.iter().map(|(l, a)| (l.maya(), a * down.coeff(l))).collect();
        let z_truncated: C64 = entries.iter().map(|(_, w)| *w).sum();
        let s: C64 = residues(ks.r).map(|c| {
            let comp = ks.component_spec(c);
            comp.z * comp.zp
        }).sum();
        let z_predicted = c64(1.0 - ks.xi, 0.0).powc(-s);
        let tail_z = rising_tail(s, ks.xi, n_max / ks.r);
        let rigorous = residues(ks.r).all(|c| {
            let comp = ks.component_spec(c);
            SeriesClass::classify(&comp.z, &comp.zp).is_positive()
        });
        Ok(RimHookTable { entries, z_truncated, z_predicted, tail: tail_z / z_truncated.norm(), rigorous })
    }

    /// `Σ_{X ⊂ S(λ)} W_r(λ) / Σ W_r(λ)`.
    pub fn rho(&self, x: &[HalfInt]) -> C64 {
        let hit: C64 = self
            .entries
            .iter()
            .filter(|(s, _)| x.iter().all(|&k| s.contains(k)))
            .map(|(_, w)| *w)
            .sum();
        hit / self.z_truncated
    }

    /// `|Z_trunc − Z_pred| / |Z_pred|`.
    pub fn normalization_gap(&self) -> f64 {
        (self.z_truncated - self.z_predicted).norm() / self.z_predicted.norm()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `Σ_{m > M} |(s)_m| ξ^m / m!` with a geometric bound on the remainder.
fn rising_tail(s: C64, xi: f64, m_max: usize) -> f64 {
    if xi == 0.0 {
        return 0.0;
    }
    let mut term = 1.0f64;
    for m in 0..=m_max {
        term *= xi * (s + m as f64).norm() / (m as f64 + 1.0);
    }
    let mut sum = 0.0;
    let mut m = m_max + 1;
    loop {
        sum += term;
        let ratio = xi * (s + m as f64).norm() / (m as f64 + 1.0);
        let rho = ratio.max(xi);
        if rho < 1.0 && (term * rho / (1.0 - rho) <= 1e-17 * sum || term == 0.0) {
            return sum + term * rho / (1.0 - rho);
        }
        term *= ratio;
        m += 1;
        if m > m_max + 100_000 {
            return f64::INFINITY;
        }
    }
}

/// One-shot [`RimHookTable`] lookup.
pub fn brute_corr_rimhook(x: &[HalfInt], ks: &KernelSpec, n_max: usize) -> Result<(C64, RimHookTable)> {
    let table = RimHookTable::new(ks, n_max)?;
    Ok((table.rho(x), table))
}
