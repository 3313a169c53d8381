//! The infinite wedge space spanned by semi-infinite monomials
//! `v_S = v_{s_1} ∧ v_{s_2} ∧ …` with `S` a Maya set.
//!
//! `ψ_k v = v_k ∧ v` and `ψ*_k` is its adjoint, contraction with `v_k`. In the
//! basis `v_S` both carry the sign `(−1)^{#{s ∈ S : s > k}}`.
//!
//! The rim-hook operators become bilinears:
//!
//! ```text
//! U_r = Σ_k (z  + k/r + ½) ψ_{k+r} ψ*_k
//! D_r = Σ_k (z' + k/r − ½) ψ_{k−r} ψ*_k
//! ```

use crate::error::{Error, Result};
use crate::kerov::{KerovParams, PartitionVector};
use crate::partition::{HalfInt, MayaSet, Partition};
use crate::scalar::Scalar;
use crate::vector::SparseVector;

/// A vector in the infinite wedge space.
pub type WedgeVector<S> = SparseVector<MayaSet, S>;

fn sign_above(s: &MayaSet, k: HalfInt) -> bool {
    s.count_above(k) % 2 == 1
}

fn signed<S: Scalar>(c: &S, negative: bool) -> S {
    if negative {
        -c.clone()
    } else {
        c.clone()
    }
}

/// `ψ_k`: wedges `v_k` in front.
pub fn psi<S: Scalar>(k: HalfInt, v: &WedgeVector<S>) -> WedgeVector<S> {
    let mut out = WedgeVector::zero();
    for (s, c) in v.iter() {
        if let Some(t) = s.with_inserted(k) {
            out.add_term(t, signed(c, sign_above(s, k)));
        }
    }
    out
}

/// `ψ*_k`: removes `v_k`.
pub fn psi_star<S: Scalar>(k: HalfInt, v: &WedgeVector<S>) -> WedgeVector<S> {
    let mut out = WedgeVector::zero();
    for (s, c) in v.iter() {
        if let Some(t) = s.with_removed(k) {
            out.add_term(t, signed(c, sign_above(s, k)));
        }
    }
    out
}

/// `:ψ_k ψ*_k:` on a basis vector: `1` if `k > 0` is occupied, `−1` if
/// `k < 0` is empty, `0` otherwise.
pub fn occupation(s: &MayaSet, k: HalfInt) -> i64 {
    match (k.is_negative(), s.contains(k)) {
        (false, true) => 1,
        (true, false) => -1,
        _ => 0,
    }
}

/// Charge `C v_S = (|S_+| − |S_−|) v_S`.
pub fn charge<S: Scalar>(v: &WedgeVector<S>) -> WedgeVector<S> {
    diagonal(v, |s| S::from_i64(s.charge()))
}

/// Energy `H v_S = (Σ_{S_+} k − Σ_{S_−} k) v_S`.
pub fn energy<S: Scalar>(v: &WedgeVector<S>) -> WedgeVector<S> {
    diagonal(v, |s| S::from_ratio(s.energy_twice(), 2))
}

fn diagonal<S: Scalar>(v: &WedgeVector<S>, f: impl Fn(&MayaSet) -> S) -> WedgeVector<S> {
    WedgeVector::from_terms(v.iter().map(|(s, c)| (s.clone(), c.clone() * f(s))))
}

/// Range of modes `[lo, hi]` the bilinears are allowed to touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeWindow {
    pub lo: HalfInt,
    pub hi: HalfInt,
}

impl ModeWindow {
    pub fn new(lo: HalfInt, hi: HalfInt) -> Self {
        ModeWindow { lo, hi }
    }

    /// `{−(n−1)/2, …, (n−1)/2}` for even `n`.
    pub fn centered(n: usize) -> Self {
        let half = n as i64 - 1;
        ModeWindow { lo: HalfInt::from_twice(-half), hi: HalfInt::from_twice(half) }
    }

    /// Smallest window on which a shift by `r` of any mode of `s` is seen.
    pub fn covering(s: &MayaSet, r: usize) -> Self {
        let r = r as i64;
        let hi = if s.top() < s.floor() { s.floor() } else { s.top() };
        ModeWindow { lo: s.floor().shift(-r), hi: hi.shift(r) }
    }

    fn contains_window(&self, other: &ModeWindow) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn modes(&self) -> impl Iterator<Item = HalfInt> {
        let (lo, hi) = (self.lo.twice(), self.hi.twice());
        (lo..=hi).step_by(2).map(HalfInt::from_twice)
    }
}

/// Direction of a bilinear `ψ_{k±r} ψ*_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    Up,
    Down,
}

/// `Σ_k w(k) ψ_{k±r} ψ*_k` with modes restricted to `window`. Fails with
/// [`Error::WindowTooSmall`] if some input basis vector has movable modes
/// outside it.
fn bilinear<S: Scalar>(
    v: &WedgeVector<S>,
    r: usize,
    shift: Shift,
    weight: impl Fn(HalfInt) -> S,
    window: Option<ModeWindow>,
) -> Result<WedgeVector<S>> {
    let step = match shift {
        Shift::Up => r as i64,
        Shift::Down => -(r as i64),
    };
    let mut out = WedgeVector::zero();
    for (s, c) in v.iter() {
        let needed = ModeWindow::covering(s, r);
        let w = match window {
            Some(w) if !w.contains_window(&needed) => {
                return Err(Error::WindowTooSmall {
                    mode: format!("{s}"),
                    lo: w.lo.to_string(),
                    hi: w.hi.to_string(),
                })
            }
            Some(w) => w,
            None => needed,
        };
        for k in w.modes() {
            let target = k.shift(step);
            if !s.contains(k) || s.contains(target) {
                continue;
            }
            // ψ*_k then ψ_{k±r}
            let mut t = s.clone();
            t.remove(k);
            let negative = (s.count_above(k) + t.count_above(target)) % 2 == 1;
            t.insert(target);
            out.add_term(t, signed(&(c.clone() * weight(k)), negative));
        }
    }
    Ok(out)
}

fn up_weight<S: Scalar>(p: &KerovParams<S>) -> impl Fn(HalfInt) -> S + '_ {
    move |k| p.z.clone() + S::from_ratio(k.twice() + p.r as i64, 2 * p.r as i64)
}

fn down_weight<S: Scalar>(p: &KerovParams<S>) -> impl Fn(HalfInt) -> S + '_ {
    move |k| p.zp.clone() + S::from_ratio(k.twice() - p.r as i64, 2 * p.r as i64)
}

/// Fermionic `U_r`.
pub fn fermionic_u<S: Scalar>(v: &WedgeVector<S>, p: &KerovParams<S>) -> WedgeVector<S> {
    bilinear(v, p.r, Shift::Up, up_weight(p), None).expect("automatic window")
}

/// Fermionic `D_r`.
pub fn fermionic_d<S: Scalar>(v: &WedgeVector<S>, p: &KerovParams<S>) -> WedgeVector<S> {
    bilinear(v, p.r, Shift::Down, down_weight(p), None).expect("automatic window")
}

/// Fermionic `U_r` restricted to the modes of `window`.
pub fn fermionic_u_in<S: Scalar>(v: &WedgeVector<S>, p: &KerovParams<S>, window: ModeWindow) -> Result<WedgeVector<S>> {
    bilinear(v, p.r, Shift::Up, up_weight(p), Some(window))
}

/// Fermionic `D_r` restricted to the modes of `window`.
pub fn fermionic_d_in<S: Scalar>(v: &WedgeVector<S>, p: &KerovParams<S>, window: ModeWindow) -> Result<WedgeVector<S>> {
    bilinear(v, p.r, Shift::Down, down_weight(p), Some(window))
}

/// `L = 2H + (z + z')C + zz'`, the classical `[D, U]` on every charge sector.
pub fn fermionic_l<S: Scalar>(v: &WedgeVector<S>, p: &KerovParams<S>) -> WedgeVector<S> {
    let zsum = p.z.clone() + p.zp.clone();
    let zzp = p.zzp();
    diagonal(v, |s| S::from_i64(s.energy_twice()) + zsum.clone() * S::from_i64(s.charge()) + zzp.clone())
}

/// `[D_r, U_r] v` computed with the bilinears.
pub fn fermionic_commutator<S: Scalar>(v: &WedgeVector<S>, p: &KerovParams<S>) -> WedgeVector<S> {
    let du = fermionic_d(&fermionic_u(v, p), p);
    let ud = fermionic_u(&fermionic_d(v, p), p);
    &du - &ud
}

/// `δ_λ ↦ v_{S(λ)}`.
pub fn to_wedge<S: Scalar>(v: &PartitionVector<S>) -> WedgeVector<S> {
    v.map_keys(Partition::maya)
}

/// Inverse of [`to_wedge`] on the charge-zero sector.
pub fn from_wedge<S: Scalar>(v: &WedgeVector<S>) -> Result<PartitionVector<S>> {
    let mut out = PartitionVector::zero();
    for (s, c) in v.iter() {
        out.add_term(Partition::from_maya(s)?, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kerov::{apply_d, apply_l, apply_u};
    use crate::partition::partitions_up_to;
    use crate::scalar::{gauss, GaussRat};

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn single_modes() {
        let vac = WedgeVector::<GaussRat>::vacuum();
        let one = GaussRat::from_i64(1);
        let v = psi(h(1), &vac);
        assert_eq!(v, WedgeVector::basis(MayaSet::vacuum().with_inserted(h(1)).unwrap()));
        assert!(psi(h(-1), &vac).is_empty());
        let v = psi_star(h(-3), &vac);
        let hole = MayaSet::vacuum().with_removed(h(-3)).unwrap();
        assert_eq!(v, WedgeVector::basis(hole).scale(&(-one)));
        assert!(psi_star(h(1), &vac).is_empty());
    }

    #[test]
    fn occupation_and_energy() {
        let s = Partition::new(vec![3, 1]).unwrap().maya();
        assert_eq!(occupation(&s, h(5)), 1);
        assert_eq!(occupation(&s, h(-3)), -1);
        assert_eq!(occupation(&s, h(-1)), 0);
        let v = WedgeVector::<GaussRat>::basis(s.clone());
        assert_eq!(energy(&v), v.scale(&GaussRat::from_i64(4)));
        assert!(charge(&v).is_empty());
    }

    #[test]
    fn identification_small() {
        let kp = KerovParams::with_r(gauss(1, 3, 1, 2), gauss(5, 2, -1, 1), 2);
        for lambda in partitions_up_to(5) {
            let d = PartitionVector::basis(lambda.clone());
            let w = to_wedge(&d);
            assert_eq!(fermionic_u(&w, &kp), to_wedge(&apply_u(&d, &kp)), "U on {lambda}");
            assert_eq!(fermionic_d(&w, &kp), to_wedge(&apply_d(&d, &kp)), "D on {lambda}");
        }
    }

    #[test]
    fn classical_l_both_routes() {
        let kp = KerovParams::new(gauss(1, 3, 1, 2), gauss(5, 2, -1, 1));
        let vac = MayaSet::vacuum();
        for s in [vac.shift(1), vac.shift(-2), Partition::new(vec![2, 2]).unwrap().maya().shift(1)] {
            let v = WedgeVector::basis(s);
            assert_eq!(fermionic_l(&v, &kp), fermionic_commutator(&v, &kp));
        }
        let lambda = Partition::new(vec![3, 1]).unwrap();
        let d = PartitionVector::basis(lambda);
        assert_eq!(fermionic_l(&to_wedge(&d), &kp), to_wedge(&apply_l(&d, &kp)));
    }

    #[test]
    fn window_checks() {
        let kp = KerovParams::new(GaussRat::from_i64(1), GaussRat::from_i64(2));
        let v = WedgeVector::<GaussRat>::vacuum();
        let ok = fermionic_u_in(&v, &kp, ModeWindow::centered(12)).unwrap();
        assert_eq!(ok, fermionic_u(&v, &kp));
        let tight = ModeWindow::new(h(-1), h(-1));
        assert!(matches!(fermionic_u_in(&v, &kp, tight), Err(Error::WindowTooSmall { .. })));
        assert!(matches!(fermionic_d_in(&v, &kp, tight), Err(Error::WindowTooSmall { .. })));
    }
}
