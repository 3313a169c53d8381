//! Rim hooks, r-cores and r-quotients, all through Maya sets: adding a rim
//! hook of length `r` moves one bead from `k` to `k + r`.

use super::{HalfInt, MayaSet, Partition};
use crate::error::{Error, Result};

/// A rim hook added to (or removed from) a partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RimHook {
    /// The partition after the move.
    pub target: Partition,
    pub length: usize,
    /// Number of rows the hook occupies.
    pub height: usize,
    /// Sum of the contents of the hook's squares.
    pub content_sum: i64,
}

impl RimHook {
    /// `(−1)^{height+1}`.
    pub fn sign(&self) -> i64 {
        if self.height % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

/// Content sum of the hook that moves the bead `λ_i − i = lo` up by `r`.
fn content_sum(lo: i64, r: usize) -> i64 {
    let r = r as i64;
    r * (lo + 1) + r * (r - 1) / 2
}

fn from_beads(beads: &[i64]) -> Partition {
    let parts = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b + i as i64 + 1)
        .take_while(|&p| p > 0)
        .map(|p| p as usize)
        .collect();
    Partition::from_sorted(parts)
}

impl Partition {
    /// Every `μ ⊃ λ` with `μ/λ` a rim hook of `r` squares, in canonical order
    /// of `μ`. For `r = 1` these are the addable corners.
    pub fn addable_rim_hooks(&self, r: usize) -> Vec<RimHook> {
        assert!(r >= 1, "rim hook length must be positive");
        let beads = self.beads(r);
        let step = r as i64;
        let mut out = Vec::new();
        for i in 0..beads.len() {
            let moved = beads[i] + step;
            let t = beads[..i].partition_point(|&x| x > moved);
            if t < i && beads[t] == moved {
                continue;
            }
            let mut next = beads.clone();
            next[t..=i].rotate_right(1);
            next[t] = moved;
            out.push(RimHook {
                target: from_beads(&next),
                length: r,
                height: i - t + 1,
                content_sum: content_sum(beads[i], r),
            });
        }
        out.sort_by(|a, b| a.target.cmp(&b.target));
        out
    }

    /// Every `μ ⊂ λ` with `λ/μ` a rim hook of `r` squares, in canonical order
    /// of `μ`.
    pub fn removable_rim_hooks(&self, r: usize) -> Vec<RimHook> {
        assert!(r >= 1, "rim hook length must be positive");
        let beads = self.beads(r);
        let step = r as i64;
        let mut out = Vec::new();
        for i in 0..self.len() {
            let moved = beads[i] - step;
            let t = i + 1 + beads[i + 1..].partition_point(|&x| x > moved);
            if t < beads.len() && beads[t] == moved {
                continue;
            }
            let mut next = beads.clone();
            next[i..t].rotate_left(1);
            next[t - 1] = moved;
            out.push(RimHook {
                target: from_beads(&next),
                length: r,
                height: t - i,
                content_sum: content_sum(moved, r),
            });
        }
        out.sort_by(|a, b| a.target.cmp(&b.target));
        out
    }

    /// `λ_i − i` for `i = 1, …, ℓ(λ) + pad`.
    fn beads(&self, pad: usize) -> Vec<i64> {
        (1..=self.len() + pad).map(|i| self.part(i) as i64 - i as i64).collect()
    }

    /// Splits the Maya set into `r` residue classes and reads off the r-core
    /// and r-quotient. Components are ordered by ascending residue
    /// `c ∈ {½, 3/2, …, r − ½}`.
    pub fn core_quotient(&self, r: usize) -> Result<CoreQuotient> {
        if r == 0 {
            return Err(Error::NonPositive("r"));
        }
        let components = split_residues(&self.maya(), r);
        let charges: Vec<i64> = components.iter().map(MayaSet::charge).collect();
        let quotients = components
            .iter()
            .zip(&charges)
            .map(|(comp, &q)| Partition::from_maya(&comp.shift(-q)))
            .collect::<Result<Vec<_>>>()?;
        let vacua: Vec<MayaSet> = charges.iter().map(|&q| MayaSet::vacuum().shift(q)).collect();
        let core = Partition::from_maya(&assemble_residues(&vacua, r))?;
        Ok(CoreQuotient { r, core, quotients, charges })
    }
}

/// Residue label `c` of `k` modulo `r`, as a half-integer in `{½, …, r − ½}`.
pub fn residue(k: HalfInt, r: usize) -> HalfInt {
    let m = 2 * r as i64;
    let c = (k.twice() - 1).rem_euclid(m) + 1;
    HalfInt::from_twice(c)
}

/// Re-indexed position `t = (k − c)/r + ½` of `k` inside its residue class.
pub fn class_index(k: HalfInt, r: usize) -> HalfInt {
    let c = residue(k, r);
    HalfInt::from_twice((k.twice() - c.twice()) / r as i64 + 1)
}

/// Inverse of [`class_index`]: `k = r(t − ½) + c`.
pub fn class_position(t: HalfInt, c: HalfInt, r: usize) -> HalfInt {
    HalfInt::from_twice(r as i64 * (t.twice() - 1) + c.twice())
}

/// Residue labels `½, 3/2, …, r − ½`.
pub fn residues(r: usize) -> impl Iterator<Item = HalfInt> {
    (0..r as i64).map(|i| HalfInt::from_twice(2 * i + 1))
}

/// The `r` component Maya sets `S_c = {t : r(t − ½) + c ∈ S}`.
pub fn split_residues(s: &MayaSet, r: usize) -> Vec<MayaSet> {
    let lo = s.floor().shift(-(r as i64));
    residues(r)
        .map(|c| {
            // smallest element of the class at or above lo; everything below is in S
            let first = (0..r as i64)
                .map(|d| lo.shift(d))
                .find(|&k| residue(k, r) == c)
                .expect("some shift lands in the class");
            let mut members = Vec::new();
            let mut k = first;
            while k <= s.top() {
                if s.contains(k) {
                    members.push(class_index(k, r));
                }
                k = k.shift(r as i64);
            }
            MayaSet::from_members(members, class_index(first, r))
        })
        .collect()
}

/// Inverse of [`split_residues`].
pub fn assemble_residues(components: &[MayaSet], r: usize) -> MayaSet {
    assert_eq!(components.len(), r);
    let below = residues(r)
        .zip(components)
        .map(|(c, comp)| class_position(comp.floor(), c, r))
        .min()
        .expect("r >= 1");
    let mut members = Vec::new();
    for (c, comp) in residues(r).zip(components) {
        let mut t = class_index(below, r);
        // first t whose position is at or above `below`
        while class_position(t, c, r) < below {
            t = t.shift(1);
        }
        while t <= comp.top() {
            if comp.contains(t) {
                members.push(class_position(t, c, r));
            }
            t = t.shift(1);
        }
    }
    MayaSet::from_members(members, below)
}

/// The r-core and r-quotient of a partition together with the component
/// charges. The core is the partition with the same charges and empty
/// quotients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreQuotient {
    pub r: usize,
    pub core: Partition,
    pub quotients: Vec<Partition>,
    pub charges: Vec<i64>,
}

impl CoreQuotient {
    /// Rebuilds the partition from the core and the quotient tuple.
    pub fn reconstruct(&self) -> Result<Partition> {
        let core_components = split_residues(&self.core.maya(), self.r);
        let components: Vec<MayaSet> = core_components
            .iter()
            .zip(&self.quotients)
            .map(|(comp, mu)| mu.maya().shift(comp.charge()))
            .collect();
        Partition::from_maya(&assemble_residues(&components, self.r))
    }

    pub fn quotient_size(&self) -> usize {
        self.quotients.iter().map(Partition::size).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_up_to, Square};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: `μ ⊇ λ`, `|μ/λ| = r`, squares edge-connected and no 2×2
    /// block inside the skew shape.
    fn brute_rim_hooks(lam: &Partition, r: usize) -> Vec<(Partition, usize, i64)> {
        let mut out = Vec::new();
        for mu in crate::partition::enumerate_partitions(lam.size() + r) {
            if !mu.contains(lam) {
                continue;
            }
            let skew: Vec<Square> = mu.squares().filter(|s| !lam.contains_square(*s)).collect();
            let inside = |row: usize, col: usize| skew.contains(&Square::new(row, col));
            let has_block = skew
                .iter()
                .any(|s| inside(s.row + 1, s.col) && inside(s.row, s.col + 1) && inside(s.row + 1, s.col + 1));
            if has_block {
                continue;
            }
            // flood fill over shared edges
            let mut seen = vec![skew[0]];
            let mut stack = vec![skew[0]];
            while let Some(s) = stack.pop() {
                for t in &skew {
                    let adjacent = (s.row == t.row && s.col.abs_diff(t.col) == 1)
                        || (s.col == t.col && s.row.abs_diff(t.row) == 1);
                    if adjacent && !seen.contains(t) {
                        seen.push(*t);
                        stack.push(*t);
                    }
                }
            }
            if seen.len() != skew.len() {
                continue;
            }
            let mut rows: Vec<usize> = skew.iter().map(|s| s.row).collect();
            rows.dedup();
            let content: i64 = skew.iter().map(|s| s.content()).sum();
            out.push((mu, rows.len(), content));
        }
        out.sort();
        out
    }

    #[test]
    fn rim_hooks_on_empty() {
        let hooks = Partition::empty().addable_rim_hooks(2);
        assert_eq!(hooks.len(), 2);
        assert_eq!((hooks[0].target.clone(), hooks[0].height, hooks[0].content_sum), (p(&[2]), 1, 1));
        assert_eq!((hooks[1].target.clone(), hooks[1].height, hooks[1].content_sum), (p(&[1, 1]), 2, -1));
        let single = Partition::empty().addable_rim_hooks(1);
        assert_eq!(single.len(), 1);
        assert_eq!((single[0].height, single[0].content_sum), (1, 0));
    }

    #[test]
    fn rim_hooks_on_single_box() {
        let got: Vec<_> = p(&[1])
            .addable_rim_hooks(2)
            .into_iter()
            .map(|h| (h.target, h.height, h.content_sum))
            .collect();
        assert_eq!(got, brute_rim_hooks(&p(&[1]), 2));
        assert_eq!(got, vec![(p(&[3]), 1, 3), (p(&[1, 1, 1]), 2, -3)]);
    }

    #[test]
    fn addable_rim_hooks_match_brute_force() {
        for lam in partitions_up_to(10) {
            for r in 1..=4 {
                let mut got: Vec<_> = lam
                    .addable_rim_hooks(r)
                    .into_iter()
                    .map(|h| (h.target, h.height, h.content_sum))
                    .collect();
                got.sort();
                assert_eq!(got, brute_rim_hooks(&lam, r), "lambda = {lam}, r = {r}");
            }
        }
    }

    #[test]
    fn removable_rim_hooks_invert_addable() {
        for lam in partitions_up_to(9) {
            for r in 1..=3 {
                for h in lam.addable_rim_hooks(r) {
                    let back = h.target.removable_rim_hooks(r);
                    let found = back.iter().find(|b| b.target == lam).expect("inverse move exists");
                    assert_eq!((found.height, found.content_sum), (h.height, h.content_sum));
                }
            }
        }
    }

    #[test]
    fn core_quotient_examples() {
        let cq = p(&[2, 2]).core_quotient(2).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotients, vec![p(&[1]), p(&[1])]);
        assert_eq!(cq.charges, vec![0, 0]);
        let cq = p(&[2, 1]).core_quotient(2).unwrap();
        assert_eq!(cq.core, p(&[2, 1]));
        assert_eq!(cq.quotients, vec![Partition::empty(), Partition::empty()]);
        let lam = p(&[4, 2, 1]);
        let cq = lam.core_quotient(1).unwrap();
        assert_eq!((cq.core, cq.quotients, cq.charges), (Partition::empty(), vec![lam], vec![0]));
        assert_eq!(p(&[1]).core_quotient(0), Err(Error::NonPositive("r")));
    }

    #[test]
    fn residue_labels() {
        let h = HalfInt::from_twice;
        assert_eq!(residue(h(-1), 2), h(3));
        assert_eq!(class_index(h(-1), 2), h(-1));
        assert_eq!(residue(h(1), 2), h(1));
        assert_eq!(class_index(h(1), 2), h(1));
        for k in -20..20 {
            let k = h(2 * k + 1);
            for r in 1..5 {
                assert_eq!(class_position(class_index(k, r), residue(k, r), r), k);
            }
        }
    }
}
