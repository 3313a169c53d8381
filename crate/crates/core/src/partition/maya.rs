//! Maya sets: subsets of ℤ+½ that contain every sufficiently negative element
//! and finitely many positive ones.

use std::fmt;

use super::HalfInt;

/// A subset `S ⊂ ℤ+½` such that `S` contains every `k` below some point and
/// only finitely many `k > 0`.
///
/// Stored canonically: `floor` is the smallest element not in `S` and `extra`
/// lists the members above `floor` in descending order. Everything below
/// `floor` is a member.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MayaSet {
    floor: i64,
    extra: Vec<i64>,
}

impl MayaSet {
    /// `S(∅) = {-1/2, -3/2, ...}`.
    pub fn vacuum() -> Self {
        MayaSet { floor: 1, extra: Vec::new() }
    }

    /// The set `{k < below} ∪ members`.
    pub fn from_members(members: impl IntoIterator<Item = HalfInt>, below: HalfInt) -> Self {
        let mut extra: Vec<i64> = members
            .into_iter()
            .map(HalfInt::twice)
            .filter(|&k| k >= below.twice())
            .collect();
        extra.sort_unstable_by(|a, b| b.cmp(a));
        extra.dedup();
        let mut set = MayaSet { floor: below.twice(), extra };
        set.normalize();
        set
    }

    fn normalize(&mut self) {
        while self.extra.last() == Some(&self.floor) {
            self.extra.pop();
            self.floor += 2;
        }
    }

    /// Smallest half-integer not in the set.
    pub fn floor(&self) -> HalfInt {
        HalfInt::from_twice(self.floor)
    }

    /// Members above [`floor`](Self::floor), descending.
    pub fn extra(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.extra.iter().map(|&k| HalfInt::from_twice(k))
    }

    /// Largest member.
    pub fn top(&self) -> HalfInt {
        HalfInt::from_twice(self.extra.first().copied().unwrap_or(self.floor - 2))
    }

    pub fn contains(&self, k: HalfInt) -> bool {
        let k = k.twice();
        k < self.floor || self.extra.binary_search_by(|p| k.cmp(p)).is_ok()
    }

    /// Descending enumeration `s_1 > s_2 > ...` of all members (infinite).
    pub fn iter_desc(&self) -> impl Iterator<Item = HalfInt> + '_ {
        let below = (0..).map(move |i| HalfInt::from_twice(self.floor - 2 - 2 * i));
        self.extra().chain(below)
    }

    /// `#{s ∈ S : s > k}`.
    pub fn count_above(&self, k: HalfInt) -> usize {
        let k = k.twice();
        let extras = self.extra.iter().take_while(|&&s| s > k).count();
        if k < self.floor {
            // members in (k, floor) plus every extra (all above floor)
            ((self.floor - k) / 2 - 1) as usize + extras
        } else {
            extras
        }
    }

    /// Adds `k`; returns `false` if it was already present.
    pub fn insert(&mut self, k: HalfInt) -> bool {
        let k = k.twice();
        if k < self.floor {
            return false;
        }
        if k == self.floor {
            self.floor += 2;
            self.normalize();
            return true;
        }
        match self.extra.binary_search_by(|p| k.cmp(p)) {
            Ok(_) => false,
            Err(pos) => {
                self.extra.insert(pos, k);
                true
            }
        }
    }

    /// Removes `k`; returns `false` if it was absent.
    pub fn remove(&mut self, k: HalfInt) -> bool {
        let k = k.twice();
        if k < self.floor {
            let mut between: Vec<i64> = ((k + 2)..self.floor).step_by(2).collect();
            between.reverse();
            self.extra.extend(between);
            self.floor = k;
            return true;
        }
        match self.extra.binary_search_by(|p| k.cmp(p)) {
            Ok(pos) => {
                self.extra.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with_inserted(&self, k: HalfInt) -> Option<Self> {
        let mut s = self.clone();
        s.insert(k).then_some(s)
    }

    pub fn with_removed(&self, k: HalfInt) -> Option<Self> {
        let mut s = self.clone();
        s.remove(k).then_some(s)
    }

    /// `S + n`.
    pub fn shift(&self, n: i64) -> Self {
        MayaSet {
            floor: self.floor + 2 * n,
            extra: self.extra.iter().map(|k| k + 2 * n).collect(),
        }
    }

    /// Members in `[lo, hi]`, descending.
    pub fn members_in(&self, lo: HalfInt, hi: HalfInt) -> Vec<HalfInt> {
        let (lo, hi) = (lo.twice(), hi.twice());
        let mut out = Vec::new();
        let mut k = if hi % 2 == 0 { hi - 1 } else { hi };
        while k >= lo {
            let h = HalfInt::from_twice(k);
            if self.contains(h) {
                out.push(h);
            }
            k -= 2;
        }
        out
    }

    /// `S_+ = S ∖ (ℤ_{≤0} − ½)`, descending.
    pub fn s_plus(&self) -> Vec<HalfInt> {
        if self.top().twice() < 0 {
            return Vec::new();
        }
        self.members_in(HalfInt::HALF, self.top())
    }

    /// `S_− = (ℤ_{≤0} − ½) ∖ S`, descending.
    pub fn s_minus(&self) -> Vec<HalfInt> {
        let mut out = Vec::new();
        let mut k = -1;
        while k >= self.floor {
            if !self.contains(HalfInt::from_twice(k)) {
                out.push(HalfInt::from_twice(k));
            }
            k -= 2;
        }
        out
    }

    /// `C = |S_+| − |S_−|`.
    pub fn charge(&self) -> i64 {
        self.s_plus().len() as i64 - self.s_minus().len() as i64
    }

    /// `2H = 2(Σ_{S_+} k − Σ_{S_−} k)`, always an integer.
    pub fn energy_twice(&self) -> i64 {
        let plus: i64 = self.s_plus().iter().map(|k| k.twice()).sum();
        let minus: i64 = self.s_minus().iter().map(|k| k.twice()).sum();
        plus - minus
    }
}

impl fmt::Display for MayaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for k in self.extra() {
            write!(f, "{k},")?;
        }
        write!(f, "<{}}}", self.floor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn vacuum_membership() {
        let v = MayaSet::vacuum();
        assert!(v.contains(h(-1)));
        assert!(v.contains(h(-101)));
        assert!(!v.contains(h(1)));
        assert_eq!(v.charge(), 0);
        assert_eq!(v.energy_twice(), 0);
        let first: Vec<i64> = v.iter_desc().take(3).map(HalfInt::twice).collect();
        assert_eq!(first, vec![-1, -3, -5]);
    }

    #[test]
    fn insert_and_remove_keep_canonical_form() {
        let mut s = MayaSet::vacuum();
        assert!(s.insert(h(1)));
        assert_eq!(s.floor(), h(3));
        assert_eq!(s.charge(), 1);
        assert!(s.remove(h(-3)));
        assert_eq!(s.floor(), h(-3));
        assert_eq!(s.extra().map(HalfInt::twice).collect::<Vec<_>>(), vec![1, -1]);
        assert_eq!(s.charge(), 0);
        assert!(s.insert(h(-3)));
        assert_eq!(s, MayaSet::vacuum().with_inserted(h(1)).unwrap());
        assert!(!s.insert(h(-7)));
        assert!(!s.remove(h(5)));
    }

    #[test]
    fn count_above_matches_enumeration() {
        let s = MayaSet::from_members([h(5), h(1), h(-3)], h(-7));
        for k in -15..9 {
            let k = h(2 * k + 1);
            let direct = s.iter_desc().take_while(|&x| x > k).count();
            assert_eq!(s.count_above(k), direct, "k = {k}");
        }
    }

    #[test]
    fn shift_moves_charge() {
        let s = MayaSet::vacuum().shift(2);
        assert_eq!(s.charge(), 2);
        assert_eq!(s.shift(-2), MayaSet::vacuum());
    }
}
