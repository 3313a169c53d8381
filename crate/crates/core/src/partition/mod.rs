//! Integer partitions and their combinatorics: hooks, contents, dimensions,
//! Maya coordinates, rim hooks, r-cores and r-quotients.

mod halfint;
mod maya;
mod rim;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub use halfint::{parse_points, HalfInt};
pub use maya::MayaSet;
pub use rim::{assemble_residues, class_index, class_position, residue, residues, split_residues, CoreQuotient, RimHook};

/// A weakly decreasing list of positive parts.
///
/// Ordered by size first, then reverse lexicographically, so that
/// `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. This is the canonical order of
/// every enumeration in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }

    /// `column − row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Trailing zeros are dropped; parts must otherwise be positive and weakly
    /// decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition::from_sorted(parts)
    }

    pub fn contains_square(&self, s: Square) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row)
    }

    /// `μ ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Squares in row-major order.
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Square::new(i + 1, j)))
    }

    /// Arm + leg + 1.
    pub fn hook_length(&self, s: Square) -> Result<usize> {
        if !self.contains_square(s) {
            return Err(Error::SquareOutside { row: s.row, col: s.col });
        }
        let arm = self.part(s.row) - s.col;
        let leg = self.parts[s.row..].iter().take_while(|&&p| p >= s.col).count();
        Ok(arm + leg + 1)
    }

    pub fn hook_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        let conj = self.conjugate();
        self.squares().map(move |s| {
            (self.part(s.row) - s.col) + (conj.part(s.col) - s.row) + 1
        })
    }

    /// Number of standard Young tableaux, `n! / ∏ h(□)`.
    pub fn dim(&self) -> BigUint {
        let fact: BigUint = (1..=self.size).map(BigUint::from).product();
        let hooks: BigUint = self.hook_lengths().map(BigUint::from).product();
        fact / hooks
    }

    /// Number of squares on the main diagonal.
    pub fn durfee(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    /// `S(λ) = {λ_i − i + ½}`.
    pub fn maya(&self) -> MayaSet {
        let len = self.len() as i64;
        let members = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| HalfInt::from_twice(2 * (p as i64 - i as i64) - 1));
        MayaSet::from_members(members, HalfInt::from_twice(1 - 2 * len))
    }

    /// Modified Frobenius coordinates `(S_+, S_−)`.
    pub fn frobenius(&self) -> (Vec<HalfInt>, Vec<HalfInt>) {
        let s = self.maya();
        (s.s_plus(), s.s_minus())
    }

    /// Inverse of [`maya`](Self::maya); the set must have charge zero.
    pub fn from_maya(s: &MayaSet) -> Result<Self> {
        let charge = s.charge();
        if charge != 0 {
            return Err(Error::NonzeroCharge(charge));
        }
        let parts = s
            .iter_desc()
            .enumerate()
            .map(|(i, k)| k.ceil() + i as i64)
            .take_while(|&p| p > 0)
            .map(|p| p as usize)
            .collect();
        Ok(Partition::from_sorted(parts))
    }

    /// Partitions obtained by adding one square, with the square added.
    pub fn addable_corners(&self) -> Vec<(Partition, Square)> {
        let mut out = Vec::new();
        for row in 1..=self.len() + 1 {
            let p = self.part(row);
            if row == 1 || self.part(row - 1) > p {
                let mut parts = self.parts.clone();
                if row > self.len() {
                    parts.push(1);
                } else {
                    parts[row - 1] += 1;
                }
                out.push((Partition::from_sorted(parts), Square::new(row, p + 1)));
            }
        }
        out
    }

    /// Partitions obtained by removing one square, with the square removed.
    pub fn removable_corners(&self) -> Vec<(Partition, Square)> {
        let mut out = Vec::new();
        for row in 1..=self.len() {
            let p = self.part(row);
            if self.part(row + 1) < p {
                let mut parts = self.parts.clone();
                parts[row - 1] -= 1;
                if parts[row - 1] == 0 {
                    parts.pop();
                }
                out.push((Partition::from_sorted(parts), Square::new(row, p)));
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for first in (1..=remaining.min(max_part)).rev() {
        current.push(first);
        fill(remaining - first, first, current, out);
        current.pop();
    }
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
