//! Sparse vectors over a totally ordered basis.

use std::collections::btree_map::{BTreeMap, Entry};
use std::ops::{Add, Sub};

use crate::partition::{MayaSet, Partition};
use crate::scalar::{Scalar, C64};

/// Finitely supported linear combination of basis vectors labelled by `K`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<K, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord + Clone, S: Scalar> Default for SparseVector<K, S> {
    fn default() -> Self {
        SparseVector { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Scalar> SparseVector<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut v = Self::zero();
        v.add_term(key, S::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, S)>) -> Self {
        let mut v = Self::zero();
        for (key, c) in terms {
            v.add_term(key, c);
        }
        v
    }

    pub fn add_term(&mut self, key: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, key: &K) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c.clone())))
    }

    /// Keeps the terms whose label satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        SparseVector {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels every basis vector; colliding labels are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> SparseVector<K2, S> {
        SparseVector::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    pub fn to_c64(&self) -> SparseVector<K, C64> {
        SparseVector::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), c.to_c64())))
    }
}

impl<S: Scalar> SparseVector<Partition, S> {
    /// `δ_∅`.
    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    /// Components with `|λ| ≤ max_size`.
    pub fn truncate(&self, max_size: usize) -> Self {
        self.filter(|l| l.size() <= max_size)
    }

    pub fn min_size(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
    }

    pub fn max_size(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Partition::size)
    }
}

impl<S: Scalar> SparseVector<MayaSet, S> {
    /// The vacuum `|∅⟩ = v_{−½} ∧ v_{−3/2} ∧ …`.
    pub fn vacuum() -> Self {
        Self::basis(MayaSet::vacuum())
    }
}

impl<K: Ord + Clone, S: Scalar> Add for &SparseVector<K, S> {
    type Output = SparseVector<K, S>;

    fn add(self, rhs: Self) -> SparseVector<K, S> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone, S: Scalar> Sub for &SparseVector<K, S> {
    type Output = SparseVector<K, S>;

    fn sub(self, rhs: Self) -> SparseVector<K, S> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}
