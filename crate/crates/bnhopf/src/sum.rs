// SPDX-License-Identifier: MIT
//! Finite formal sums with coefficients in the two-element field.

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::ops::{Add, AddAssign};

/// A set of terms; inserting a term twice removes it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sum<T: Ord> {
    terms: BTreeSet<T>,
}

impl<T: Ord> Default for Sum<T> {
    fn default() -> Self {
        Sum { terms: BTreeSet::new() }
    }
}

impl<T: Ord + Clone> Sum<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(t: T) -> Self {
        let mut s = Self::zero();
        s.toggle(t);
        s
    }

    pub fn toggle(&mut self, t: T) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add_sum(&mut self, other: &Sum<T>) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, T> {
        self.terms.iter()
    }

    pub fn contains(&self, t: &T) -> bool {
        self.terms.contains(t)
    }

    /// Applies a linear map given on terms.
    pub fn map_linear<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> Sum<U>) -> Sum<U> {
        let mut out = Sum::zero();
        for t in &self.terms {
            out.add_sum(&f(t));
        }
        out
    }

    /// Applies a bilinear map given on pairs of terms.
    pub fn bilinear<U: Ord + Clone, V: Ord + Clone>(
        &self,
        other: &Sum<U>,
        mut f: impl FnMut(&T, &U) -> Sum<V>,
    ) -> Sum<V> {
        let mut out = Sum::zero();
        for a in &self.terms {
            for b in other.iter() {
                out.add_sum(&f(a, b));
            }
        }
        out
    }

    pub fn retain(&mut self, f: impl FnMut(&T) -> bool) {
        self.terms.retain(f);
    }
}

impl<T: Ord + Clone> FromIterator<T> for Sum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Sum::zero();
        for t in iter {
            s.toggle(t);
        }
        s
    }
}

impl<'a, T: Ord> IntoIterator for &'a Sum<T> {
    type Item = &'a T;
    type IntoIter = btree_set::Iter<'a, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<T: Ord + Clone> Add for Sum<T> {
    type Output = Sum<T>;
    fn add(mut self, rhs: Sum<T>) -> Sum<T> {
        self.add_sum(&rhs);
        self
    }
}

impl<T: Ord + Clone> AddAssign<&Sum<T>> for Sum<T> {
    fn add_assign(&mut self, rhs: &Sum<T>) {
        self.add_sum(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toggling_cancels() {
        let mut s: Sum<u8> = [1, 2, 3].into_iter().collect();
        s.toggle(2);
        assert_eq!(s.iter().copied().collect::<Vec<_>>(), vec![1, 3]);
        let t: Sum<u8> = [1, 3].into_iter().collect();
        assert!((s + t).is_zero());
    }
}
