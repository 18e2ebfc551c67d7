// SPDX-License-Identifier: MIT
//! Sparse polynomials over the two-element field in the variables `x[j]` and
//! `y[j,i]` attached to the parts of a partition.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::sum::Sum;

/// `X(j)` is `x[j]`, `Y(j, i)` is `y[j,i]`; parts are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(u32),
    Y(u32, u32),
}

impl Var {
    pub fn part(self) -> u32 {
        match self {
            Var::X(j) | Var::Y(j, _) => j,
        }
    }

    fn key(self) -> (u32, u32) {
        match self {
            Var::X(j) => (j, 0),
            Var::Y(j, i) => (j, i),
        }
    }

    /// Same variable attached to part `j`.
    pub fn with_part(self, j: u32) -> Var {
        match self {
            Var::X(_) => Var::X(j),
            Var::Y(_, i) => Var::Y(j, i),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(j) => write!(f, "x[{j}]"),
            Var::Y(j, i) => write!(f, "y[{j},{i}]"),
        }
    }
}

/// A monomial: variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Mono(Vec<(Var, u32)>);

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    pub fn var(v: Var) -> Mono {
        Mono(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut map: BTreeMap<Var, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *map.entry(v).or_default() += e;
        }
        Mono(map.into_iter().collect())
    }

    fn from_map(map: BTreeMap<Var, u32>) -> Mono {
        Mono(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }
}

/// Graded lexicographic order, largest first: higher degree wins, then the
/// exponent of the earliest variable.
impl Ord for Mono {
    fn cmp(&self, other: &Mono) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let mut a = self.0.iter().map(|&(v, e)| (v.key(), e));
            let mut b = other.0.iter().map(|&(v, e)| (v.key(), e));
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some((va, ea)), Some((vb, eb))) => {
                        if va != vb {
                            // The earlier variable is present only on one side.
                            return va.cmp(&vb);
                        }
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s =
            self.0.iter().map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") }).join("*");
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Sum<Mono>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Sum::zero())
    }

    pub fn one() -> Poly {
        Poly::from_mono(Mono::one())
    }

    pub fn var(v: Var) -> Poly {
        Poly::from_mono(Mono::var(v))
    }

    pub fn x(j: u32) -> Poly {
        Poly::var(Var::X(j))
    }

    pub fn y(j: u32, i: u32) -> Poly {
        Poly::var(Var::Y(j, i))
    }

    pub fn from_mono(m: Mono) -> Poly {
        Poly(Sum::from_term(m))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Mono> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree of a homogeneous polynomial; `None` for zero or mixed input.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.0.iter().map(Mono::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly(self.0.clone() + other.0.clone())
    }

    pub fn add_assign(&mut self, other: &Poly) {
        self.0.add_sum(&other.0);
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        Poly(self.0.bilinear(&other.0, |a, b| Sum::from_term(a.mul(b))))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn product<'a>(ps: impl IntoIterator<Item = &'a Poly>) -> Poly {
        ps.into_iter().fold(Poly::one(), |acc, p| acc.mul(p))
    }

    /// Substitutes polynomials for variables; unmapped variables stay.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        for m in self.0.iter() {
            let mut t = Poly::one();
            for &(v, e) in m.factors() {
                match map.get(&v) {
                    Some(p) => t = t.mul(&p.pow(e)),
                    None => t = t.mul(&Poly::var(v).pow(e)),
                }
            }
            out.add_assign(&t);
        }
        out
    }

    /// Renames the part index of every variable.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Poly {
        Poly(
            self.0
                .iter()
                .map(|m| {
                    Mono::from_map(m.factors().iter().map(|&(v, e)| (v.with_part(f(v.part())), e)).collect())
                })
                .collect(),
        )
    }

    /// Variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        self.0.iter().flat_map(|m| m.factors().iter().map(|&(v, _)| v)).sorted().dedup().collect()
    }

    /// Terms in display order (largest first).
    pub fn sorted_terms(&self) -> Vec<&Mono> {
        self.0.iter().sorted().collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.sorted_terms().iter().join("+"))
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        Poly(self.0 + rhs.0)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_order() {
        let y1 = Poly::y(1, 1);
        let y2 = Poly::y(1, 2);
        let h = y1.pow(3) + y1.pow(2).mul(&y2) + y2.pow(3);
        assert_eq!(h.to_string(), "y[1,1]^3+y[1,1]^2*y[1,2]+y[1,2]^3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((Poly::one() + Poly::x(2)).to_string(), "x[2]+1");
    }

    #[test]
    fn characteristic_two() {
        let p = Poly::x(1) + Poly::y(1, 1);
        assert_eq!(p.pow(2), Poly::x(1).pow(2) + Poly::y(1, 1).pow(2));
        assert!(p.add(&p).is_zero());
    }

    #[test]
    fn substitution() {
        let p = Poly::x(1).mul(&Poly::y(1, 1));
        let map = BTreeMap::from([(Var::X(1), Poly::x(1) + Poly::y(1, 1))]);
        let q = p.substitute(&map);
        assert_eq!(q, Poly::x(1).mul(&Poly::y(1, 1)) + Poly::y(1, 1).pow(2));
        assert_eq!(p.relabel(|j| j + 1), Poly::x(2).mul(&Poly::y(2, 1)));
    }
}
