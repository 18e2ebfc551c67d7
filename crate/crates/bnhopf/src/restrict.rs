// SPDX-License-Identifier: MIT
//! Restriction of classes to the maximal elementary abelian 2-subgroups
//! `A_pi` of `B_n` and `A^_pi = A_pi ∩ B_n^+`.
//!
//! The cohomology of `A^_pi` is the polynomial ring on the parts' variables
//! modulo the linear form `phi_pi = sum x[j] (size 1) + sum y[j,1] (size 2)`;
//! polynomials are kept in normal form by eliminating the `phi` variable of
//! the part with the largest label.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::block::Block;
use crate::charged::{charged_basis, Charge, ChargedElement, ChargedMonomial};
use crate::error::{Error, Result};
use crate::gf2::{BitRow, Echelon};
use crate::invariants::{dickson_on, f_class_on, h_classes_on, swap_on};
use crate::memo::{memo, Table};
use crate::monomial::{Element, Monomial};
use crate::partition::Partition;
use crate::poly::{Poly, Var};
use crate::uv;

/// One part of a labelled partition: size `2^k`, variables tagged `label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub label: u32,
    pub k: u32,
}

impl Part {
    pub fn size(self) -> u32 {
        1 << self.k
    }

    /// Parts of size 1 and 2 contain odd elements of `B_n`.
    pub fn is_odd(self) -> bool {
        self.k <= 1
    }

    fn phi_var(self) -> Var {
        if self.k == 0 {
            Var::X(self.label)
        } else {
            Var::Y(self.label, 1)
        }
    }
}

/// Parts in increasing size, labelled `first, first + 1, ...`.
pub fn labelled_from(p: &Partition, first: u32) -> Vec<Part> {
    p.parts().into_iter().zip(first..).map(|(s, label)| Part { label, k: s.trailing_zeros() }).collect()
}

pub fn labelled(p: &Partition) -> Vec<Part> {
    labelled_from(p, 1)
}

fn total(parts: &[Part]) -> u32 {
    parts.iter().map(|p| p.size()).sum()
}

/// Normal form modulo `phi` of the given parts.
pub fn phi_reduce(p: &Poly, parts: &[Part]) -> Poly {
    let odd: Vec<Part> = parts.iter().copied().filter(|q| q.is_odd()).sorted().collect();
    let Some((last, rest)) = odd.split_last() else {
        return p.clone();
    };
    let sum = rest.iter().fold(Poly::zero(), |acc, q| acc + Poly::var(q.phi_var()));
    p.substitute(&BTreeMap::from([(last.phi_var(), sum)]))
}

/// Splits `parts` into a subset of total size `n` and its complement, in
/// every possible way.
fn splits(parts: &[Part], n: u32) -> Vec<(Vec<Part>, Vec<Part>)> {
    let mut out = Vec::new();
    for mask in 0u32..1 << parts.len() {
        let (a, b): (Vec<Part>, Vec<Part>) = parts.iter().enumerate().partition_map(|(i, &p)| {
            if mask >> i & 1 == 1 {
                itertools::Either::Left(p)
            } else {
                itertools::Either::Right(p)
            }
        });
        if total(&a) == n {
            out.push((a, b));
        }
    }
    out
}

// ----------------------------------------------------------------- B side

/// `rho(b)` for one block: per part of size `2^k`,
/// `f_{2^k}^{a_0} prod_i d_{2^k - 2^{k-i}}^{a_i}`; zero if some part is
/// smaller than `2^K` for the top index `K`.
pub fn rho_block_b(b: &Block, parts: &[Part]) -> Poly {
    debug_assert_eq!(total(parts), b.n());
    let top = b.max_index();
    if parts.iter().any(|p| p.k < top) {
        return Poly::zero();
    }
    let mut out = Poly::one();
    for p in parts {
        if b.a0() > 0 {
            out = out.mul(&f_class_on(p.k, p.label).pow(b.a0()));
        }
        for i in 1..=top {
            let a = b.exp(i);
            if a > 0 {
                let d = dickson_on(p.k, p.k - i, p.label).expect("i <= k");
                out = out.mul(&d.pow(a));
            }
        }
    }
    out
}

thread_local! {
    static RHO_B: Table<(Monomial, Vec<Part>), Poly> = Default::default();
    static RHO: Table<(ChargedMonomial, Vec<Part>), Poly> = Default::default();
}

/// Restriction `H^*(B_n) -> H^*(A_pi)` of a monomial: a sum over the ways
/// of distributing the parts among the blocks.
pub fn rho_b_mono(x: &Monomial, parts: &[Part]) -> Poly {
    if x.n() != total(parts) {
        return Poly::zero();
    }
    memo(&RHO_B, (x.clone(), parts.to_vec()), || {
        let Some((first, rest)) = x.blocks().split_first() else {
            return Poly::one();
        };
        let rest = Monomial::from_blocks(rest.iter().cloned()).expect("sub-monomial");
        let mut out = Poly::zero();
        for (s, c) in splits(parts, first.n()) {
            let a = rho_block_b(first, &s);
            if a.is_zero() {
                continue;
            }
            out.add_assign(&a.mul(&rho_b_mono(&rest, &c)));
        }
        out
    })
}

pub fn rho_b(x: &Element, parts: &[Part]) -> Poly {
    x.iter().fold(Poly::zero(), |acc, m| acc + rho_b_mono(m, parts))
}

// ----------------------------------------------------------- charged side

/// `rho(gamma^s_{l, n/2^l})` on the given parts (`l >= 2`).
pub fn rho_gen(l: u32, s: Charge, parts: &[Part]) -> Poly {
    assert!(l >= 2 && s != Charge::Zero, "charged generator");
    if parts.iter().any(|p| p.k < 2) {
        return Poly::zero();
    }
    if l >= 3 {
        if s == Charge::Minus || parts.iter().any(|p| p.k < l) {
            return Poly::zero();
        }
        return parts.iter().fold(Poly::one(), |acc, p| acc.mul(&dickson_on(p.k, p.k - l, p.label).unwrap()));
    }
    let d = parts
        .iter()
        .filter(|p| p.k >= 3)
        .fold(Poly::one(), |acc, p| acc.mul(&dickson_on(p.k, p.k - 2, p.label).unwrap()));
    let fours: Vec<u32> = parts.iter().filter(|p| p.k == 2).map(|p| p.label).collect();
    let (h, hp) = h_classes_on(&fours);
    d.mul(if s == Charge::Plus { &h } else { &hp })
}

/// `rho(b^s)` for a single block with top index at least 2, following the
/// defining sum of `b^+`: `res(w^a0 gamma_1^a1)` times
/// `(gamma_i^+ + gamma_i^-)^{a_i}` for `2 <= i < K` and
/// `E_{a_K}(gamma_K^+, gamma_K^-)`.
fn rho_charged_block(b: &Block, s: Charge, parts: &[Part]) -> Poly {
    let top = b.max_index();
    let mut out = phi_reduce(&rho_block_b(&b.level1_part(), parts), parts);
    for i in 2..=top {
        let a = b.exp(i);
        if a == 0 || out.is_zero() {
            continue;
        }
        let u = rho_gen(i, s, parts);
        let v = rho_gen(i, s.flip(), parts);
        let factor = if i < top {
            u.add(&v).pow(a)
        } else {
            uv::e_poly(a, false).iter().fold(Poly::zero(), |acc, &(p, q)| acc + u.pow(p).mul(&v.pow(q)))
        };
        out = out.mul(&factor);
    }
    phi_reduce(&out, parts)
}

/// `rho(z)` on labelled parts whose sizes add up to the component of `z`.
pub fn rho_mono(z: &ChargedMonomial, parts: &[Part]) -> Poly {
    if z.n() != total(parts) {
        return Poly::zero();
    }
    memo(&RHO, (z.clone(), parts.to_vec()), || rho_uncached(z, parts))
}

fn rho_uncached(z: &ChargedMonomial, parts: &[Part]) -> Poly {
    let s = z.charge();
    if s == Charge::Zero {
        return phi_reduce(&rho_b_mono(z.base(), parts), parts);
    }
    let blocks = z.base().blocks();
    match blocks {
        [] => {
            if s == Charge::Plus {
                Poly::one()
            } else {
                Poly::zero()
            }
        }
        [b] => rho_charged_block(b, s, parts),
        [first, rest @ ..] => {
            // x^s = b^s o rest^+; double cosets pair (b^s, rest^+) with (b^-s, rest^-).
            let rest = Monomial::from_blocks(rest.iter().cloned()).expect("sub-monomial");
            let rp = ChargedMonomial::new(rest, Charge::Plus).expect("annihilator blocks");
            let rm = rp.iota();
            let mut out = Poly::zero();
            for (a, c) in splits(parts, first.n()) {
                if a.iter().any(|p| p.is_odd()) && c.iter().any(|p| p.is_odd()) {
                    continue;
                }
                let l1 = rho_charged_block(first, s, &a);
                let l2 = rho_charged_block(first, s.flip(), &a);
                if !l1.is_zero() {
                    out.add_assign(&l1.mul(&rho_mono(&rp, &c)));
                }
                if !l2.is_zero() {
                    out.add_assign(&l2.mul(&rho_mono(&rm, &c)));
                }
            }
            phi_reduce(&out, parts)
        }
    }
}

pub fn rho_on(z: &ChargedElement, parts: &[Part]) -> Poly {
    z.iter().fold(Poly::zero(), |acc, m| acc + rho_mono(m, parts))
}

fn check_component(z: &ChargedElement, p: &Partition) -> Result<()> {
    match z.iter().find(|m| m.n() != p.n()) {
        Some(m) => Err(Error::ComponentMismatch(m.n(), p.n())),
        None => Ok(()),
    }
}

/// `rho_pi(z)`.
pub fn restrict_charged(z: &ChargedElement, p: &Partition) -> Result<Poly> {
    check_component(z, p)?;
    Ok(rho_on(z, &labelled(p)))
}

/// `rho'_pi(z) = rho_pi(iota z)`.
pub fn restrict_prime(z: &ChargedElement, p: &Partition) -> Result<Poly> {
    check_component(z, p)?;
    let iz: ChargedElement = z.iter().map(ChargedMonomial::iota).collect();
    Ok(rho_on(&iz, &labelled(p)))
}

/// Restriction of a class of `H^*(B_n)` to `A_pi`, without `phi`.
pub fn restrict_b(x: &Element, p: &Partition) -> Result<Poly> {
    if let Some(m) = x.iter().find(|m| m.n() != p.n()) {
        return Err(Error::ComponentMismatch(m.n(), p.n()));
    }
    Ok(rho_b(x, &labelled(p)))
}

/// Conjugation by an odd element of the normalizer when there are no parts
/// of size 1 or 2 and some of size 4: the swap `y1 <-> y2` on the first
/// size-4 part.
pub fn s_operator(f: &Poly, parts: &[Part]) -> Option<Poly> {
    if parts.iter().any(|p| p.is_odd()) {
        return None;
    }
    let four = parts.iter().filter(|p| p.k == 2).map(|p| p.label).min()?;
    Some(f.substitute(&swap_on(four)))
}

/// Right-hand side of the double coset formula for `rho(z o w)`: the sum over
/// splittings of the parts with one side free of odd elements of
/// `rho(z) rho(w) + rho'(z) rho'(w)`.
pub fn transfer_formula(z: &ChargedMonomial, w: &ChargedMonomial, parts: &[Part]) -> Poly {
    let mut out = Poly::zero();
    for (a, c) in splits(parts, z.n()) {
        if a.iter().any(|p| p.is_odd()) && c.iter().any(|p| p.is_odd()) {
            continue;
        }
        let t = rho_mono(z, &a).mul(&rho_mono(w, &c));
        let tp = rho_mono(&z.iota(), &a).mul(&rho_mono(&w.iota(), &c));
        out.add_assign(&t.add(&tp));
    }
    phi_reduce(&out, parts)
}

// --------------------------------------------------------------- detection

#[derive(Clone, Debug, Serialize)]
pub struct PartitionRank {
    pub partition: String,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetectionReport {
    pub n: u32,
    pub d: u32,
    pub dim: usize,
    pub rank: usize,
    pub rows: usize,
    /// Rank of `rho_pi (+) rho'_pi` alone, per partition.
    pub per_partition: Vec<PartitionRank>,
    #[serde(skip)]
    pub basis: Vec<ChargedMonomial>,
}

impl DetectionReport {
    pub fn injective(&self) -> bool {
        self.rank == self.dim
    }
}

/// Stacks `rho_pi` and `rho'_pi` over every admissible partition of `n`
/// and computes the rank on the charged basis in bidegree `(n, d)`.
pub fn detection_matrix(n: u32, d: u32) -> DetectionReport {
    let basis = charged_basis(n, d);
    let partitions = Partition::all(n);
    // Column j, as a map from (partition, primed, monomial) to bits.
    let columns: Vec<Vec<(usize, bool, crate::poly::Mono)>> = basis
        .par_iter()
        .map(|z| {
            let mut col = Vec::new();
            for (pi, p) in partitions.iter().enumerate() {
                let parts = labelled(p);
                for (primed, zz) in [(false, z.clone()), (true, z.iota())] {
                    for m in rho_mono(&zz, &parts).terms() {
                        col.push((pi, primed, m.clone()));
                    }
                }
            }
            col
        })
        .collect();
    let mut rows: HashMap<(usize, bool, crate::poly::Mono), usize> = HashMap::new();
    for col in &columns {
        for key in col {
            let next = rows.len();
            rows.entry(key.clone()).or_insert(next);
        }
    }
    let nrows = rows.len();
    let vector = |col: &[(usize, bool, crate::poly::Mono)], keep: &dyn Fn(usize) -> bool| {
        BitRow::from_indices(nrows, col.iter().filter(|(pi, _, _)| keep(*pi)).map(|k| rows[k]))
    };
    let rank_of = |keep: &dyn Fn(usize) -> bool| {
        let mut e = Echelon::new(std::iter::empty(), nrows);
        for col in &columns {
            e.insert(vector(col, keep));
        }
        e.rank()
    };
    let rank = rank_of(&|_| true);
    let per_partition = partitions
        .iter()
        .enumerate()
        .map(|(i, p)| PartitionRank { partition: p.to_string(), rank: rank_of(&|pi| pi == i) })
        .collect();
    DetectionReport { n, d, dim: basis.len(), rank, rows: nrows, per_partition, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charged::gamma;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn single(z: ChargedMonomial) -> ChargedElement {
        ChargedElement::from_term(z)
    }

    #[test]
    fn generator_values() {
        let g = single(gamma(2, 1, Charge::Plus).unwrap());
        let r = restrict_charged(&g, &part("4")).unwrap();
        assert_eq!(r.to_string(), "y[1,1]^3+y[1,1]^2*y[1,2]+y[1,2]^3");
        let g = single(gamma(3, 1, Charge::Plus).unwrap());
        assert_eq!(restrict_charged(&g, &part("8")).unwrap(), dickson_on(3, 0, 1).unwrap());
        assert!(restrict_charged(&g, &part("4 4")).unwrap().is_zero());
        assert!(restrict_charged(&g, &part("4")).is_err());
    }

    #[test]
    fn primed_restriction_of_gamma() {
        let g = single(gamma(2, 1, Charge::Plus).unwrap());
        let (_, hp) = h_classes_on(&[1]);
        assert_eq!(restrict_prime(&g, &part("4")).unwrap(), hp);
    }

    #[test]
    fn phi_normal_form() {
        let parts = labelled(&part("1 2"));
        let f = Poly::x(1).add(&Poly::y(2, 1));
        assert!(phi_reduce(&f, &parts).is_zero());
        assert_eq!(phi_reduce(&Poly::y(2, 1), &parts), Poly::x(1));
    }
}
