// SPDX-License-Identifier: MIT
//! Euler classes of the double covers `B(B_n^+) -> B(B_n)` and reduction
//! modulo the ideal they generate.

use std::collections::HashMap;
use std::sync::Arc;

use crate::block::{Block, BlockKind};
use crate::error::{Error, Result};
use crate::gf2::{kernel, rank, same_span, BitRow, Echelon};
use crate::hopf::{basis, basis_index, cup, cup_mono, level1_basis, transfer_mono};
use crate::memo::{memo, Table};
use crate::monomial::{bidegree, Element, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GysinClass {
    /// Every block has some `gamma_{k>=2}`; annihilates the Euler class.
    Ann,
    /// Survives in the quotient by the Euler ideal but is not an annihilator.
    QuotOnly,
    /// Leading term of some `e_n * y`.
    Neither,
}

pub fn classify(x: &Monomial) -> GysinClass {
    if x.blocks().iter().all(Block::is_ann) {
        return GysinClass::Ann;
    }
    let top_deco = x
        .blocks()
        .iter()
        .filter_map(|b| match b.kind() {
            BlockKind::Decoration { k } => Some((k, b.n())),
            _ => None,
        })
        .max();
    if let Some((k, n)) = top_deco {
        // A lone unit block is never a leading term.
        return if k >= 1 && n == 1 { GysinClass::Neither } else { GysinClass::QuotOnly };
    }
    let top_level1 = x
        .blocks()
        .iter()
        .filter_map(|b| match b.kind() {
            BlockKind::Level1 { l, k } => Some(((k, l), b.n() / 2)),
            _ => None,
        })
        .max();
    match top_level1 {
        Some(((_, l), half)) if half == 1 && l >= 2 => GysinClass::Neither,
        _ => GysinClass::QuotOnly,
    }
}

/// `e_n = gamma_{1,1} o 1_{n-2} + w^[1] o 1_{n-1}`; `e_1 = w^[1]`, `e_0 = 0`.
pub fn euler(n: u32) -> Element {
    let mut e = Element::zero();
    if n >= 1 {
        let w = Monomial::from_block(Block::w(1).expect("w(1)"));
        e.toggle(transfer_mono(&w, &unit(n - 1)).expect("w o unit"));
    }
    if n >= 2 {
        let g = Monomial::from_block(Block::gamma(1, 1).expect("gamma(1,1)"));
        e.toggle(transfer_mono(&g, &unit(n - 2)).expect("gamma o unit"));
    }
    e
}

fn unit(n: u32) -> Monomial {
    if n == 0 {
        Monomial::one()
    } else {
        Monomial::from_block(Block::unit(n))
    }
}

pub fn euler_multiply(n: u32, x: &Element) -> Result<Element> {
    if let Some(m) = x.iter().find(|m| m.n() != n) {
        return Err(Error::ComponentMismatch(n, m.n()));
    }
    Ok(cup(&euler(n), x))
}

/// Monomials of bidegree `(n, d)` in `G_ann`.
pub fn ann_basis(n: u32, d: u32) -> Vec<Monomial> {
    basis(n, d).iter().filter(|m| classify(m) == GysinClass::Ann).cloned().collect()
}

/// Monomials of bidegree `(n, d)` in `G_quot`, annihilators included.
pub fn quot_basis(n: u32, d: u32) -> Vec<Monomial> {
    basis(n, d).iter().filter(|m| classify(m) != GysinClass::Neither).cloned().collect()
}

/// The Euler-ideal rows at one bidegree, echelonized with pivots forced into
/// `Neither` columns whenever possible.
pub struct Eliminator {
    pub basis: Arc<Vec<Monomial>>,
    pub index: HashMap<Monomial, usize>,
    pub echelon: Echelon,
}

impl Eliminator {
    /// True when every pivot sits on a `Neither` column and every `Neither`
    /// column is a pivot, which makes reduced forms unique.
    pub fn pivots_are_neither(&self) -> bool {
        let neither = self.basis.iter().filter(|m| classify(m) == GysinClass::Neither).count();
        self.echelon.rank() == neither
            && self.echelon.pivots().iter().all(|&p| classify(&self.basis[p]) == GysinClass::Neither)
    }

    pub fn vector(&self, x: &Element) -> BitRow {
        BitRow::from_indices(self.basis.len(), x.iter().map(|m| self.index[m]))
    }

    pub fn element(&self, v: &BitRow) -> Element {
        v.ones().map(|i| self.basis[i].clone()).collect()
    }
}

thread_local! {
    static ELIM: Table<(u32, u32, bool), Arc<Eliminator>> = Default::default();
}

/// Eliminator on the full basis, or on the span of monomials without
/// `gamma_{k>=2}` factors when `level1` is set.
pub fn eliminator(n: u32, d: u32, level1: bool) -> Arc<Eliminator> {
    memo(&ELIM, (n, d, level1), || {
        let b = if level1 { level1_basis(n, d) } else { basis(n, d) };
        let index = basis_index(&b);
        let e = euler(n);
        let sources = match d.checked_sub(1) {
            Some(dm) if level1 => level1_basis(n, dm),
            Some(dm) => basis(n, dm),
            None => Arc::new(vec![]),
        };
        let rows = sources.iter().filter(|y| classify(y) != GysinClass::Ann).map(|y| {
            let img = e.iter().fold(Element::zero(), |mut acc, t| {
                acc += &cup_mono(t, y);
                acc
            });
            BitRow::from_indices(b.len(), img.iter().map(|m| index[m]))
        });
        let mut order: Vec<usize> = (0..b.len()).collect();
        order.sort_by_key(|&i| classify(&b[i]) != GysinClass::Neither);
        let echelon = Echelon::with_order(rows, order);
        Arc::new(Eliminator { basis: b, index, echelon })
    })
}

fn homogeneous(x: &Element) -> Result<Option<(u32, u32)>> {
    if x.is_zero() {
        return Ok(None);
    }
    bidegree(x).map(Some).ok_or(Error::Inhomogeneous)
}

/// Reference reduction by elimination in the whole bidegree.
pub fn reduce_mod_euler_full(x: &Element) -> Result<Element> {
    let Some((n, d)) = homogeneous(x)? else {
        return Ok(Element::zero());
    };
    let el = eliminator(n, d, false);
    let mut v = el.vector(x);
    el.echelon.reduce(&mut v);
    Ok(el.element(&v))
}

/// Representative of `x` modulo `(e_n)` supported on `G_quot`.
///
/// Since `e_n * (a o q) = a o (e * q)` for an annihilator part `a`, only the
/// level-one part `q` of each monomial needs reducing.
pub fn reduce_mod_euler(x: &Element) -> Result<Element> {
    homogeneous(x)?;
    let mut out = Element::zero();
    for m in x {
        let (a, q) = m.split_ann();
        if q.is_one() {
            out.toggle(m.clone());
            continue;
        }
        let el = eliminator(q.n(), q.dim(), true);
        let mut v = BitRow::from_indices(el.basis.len(), [el.index[&q]]);
        el.echelon.reduce(&mut v);
        for i in v.ones() {
            out.toggle(transfer_mono(&a, &el.basis[i]).expect("disjoint keys"));
        }
    }
    Ok(out)
}

/// Outcome of comparing the classifier against direct linear algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub n: u32,
    pub d: u32,
    pub kernel_is_ann: bool,
    pub quot_complements_image: bool,
    pub kernel_meets_image_trivially: bool,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.kernel_is_ann && self.quot_complements_image && self.kernel_meets_image_trivially
    }
}

fn euler_images(n: u32, d: u32) -> (Vec<BitRow>, usize) {
    let target = basis(n, d + 1);
    let idx = basis_index(&target);
    let e = euler(n);
    let rows = basis(n, d)
        .iter()
        .map(|y| {
            let img = cup(&e, &Element::from_term(y.clone()));
            BitRow::from_indices(target.len(), img.iter().map(|m| idx[m]))
        })
        .collect();
    (rows, target.len())
}

/// Checks the classifier at `(n, d)` by independent elimination.
pub fn oracle(n: u32, d: u32) -> OracleReport {
    let here = basis(n, d);
    let idx = basis_index(&here);
    let dim = here.len();
    let vec_of =
        |ms: &[Monomial]| -> Vec<BitRow> { ms.iter().map(|m| BitRow::from_indices(dim, [idx[m]])).collect() };

    let (out_images, out_dim) = euler_images(n, d);
    let ker = kernel(&out_images, out_dim);
    let kernel_is_ann = same_span(&ker, &vec_of(&ann_basis(n, d)), dim);

    let image: Vec<BitRow> = match d.checked_sub(1) {
        Some(dm) => euler_images(n, dm).0,
        None => vec![],
    };
    let quot = vec_of(&quot_basis(n, d));
    let r_img = rank(&image, dim);
    let quot_complements_image =
        r_img + quot.len() == dim && rank(&[image.clone(), quot].concat(), dim) == dim;
    let r_ker = rank(&ker, dim);
    let kernel_meets_image_trivially = rank(&[ker, image].concat(), dim) == r_ker + r_img;

    OracleReport { n, d, kernel_is_ann, quot_complements_image, kernel_meets_image_trivially }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(blocks: &[Block]) -> Monomial {
        Monomial::from_blocks(blocks.iter().cloned()).unwrap()
    }

    fn blk(n: u32, a0: u32, gam: &[u32]) -> Block {
        Block::new(n, a0, gam.to_vec()).unwrap()
    }

    #[test]
    fn classification_examples() {
        let g21 = Block::gamma(2, 1).unwrap();
        let x = mono(&[g21.clone(), blk(16, 1, &[0, 0, 1])]);
        assert_eq!(classify(&x), GysinClass::Ann);
        let y = mono(&[g21.clone(), blk(2, 1, &[1]), blk(2, 5, &[]), blk(1, 2, &[])]);
        assert_eq!(classify(&y), GysinClass::QuotOnly);
        assert_eq!(classify(&Monomial::one()), GysinClass::Ann);
        assert_eq!(classify(&mono(&[Block::unit(1)])), GysinClass::QuotOnly);
        assert_eq!(classify(&mono(&[blk(1, 1, &[]), Block::unit(1)])), GysinClass::Neither);
    }

    #[test]
    fn euler_times_unit() {
        let x = Element::from_term(mono(&[Block::unit(2)]));
        assert_eq!(euler_multiply(2, &x).unwrap(), euler(2));
        let g = Element::from_term(mono(&[Block::gamma(2, 1).unwrap()]));
        assert!(euler_multiply(4, &g).unwrap().is_zero());
        assert!(euler_multiply(3, &g).is_err());
    }

    #[test]
    fn reduction_at_2_1() {
        let x = Element::from_term(mono(&[Block::w(1).unwrap(), Block::unit(1)]));
        let g = Element::from_term(mono(&[Block::gamma(1, 1).unwrap()]));
        assert_eq!(reduce_mod_euler(&x).unwrap(), g);
        assert_eq!(reduce_mod_euler_full(&x).unwrap(), g);
    }

    #[test]
    fn small_bases() {
        assert_eq!(ann_basis(4, 3), vec![mono(&[Block::gamma(2, 1).unwrap()])]);
        assert_eq!(quot_basis(2, 1), vec![mono(&[Block::gamma(1, 1).unwrap()])]);
        for n in [1, 2, 3, 5, 6, 7] {
            for d in 0..=5 {
                assert!(ann_basis(n, d).is_empty());
            }
        }
    }

    #[test]
    fn oracle_small() {
        for n in 0..=5 {
            for d in 0..=4 {
                let r = oracle(n, d);
                assert!(r.ok(), "{r:?}");
                assert!(eliminator(n, d, false).pivots_are_neither(), "({n},{d})");
            }
        }
    }
}
