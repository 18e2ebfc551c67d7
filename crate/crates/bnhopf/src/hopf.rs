// SPDX-License-Identifier: MIT
//! Hopf ring structure on the cohomology of the hyperoctahedral groups:
//! transfer product, coproduct, cup product and additive bases.

use std::collections::HashMap;
use std::sync::Arc;

use crate::block::Block;
use crate::memo::{memo, Table};
use crate::monomial::{Element, Monomial, Tensor};
use crate::sum::Sum;

thread_local! {
    static CUP: Table<(Monomial, Monomial), Element> = Default::default();
    static COPROD: Table<Monomial, Tensor> = Default::default();
    static BASIS: Table<(u32, u32, bool), Arc<Vec<Monomial>>> = Default::default();
}

/// Transfer product of two monomials; `None` when a merge coefficient is even.
pub fn transfer_mono(x: &Monomial, y: &Monomial) -> Option<Monomial> {
    Monomial::from_blocks(x.blocks().iter().chain(y.blocks()).cloned())
}

pub fn transfer(x: &Element, y: &Element) -> Element {
    x.bilinear(y, |a, b| transfer_mono(a, b).into_iter().collect())
}

/// The single-block piece on component `c`, with `1_0` for `c = 0`.
fn piece(b: &Block, c: u32) -> Option<Monomial> {
    if c == 0 {
        Some(Monomial::one())
    } else {
        b.with_component(c).map(Monomial::from_block)
    }
}

/// Coproduct of one block: splits at every multiple of `2^K`.
pub fn block_coproduct(b: &Block) -> Vec<(Monomial, Monomial)> {
    let step = 1u32 << b.max_index();
    (0..=b.n() / step)
        .filter_map(|i| {
            let c = i * step;
            Some((piece(b, c)?, piece(b, b.n() - c)?))
        })
        .collect()
}

/// Coproduct of a monomial, as the transfer product of block coproducts.
pub fn coproduct_mono(x: &Monomial) -> Tensor {
    memo(&COPROD, x.clone(), || {
        let mut acc: Tensor = Sum::from_term((Monomial::one(), Monomial::one()));
        for b in x.blocks() {
            let parts = block_coproduct(b);
            let mut next = Tensor::zero();
            for (l, r) in acc.iter() {
                for (bl, br) in &parts {
                    if let (Some(nl), Some(nr)) = (transfer_mono(l, bl), transfer_mono(r, br)) {
                        next.toggle((nl, nr));
                    }
                }
            }
            acc = next;
        }
        acc
    })
}

pub fn coproduct(x: &Element) -> Tensor {
    x.map_linear(coproduct_mono)
}

/// The `(a, n-a)` component of the coproduct.
pub fn coproduct_component(x: &Element, a: u32) -> Tensor {
    let mut t = coproduct(x);
    t.retain(|(l, _)| l.n() == a);
    t
}

/// Cup product of two monomials. Different components give zero.
///
/// Sums over nonnegative integer matrices with row sums the components of
/// the blocks of `x`, column sums those of `y`, and each entry divisible by
/// the larger of the two block granularities.
pub fn cup_mono(x: &Monomial, y: &Monomial) -> Element {
    if x.n() != y.n() {
        return Element::zero();
    }
    if x.is_one() {
        return Element::from_term(Monomial::one());
    }
    memo(&CUP, (x.clone(), y.clone()), || {
        let xs = x.blocks();
        let ys = y.blocks();
        let mut out = Element::zero();
        let mut m = vec![0u32; xs.len() * ys.len()];
        let mut rows: Vec<u32> = xs.iter().map(Block::n).collect();
        let mut cols: Vec<u32> = ys.iter().map(Block::n).collect();
        fill(xs, ys, 0, &mut m, &mut rows, &mut cols, &mut out);
        out
    })
}

fn fill(
    xs: &[Block],
    ys: &[Block],
    cell: usize,
    m: &mut [u32],
    rows: &mut [u32],
    cols: &mut [u32],
    out: &mut Element,
) {
    let w = ys.len();
    if cell == m.len() {
        if cols.iter().all(|&c| c == 0) {
            let blocks = m.iter().enumerate().filter(|(_, &v)| v > 0).map(|(idx, &v)| {
                let (j, i) = (idx / w, idx % w);
                let a = xs[j].with_component(v).expect("admissible entry");
                let b = ys[i].with_component(v).expect("admissible entry");
                a.cup(&b)
            });
            if let Some(t) = Monomial::from_blocks(blocks) {
                out.toggle(t);
            }
        }
        return;
    }
    let (j, i) = (cell / w, cell % w);
    let step = 1u32 << xs[j].max_index().max(ys[i].max_index());
    let hi = rows[j].min(cols[i]);
    let last_in_row = i + 1 == w;
    let mut v = 0;
    while v <= hi {
        if !last_in_row || v == rows[j] {
            m[cell] = v;
            rows[j] -= v;
            cols[i] -= v;
            fill(xs, ys, cell + 1, m, rows, cols, out);
            rows[j] += v;
            cols[i] += v;
        }
        v += step;
    }
    m[cell] = 0;
}

pub fn cup(x: &Element, y: &Element) -> Element {
    x.bilinear(y, cup_mono)
}

/// Cup product in the tensor square, componentwise.
pub fn cup_tensor(x: &Tensor, y: &Tensor) -> Tensor {
    x.bilinear(y, |(a, b), (c, d)| {
        let l = cup_mono(a, c);
        if l.is_zero() {
            return Tensor::zero();
        }
        let r = cup_mono(b, d);
        let mut t = Tensor::zero();
        for p in &l {
            for q in &r {
                t.toggle((p.clone(), q.clone()));
            }
        }
        t
    })
}

/// Transfer product in the tensor square, componentwise.
pub fn transfer_tensor(x: &Tensor, y: &Tensor) -> Tensor {
    x.bilinear(y, |(a, b), (c, d)| match (transfer_mono(a, c), transfer_mono(b, d)) {
        (Some(l), Some(r)) => Tensor::from_term((l, r)),
        _ => Tensor::zero(),
    })
}

/// All blocks on component `c` with dimension at most `dmax`.
pub fn blocks_on(c: u32, dmax: u32, level1_only: bool) -> Vec<Block> {
    let kmax = if level1_only { c.trailing_zeros().min(1) } else { c.trailing_zeros() };
    let mut out = Vec::new();
    let mut gam = vec![0u32; kmax as usize];
    fn rec(c: u32, k: u32, kmax: u32, left: u32, gam: &mut Vec<u32>, out: &mut Vec<Block>) {
        if k > kmax {
            for a0 in 0..=left / c {
                out.push(Block::new(c, a0, gam.clone()).expect("admissible"));
            }
            return;
        }
        let wt = c - (c >> k);
        for a in 0..=left / wt {
            gam[k as usize - 1] = a;
            rec(c, k + 1, kmax, left - a * wt, gam, out);
        }
        gam[k as usize - 1] = 0;
    }
    rec(c, 1, kmax, dmax, &mut gam, &mut out);
    out
}

/// Monomial basis in bidegree `(n, d)`, sorted canonically.
pub fn basis(n: u32, d: u32) -> Arc<Vec<Monomial>> {
    basis_impl(n, d, false)
}

/// Basis of the span of monomials with no `gamma_{k>=2}` factors.
pub fn level1_basis(n: u32, d: u32) -> Arc<Vec<Monomial>> {
    basis_impl(n, d, true)
}

fn basis_impl(n: u32, d: u32, level1_only: bool) -> Arc<Vec<Monomial>> {
    memo(&BASIS, (n, d, level1_only), || {
        let mut cands: Vec<Block> = (1..=n).flat_map(|c| blocks_on(c, d, level1_only)).collect();
        cands.sort();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        pick(&cands, 0, n, d, &mut chosen, &mut out);
        out.sort();
        Arc::new(out)
    })
}

fn pick(cands: &[Block], from: usize, n: u32, d: u32, chosen: &mut Vec<Block>, out: &mut Vec<Monomial>) {
    if n == 0 {
        if d == 0 {
            let m = Monomial::from_blocks(chosen.iter().cloned()).expect("distinct keys");
            out.push(m);
        }
        return;
    }
    for idx in from..cands.len() {
        let b = &cands[idx];
        if b.n() > n || b.dim() > d || chosen.iter().any(|c| c.same_key(b)) {
            continue;
        }
        chosen.push(b.clone());
        pick(cands, idx + 1, n - b.n(), d - b.dim(), chosen, out);
        chosen.pop();
    }
}

/// Index of each basis monomial, for coordinate vectors.
pub fn basis_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Table of `dim H^d(B_n)` for `n <= nmax`, `d <= dmax`; row `n`, column `d`.
pub fn poincare(nmax: u32, dmax: u32) -> Vec<Vec<usize>> {
    (0..=nmax).map(|n| (0..=dmax).map(|d| basis(n, d).len()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(blocks: &[Block]) -> Monomial {
        Monomial::from_blocks(blocks.iter().cloned()).unwrap()
    }

    fn g(k: u32, m: u32) -> Block {
        Block::gamma(k, m).unwrap()
    }

    fn w(r: u32) -> Block {
        Block::w(r).unwrap()
    }

    fn one(n: u32) -> Block {
        Block::unit(n)
    }

    #[test]
    fn small_basis() {
        let b = basis(2, 1);
        assert_eq!(b.len(), 2);
        assert!(b.contains(&mono(&[g(1, 1)])));
        assert!(b.contains(&mono(&[w(1), one(1)])));
    }

    #[test]
    fn poincare_rank_two() {
        let p = poincare(2, 2);
        assert_eq!(p[2], vec![1, 2, 3]);
        assert_eq!(p[0], vec![1, 0, 0]);
    }

    #[test]
    fn degree_zero_is_one() {
        for n in 0..=8 {
            assert_eq!(basis(n, 0).len(), 1);
        }
    }

    #[test]
    fn coproduct_of_w2() {
        let t = coproduct_mono(&mono(&[w(2)]));
        let expect: Tensor = [
            (Monomial::one(), mono(&[w(2)])),
            (mono(&[w(1)]), mono(&[w(1)])),
            (mono(&[w(2)]), Monomial::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(t, expect);
    }

    #[test]
    fn decorated_unit_kills_gamma() {
        let x = mono(&[w(1), one(1)]);
        let y = mono(&[g(1, 1)]);
        assert!(cup_mono(&x, &y).is_zero());
    }

    #[test]
    fn transfer_squares_vanish() {
        let x = mono(&[g(2, 1)]);
        assert!(transfer_mono(&x, &x).is_none());
        let a = transfer_mono(&mono(&[g(1, 1), one(2)]), &mono(&[one(1)])).unwrap();
        assert_eq!(a, mono(&[g(1, 1), one(3)]));
    }

    #[test]
    fn unit_is_cup_identity() {
        for d in 0..=4 {
            for m in basis(4, d).iter() {
                let e = cup_mono(&mono(&[one(4)]), m);
                assert_eq!(e, Element::from_term(m.clone()));
            }
        }
    }

    #[test]
    fn w1_squared_times_unit() {
        let x = mono(&[w(1), one(1)]);
        let sq = cup_mono(&x, &x);
        // (w1 o 1_1)^2 = w1^2 o 1_1 + w1 o w1, and w1 o w1 = 0 by the merge rule.
        assert_eq!(sq, Element::from_term(mono(&[Block::new(1, 2, vec![]).unwrap(), one(1)])));
    }
}
