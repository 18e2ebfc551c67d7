// SPDX-License-Identifier: MIT
//! The cohomology of the alternating subgroups `B_n^+`, extended by the two
//! component-zero classes `1^+` and `1^-`, on the charged monomial basis.
//!
//! A charged block `b^+` with top index `n >= 2` is
//! `res(q_b) * P_b(gamma^+, gamma^-)`, where `q_b` collects the `w` and
//! `gamma_1` factors of `b`. For `n >= 3` the polynomial is the plain product
//! of the `gamma_i^+`; for `n = 2` it is `E_a(u, v)` from [`crate::uv`].
//! Cup products are evaluated by multiplying with one generator at a time and
//! distributing over transfer products through the charged coproduct.

use std::fmt;

use crate::block::Block;
use crate::error::{Error, Result};
use crate::gysin::{classify, reduce_mod_euler, GysinClass};
use crate::hopf;
use crate::memo::{memo, Table};
use crate::monomial::{Element, Monomial};
use crate::sum::Sum;
use crate::uv::{self, UvPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Charge {
    Plus,
    Minus,
    Zero,
}

impl Charge {
    pub fn flip(self) -> Charge {
        match self {
            Charge::Plus => Charge::Minus,
            Charge::Minus => Charge::Plus,
            Charge::Zero => Charge::Zero,
        }
    }

    /// Product of two nonzero charges.
    fn times(self, other: Charge) -> Charge {
        if self == other {
            Charge::Plus
        } else {
            Charge::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Charge::Plus => '+',
            Charge::Minus => '-',
            Charge::Zero => '0',
        }
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `x^+`, `x^-` for `x` in `G_ann`, or `x^0` for `x` in `G_quot \ G_ann`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedMonomial {
    base: Monomial,
    charge: Charge,
}

pub type ChargedElement = Sum<ChargedMonomial>;
pub type ChargedTensor = Sum<(ChargedMonomial, ChargedMonomial)>;

/// Tensor square of monomials `u^i v^j`, keyed by exponent pairs.
type UvTensor = Sum<((u32, u32), (u32, u32))>;

impl ChargedMonomial {
    pub fn new(base: Monomial, charge: Charge) -> Result<ChargedMonomial> {
        let class = classify(&base);
        let ok = match charge {
            Charge::Zero => class == GysinClass::QuotOnly,
            _ => class == GysinClass::Ann,
        };
        if !ok {
            return Err(Error::BadCharge { charge: charge.symbol(), what: format!("{class:?} monomial") });
        }
        Ok(ChargedMonomial { base, charge })
    }

    fn raw(base: Monomial, charge: Charge) -> ChargedMonomial {
        debug_assert!(ChargedMonomial::new(base.clone(), charge).is_ok(), "{base:?}^{charge}");
        ChargedMonomial { base, charge }
    }

    pub fn unit(charge: Charge) -> ChargedMonomial {
        assert!(charge != Charge::Zero, "no charge-zero unit");
        ChargedMonomial { base: Monomial::one(), charge }
    }

    pub fn base(&self) -> &Monomial {
        &self.base
    }

    pub fn charge(&self) -> Charge {
        self.charge
    }

    pub fn n(&self) -> u32 {
        self.base.n()
    }

    pub fn dim(&self) -> u32 {
        self.base.dim()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.base.bidegree()
    }

    pub fn iota(&self) -> ChargedMonomial {
        ChargedMonomial { base: self.base.clone(), charge: self.charge.flip() }
    }

    /// Transfer factors for distributivity: one charged block per annihilator
    /// block and one charge-zero factor for the level-one part.
    fn atoms(&self) -> Vec<ChargedMonomial> {
        let (a, q) = self.base.split_ann();
        let mut out: Vec<ChargedMonomial> = a
            .blocks()
            .iter()
            .map(|b| ChargedMonomial::raw(Monomial::from_block(b.clone()), Charge::Plus))
            .collect();
        if !q.is_one() {
            out.push(ChargedMonomial::raw(q, Charge::Zero));
        }
        out
    }

    fn is_atom(&self) -> bool {
        match self.charge {
            Charge::Zero => self.base.is_level1(),
            _ => self.base.blocks().len() == 1,
        }
    }
}

fn single(z: ChargedMonomial) -> ChargedElement {
    ChargedElement::from_term(z)
}

fn unit_pair() -> ChargedElement {
    [ChargedMonomial::unit(Charge::Plus), ChargedMonomial::unit(Charge::Minus)].into_iter().collect()
}

/// `gamma^s_{k,l}`; `l = 0` gives `1^s`.
pub fn gamma(k: u32, l: u32, s: Charge) -> Result<ChargedMonomial> {
    if k < 2 || s == Charge::Zero {
        return Err(Error::BadCharge { charge: s.symbol(), what: format!("g({k},{l})") });
    }
    if l == 0 {
        return Ok(ChargedMonomial::unit(s));
    }
    Ok(ChargedMonomial::raw(Monomial::from_block(Block::gamma(k, l)?), s))
}

/// Charged basis in bidegree `(n, d)`.
pub fn charged_basis(n: u32, d: u32) -> Vec<ChargedMonomial> {
    let mut out = Vec::new();
    for m in hopf::basis(n, d).iter() {
        match classify(m) {
            GysinClass::Ann => {
                out.push(ChargedMonomial::raw(m.clone(), Charge::Plus));
                out.push(ChargedMonomial::raw(m.clone(), Charge::Minus));
            }
            GysinClass::QuotOnly => out.push(ChargedMonomial::raw(m.clone(), Charge::Zero)),
            GysinClass::Neither => {}
        }
    }
    out.sort();
    out
}

pub fn iota(z: &ChargedElement) -> ChargedElement {
    z.iter().map(ChargedMonomial::iota).collect()
}

pub fn iota_tensor(t: &ChargedTensor, left: bool, right: bool) -> ChargedTensor {
    t.iter()
        .map(|(a, b)| {
            let a = if left { a.iota() } else { a.clone() };
            let b = if right { b.iota() } else { b.clone() };
            (a, b)
        })
        .collect()
}

/// Restriction of an already reduced monomial.
fn res_reduced(m: &Monomial) -> ChargedElement {
    match classify(m) {
        GysinClass::Ann => {
            [Charge::Plus, Charge::Minus].into_iter().map(|c| ChargedMonomial::raw(m.clone(), c)).collect()
        }
        GysinClass::QuotOnly => single(ChargedMonomial::raw(m.clone(), Charge::Zero)),
        GysinClass::Neither => unreachable!("reduced monomials avoid Neither"),
    }
}

pub fn res_mono(m: &Monomial) -> ChargedElement {
    let r = reduce_mod_euler(&Element::from_term(m.clone())).expect("monomials are homogeneous");
    r.map_linear(res_reduced)
}

/// Restriction along `B_n^+ -> B_n`; the kernel is the Euler ideal.
pub fn res(x: &Element) -> Result<ChargedElement> {
    let r = reduce_mod_euler(x)?;
    Ok(r.map_linear(res_reduced))
}

/// Restriction of an arbitrary (possibly inhomogeneous) element.
fn res_any(x: &Element) -> ChargedElement {
    x.map_linear(res_mono)
}

pub fn tr(z: &ChargedElement) -> Element {
    z.iter().filter(|m| m.charge != Charge::Zero).map(|m| m.base.clone()).collect()
}

pub fn transfer_mono(z: &ChargedMonomial, w: &ChargedMonomial) -> Option<ChargedMonomial> {
    let charge = match (z.charge, w.charge) {
        (Charge::Zero, Charge::Zero) => return None,
        (Charge::Zero, _) | (_, Charge::Zero) => Charge::Zero,
        (a, b) => a.times(b),
    };
    let base = hopf::transfer_mono(&z.base, &w.base)?;
    Some(ChargedMonomial::raw(base, charge))
}

pub fn transfer(z: &ChargedElement, w: &ChargedElement) -> ChargedElement {
    z.bilinear(w, |a, b| transfer_mono(a, b).into_iter().collect())
}

fn tensor(l: &ChargedElement, r: &ChargedElement) -> ChargedTensor {
    let mut t = ChargedTensor::zero();
    for a in l {
        for b in r {
            t.toggle((a.clone(), b.clone()));
        }
    }
    t
}

thread_local! {
    static COPROD: Table<ChargedMonomial, ChargedTensor> = Default::default();
    static CUP: Table<(ChargedMonomial, ChargedMonomial), ChargedElement> = Default::default();
    static GEN: Table<(ChargedMonomial, u32, Charge), ChargedElement> = Default::default();
    static RESMUL: Table<(ChargedMonomial, Monomial), ChargedElement> = Default::default();
}

// ---------------------------------------------------------------- coproduct

pub fn coproduct_mono(z: &ChargedMonomial) -> ChargedTensor {
    memo(&COPROD, z.clone(), || coproduct_uncached(z))
}

pub fn coproduct(z: &ChargedElement) -> ChargedTensor {
    z.map_linear(coproduct_mono)
}

/// The part of `Delta(z)` with left factor on component `a`.
pub fn coproduct_component(z: &ChargedMonomial, a: u32) -> ChargedTensor {
    let mut t = coproduct_mono(z);
    t.retain(|(l, _)| l.n() == a);
    t
}

fn coproduct_uncached(z: &ChargedMonomial) -> ChargedTensor {
    let plus = ChargedMonomial::unit(Charge::Plus);
    let minus = ChargedMonomial::unit(Charge::Minus);
    if z.base.is_one() {
        let other = if z.charge == Charge::Plus { minus.clone() } else { plus.clone() };
        return [(plus, z.clone()), (minus, other)].into_iter().collect();
    }
    match z.charge {
        Charge::Zero => {
            let mut out = ChargedTensor::zero();
            for (l, r) in hopf::coproduct_mono(&z.base).iter() {
                out.add_sum(&tensor(&res_mono(l), &res_mono(r)));
            }
            out
        }
        Charge::Minus => iota_tensor(&coproduct_mono(&z.iota()), true, false),
        Charge::Plus => {
            let blocks = z.base.blocks();
            if blocks.len() == 1 {
                return block_coproduct(&blocks[0]);
            }
            let x = ChargedMonomial::raw(Monomial::from_block(blocks[0].clone()), Charge::Plus);
            let rest = Monomial::from_blocks(blocks[1..].iter().cloned()).expect("sub-monomial");
            let y = ChargedMonomial::raw(rest, Charge::Plus);
            compatibility(&coproduct_mono(&x), &coproduct_mono(&y))
        }
    }
}

/// `(o (x) o)(rho_+ (x) id) tau (dx (x) dy)`: keeps the terms whose first
/// left factor has charge `+`, or charge `0` paired with a `+` factor.
pub fn compatibility(dx: &ChargedTensor, dy: &ChargedTensor) -> ChargedTensor {
    let mut out = ChargedTensor::zero();
    for (x1, x2) in dx {
        for (y1, y2) in dy {
            let keep = x1.charge == Charge::Plus || (x1.charge == Charge::Zero && y1.charge == Charge::Plus);
            if !keep {
                continue;
            }
            if let (Some(l), Some(r)) = (transfer_mono(x1, y1), transfer_mono(x2, y2)) {
                out.toggle((l, r));
            }
        }
    }
    out
}

fn block_coproduct(b: &Block) -> ChargedTensor {
    let plus = ChargedMonomial::unit(Charge::Plus);
    let minus = ChargedMonomial::unit(Charge::Minus);
    let bp = ChargedMonomial::raw(Monomial::from_block(b.clone()), Charge::Plus);
    let bm = bp.iota();
    let mut out: ChargedTensor =
        [(plus.clone(), bp.clone()), (minus.clone(), bm.clone()), (bp, plus), (bm, minus)]
            .into_iter()
            .collect();
    let top = b.max_index();
    let step = 1u32 << top;
    let n = b.n();
    for c in (step..n).step_by(step as usize) {
        let l = b.with_component(c).expect("divisible");
        let r = b.with_component(n - c).expect("divisible");
        if top >= 3 {
            let lp = ChargedMonomial::raw(Monomial::from_block(l), Charge::Plus);
            let rp = ChargedMonomial::raw(Monomial::from_block(r), Charge::Plus);
            out.toggle((lp.iota(), rp.iota()));
            out.toggle((lp, rp));
            continue;
        }
        // E_a(Delta u, Delta v) with Delta u = u(x)u + v(x)v, Delta v = u(x)v + v(x)u.
        let a = b.exp(2);
        let du: UvTensor = [((1, 0), (1, 0)), ((0, 1), (0, 1))].into_iter().collect();
        let dv: UvTensor = [((1, 0), (0, 1)), ((0, 1), (1, 0))].into_iter().collect();
        let tmul = |p: &UvTensor, q: &UvTensor| {
            p.bilinear(q, |&(a1, a2), &(b1, b2)| {
                Sum::from_term(((a1.0 + b1.0, a1.1 + b1.1), (a2.0 + b2.0, a2.1 + b2.1)))
            })
        };
        let mut poly: UvTensor = Sum::zero();
        for &(i, j) in uv::e_poly(a, false).iter() {
            let mut t = Sum::from_term(((0, 0), (0, 0)));
            for _ in 0..i {
                t = tmul(&t, &du);
            }
            for _ in 0..j {
                t = tmul(&t, &dv);
            }
            poly.add_sum(&t);
        }
        let ql = res_mono(&Monomial::from_block(l.level1_part()));
        let qr = res_mono(&Monomial::from_block(r.level1_part()));
        for &((i1, j1), (i2, j2)) in poly.iter() {
            let left = apply_uv(&ql, i1, j1);
            if left.is_zero() {
                continue;
            }
            let right = apply_uv(&qr, i2, j2);
            out.add_sum(&tensor(&left, &right));
        }
    }
    out
}

/// Iterated coproduct restricted to the component vector `comps`.
fn split(z: &ChargedMonomial, comps: &[u32]) -> Sum<Vec<ChargedMonomial>> {
    if comps.len() == 1 {
        return Sum::from_term(vec![z.clone()]);
    }
    let mut out = Sum::zero();
    for (l, r) in coproduct_component(z, comps[0]).iter() {
        for tail in split(r, &comps[1..]).iter() {
            let mut v = Vec::with_capacity(comps.len());
            v.push(l.clone());
            v.extend(tail.iter().cloned());
            out.toggle(v);
        }
    }
    out
}

fn split_b(q: &Monomial, comps: &[u32]) -> Sum<Vec<Monomial>> {
    if comps.len() == 1 {
        return Sum::from_term(vec![q.clone()]);
    }
    let mut out = Sum::zero();
    for (l, r) in hopf::coproduct_mono(q).iter().filter(|(l, _)| l.n() == comps[0]) {
        for tail in split_b(r, &comps[1..]).iter() {
            let mut v = Vec::with_capacity(comps.len());
            v.push(l.clone());
            v.extend(tail.iter().cloned());
            out.toggle(v);
        }
    }
    out
}

/// Transfer product of a list of elements, stopping early at zero.
fn transfer_all(parts: impl IntoIterator<Item = ChargedElement>) -> ChargedElement {
    let mut acc = single(ChargedMonomial::unit(Charge::Plus));
    for p in parts {
        acc = transfer(&acc, &p);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

// --------------------------------------------------------------------- cup

pub fn cup(z: &ChargedElement, w: &ChargedElement) -> ChargedElement {
    z.bilinear(w, cup_mono)
}

pub fn cup_mono(z: &ChargedMonomial, w: &ChargedMonomial) -> ChargedElement {
    if z.n() != w.n() {
        return ChargedElement::zero();
    }
    if z.n() == 0 {
        return if z.charge == w.charge { single(z.clone()) } else { ChargedElement::zero() };
    }
    memo(&CUP, (z.clone(), w.clone()), || cup_uncached(z, w))
}

fn cup_uncached(z: &ChargedMonomial, w: &ChargedMonomial) -> ChargedElement {
    if z.charge == Charge::Zero && w.charge == Charge::Zero {
        return res_any(&hopf::cup_mono(&z.base, &w.base));
    }
    if w.is_atom() {
        return cup_atom(z, w);
    }
    if z.is_atom() {
        return cup_atom(w, z);
    }
    if w.charge == Charge::Minus {
        return iota(&cup_mono(&z.iota(), &w.iota()));
    }
    let atoms = w.atoms();
    let comps: Vec<u32> = atoms.iter().map(ChargedMonomial::n).collect();
    let mut out = ChargedElement::zero();
    for parts in split(z, &comps).iter() {
        out.add_sum(&transfer_all(parts.iter().zip(&atoms).map(|(p, a)| cup_mono(p, a))));
    }
    out
}

/// `z * w` for a single block or a level-one charge-zero class `w`.
fn cup_atom(z: &ChargedMonomial, w: &ChargedMonomial) -> ChargedElement {
    if w.charge == Charge::Zero {
        return mul_res(z, &w.base);
    }
    let b = &w.base.blocks()[0];
    let start = mul_res(z, &Monomial::from_block(b.level1_part()));
    apply_block_poly(&start, b, w.charge)
}

/// Multiplies by `P_b(gamma^s, gamma^-s)`, the generator part of `b^s`.
fn apply_block_poly(start: &ChargedElement, b: &Block, s: Charge) -> ChargedElement {
    let top = b.max_index();
    if top >= 3 {
        let mut e = start.clone();
        for i in 2..=top {
            for _ in 0..b.exp(i) {
                e = mul_gen_elem(&e, i, s);
            }
        }
        return e;
    }
    let mut out = ChargedElement::zero();
    for &(i, j) in uv::e_poly(b.exp(2), s == Charge::Minus).iter() {
        out.add_sum(&apply_uv(start, i, j));
    }
    out
}

/// `e * u^i * v^j` with `u, v = gamma^{+,-}_{2,n/4}`.
fn apply_uv(e: &ChargedElement, i: u32, j: u32) -> ChargedElement {
    let mut e = e.clone();
    for _ in 0..i {
        e = mul_gen_elem(&e, 2, Charge::Plus);
    }
    for _ in 0..j {
        e = mul_gen_elem(&e, 2, Charge::Minus);
    }
    e
}

/// `z * res(q)` for a level-one monomial `q` on the same component.
fn mul_res(z: &ChargedMonomial, q: &Monomial) -> ChargedElement {
    debug_assert!(q.is_level1() && q.n() == z.n());
    if z.n() == 0 {
        return single(z.clone());
    }
    memo(&RESMUL, (z.clone(), q.clone()), || match z.charge {
        Charge::Zero => res_any(&hopf::cup_mono(&z.base, q)),
        Charge::Minus => iota(&mul_res(&z.iota(), q)),
        Charge::Plus => {
            let blocks = z.base.blocks();
            if blocks.len() == 1 {
                return block_mul_res(&blocks[0], q);
            }
            let comps: Vec<u32> = blocks.iter().map(Block::n).collect();
            let mut out = ChargedElement::zero();
            for parts in split_b(q, &comps).iter() {
                out.add_sum(&transfer_all(parts.iter().zip(blocks).map(|(qj, b)| block_mul_res(b, qj))));
            }
            out
        }
    })
}

/// `b^+ * res(q)` for a single annihilator block `b`.
fn block_mul_res(b: &Block, q: &Monomial) -> ChargedElement {
    let qb = Monomial::from_block(b.level1_part());
    let mut out = ChargedElement::zero();
    for prod in hopf::cup_mono(&qb, q).iter() {
        if let [p] = prod.blocks() {
            let mut gam = b.gam().to_vec();
            gam[0] = p.exp(1);
            let nb = Block::new(b.n(), p.a0(), gam).expect("same component");
            out.toggle(ChargedMonomial::raw(Monomial::from_block(nb), Charge::Plus));
        } else {
            out.add_sum(&apply_block_poly(&res_mono(prod), b, Charge::Plus));
        }
    }
    out
}

fn mul_gen_elem(e: &ChargedElement, i: u32, s: Charge) -> ChargedElement {
    e.map_linear(|z| mul_gen(z, i, s))
}

/// `z * gamma^s_{i, n/2^i}`; zero when `2^i` does not divide the component.
fn mul_gen(z: &ChargedMonomial, i: u32, s: Charge) -> ChargedElement {
    let n = z.n();
    if n == 0 || !n.is_multiple_of(1 << i) {
        return ChargedElement::zero();
    }
    memo(&GEN, (z.clone(), i, s), || mul_gen_uncached(z, i, s))
}

fn mul_gen_uncached(z: &ChargedMonomial, i: u32, s: Charge) -> ChargedElement {
    match z.charge {
        Charge::Minus => return iota(&mul_gen(&z.iota(), i, s.flip())),
        Charge::Zero if z.base.is_level1() => {
            if s == Charge::Minus {
                return iota(&mul_gen(z, i, Charge::Plus));
            }
            // gamma_i^+ * q^0 is the product of (gamma_i b)^+ over the blocks b of q.
            let bumped: Option<Vec<Block>> = z.base.blocks().iter().map(|b| b.bump(i, 1).ok()).collect();
            return bumped
                .and_then(Monomial::from_blocks)
                .map(|m| single(ChargedMonomial::raw(m, Charge::Plus)))
                .unwrap_or_default();
        }
        Charge::Plus if z.base.blocks().len() == 1 => {
            return block_mul_gen(&z.base.blocks()[0], i, s);
        }
        _ => {}
    }
    let atoms = z.atoms();
    if atoms.iter().any(|a| a.n() % (1 << i) != 0) {
        return ChargedElement::zero();
    }
    let r = atoms.len();
    let mut out = ChargedElement::zero();
    // Iterated coproduct of gamma^s: all charge vectors with product s.
    for mask in 0u32..(1 << r) {
        let charges: Vec<Charge> =
            (0..r).map(|j| if mask >> j & 1 == 1 { Charge::Minus } else { Charge::Plus }).collect();
        let prod = charges.iter().fold(Charge::Plus, |acc, &c| acc.times(c));
        if prod != s {
            continue;
        }
        out.add_sum(&transfer_all(atoms.iter().zip(&charges).map(|(a, &c)| mul_gen(a, i, c))));
    }
    out
}

fn block_mul_gen(b: &Block, i: u32, s: Charge) -> ChargedElement {
    let top = b.max_index();
    let bumped = b.bump(i, 1).expect("divisible component");
    if top >= 3 || i >= 3 {
        return if s == Charge::Plus {
            single(ChargedMonomial::raw(Monomial::from_block(bumped), Charge::Plus))
        } else {
            ChargedElement::zero()
        };
    }
    let a = b.exp(2);
    let m = b.n() / 4;
    let g = if s == Charge::Plus { (1, 0) } else { (0, 1) };
    let f = uv::mul(&uv::e_poly(a, false), &UvPoly::from_term(g));
    let red = uv::reduce(&f, a + 1, m % 2 == 1);
    let nb = ChargedMonomial::raw(Monomial::from_block(bumped), Charge::Plus);
    let mut out = ChargedElement::zero();
    if red.alpha {
        out.toggle(nb.clone());
    }
    if red.beta {
        out.toggle(nb.iota());
    }
    if !red.rest.is_zero() {
        let q = Monomial::from_block(b.level1_part());
        let c = res_any(&hopf::cup_mono(&q, &y_class(m)));
        for &(p, r) in red.rest.iter() {
            out.add_sum(&apply_uv(&c, p, r));
        }
    }
    out
}

/// `gamma_{2,m-1}^2 o gamma_{1,2}^3`, whose restriction is the correction
/// term in `gamma^+_{2,m} gamma^-_{2,m}`.
pub fn y_class(m: u32) -> Monomial {
    let g12 = Block::new(4, 0, vec![3]).expect("gamma_{1,2}^3");
    if m == 1 {
        return Monomial::from_block(g12);
    }
    let g2 = Block::new(4 * (m - 1), 0, vec![0, 2]).expect("gamma_{2,m-1}^2");
    Monomial::from_blocks([g2, g12]).expect("distinct keys")
}

/// The defining sum of `b^s`: `res(q_b)` times the binomial expansion in the
/// charged generators, evaluated with generic cup products.
pub fn expand_charged_block(b: &Block, s: Charge) -> Result<ChargedElement> {
    let top = b.max_index();
    if top < 2 || s == Charge::Zero {
        return Err(Error::Type(format!("not a charged block: {b:?}")));
    }
    let n = b.n();
    let q = Monomial::from_block(b.level1_part());
    let mut terms = res_mono(&q);
    for i in 2..=top {
        let a = b.exp(i);
        if a == 0 {
            continue;
        }
        let kmax = if i == top { a / 2 } else { a };
        let l = n >> i;
        let plus = single(gamma(i, l, Charge::Plus)?);
        let minus = single(gamma(i, l, Charge::Minus)?);
        let mut factor = ChargedElement::zero();
        for k in (0..=kmax).filter(|&k| crate::block::choose_odd(a, k)) {
            let mut t = single(ChargedMonomial::unit(Charge::Plus));
            for _ in 0..k {
                t = if t.iter().any(|m| m.n() == 0) { minus.clone() } else { cup(&t, &minus) };
            }
            for _ in 0..a - k {
                t = if t.iter().any(|m| m.n() == 0) { plus.clone() } else { cup(&t, &plus) };
            }
            factor.add_sum(&t);
        }
        terms = cup(&terms, &factor);
    }
    Ok(if s == Charge::Plus { terms } else { iota(&terms) })
}

/// Bidegree of a homogeneous charged element.
pub fn charged_bidegree(z: &ChargedElement) -> Option<(u32, u32)> {
    let mut it = z.iter();
    let first = it.next()?.bidegree();
    it.all(|m| m.bidegree() == first).then_some(first)
}

/// `res(1_0) = 1^+ + 1^-`.
pub fn res_unit() -> ChargedElement {
    unit_pair()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: u32, l: u32, s: Charge) -> ChargedMonomial {
        gamma(k, l, s).unwrap()
    }

    fn blk(n: u32, a0: u32, gam: &[u32]) -> Block {
        Block::new(n, a0, gam.to_vec()).unwrap()
    }

    fn cm(blocks: &[Block], c: Charge) -> ChargedMonomial {
        ChargedMonomial::new(Monomial::from_blocks(blocks.iter().cloned()).unwrap(), c).unwrap()
    }

    #[test]
    fn relation_six_odd() {
        let p = g(2, 1, Charge::Plus);
        let m = g(2, 1, Charge::Minus);
        let got = cup_mono(&p, &m);
        let sq = blk(4, 0, &[0, 2]);
        let expect: ChargedElement = [
            cm(std::slice::from_ref(&sq), Charge::Plus),
            cm(&[sq], Charge::Minus),
            cm(&[blk(4, 0, &[3])], Charge::Zero),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn relation_five() {
        let p = g(3, 1, Charge::Plus);
        assert!(cup_mono(&p, &p.iota()).is_zero());
    }

    #[test]
    fn gamma_times_level_one() {
        let x = cm(&[blk(4, 1, &[])], Charge::Zero);
        let got = cup_mono(&g(2, 1, Charge::Plus), &x);
        assert_eq!(got, single(cm(&[blk(4, 1, &[0, 1])], Charge::Plus)));
    }

    #[test]
    fn transfer_rules() {
        let a = g(2, 1, Charge::Plus);
        let b = g(2, 2, Charge::Plus);
        assert_eq!(transfer_mono(&a, &b), Some(g(2, 3, Charge::Plus)));
        assert_eq!(transfer_mono(&a, &a.iota()), None);
        let m = ChargedMonomial::unit(Charge::Minus);
        assert_eq!(transfer_mono(&m, &m), Some(ChargedMonomial::unit(Charge::Plus)));
    }

    #[test]
    fn coproduct_of_gamma() {
        let p = g(2, 1, Charge::Plus);
        let one_p = ChargedMonomial::unit(Charge::Plus);
        let one_m = ChargedMonomial::unit(Charge::Minus);
        let expect: ChargedTensor =
            [(one_p.clone(), p.clone()), (one_m.clone(), p.iota()), (p.clone(), one_p), (p.iota(), one_m)]
                .into_iter()
                .collect();
        assert_eq!(coproduct_mono(&p), expect);
    }

    #[test]
    fn restriction_of_euler_vanishes() {
        for n in 2..=6 {
            assert!(res(&crate::gysin::euler(n)).unwrap().is_zero());
        }
    }

    #[test]
    fn expansion_matches_basis_element() {
        for b in [blk(4, 0, &[0, 1]), blk(4, 0, &[0, 2]), blk(4, 0, &[0, 3]), blk(8, 1, &[1, 1, 1])] {
            let e = expand_charged_block(&b, Charge::Plus).unwrap();
            assert_eq!(e, single(cm(std::slice::from_ref(&b), Charge::Plus)), "{b:?}");
        }
    }
}
