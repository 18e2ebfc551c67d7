// SPDX-License-Identifier: MIT
//! Exhaustive verification suites over bounded ranges of bidegrees.
//!
//! Every suite returns a [`SuiteReport`] made of named [`CheckResult`]s
//! recording how many cases were examined and the first few failures.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::block::choose_odd;
use crate::charged::{self, charged_basis, gamma, Charge, ChargedElement, ChargedMonomial, ChargedTensor};
use crate::error::{Error, Result};
use crate::fncheck;
use crate::gf2::{kernel, rank, BitRow, Echelon};
use crate::gysin::{self, ann_basis, euler, quot_basis};
use crate::hopf::{self, basis, basis_index};
use crate::invariants;
use crate::partition::Partition;
use crate::poly::Poly;
use crate::restrict::{self, labelled, labelled_from, phi_reduce, rho_b, rho_mono};
use crate::{Element, Monomial, Sum, Tensor};

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    fn single(name: impl Into<String>, ok: bool, detail: Option<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            ok,
            cases: 1,
            failures: usize::from(!ok),
            counterexamples: if ok { vec![] } else { detail.clone().into_iter().collect() },
            note: if ok { detail } else { None },
        }
    }
}

/// Accumulates the cases of one named check.
struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Tally {
        Tally { name: name.into(), cases: 0, failures: 0, examples: vec![] }
    }

    fn record(&mut self, ok: bool, example: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_COUNTEREXAMPLES {
                self.examples.push(example());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < MAX_COUNTEREXAMPLES {
                self.examples.push(e);
            }
        }
        self
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            ok: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            counterexamples: self.examples,
            note: None,
        }
    }
}

/// Runs `f` over `items` in parallel and folds the per-item tallies.
fn par_tally<T: Sync>(name: &str, items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> CheckResult {
    items
        .par_iter()
        .map(|it| {
            let mut t = Tally::new(name);
            f(it, &mut t);
            t
        })
        .reduce(|| Tally::new(name), Tally::merge)
        .finish()
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<CheckResult>) -> SuiteReport {
        SuiteReport { suite: suite.to_string(), checks }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    HopfAxioms,
    Gysin,
    ResTr,
    Relations,
    Invariants,
    Restriction,
    Fn,
    Detection,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::HopfAxioms,
        Suite::Gysin,
        Suite::ResTr,
        Suite::Relations,
        Suite::Invariants,
        Suite::Restriction,
        Suite::Fn,
        Suite::Detection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Gysin => "gysin",
            Suite::ResTr => "res-tr",
            Suite::Relations => "relations",
            Suite::Invariants => "invariants",
            Suite::Restriction => "restriction",
            Suite::Fn => "fn",
            Suite::Detection => "detection",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite `{s}`")))
    }
}

/// Size limits for a run. `n` bounds components and `d` bounds dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n: u32,
    pub d: u32,
}

impl Suite {
    /// Bounds used when the caller does not supply any. For `relations` the
    /// dimension bound is the largest generator index `l`, for `invariants`
    /// the pair is `(kmax, mmax)`, and for `fn` it is `(rmax, block total)`.
    pub fn default_bounds(self) -> Bounds {
        match self {
            Suite::HopfAxioms | Suite::ResTr => Bounds { n: 6, d: 6 },
            Suite::Detection => Bounds { n: 8, d: 6 },
            Suite::Relations => Bounds { n: 24, d: 3 },
            Suite::Invariants => Bounds { n: 3, d: 3 },
            Suite::Fn => Bounds { n: 6, d: 8 },
            Suite::Gysin | Suite::Restriction => Bounds { n: 8, d: 8 },
        }
    }

    pub fn run(self, b: Bounds) -> SuiteReport {
        let checks = match self {
            Suite::HopfAxioms => hopf_axioms(b.n, b.d),
            Suite::Gysin => gysin_checks(b.n, b.d),
            Suite::ResTr => res_tr(b.n, b.d),
            Suite::Relations => relations(b.d, b.n),
            Suite::Invariants => invariant_checks(b.n, b.d),
            Suite::Restriction => restriction(b.n, b.d),
            Suite::Fn => fox_neuwirth(b.n as usize, b.d as usize),
            Suite::Detection => detection(&detection_components(b.n), b.d),
        };
        SuiteReport::new(self, checks)
    }
}

fn detection_components(nmax: u32) -> Vec<u32> {
    [2, 3, 4, 5, 6, 8].into_iter().filter(|&n| n <= nmax.max(2)).collect()
}

// ------------------------------------------------------------------ helpers

fn cells(nmax: u32, dmax: u32) -> Vec<Monomial> {
    (0..=nmax).flat_map(|n| (0..=dmax).flat_map(move |d| basis(n, d).as_ref().clone())).collect()
}

fn charged_cells(nmax: u32, dmax: u32) -> Vec<ChargedMonomial> {
    (0..=nmax).flat_map(|n| (0..=dmax).flat_map(move |d| charged_basis(n, d))).collect()
}

fn el(x: &Monomial) -> Element {
    Element::from_term(x.clone())
}

fn cel(z: &ChargedMonomial) -> ChargedElement {
    ChargedElement::from_term(z.clone())
}

fn res_el(x: &Element) -> ChargedElement {
    charged::res(x).expect("monomials of B restrict")
}

fn unit_on(n: u32) -> Monomial {
    basis(n, 0)[0].clone()
}

fn triple_split<T: Ord + Clone>(
    t: &Sum<(T, T)>,
    delta: impl Fn(&T) -> Sum<(T, T)>,
    left: bool,
) -> Sum<(T, T, T)> {
    let mut out = Sum::zero();
    for (a, b) in t {
        if left {
            for (c, e) in &delta(a) {
                out.toggle((c.clone(), e.clone(), b.clone()));
            }
        } else {
            for (c, e) in &delta(b) {
                out.toggle((a.clone(), c.clone(), e.clone()));
            }
        }
    }
    out
}

// ------------------------------------------------------------- hopf axioms

/// Cup product computed from the distributivity law alone: block against
/// block adds exponents, and `x . (b (.) r) = sum x' . b (.) x'' . r` over
/// the coproduct of `x`.
pub fn literal_cup(x: &Monomial, y: &Monomial) -> Element {
    assert_eq!(x.n(), y.n(), "cup of different components");
    if x.n() == 0 {
        return el(&Monomial::one());
    }
    match (x.blocks(), y.blocks()) {
        ([a], [b]) => el(&Monomial::from_block(a.cup(b))),
        (_, [_]) => literal_cup(y, x),
        (_, [b1, rest @ ..]) => {
            let head = Monomial::from_block(b1.clone());
            let tail = Monomial::from_blocks(rest.iter().cloned()).expect("sub-monomial");
            let mut out = Element::zero();
            for (x1, x2) in &hopf::coproduct_component(&el(x), head.n()) {
                out.add_sum(&hopf::transfer(&literal_cup(x1, &head), &literal_cup(x2, &tail)));
            }
            out
        }
        ([], _) | (_, []) => unreachable!("positive component has a block"),
    }
}

/// Hopf ring axioms of the `B` side on basis elements of component at most
/// `nmax` and dimension at most `dmax`. Transfer products are limited to
/// factors whose components sum to at most `nmax`, cup triples to total
/// dimension at most `2 * dmax`.
pub fn hopf_axioms(nmax: u32, dmax: u32) -> Vec<CheckResult> {
    let all = cells(nmax, dmax);
    let pairs: Vec<(&Monomial, &Monomial)> =
        all.iter().cartesian_product(&all).filter(|(x, y)| x.n() + y.n() <= nmax).collect();
    let same_n: Vec<(&Monomial, &Monomial)> =
        all.iter().cartesian_product(&all).filter(|(x, y)| x.n() == y.n()).collect();
    let one = Monomial::one();
    let mut out = vec![];

    out.push(par_tally("transfer product is commutative", &pairs, |(x, y), t| {
        t.record(hopf::transfer_mono(x, y) == hopf::transfer_mono(y, x), || format!("{x:?} , {y:?}"))
    }));
    out.push(par_tally("transfer product is associative", &pairs, |(x, y), t| {
        for z in all.iter().filter(|z| x.n() + y.n() + z.n() <= nmax) {
            let l = hopf::transfer(&hopf::transfer(&el(x), &el(y)), &el(z));
            let r = hopf::transfer(&el(x), &hopf::transfer(&el(y), &el(z)));
            t.record(l == r, || format!("{x:?} , {y:?} , {z:?}"));
        }
    }));
    out.push(par_tally("cup product is commutative", &same_n, |(x, y), t| {
        t.record(hopf::cup_mono(x, y) == hopf::cup_mono(y, x), || format!("{x:?} , {y:?}"))
    }));
    out.push(par_tally("cup product is associative", &same_n, |(x, y), t| {
        let xy = hopf::cup_mono(x, y);
        for z in all.iter().filter(|z| z.n() == x.n() && x.dim() + y.dim() + z.dim() <= 2 * dmax) {
            let l = hopf::cup(&xy, &el(z));
            let r = hopf::cup(&el(x), &hopf::cup_mono(y, z));
            t.record(l == r, || format!("{x:?} , {y:?} , {z:?}"));
        }
    }));
    out.push(par_tally("units", &all, |x, t| {
        t.record(hopf::transfer_mono(&one, x).as_ref() == Some(x), || format!("1 (.) {x:?}"));
        let u = unit_on(x.n());
        t.record(hopf::cup_mono(&u, x) == el(x), || format!("1_n . {x:?}"));
    }));
    out.push(par_tally("coproduct is coassociative and cocommutative", &all, |x, t| {
        let dx = hopf::coproduct_mono(x);
        let l = triple_split(&dx, hopf::coproduct_mono, true);
        let r = triple_split(&dx, hopf::coproduct_mono, false);
        t.record(l == r, || format!("coassociativity at {x:?}"));
        let tw: Tensor = dx.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        t.record(tw == dx, || format!("cocommutativity at {x:?}"));
    }));
    out.push(par_tally("counit", &all, |x, t| {
        let dx = hopf::coproduct_mono(x);
        let left: Vec<_> = dx.iter().filter(|(a, _)| a.n() == 0).collect();
        let right: Vec<_> = dx.iter().filter(|(_, b)| b.n() == 0).collect();
        let ok = left.len() == 1
            && left[0] == &(one.clone(), x.clone())
            && right.len() == 1
            && right[0] == &(x.clone(), one.clone());
        t.record(ok, || format!("{x:?}"));
    }));
    out.push(par_tally("coproduct is multiplicative for the transfer product", &pairs, |(x, y), t| {
        let l = hopf::coproduct(&hopf::transfer(&el(x), &el(y)));
        let r = hopf::transfer_tensor(&hopf::coproduct_mono(x), &hopf::coproduct_mono(y));
        t.record(l == r, || format!("{x:?} , {y:?}"));
    }));
    out.push(par_tally("coproduct is multiplicative for the cup product", &same_n, |(x, y), t| {
        let l = hopf::coproduct(&hopf::cup_mono(x, y));
        let r = hopf::cup_tensor(&hopf::coproduct_mono(x), &hopf::coproduct_mono(y));
        t.record(l == r, || format!("{x:?} , {y:?}"));
    }));
    out.push(par_tally("distributivity by direct expansion", &same_n, |(x, y), t| {
        t.record(literal_cup(x, y) == hopf::cup_mono(x, y), || format!("{x:?} . {y:?}"));
    }));
    out
}

// ------------------------------------------------------------------- gysin

fn euler_matrix(n: u32, d: u32) -> (Vec<BitRow>, usize) {
    let target = basis(n, d + 1);
    let idx = basis_index(&target);
    let e = euler(n);
    let rows = basis(n, d)
        .iter()
        .map(|y| {
            let img = hopf::cup(&e, &el(y));
            BitRow::from_indices(target.len(), img.iter().map(|m| idx[m]))
        })
        .collect();
    (rows, target.len())
}

/// `dim coker(e: H^{d-1} -> H^d) + dim ker(e: H^d -> H^{d+1})`.
pub fn gysin_dimension(n: u32, d: u32) -> usize {
    let here = basis(n, d).len();
    let incoming = match d.checked_sub(1) {
        Some(dm) => {
            let (rows, cols) = euler_matrix(n, dm);
            rank(&rows, cols)
        }
        None => 0,
    };
    let (rows, cols) = euler_matrix(n, d);
    (here - incoming) + (rows.len() - rank(&rows, cols))
}

/// Rank of restriction from `H^d(B_n)` onto the charged basis.
pub fn res_rank(n: u32, d: u32) -> (usize, usize) {
    let target = charged_basis(n, d);
    let idx: std::collections::HashMap<_, _> =
        target.iter().enumerate().map(|(i, z)| (z.clone(), i)).collect();
    let rows: Vec<BitRow> = basis(n, d)
        .iter()
        .map(|x| BitRow::from_indices(target.len(), res_el(&el(x)).iter().map(|z| idx[z])))
        .collect();
    (rank(&rows, target.len()), target.len())
}

/// Mod 2 Betti numbers of a cyclic group of order `order` in degrees
/// `0..=dmax`, read off a minimal free resolution built over the group
/// algebra by linear algebra alone.
pub fn cyclic_group_betti(order: usize, dmax: u32) -> Vec<usize> {
    let shift = |v: &BitRow, r: usize| -> BitRow {
        // Action of the generator on A^r, A = F2[C_order] with basis g^i.
        let mut out = BitRow::zeros(order * r);
        for i in v.ones() {
            let (blk, pos) = (i / order, i % order);
            out.flip(blk * order + (pos + 1) % order);
        }
        out
    };
    let mut betti = vec![1];
    // Kernel of the augmentation A -> F2.
    let aug: Vec<BitRow> = (0..order).map(|_| BitRow::from_indices(1, [0])).collect();
    let mut kernel_rows = kernel(&aug, 1);
    let mut r = 1;
    while betti.len() <= dmax as usize {
        let mut radical = Echelon::new(std::iter::empty(), order * r);
        for v in &kernel_rows {
            let mut w = shift(v, r);
            w.xor_assign(v);
            radical.insert(w);
        }
        let mut gens = vec![];
        for v in &kernel_rows {
            if radical.insert(v.clone()) {
                gens.push(v.clone());
            }
        }
        let s = gens.len();
        betti.push(s);
        // A^s -> A^r, e_j g^i |-> g^i gens[j].
        let mut images = vec![];
        for g in &gens {
            let mut cur = g.clone();
            for _ in 0..order {
                images.push(cur.clone());
                cur = shift(&cur, r);
            }
        }
        kernel_rows = kernel(&images, order * r);
        r = s;
    }
    betti
}

/// Classifier against direct elimination, dimension bookkeeping and
/// surjectivity of restriction, plus the `n = 2` comparison with `C_4`.
pub fn gysin_checks(nmax: u32, dmax: u32) -> Vec<CheckResult> {
    let grid: Vec<(u32, u32)> = (1..=nmax).cartesian_product(0..=dmax).collect();
    let mut out = vec![];
    out.push(par_tally("Euler kernel and cokernel match the classifier", &grid, |&(n, d), t| {
        let rep = gysin::oracle(n, d);
        t.record(rep.ok(), || format!("{rep:?}"));
    }));
    out.push(par_tally("dimension equals |G_quot| + |G_ann|", &grid, |&(n, d), t| {
        let charged = charged_basis(n, d).len();
        let counted = quot_basis(n, d).len() + ann_basis(n, d).len();
        let exact = gysin_dimension(n, d);
        t.record(charged == counted && counted == exact, || {
            format!("(n={n}, d={d}): basis {charged}, classifier {counted}, Gysin {exact}")
        });
    }));
    let off: Vec<(u32, u32)> = grid.iter().copied().filter(|(n, _)| n % 4 != 0).collect();
    out.push(par_tally("restriction is onto when 4 does not divide n", &off, |&(n, d), t| {
        let (r, dim) = res_rank(n, d);
        t.record(r == dim && ann_basis(n, d).is_empty(), || format!("(n={n}, d={d}): rank {r} of {dim}"));
    }));
    let betti = cyclic_group_betti(4, dmax);
    let table: Vec<usize> = (0..=dmax).map(|d| charged_basis(2, d).len()).collect();
    out.push(CheckResult::single(
        "n = 2 Poincare series equals that of C_4",
        table == betti,
        Some(format!("basis {table:?}, resolution {betti:?}")),
    ));
    out
}

// ------------------------------------------------------------------ res/tr

/// Identities between restriction, transfer and the involution.
pub fn res_tr(nmax: u32, dmax: u32) -> Vec<CheckResult> {
    let b = cells(nmax, dmax);
    let c = charged_cells(nmax, dmax);
    let mut out = vec![];
    out.push(par_tally("res tr = 1 + iota", &c, |z, t| {
        let mut expect = cel(z);
        expect.add_sum(&cel(&z.iota()));
        t.record(res_el(&charged::tr(&cel(z))) == expect, || format!("{z:?}"));
    }));
    out.push(par_tally("tr res = 0", &b, |x, t| {
        t.record(charged::tr(&res_el(&el(x))).is_zero(), || format!("{x:?}"));
    }));
    let bb: Vec<_> = b
        .iter()
        .cartesian_product(&b)
        .filter(|(x, y)| x.n() + y.n() <= nmax && x.dim() + y.dim() <= dmax)
        .collect();
    out.push(par_tally("res(x) (.) res(y) = 0", &bb, |(x, y), t| {
        let p = charged::transfer(&res_el(&el(x)), &res_el(&el(y)));
        t.record(p.is_zero(), || format!("{x:?} , {y:?}"));
    }));
    let cb: Vec<_> = c
        .iter()
        .cartesian_product(&b)
        .filter(|(z, y)| z.n() + y.n() <= nmax && z.dim() + y.dim() <= dmax)
        .collect();
    out.push(par_tally("res(tr(x) (.) y) = x (.) res(y)", &cb, |(z, y), t| {
        let l = res_el(&hopf::transfer(&charged::tr(&cel(z)), &el(y)));
        let r = charged::transfer(&cel(z), &res_el(&el(y)));
        t.record(l == r, || format!("{z:?} , {y:?}"));
    }));
    let cc: Vec<_> = c.iter().cartesian_product(&c).filter(|(z, w)| z.n() == w.n()).collect();
    out.push(par_tally("tr(x) tr(x') = tr(x x' + iota(x) x')", &cc, |(z, w), t| {
        let l = hopf::cup(&charged::tr(&cel(z)), &charged::tr(&cel(w)));
        let mut inner = charged::cup_mono(z, w);
        inner.add_sum(&charged::cup_mono(&z.iota(), w));
        t.record(l == charged::tr(&inner), || format!("{z:?} , {w:?}"));
    }));
    out
}

// --------------------------------------------------------------- relations

fn g(k: u32, l: u32, s: Charge) -> ChargedMonomial {
    if l == 0 {
        return ChargedMonomial::unit(s);
    }
    gamma(k, l, s).expect("k >= 2, l >= 1")
}

fn squared(z: &ChargedMonomial) -> ChargedElement {
    charged::cup_mono(z, z)
}

/// Right-hand side of the `gamma_{2,m}^+ . gamma_{2,m}^-` relation.
fn relation_six_rhs(m: u32) -> Result<ChargedElement> {
    let w = Monomial::from_block(crate::block::Block::gamma(1, 2)?);
    let w3 = hopf::cup(&hopf::cup_mono(&w, &w), &el(&w));
    let w3 = res_el(&w3);
    let mut out = charged::transfer(&squared(&g(2, m - 1, Charge::Plus)), &w3);
    if m % 2 == 1 {
        out.add_sum(&squared(&g(2, m, Charge::Plus)));
        out.add_sum(&squared(&g(2, m, Charge::Minus)));
    }
    Ok(out)
}

/// The defining relations of the alternating almost-Hopf ring for
/// `2 <= k <= kmax`, `l, m <= lmax`, on components at most `nmax`.
pub fn relations(lmax: u32, nmax: u32) -> Vec<CheckResult> {
    let (plus, minus) = (ChargedMonomial::unit(Charge::Plus), ChargedMonomial::unit(Charge::Minus));
    let ks: Vec<u32> = (2..=3).collect();
    let mut out = vec![];

    let mut sum_unit = ChargedElement::from_term(plus.clone());
    sum_unit.toggle(minus.clone());
    out.push(CheckResult::single("(1) 1^+ + 1^- = res(1)", res_el(&el(&Monomial::one())) == sum_unit, None));

    let small = charged_cells(8, 4);
    out.push(par_tally("(2) 1^+ is the transfer unit", &small, |z, t| {
        let ok = charged::transfer_mono(&plus, z).as_ref() == Some(z)
            && charged::transfer_mono(z, &plus).as_ref() == Some(z);
        t.record(ok, || format!("{z:?}"));
    }));

    out.push(CheckResult::single(
        "(3) 1^- (.) 1^- = 1^+",
        charged::transfer_mono(&minus, &minus) == Some(plus.clone()),
        None,
    ));

    let mut t4 = Tally::new("(4) gamma^+_{k,l} (.) gamma^+_{k,m} = C(l+m,l) gamma^+_{k,l+m}");
    for &k in &ks {
        for (l, m) in (1..=lmax).cartesian_product(1..=lmax) {
            let got = charged::transfer_mono(&g(k, l, Charge::Plus), &g(k, m, Charge::Plus));
            let expect = choose_odd(l + m, l).then(|| g(k, l + m, Charge::Plus));
            t4.record(got == expect, || format!("k={k} l={l} m={m}: {got:?}"));
        }
    }
    out.push(t4.finish());

    let mut t5 = Tally::new("(5) gamma^+_{k,l} . gamma^-_{k',l'} = 0 unless k = k' = 2");
    let gens: Vec<(u32, u32)> = (2..=3)
        .flat_map(|k| (1..=2 * lmax).map(move |l| (k, l)))
        .filter(|&(k, l)| (l << k) <= nmax && (k == 2 || l <= lmax))
        .collect();
    for (&(k, l), &(k2, l2)) in gens.iter().cartesian_product(&gens) {
        if (l << k) != (l2 << k2) || (k == 2 && k2 == 2) {
            continue;
        }
        let p = charged::cup_mono(&g(k, l, Charge::Plus), &g(k2, l2, Charge::Minus));
        t5.record(p.is_zero(), || format!("({k},{l}) . ({k2},{l2}): {} terms", p.len()));
    }
    out.push(t5.finish());

    let mut t6 = Tally::new("(6) gamma^+_{2,m} . gamma^-_{2,m}");
    for m in (1..=lmax).filter(|m| 4 * m <= nmax) {
        let got = charged::cup_mono(&g(2, m, Charge::Plus), &g(2, m, Charge::Minus));
        let expect = relation_six_rhs(m).expect("gamma_{1,2} exists");
        t6.record(got == expect, || format!("m={m}"));
    }
    out.push(t6.finish());

    let cases7: Vec<(u32, u32, Monomial)> = ks
        .iter()
        .flat_map(|&k| (1..=lmax).map(move |l| (k, l)))
        .filter(|&(k, l)| (l << k) <= nmax)
        .flat_map(|(k, l)| {
            let n = l << k;
            let dcap = if n <= 8 { 4 } else { 2 };
            (0..=dcap).flat_map(move |d| hopf::level1_basis(n, d).as_ref().clone()).map(move |x| (k, l, x))
        })
        .collect();
    out.push(par_tally("(7) gamma^+ . x^0 factors over the blocks of x", &cases7, |(k, l, x), t| {
        let gp = g(*k, *l, Charge::Plus);
        let lhs = charged::cup(&cel(&gp), &charged::res_mono(x));
        let mut rhs = ChargedElement::from_term(plus.clone());
        for b in x.blocks() {
            if b.n() % (1 << k) != 0 {
                rhs = ChargedElement::zero();
                break;
            }
            let gi = g(*k, b.n() >> k, Charge::Plus);
            let factor = charged::cup(&cel(&gi), &charged::res_mono(&Monomial::from_block(b.clone())));
            rhs = charged::transfer(&rhs, &factor);
        }
        t.record(lhs == rhs, || format!("gamma_{{{k},{l}}}^+ . {x:?}"));
    }));

    let c8: Vec<ChargedMonomial> = charged_cells(8, 3);
    let pairs8: Vec<_> = c8
        .iter()
        .cartesian_product(&c8)
        .filter(|(z, w)| z.n() + w.n() <= 12 && z.dim() + w.dim() <= 4)
        .collect();
    out.push(par_tally("(8) coproduct of a transfer product", &pairs8, |(z, w), t| {
        let lhs = charged::coproduct(&charged::transfer(&cel(z), &cel(w)));
        let rhs = charged::compatibility(&charged::coproduct_mono(z), &charged::coproduct_mono(w));
        t.record(lhs == rhs, || format!("{z:?} (.) {w:?}"));
    }));

    let mut t9 = Tally::new("(9) coproduct of gamma^{+-}_{k,l}");
    for &k in &ks {
        for l in (1..=lmax).filter(|l| (l << k) <= nmax) {
            for s in [Charge::Plus, Charge::Minus] {
                let expect: ChargedTensor = (0..=l)
                    .flat_map(|i| {
                        [
                            (g(k, i, Charge::Plus), g(k, l - i, s)),
                            (g(k, i, Charge::Minus), g(k, l - i, s.flip())),
                        ]
                    })
                    .collect();
                let got = charged::coproduct_mono(&g(k, l, s));
                t9.record(got == expect, || format!("k={k} l={l} {s:?}"));
            }
        }
    }
    out.push(t9.finish());

    out.extend(cross_engine(16));
    out
}

/// The charged engine against the expansion of single charged blocks into
/// generator words, on all annihilator blocks of component at most `nmax`.
pub fn cross_engine(nmax: u32) -> Vec<CheckResult> {
    let singles: Vec<ChargedMonomial> = (4..=nmax)
        .step_by(4)
        .flat_map(|n| (0..=nmax).flat_map(move |d| charged_basis(n, d)))
        .filter(|z| z.charge() == Charge::Plus && z.base().blocks().len() == 1)
        .collect();
    let mut out = vec![];
    out.push(par_tally("block expansion reproduces the charged block", &singles, |z, t| {
        let b = &z.base().blocks()[0];
        let ok = charged::expand_charged_block(b, Charge::Plus).ok() == Some(cel(z))
            && charged::expand_charged_block(b, Charge::Minus).ok() == Some(cel(&z.iota()));
        t.record(ok, || format!("{b:?}"));
    }));
    let small: Vec<&ChargedMonomial> = singles.iter().filter(|z| z.n() <= 8 && z.dim() <= 8).collect();
    out.push(par_tally("coproduct agrees on expanded blocks", &small, |z, t| {
        let e = charged::expand_charged_block(&z.base().blocks()[0], Charge::Plus).expect("Ann block");
        t.record(charged::coproduct(&e) == charged::coproduct_mono(z), || format!("{z:?}"));
    }));
    let pairs: Vec<_> = small
        .iter()
        .cartesian_product(&small)
        .filter(|(z, w)| z.n() == w.n() && z.dim() + w.dim() <= 12)
        .collect();
    out.push(par_tally("cup agrees on expanded blocks", &pairs, |(z, w), t| {
        let ez = charged::expand_charged_block(&z.base().blocks()[0], Charge::Plus).expect("Ann");
        let ew = charged::expand_charged_block(&w.base().blocks()[0], Charge::Minus).expect("Ann");
        let l = charged::cup(&ez, &ew);
        t.record(l == charged::cup_mono(z, &w.iota()), || format!("{z:?} . {w:?}^-"));
    }));
    out
}

// -------------------------------------------------------------- invariants

/// Identities among Dickson and related invariants for `k <= kmax`,
/// `m <= mmax`.
pub fn invariant_checks(kmax: u32, mmax: u32) -> Vec<CheckResult> {
    let mut grouped: Vec<(Tally, Option<String>)> = vec![];
    for c in invariants::invariant_identities(kmax, mmax) {
        let pos = match grouped.iter().position(|(t, _)| t.name == c.name) {
            Some(p) => p,
            None => {
                grouped.push((Tally::new(c.name.clone()), None));
                grouped.len() - 1
            }
        };
        let (t, note) = &mut grouped[pos];
        let detail = c.detail.clone();
        t.record(c.ok, || detail.unwrap_or_default());
        if c.ok && note.is_none() {
            *note = c.detail;
        }
    }
    grouped.into_iter().map(|(t, note)| CheckResult { note, ..t.finish() }).collect()
}

// ------------------------------------------------------------- restriction

/// Compatibility of restriction to elementary abelian subgroups with the
/// coproduct, the transfer product and the Euler ideal.
pub fn restriction(nmax: u32, dmax: u32) -> Vec<CheckResult> {
    let mut out = vec![];
    let dcap = |n: u32| dmax.min(if n <= 6 { 5 } else { 4 });

    let square: Vec<(ChargedMonomial, u32)> = (1..=nmax)
        .flat_map(|n| (0..=dcap(n)).flat_map(move |d| charged_basis(n, d)))
        .flat_map(|z| (0..=z.n()).map(move |a| (z.clone(), a)))
        .collect();
    out.push(par_tally("restriction commutes with the coproduct", &square, |(z, a), t| {
        let pieces = charged::coproduct_component(z, *a);
        for p1 in Partition::all(*a) {
            for p2 in Partition::all(z.n() - a) {
                let l = labelled(&p1);
                let r = labelled_from(&p2, l.len() as u32 + 1);
                let all = [l.clone(), r.clone()].concat();
                let lhs = phi_reduce(&phi_reduce(&rho_mono(z, &all), &l), &r);
                let rhs = pieces
                    .iter()
                    .fold(Poly::zero(), |acc, (z1, z2)| acc + rho_mono(z1, &l).mul(&rho_mono(z2, &r)));
                t.record(lhs == rhs, || format!("{z:?} over ({p1}) + ({p2})"));
            }
        }
    }));

    let tf: Vec<(ChargedMonomial, ChargedMonomial)> = (1..nmax)
        .flat_map(|n1| (1..=nmax - n1).map(move |n2| (n1, n2)))
        .flat_map(|(n1, n2)| {
            let left: Vec<_> = (0..=dcap(n1)).flat_map(|d| charged_basis(n1, d)).collect();
            let right: Vec<_> = (0..=dcap(n2)).flat_map(|d| charged_basis(n2, d)).collect();
            left.into_iter()
                .cartesian_product(right)
                .filter(|(z, w)| z.dim() + w.dim() <= dmax.min(6))
                .filter(|(z, w)| z.charge() != Charge::Zero || w.charge() != Charge::Zero)
                .collect::<Vec<_>>()
        })
        .collect();
    out.push(par_tally("restriction of a transfer product", &tf, |(z, w), t| {
        let prod: ChargedElement = charged::transfer_mono(z, w).into_iter().collect();
        for p in Partition::all(z.n() + w.n()) {
            let parts = labelled(&p);
            let lhs = restrict::rho_on(&prod, &parts);
            t.record(lhs == restrict::transfer_formula(z, w, &parts), || format!("{z:?} (.) {w:?} on {p}"));
        }
    }));

    let ideal: Vec<(u32, Monomial)> = (1..=nmax)
        .flat_map(|n| (0..dcap(n)).flat_map(move |d| basis(n, d).as_ref().clone()).map(move |y| (n, y)))
        .collect();
    out.push(par_tally("restriction kills the Euler ideal", &ideal, |(n, y), t| {
        let ey = hopf::cup(&euler(*n), &el(y));
        for p in Partition::all(*n) {
            let parts = labelled(&p);
            t.record(phi_reduce(&rho_b(&ey, &parts), &parts).is_zero(), || format!("e_{n} . {y:?} on {p}"));
        }
    }));
    out
}

// --------------------------------------------------------------- detection

/// Full column rank of the stacked restriction matrices.
pub fn detection(ns: &[u32], dmax: u32) -> Vec<CheckResult> {
    let grid: Vec<(u32, u32)> = ns.iter().copied().cartesian_product(0..=dmax).collect();
    let reports: Vec<_> = grid.par_iter().map(|&(n, d)| restrict::detection_matrix(n, d)).collect();
    let mut out = vec![];
    for n in ns {
        let mut t = Tally::new(format!("restrictions detect the charged basis, n={n}"));
        for r in reports.iter().filter(|r| r.n == *n) {
            t.record(r.injective(), || format!("d={}: rank {} of {}", r.d, r.rank, r.dim));
        }
        out.push(t.finish());
    }
    out
}

// ---------------------------------------------------------- Fox-Neuwirth

/// Sign combinatorics of the cochain level: cancellation of central
/// shuffles for `2 <= r <= rmax`, the four-addend collapse, and the
/// pruning cancellation for block sizes summing to at most `smax`.
pub fn fox_neuwirth(rmax: usize, smax: usize) -> Vec<CheckResult> {
    let mut out = vec![];
    let mut t = Tally::new("central shuffles cancel in pairs");
    for r in 2..=rmax {
        match fncheck::central_cancellation(r) {
            Ok(c) => t.record(c.ok(), || format!("r={r}: {} + {} shuffles", c.plus, c.minus)),
            Err(e) => t.record(false, || format!("r={r}: {e}")),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("four addends collapse");
    for l in 2..=3 {
        for m in 1..=3 {
            for j in 2..=m + 1 {
                match fncheck::four_addend(l, m, j) {
                    Ok(f) => t.record(f.ok(), || format!("l={l} m={m} j={j}: {f:?}")),
                    Err(e) => t.record(false, || format!("l={l} m={m} j={j}: {e}")),
                }
            }
        }
    }
    out.push(t.finish());

    let sizes = fncheck::block_size_vectors(smax);
    out.push(par_tally("prunings cancel with the stated signs", &sizes, |s, t| {
        match fncheck::pruning_cancellation(s) {
            Ok(r) => t.record(r.ok(), || format!("{s:?}: {r:?}")),
            Err(e) => t.record(false, || format!("{s:?}: {e}")),
        }
    }));
    out
}

/// Runs every suite with its default bounds.
pub fn run_all() -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| s.run(s.default_bounds())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_betti_numbers() {
        assert_eq!(cyclic_group_betti(4, 6), vec![1; 7]);
        assert_eq!(cyclic_group_betti(2, 4), vec![1; 5]);
        // Odd order: only degree zero survives mod 2.
        assert_eq!(cyclic_group_betti(3, 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn literal_cup_on_small_cases() {
        for x in cells(4, 3) {
            for y in cells(4, 3).iter().filter(|y| y.n() == x.n()) {
                assert_eq!(literal_cup(&x, y), hopf::cup_mono(&x, y), "{x:?} . {y:?}");
            }
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn gysin_dimension_matches_basis_small() {
        for n in 1..=5 {
            for d in 0..=5 {
                assert_eq!(gysin_dimension(n, d), charged_basis(n, d).len(), "({n}, {d})");
            }
        }
    }
}
