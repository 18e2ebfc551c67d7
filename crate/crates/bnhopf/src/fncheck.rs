// SPDX-License-Identifier: MIT
//! Sign bookkeeping for Fox-Neuwirth cochains of `B_n^+`.
//!
//! Cochains are signed tuples `[a_0, .., a_{n-1}]^±`. Only the pieces of the
//! differential needed for the generator cocycles are modelled: the central
//! collapse `d_0` on tuples with `a_0 = 0`, the generator cochains, and the
//! sign algebra of the higher prunings. Signs stay in `{+1, -1}` until a
//! formal sum is reduced mod 2.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != o.is_minus())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_minus() { "-" } else { "+" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedTuple {
    pub entries: Vec<u32>,
    pub charge: Sign,
}

impl SignedTuple {
    pub fn new(entries: Vec<u32>, charge: Sign) -> SignedTuple {
        SignedTuple { entries, charge }
    }

    pub fn degree(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn iota(&self) -> SignedTuple {
        SignedTuple::new(self.entries.clone(), self.charge.flip())
    }
}

impl fmt::Display for SignedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]^{}", self.entries.iter().join(","), self.charge)
    }
}

/// Formal sum of signed tuples with coefficients in `F_2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FormalSum(BTreeSet<SignedTuple>);

impl FormalSum {
    pub fn zero() -> FormalSum {
        FormalSum::default()
    }

    pub fn toggle(&mut self, t: SignedTuple) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    pub fn add(&mut self, other: &FormalSum) {
        for t in &other.0 {
            self.toggle(t.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignedTuple> {
        self.0.iter()
    }

    pub fn iota(&self) -> FormalSum {
        self.0.iter().map(SignedTuple::iota).collect()
    }
}

impl FromIterator<SignedTuple> for FormalSum {
    fn from_iter<I: IntoIterator<Item = SignedTuple>>(it: I) -> FormalSum {
        let mut s = FormalSum::zero();
        for t in it {
            s.toggle(t);
        }
        s
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        write!(f, "{}", self.0.iter().join(" + "))
    }
}

/// Signed permutation of `{-n..n}`, stored as the images of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<SignedPermutation> {
        let n = images.len() as i32;
        let abs: BTreeSet<i32> = images.iter().map(|v| v.abs()).collect();
        if abs.len() != images.len() || abs.iter().any(|&v| v < 1 || v > n) {
            return Err(Error::OutOfRange(format!("not a signed permutation: {images:?}")));
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> SignedPermutation {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: i32) -> i32 {
        match i {
            0 => 0,
            i if i > 0 => self.images[i as usize - 1],
            i => -self.images[(-i) as usize - 1],
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation { images: (1..=self.n() as i32).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// The sign character of `B_n` whose kernel is `B_n^+`: the sign of the
    /// underlying permutation times `(-1)^(number of negated letters)`.
    pub fn sign(&self) -> Sign {
        let abs: Vec<usize> = self.images.iter().map(|v| v.unsigned_abs() as usize).collect();
        let neg = self.images.iter().filter(|&&v| v < 0).count();
        Sign::from_parity((inversions(&abs) + neg) % 2 == 1)
    }

    /// Sign of the action on the `2n+1` points `{-n..n}`; equals the
    /// parity of the number of negated letters.
    pub fn point_parity(&self) -> Sign {
        let n = self.n() as i32;
        let perm: Vec<i32> = (-n..=n).map(|i| self.apply(i)).collect();
        Sign::from_parity(inversions(&perm) % 2 == 1)
    }
}

fn inversions<T: Ord>(p: &[T]) -> usize {
    p.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

/// Symmetric shuffles of `-U_c..-U_1`, `{0}`, `U_1..U_c`, where `U_i` are
/// consecutive blocks of leaves of the given sizes on the right of the
/// centre. Each block moves as a unit; a block crossing the centre is
/// mirrored. Returns the leaf-level signed permutations (position to label).
pub fn symmetric_block_shuffles(sizes: &[usize]) -> Vec<SignedPermutation> {
    let c = sizes.len();
    let mut start = vec![1i32];
    for s in sizes {
        start.push(start.last().unwrap() + *s as i32);
    }
    let leaves = |u: usize, mirrored: bool| -> Vec<i32> {
        let r = start[u]..start[u + 1];
        if mirrored {
            r.rev().map(|v| -v).collect()
        } else {
            r.collect()
        }
    };
    let mut out = Vec::new();
    for t in 0..=c {
        // Right half: mirrored units t..1 interleaved with units t+1..c.
        let neg: Vec<usize> = (0..t).rev().collect();
        let pos: Vec<usize> = (t..c).collect();
        for mask in interleavings(neg.len(), pos.len()) {
            let (mut a, mut b) = (neg.iter(), pos.iter());
            let mut images = Vec::new();
            for from_neg in mask {
                if from_neg {
                    images.extend(leaves(*a.next().unwrap(), true));
                } else {
                    images.extend(leaves(*b.next().unwrap(), false));
                }
            }
            out.push(SignedPermutation { images });
        }
    }
    out
}

fn interleavings(a: usize, b: usize) -> Vec<Vec<bool>> {
    (0..a + b).combinations(a).map(|pick| (0..a + b).map(|i| pick.contains(&i)).collect()).collect()
}

/// Symmetric shuffles of `{-r..-1}`, `{0}`, `{1..r}`, split by sign.
#[derive(Clone, Debug)]
pub struct ShuffleSplit {
    pub plus: Vec<SignedPermutation>,
    pub minus: Vec<SignedPermutation>,
}

pub fn symmetric_shuffles(r: usize) -> ShuffleSplit {
    let (plus, minus) =
        symmetric_block_shuffles(&vec![1; r]).into_iter().partition(|s| s.sign() == Sign::Plus);
    ShuffleSplit { plus, minus }
}

/// Precomposition with the transposition `(-1, 1)`.
pub fn flip_first(s: &SignedPermutation) -> SignedPermutation {
    let mut t = SignedPermutation::identity(s.n());
    t.images[0] = -1;
    s.compose(&t)
}

/// Right subtree of the centre: leaves `1..=r` with `a_r = 0` (or `r = n`),
/// split into the children of its height-one vertex.
fn central_units(a: &[u32]) -> (usize, Vec<usize>) {
    let n = a.len();
    let r = (1..n).find(|&i| a[i] == 0).unwrap_or(n);
    let mut sizes = vec![1usize];
    for &e in &a[1..r] {
        if e == 1 {
            sizes.push(1);
        } else {
            *sizes.last_mut().unwrap() += 1;
        }
    }
    (r, sizes)
}

/// Raw expansion of `d_0`: one signed tuple per symmetric shuffle.
pub fn d0_terms(t: &SignedTuple) -> Result<Vec<SignedTuple>> {
    let a = &t.entries;
    if a.first() != Some(&0) {
        return Err(Error::UnsupportedShape(format!("d0 needs a_0 = 0, got {t}")));
    }
    let (r, sizes) = central_units(a);
    let mut out = Vec::new();
    for s in symmetric_block_shuffles(&sizes) {
        // Entry between right-half leaves p and p+1 after relabelling: the
        // original gap if they come from one unit, else 1.
        let mut entries = vec![1u32];
        let img = s.images();
        for w in img.windows(2) {
            let (x, y) = (w[0], w[1]);
            let gap = if x > 0 && y == x + 1 {
                a[x as usize]
            } else if x < 0 && y == x + 1 {
                a[(-y) as usize]
            } else {
                1
            };
            entries.push(gap);
        }
        entries.extend_from_slice(&a[r..]);
        out.push(SignedTuple::new(entries, t.charge * s.sign()));
    }
    Ok(out)
}

pub fn d0(t: &SignedTuple) -> Result<FormalSum> {
    Ok(d0_terms(t)?.into_iter().collect())
}

pub fn d0_sum(x: &FormalSum) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for t in x.iter() {
        out.add(&d0(t)?);
    }
    Ok(out)
}

fn ones(k: usize) -> Vec<u32> {
    vec![1; k]
}

/// The `beta` tuple for `1 <= i < j <= m+1`, before symmetrization.
pub fn beta_tuple(l: u32, m: u32, i: u32, j: u32) -> Vec<u32> {
    let w = (1usize << l) - 1;
    (1..=m + 1)
        .map(|k| match k {
            k if k == i => vec![2],
            k if k == j => ones(w - 2),
            _ => ones(w),
        })
        .collect::<Vec<_>>()
        .join(&0)
}

pub fn alpha_tuple(l: u32, m: u32) -> Vec<u32> {
    let w = (1usize << l) - 1;
    vec![ones(w); m as usize].join(&0)
}

/// `S_0`: prepend `a_0 = 0`.
pub fn s0(t: &[u32]) -> Vec<u32> {
    std::iter::once(0).chain(t.iter().copied()).collect()
}

/// The symmetrized generator cochain `S_0(Gamma_{l,m}^±)`.
pub fn gamma_cochain(l: u32, m: u32, charge: Sign) -> Result<FormalSum> {
    if l < 2 || m < 1 {
        return Err(Error::OutOfRange(format!("gamma cochain needs l >= 2, m >= 1, got ({l},{m})")));
    }
    let mut out = FormalSum::zero();
    out.toggle(SignedTuple::new(s0(&alpha_tuple(l, m)), charge));
    for (i, j) in (1..=m + 1).tuple_combinations() {
        let b = s0(&beta_tuple(l, m, i, j));
        out.toggle(SignedTuple::new(b.clone(), Sign::Plus));
        out.toggle(SignedTuple::new(b, Sign::Minus));
    }
    Ok(out)
}

/// `d_0` on the tuple of the shape `[0, 1^(r-1), 0]`.
#[derive(Clone, Debug, Serialize)]
pub struct CentralCancellation {
    pub r: usize,
    pub plus: usize,
    pub minus: usize,
    pub bijection: bool,
    pub vanishes: bool,
}

impl CentralCancellation {
    pub fn ok(&self) -> bool {
        let half = 1usize << (self.r - 1);
        self.plus == half && self.minus == half && self.bijection && (self.vanishes == (self.r >= 2))
    }
}

pub fn central_cancellation(r: usize) -> Result<CentralCancellation> {
    let split = symmetric_shuffles(r);
    let minus: BTreeSet<_> = split.minus.iter().cloned().collect();
    let image: BTreeSet<_> = split.plus.iter().map(flip_first).collect();
    let bijection = image == minus && image.len() == split.plus.len();
    let mut entries = vec![0];
    entries.extend(ones(r - 1));
    entries.push(0);
    let vanishes = [Sign::Plus, Sign::Minus]
        .iter()
        .map(|&c| d0(&SignedTuple::new(entries.clone(), c)))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(FormalSum::is_zero);
    Ok(CentralCancellation { r, plus: split.plus.len(), minus: minus.len(), bijection, vanishes })
}

/// `d_0` of the beta term with `i = 1`: four raw addends, two distinct
/// tuples each appearing twice.
#[derive(Clone, Debug, Serialize)]
pub struct FourAddend {
    pub l: u32,
    pub m: u32,
    pub j: u32,
    pub addends: usize,
    pub multiplicities: Vec<usize>,
    pub vanishes: bool,
}

impl FourAddend {
    pub fn ok(&self) -> bool {
        self.addends == 4 && self.multiplicities == [2, 2] && self.vanishes
    }
}

pub fn four_addend(l: u32, m: u32, j: u32) -> Result<FourAddend> {
    let b = s0(&beta_tuple(l, m, 1, j));
    let mut raw = Vec::new();
    for c in [Sign::Plus, Sign::Minus] {
        raw.extend(d0_terms(&SignedTuple::new(b.clone(), c))?);
    }
    let counts = raw.iter().counts();
    let mut multiplicities: Vec<usize> = counts.values().copied().collect();
    multiplicities.sort_unstable();
    let vanishes = raw.iter().cloned().collect::<FormalSum>().is_zero();
    Ok(FourAddend { l, m, j, addends: raw.len(), multiplicities, vanishes })
}

/// One element `(i, j, sigma)` of the pruning index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Pruning {
    i: Vec<usize>,
    j: Vec<usize>,
    sigma: Vec<usize>,
}

/// Shuffles of consecutive blocks of the given sizes, as permutations
/// `sigma[x] = image of x`, increasing on each block.
fn shuffles(sizes: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut slots: Vec<usize> = Vec::with_capacity(n);
    fn go(
        left: &mut Vec<usize>,
        slots: &mut Vec<usize>,
        sizes: &[usize],
        n: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots.len() == n {
            // slots[p] = block occupying position p.
            let mut offs: Vec<usize> = sizes
                .iter()
                .scan(0, |acc, &s| {
                    let o = *acc;
                    *acc += s;
                    Some(o)
                })
                .collect();
            let mut sigma = vec![0; n];
            for (p, &b) in slots.iter().enumerate() {
                sigma[offs[b]] = p;
                offs[b] += 1;
            }
            out.push(sigma);
            return;
        }
        for b in 0..left.len() {
            if left[b] > 0 {
                left[b] -= 1;
                slots.push(b);
                go(left, slots, sizes, n, out);
                slots.pop();
                left[b] += 1;
            }
        }
    }
    go(&mut sizes.to_vec(), &mut slots, sizes, n, &mut out);
    out
}

fn is_shuffle(sigma: &[usize], sizes: &[usize]) -> bool {
    let mut start = 0;
    for &s in sizes {
        if sigma[start..start + s].windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        start += s;
    }
    true
}

fn perm_sign(p: &[usize]) -> Sign {
    Sign::from_parity(inversions(p) % 2 == 1)
}

/// Block sizes `(i_l, .., i_1, j_1, .., j_l)` of the shuffles in `X`.
fn shuffle_type(i: &[usize], j: &[usize]) -> Vec<usize> {
    i.iter().rev().chain(j.iter()).copied().collect()
}

fn epsilon(x: &Pruning) -> Sign {
    let l = x.i.len();
    let (i, j) = (&x.i, &x.j);
    let mut e = 0usize;
    for a in 0..l {
        for b in a + 1..l {
            e += i[a] * j[b] + j[a] * j[b];
        }
        e += i[a] * i[a] + i[a] * j[a] + (i[a] * i[a] + i[a]) / 2;
    }
    Sign::from_parity(e % 2 == 1) * perm_sign(&x.sigma)
}

/// The block permutation reversing intervals of sizes
/// `(j_l, .., j_1, i_1, .., i_l)`.
fn sigma_bar(i: &[usize], j: &[usize]) -> Vec<usize> {
    let sizes: Vec<usize> = j.iter().rev().chain(i.iter()).copied().collect();
    let n: usize = sizes.iter().sum();
    let mut out = vec![0; n];
    let mut src = 0;
    for (b, &s) in sizes.iter().enumerate() {
        // Block b lands after all blocks with a larger index.
        let dst: usize = sizes[b + 1..].iter().sum();
        for t in 0..s {
            out[src + t] = dst + t;
        }
        src += s;
    }
    out
}

fn printed_sigma_bar_sign(i: &[usize], j: &[usize]) -> Sign {
    let s: Vec<usize> = i.iter().zip(j).map(|(a, b)| a + b).collect();
    let mut e: usize = i.iter().zip(j).map(|(a, b)| a * b).sum();
    for (a, b) in (0..s.len()).tuple_combinations() {
        e += s[a] * s[b];
    }
    Sign::from_parity(e % 2 == 1)
}

fn ratio_exponent(s: &[usize]) -> usize {
    s.iter().map(|&v| v * v + (v * v + v) / 2).sum()
}

fn phi(x: &Pruning) -> Pruning {
    let bar = sigma_bar(&x.i, &x.j);
    Pruning { i: x.j.clone(), j: x.i.clone(), sigma: bar.iter().map(|&p| x.sigma[p]).collect() }
}

#[derive(Clone, Debug, Serialize)]
pub struct PruningClass {
    pub s: Vec<usize>,
    pub size: usize,
    /// `prod 2^{s_m}`; equals `size` only for a single block.
    pub product_count: usize,
    pub ratio_odd: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PruningReport {
    pub block_sizes: Vec<usize>,
    pub x_size: usize,
    pub sigma_bar_sign_mismatches: usize,
    pub ratio_mismatches: usize,
    pub phi_fixed_points: usize,
    pub phi_well_defined: bool,
    pub cancels: bool,
    pub classes: Vec<PruningClass>,
}

impl PruningReport {
    pub fn ok(&self) -> bool {
        self.sigma_bar_sign_mismatches == 0
            && self.ratio_mismatches == 0
            && self.phi_fixed_points == 0
            && self.phi_well_defined
            && self.cancels
    }
}

/// Sign algebra of a higher pruning of a tree whose relevant subtrees
/// have the given numbers of leaves.
pub fn pruning_cancellation(block_sizes: &[usize]) -> Result<PruningReport> {
    if block_sizes.iter().sum::<usize>() > 8 || block_sizes.contains(&0) {
        return Err(Error::OutOfRange(format!("block sizes {block_sizes:?}: need positive, sum <= 8")));
    }
    let l = block_sizes.len();
    let ranges: Vec<Vec<(usize, usize)>> =
        block_sizes.iter().map(|&r| (0..r).flat_map(|i| (0..r - i).map(move |j| (i, j))).collect()).collect();
    let mut xs = Vec::new();
    for choice in ranges.iter().multi_cartesian_product() {
        let i: Vec<usize> = choice.iter().map(|p| p.0).collect();
        let j: Vec<usize> = choice.iter().map(|p| p.1).collect();
        if i.iter().chain(&j).all(|&v| v == 0) {
            continue;
        }
        for sigma in shuffles(&shuffle_type(&i, &j)) {
            xs.push(Pruning { i: i.clone(), j: j.clone(), sigma });
        }
    }
    if l == 0 {
        xs.clear();
    }
    let set: BTreeSet<&Pruning> = xs.iter().collect();

    let mut sigma_bar_sign_mismatches = 0;
    let mut ratio_mismatches = 0;
    let mut phi_fixed_points = 0;
    let mut phi_well_defined = true;
    // Key: (s, charge of the pruned tree, charge of the pruned-off part).
    let mut counts: BTreeMap<(Vec<usize>, Sign, Sign), usize> = BTreeMap::new();
    let mut classes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for x in &xs {
        let s: Vec<usize> = x.i.iter().zip(&x.j).map(|(a, b)| a + b).collect();
        let bar = sigma_bar(&x.i, &x.j);
        if perm_sign(&bar) != printed_sigma_bar_sign(&x.i, &x.j) {
            sigma_bar_sign_mismatches += 1;
        }
        let y = phi(x);
        if &y == x {
            phi_fixed_points += 1;
        }
        if !is_shuffle(&y.sigma, &shuffle_type(&y.i, &y.j)) || !set.contains(&y) || phi(&y) != *x {
            phi_well_defined = false;
        }
        let ratio = epsilon(&y) * epsilon(x);
        if ratio != Sign::from_parity(ratio_exponent(&s) % 2 == 1) {
            ratio_mismatches += 1;
        }
        let e = epsilon(x);
        *counts.entry((s.clone(), Sign::Plus, e)).or_default() += 1;
        *counts.entry((s.clone(), Sign::Minus, e.flip())).or_default() += 1;
        *classes.entry(s).or_default() += 1;
    }
    let cancels = counts.values().all(|c| c % 2 == 0);
    let classes = classes
        .into_iter()
        .map(|(s, size)| PruningClass {
            product_count: s.iter().map(|&v| 1usize << v).product(),
            ratio_odd: ratio_exponent(&s) % 2 == 1,
            s,
            size,
        })
        .collect();
    Ok(PruningReport {
        block_sizes: block_sizes.to_vec(),
        x_size: xs.len(),
        sigma_bar_sign_mismatches,
        ratio_mismatches,
        phi_fixed_points,
        phi_well_defined,
        cancels,
        classes,
    })
}

/// Block-size vectors with positive entries and total at most `max`.
pub fn block_size_vectors(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for r in 1..=left {
            cur.push(r);
            go(left - r, cur, out);
            cur.pop();
        }
    }
    go(max, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_counts() {
        for r in 1..=6 {
            let s = symmetric_shuffles(r);
            assert_eq!(s.plus.len(), 1 << (r - 1));
            assert_eq!(s.minus.len(), 1 << (r - 1));
        }
        let s = symmetric_shuffles(2);
        assert_eq!(s.plus.len(), 2);
    }

    #[test]
    fn sign_is_a_character() {
        let all: Vec<SignedPermutation> = symmetric_block_shuffles(&[1, 1, 1]);
        for a in &all {
            for b in &all {
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
        let rot = SignedPermutation::new(vec![2, -1]).unwrap();
        assert_eq!(rot.sign(), Sign::Plus);
        assert_eq!(SignedPermutation::new(vec![-1, 2]).unwrap().sign(), Sign::Minus);
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn d0_small() {
        let t = SignedTuple::new(vec![0, 1, 1, 0], Sign::Plus);
        assert!(d0(&t).unwrap().is_zero());
        let t = SignedTuple::new(vec![0, 0], Sign::Plus);
        let terms = d0_terms(&t).unwrap();
        assert_eq!(terms.len(), 2);
        assert_ne!(terms[0].charge, terms[1].charge);
        assert_eq!(d0(&t).unwrap().len(), 2);
        assert!(matches!(d0(&SignedTuple::new(vec![1, 0], Sign::Plus)), Err(Error::UnsupportedShape(_))));
    }

    #[test]
    fn d0_commutes_with_iota() {
        for e in [vec![0, 0, 1], vec![0, 2, 0, 1], vec![0, 1, 3, 1, 0], vec![0]] {
            let t = SignedTuple::new(e, Sign::Plus);
            assert_eq!(d0(&t.iota()).unwrap(), d0(&t).unwrap().iota());
        }
    }

    #[test]
    fn generator_cochain() {
        let g = gamma_cochain(2, 1, Sign::Plus).unwrap();
        assert!(g.iter().any(|t| t == &SignedTuple::new(vec![0, 1, 1, 1], Sign::Plus)));
        // alpha plus one beta pair
        assert_eq!(g.len(), 3);
        for m in 1..=3 {
            let p = gamma_cochain(3, m, Sign::Plus).unwrap();
            let q = gamma_cochain(3, m, Sign::Minus).unwrap();
            assert_eq!(p.len() as u32, 1 + m * (m + 1));
            let mut diff = p.clone();
            diff.add(&q);
            assert_eq!(diff.len(), 2);
            assert_eq!(p.iota(), q);
            assert!(d0_sum(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn single_block_pruning() {
        let rep = pruning_cancellation(&[3]).unwrap();
        let c = rep.classes.iter().find(|c| c.s == [2]).unwrap();
        assert_eq!(c.size, 4);
        assert!(rep.ok());
        assert_eq!(sigma_bar(&[1, 0], &[0, 1]).len(), 2);
        assert_eq!(perm_sign(&sigma_bar(&[1, 0], &[0, 1])), printed_sigma_bar_sign(&[1, 0], &[0, 1]));
    }
}
