// SPDX-License-Identifier: MIT
//! Dickson invariants, the classes `f_{2^k}` and `h_{3m}`, and the identities
//! they satisfy in the cohomology of the groups `A_(2^k) = C x V_k`.
//!
//! A part labelled `j` of size `2^k` carries the variables `x[j]` and
//! `y[j,1..k]`.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};

/// All `2^k` linear forms in `y[j,1..k]`.
fn dual_space(k: u32, j: u32) -> Vec<Poly> {
    (0u32..1 << k)
        .map(|mask| {
            (1..=k).filter(|&i| mask >> (i - 1) & 1 == 1).fold(Poly::zero(), |acc, i| acc + Poly::y(j, i))
        })
        .collect()
}

/// Coefficients (in `t`) of `prod_v (t + shift + v)` over `v` in `V_k^dual`.
fn orbit_polynomial(k: u32, j: u32, shift: &Poly) -> Vec<Poly> {
    let mut coeffs = vec![Poly::one()];
    for v in dual_space(k, j) {
        let c = shift.add(&v);
        let mut next = vec![Poly::zero(); coeffs.len() + 1];
        for (e, a) in coeffs.iter().enumerate() {
            next[e + 1].add_assign(a);
            next[e].add_assign(&a.mul(&c));
        }
        coeffs = next;
    }
    coeffs
}

/// `d_{2^k - 2^i}` on part `j`: the coefficient of `t^(2^i)` in
/// `prod_v (t + v)`.
pub fn dickson_on(k: u32, i: u32, j: u32) -> Result<Poly> {
    if i >= k {
        return Err(Error::OutOfRange(format!("dickson({k},{i}) needs i < k")));
    }
    Ok(orbit_polynomial(k, j, &Poly::zero()).swap_remove(1 << i))
}

pub fn dickson(k: u32, i: u32) -> Result<Poly> {
    dickson_on(k, i, 1)
}

/// `f_{2^k} = prod_v (x + v)` on part `j`.
pub fn f_class_on(k: u32, j: u32) -> Poly {
    let x = Poly::x(j);
    dual_space(k, j).iter().fold(Poly::one(), |acc, v| acc.mul(&x.add(v)))
}

pub fn f_class(k: u32) -> Poly {
    f_class_on(k, 1)
}

/// `h_3 = y1^3 + y1^2 y2 + y2^3` on a part of size 4.
pub fn h3_on(j: u32) -> Poly {
    let (a, b) = (Poly::y(j, 1), Poly::y(j, 2));
    a.pow(3) + a.pow(2).mul(&b) + b.pow(3)
}

/// `(h_{3m}, h_{3m}^perp)` on the size-4 parts `labels`.
///
/// `h_{3m}` is the sum over even subsets `S` of `prod_{i in S} h^perp_{3,i}
/// prod_{i not in S} h_{3,i}`; `h_{3m}^perp` is the odd-subset sum, equal to
/// `d_3^{(x)m} + h_{3m}`. For no parts this gives `(1, 0)`.
pub fn h_classes_on(labels: &[u32]) -> (Poly, Poly) {
    let h: Vec<Poly> = labels.iter().map(|&j| h3_on(j)).collect();
    let hp: Vec<Poly> =
        labels.iter().zip(&h).map(|(&j, h)| dickson_on(2, 0, j).expect("d_3").add(h)).collect();
    // (even, odd) subset sums, built one part at a time.
    let mut even = Poly::one();
    let mut odd = Poly::zero();
    for (h, hp) in h.iter().zip(&hp) {
        let e = even.mul(h).add(&odd.mul(hp));
        let o = odd.mul(h).add(&even.mul(hp));
        even = e;
        odd = o;
    }
    (even, odd)
}

pub fn h_classes(m: u32) -> Result<(Poly, Poly)> {
    if m == 0 {
        return Err(Error::OutOfRange("h classes need m >= 1".into()));
    }
    Ok(h_classes_on(&(1..=m).collect_vec()))
}

/// A linear substitution of variables, applied as a ring map.
pub type Substitution = BTreeMap<Var, Poly>;

/// Generators of `GL_k` on the `y[j,*]`: the transpositions `y_a <-> y_b`
/// and the transvection `y_1 -> y_1 + y_2`.
pub fn gl_generators(k: u32, j: u32) -> Vec<Substitution> {
    let mut out = Vec::new();
    for a in 1..k {
        out.push(BTreeMap::from([(Var::Y(j, a), Poly::y(j, a + 1)), (Var::Y(j, a + 1), Poly::y(j, a))]));
    }
    if k >= 2 {
        out.push(BTreeMap::from([(Var::Y(j, 1), Poly::y(j, 1) + Poly::y(j, 2))]));
    }
    out
}

/// Translations `x[j] -> x[j] + y[j,i]`.
pub fn translations(k: u32, j: u32) -> Vec<Substitution> {
    (1..=k).map(|i| BTreeMap::from([(Var::X(j), Poly::x(j) + Poly::y(j, i))])).collect()
}

/// The order-3 map `y1 -> y2 -> y1 + y2` on a size-4 part.
pub fn cyclic_three(j: u32) -> Substitution {
    BTreeMap::from([(Var::Y(j, 1), Poly::y(j, 2)), (Var::Y(j, 2), Poly::y(j, 1) + Poly::y(j, 2))])
}

/// The swap `y1 <-> y2` on a size-4 part: odd in `B_4`.
pub fn swap_on(j: u32) -> Substitution {
    BTreeMap::from([(Var::Y(j, 1), Poly::y(j, 2)), (Var::Y(j, 2), Poly::y(j, 1))])
}

/// Exchange of two parts of equal size.
pub fn part_swap(a: u32, b: u32) -> impl Fn(u32) -> u32 {
    move |j| {
        if j == a {
            b
        } else if j == b {
            a
        } else {
            j
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool) -> Check {
        Check { name: name.into(), ok, detail: None }
    }

    fn with(name: impl Into<String>, ok: bool, detail: String) -> Check {
        Check { name: name.into(), ok, detail: Some(detail) }
    }
}

/// The right-hand side of the product formula for `h_{3m} h_{3m}^perp`.
pub fn h_product_rhs(m: u32) -> Poly {
    let d2 = |j| dickson_on(2, 1, j).expect("d_2");
    let d3 = |j| dickson_on(2, 0, j).expect("d_3");
    let mut out = Poly::zero();
    for i in 1..=m {
        let t =
            (1..=m).fold(Poly::one(), |acc, j| acc.mul(&if j == i { d2(j).pow(3) } else { d3(j).pow(2) }));
        out.add_assign(&t);
    }
    if m % 2 == 1 {
        out.add_assign(&(1..=m).fold(Poly::one(), |acc, j| acc.mul(&d3(j).pow(2))));
    }
    out
}

/// Identities of the invariant algebras: the quadratic relation for `h_3`,
/// the product formula for `h_{3m}` (`m <= mmax`), the quartic satisfied by
/// `x`, and invariance of `d`, `f`, `h` under the Weyl generators
/// (`k <= kmax`).
pub fn invariant_identities(kmax: u32, mmax: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let d2 = dickson(2, 1).expect("d_2");
    let d3 = dickson(2, 0).expect("d_3");
    let h3 = h3_on(1);
    let hp = d3.add(&h3);

    let rel = h3.mul(&hp).add(&d2.pow(3)).add(&d3.pow(2));
    out.push(Check::new("h3*(d3-h3) + d2^3 + d3^2 = 0", rel.is_zero()));

    for m in 1..=mmax {
        let (h, hp) = h_classes(m).expect("m >= 1");
        let lhs = h.mul(&hp);
        let rhs = h_product_rhs(m);
        out.push(Check::new(format!("h_{{3m}} product formula, m={m}"), lhs == rhs));
        let sum = (1..=m).fold(Poly::one(), |acc, j| acc.mul(&dickson_on(2, 0, j).unwrap()));
        out.push(Check::new(format!("h + h_perp = d3^m, m={m}"), h.add(&hp) == sum));
    }

    // The roots of p(t) are x + v, so p(t) = g(t + x) with g additive.
    let x = Poly::x(1);
    let coeffs = orbit_polynomial(2, 1, &x);
    let f4 = f_class(2);
    let expected = [f4.clone(), d3.clone(), d2.clone(), Poly::zero(), Poly::one()];
    let ok = coeffs.len() == 5 && coeffs.iter().zip(&expected).all(|(a, b)| a == b);
    out.push(Check::with(
        "p(t) = t^4 + d2 t^2 + d3 t + f4",
        ok,
        format!("coefficients t^0..t^4: {}", coeffs.iter().join(", ")),
    ));
    let printed = [f4.clone(), Poly::zero(), d2.clone(), Poly::zero(), Poly::one()];
    let root_of_printed =
        printed.iter().enumerate().fold(Poly::zero(), |acc, (e, c)| acc.add(&c.mul(&x.pow(e as u32))));
    out.push(Check::with(
        "t^4 + d2 t^2 + f4 has root x only up to the d3 t term",
        root_of_printed == d3.mul(&x),
        format!("value at t=x: {root_of_printed}"),
    ));

    for k in 1..=kmax {
        let ds: Vec<Poly> = (0..k).map(|i| dickson(k, i).unwrap()).collect();
        let f = f_class(k);
        for g in gl_generators(k, 1) {
            let ok = ds.iter().all(|d| &d.substitute(&g) == d) && f.substitute(&g) == f;
            out.push(Check::new(format!("GL_{k} invariance of d, f"), ok));
        }
        for t in translations(k, 1) {
            out.push(Check::new(format!("f_{} translation invariance", 1 << k), f.substitute(&t) == f));
        }
    }
    for m in 1..=mmax {
        let (h, hp) = h_classes(m).unwrap();
        for j in 1..=m {
            let c = cyclic_three(j);
            let ok = h.substitute(&c) == h && hp.substitute(&c) == hp;
            out.push(Check::new(format!("Z/3 invariance of h_{{3m}}, m={m}, part {j}"), ok));
            let mut x_moves = translations(2, j);
            x_moves.retain(|t| h.substitute(t) != h);
            out.push(Check::new(format!("translation invariance of h_{{3m}}, m={m}"), x_moves.is_empty()));
            let s = swap_on(j);
            let ok = h.substitute(&s) == hp && hp.substitute(&s) == h;
            out.push(Check::new(format!("odd swap exchanges h and h_perp, m={m}, part {j}"), ok));
        }
        for (a, b) in (1..=m).tuple_combinations() {
            let p = part_swap(a, b);
            let ok = h.relabel(&p) == h && hp.relabel(&p) == hp;
            out.push(Check::new(format!("part permutation invariance, m={m}"), ok));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dickson_invariants() {
        let (y1, y2) = (Poly::y(1, 1), Poly::y(1, 2));
        assert_eq!(dickson(1, 0).unwrap(), y1);
        assert_eq!(dickson(2, 1).unwrap(), y1.pow(2) + y1.mul(&y2) + y2.pow(2));
        assert_eq!(dickson(2, 0).unwrap(), y1.pow(2).mul(&y2) + y1.mul(&y2.pow(2)));
        assert!(dickson(2, 2).is_err());
        assert_eq!(dickson(3, 0).unwrap().degree(), Some(7));
    }

    #[test]
    fn f_classes() {
        assert_eq!(f_class(0), Poly::x(1));
        let x = Poly::x(1);
        let (y1, y2) = (Poly::y(1, 1), Poly::y(1, 2));
        let expected = Poly::product([&x, &x.add(&y1), &x.add(&y2), &x.add(&y1).add(&y2)]);
        assert_eq!(f_class(2), expected);
    }

    #[test]
    fn h_three() {
        let (h, hp) = h_classes(1).unwrap();
        assert_eq!(h.to_string(), "y[1,1]^3+y[1,1]^2*y[1,2]+y[1,2]^3");
        assert_eq!(h.add(&hp), dickson(2, 0).unwrap());
        assert_eq!(h_classes_on(&[]), (Poly::one(), Poly::zero()));
    }

    #[test]
    fn all_identities_hold() {
        for c in invariant_identities(3, 3) {
            assert!(c.ok, "{}: {:?}", c.name, c.detail);
        }
    }
}
