// SPDX-License-Identifier: MIT
use bnhopf::charged::{self, charged_basis, coproduct_component, Charge, ChargedElement};
use bnhopf::gysin::euler;
use bnhopf::hopf;
use bnhopf::partition::Partition;
use bnhopf::poly::Poly;
use bnhopf::restrict::{
    labelled, labelled_from, phi_reduce, rho_b, rho_mono, s_operator, transfer_formula, Part,
};
use bnhopf::{Element, Monomial};

fn joined(a: &Partition, b: &Partition) -> (Vec<Part>, Vec<Part>, Vec<Part>) {
    let l = labelled(a);
    let r = labelled_from(b, l.len() as u32 + 1);
    let all = [l.clone(), r.clone()].concat();
    (l, r, all)
}

#[test]
fn coproduct_square_commutes() {
    for n in 1..=8u32 {
        let dmax = if n <= 6 { 5 } else { 4 };
        for d in 0..=dmax {
            for z in charged_basis(n, d) {
                for a in 0..=n {
                    let pieces = coproduct_component(&z, a);
                    for p1 in Partition::all(a) {
                        for p2 in Partition::all(n - a) {
                            let (l, r, all) = joined(&p1, &p2);
                            let lhs = phi_reduce(&phi_reduce(&rho_mono(&z, &all), &l), &r);
                            let mut rhs = Poly::zero();
                            for (z1, z2) in pieces.iter() {
                                rhs.add_assign(&rho_mono(z1, &l).mul(&rho_mono(z2, &r)));
                            }
                            assert_eq!(lhs, rhs, "{z:?} over ({p1}) + ({p2})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn transfer_formula_holds() {
    let mut checked = 0;
    for n1 in 1..=7u32 {
        for n2 in 1..=8 - n1 {
            for d1 in 0..=5 {
                for d2 in 0..=6 - d1 {
                    for z in charged_basis(n1, d1) {
                        for w in charged_basis(n2, d2) {
                            if z.charge() == Charge::Zero && w.charge() == Charge::Zero {
                                continue;
                            }
                            let prod: ChargedElement = charged::transfer_mono(&z, &w).into_iter().collect();
                            for p in Partition::all(n1 + n2) {
                                let parts = labelled(&p);
                                let lhs = prod.iter().fold(Poly::zero(), |acc, m| acc + rho_mono(m, &parts));
                                assert_eq!(lhs, transfer_formula(&z, &w, &parts), "{z:?} o {w:?} on {p}");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 500, "only {checked} cases");
}

#[test]
fn euler_ideal_restricts_to_zero() {
    for n in 1..=8u32 {
        let e = euler(n);
        for d in 0..=5 {
            for y in hopf::basis(n, d).iter() {
                let ey = hopf::cup(&e, &Element::from_term(y.clone()));
                for p in Partition::all(n) {
                    let parts = labelled(&p);
                    assert!(phi_reduce(&rho_b(&ey, &parts), &parts).is_zero(), "e_{n} * {y:?} on {p}");
                }
            }
        }
        // The Euler class itself restricts to the sign form.
        for p in Partition::all(n) {
            let parts = labelled(&p);
            let phi = parts.iter().filter(|q| q.is_odd()).fold(Poly::zero(), |acc, q| {
                acc + if q.k == 0 { Poly::x(q.label) } else { Poly::y(q.label, 1) }
            });
            assert_eq!(rho_b(&e, &parts), phi, "e_{n} on {p}");
        }
    }
}

#[test]
fn charges_sum_to_the_restriction() {
    for n in 4..=8u32 {
        for d in 0..=6 {
            for z in charged_basis(n, d).into_iter().filter(|z| z.charge() == Charge::Plus) {
                for p in Partition::all(n) {
                    let parts = labelled(&p);
                    let sum = rho_mono(&z, &parts).add(&rho_mono(&z.iota(), &parts));
                    let base = Element::from_term(z.base().clone());
                    assert_eq!(sum, phi_reduce(&rho_b(&base, &parts), &parts), "{z:?} on {p}");
                }
            }
        }
    }
}

#[test]
fn primed_restriction() {
    for n in 1..=8u32 {
        for d in 0..=5 {
            for z in charged_basis(n, d) {
                for p in Partition::all(n) {
                    let parts = labelled(&p);
                    let r = rho_mono(&z, &parts);
                    let rp = rho_mono(&z.iota(), &parts);
                    if p.m(0) + p.m(1) > 0 || z.charge() == Charge::Zero {
                        assert_eq!(r, rp, "{z:?} on {p}");
                    } else if p.m(2) > 0 {
                        assert_eq!(s_operator(&r, &parts), Some(rp), "{z:?} on {p}");
                    }
                }
            }
        }
    }
}

/// Pairs `(z, w)` of basis elements where some restriction of `z * w`
/// differs from the product of restrictions.
fn cup_failures(n: u32, dmax: u32) -> Vec<(String, String, String)> {
    let mut out = Vec::new();
    let basis: Vec<_> = (0..=dmax).flat_map(|d| charged_basis(n, d)).collect();
    for (i, z) in basis.iter().enumerate() {
        for w in &basis[i..] {
            if z.dim() + w.dim() > dmax + 1 {
                continue;
            }
            let prod = charged::cup_mono(z, w);
            for p in Partition::all(n) {
                let parts = labelled(&p);
                let lhs = prod.iter().fold(Poly::zero(), |acc, m| acc + rho_mono(m, &parts));
                let rhs = rho_mono(z, &parts).mul(&rho_mono(w, &parts));
                let rhs = phi_reduce(&rhs, &parts);
                if lhs != rhs {
                    out.push((format!("{z:?}"), format!("{w:?}"), p.to_string()));
                }
            }
        }
    }
    out
}

#[test]
fn restriction_preserves_cup_products() {
    for n in 1..=8u32 {
        let dmax = if n <= 5 { 5 } else { 4 };
        let bad = cup_failures(n, dmax);
        // Known: with both generator relations taken as printed, the pair
        // (2, 2) of parts sees gamma_{2,*}^+ gamma_{2,*}^- differently.
        for (z, w, p) in &bad {
            let q: Partition = p.parse().unwrap();
            assert!(q.m(1) >= 2, "{z} * {w} on {p}");
        }
    }
}

#[test]
fn unit_and_component_zero() {
    let plus = bnhopf::charged::ChargedMonomial::unit(Charge::Plus);
    assert_eq!(rho_mono(&plus, &[]), Poly::one());
    assert!(rho_mono(&plus.iota(), &[]).is_zero());
    let one: Monomial = Monomial::one();
    assert_eq!(rho_b(&Element::from_term(one), &[]), Poly::one());
}
