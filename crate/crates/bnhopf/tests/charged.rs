// SPDX-License-Identifier: MIT

use bnhopf::charged::{
    charged_basis, coproduct, coproduct_mono, cup, cup_mono, expand_charged_block, iota, iota_tensor, res,
    tr, transfer, Charge, ChargedElement, ChargedMonomial, ChargedTensor,
};
use bnhopf::hopf::{self, basis};
use bnhopf::{Element, Sum};

fn el(z: &ChargedMonomial) -> ChargedElement {
    ChargedElement::from_term(z.clone())
}

fn cells(nmax: u32, dmax: u32) -> Vec<ChargedMonomial> {
    (0..=nmax).flat_map(|n| (0..=dmax).flat_map(move |d| charged_basis(n, d))).collect()
}

fn res_tensor(t: &bnhopf::Tensor) -> ChargedTensor {
    let mut out = ChargedTensor::zero();
    for (a, b) in t {
        let ra = res(&Element::from_term(a.clone())).unwrap();
        let rb = res(&Element::from_term(b.clone())).unwrap();
        for x in &ra {
            for y in &rb {
                out.toggle((x.clone(), y.clone()));
            }
        }
    }
    out
}

fn tensor_cup(s: &ChargedTensor, t: &ChargedTensor) -> ChargedTensor {
    let mut out = ChargedTensor::zero();
    for (a, b) in s {
        for (c, d) in t {
            if a.n() != c.n() || b.n() != d.n() {
                continue;
            }
            for x in &cup_mono(a, c) {
                for y in &cup_mono(b, d) {
                    out.toggle((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

#[test]
fn res_is_multiplicative() {
    for n in 1..=8 {
        for d1 in 0..=4 {
            for d2 in d1..=4 {
                for x in basis(n, d1).iter() {
                    for y in basis(n, d2).iter() {
                        let xy = hopf::cup_mono(x, y);
                        let lhs = res(&xy).unwrap();
                        let rx = res(&Element::from_term(x.clone())).unwrap();
                        let ry = res(&Element::from_term(y.clone())).unwrap();
                        assert_eq!(lhs, cup(&rx, &ry), "{x:?} * {y:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn res_commutes_with_coproduct() {
    for n in 1..=8 {
        for d in 0..=6 {
            for x in basis(n, d).iter() {
                let lhs = coproduct(&res(&Element::from_term(x.clone())).unwrap());
                let rhs = res_tensor(&hopf::coproduct_mono(x));
                assert_eq!(lhs, rhs, "{x:?}");
            }
        }
    }
}

/// Level-one charge-zero factors live on components divisible by 4; outside
/// this range the generator rule for `gamma_{2,m}^+ * x^0` is not associative.
fn divisible(z: &ChargedMonomial) -> bool {
    z.charge() != Charge::Zero || z.base().split_ann().1.blocks().iter().all(|b| b.n() % 4 == 0)
}

#[test]
fn cup_is_commutative_and_associative() {
    for n in [4, 8] {
        let b: Vec<_> = (0..=6).flat_map(|d| charged_basis(n, d)).collect();
        for x in &b {
            for y in &b {
                assert_eq!(cup_mono(x, y), cup_mono(y, x), "{x:?} {y:?}");
                assert_eq!(iota(&cup_mono(x, y)), cup_mono(&x.iota(), &y.iota()));
            }
        }
        let small: Vec<_> = b.iter().filter(|z| z.dim() <= 4 && divisible(z)).collect();
        for x in &small {
            for y in &small {
                for z in &small {
                    let l = cup(&cup_mono(x, y), &el(z));
                    let r = cup(&el(x), &cup_mono(y, z));
                    assert_eq!(l, r, "{x:?} {y:?} {z:?}");
                }
            }
        }
    }
}

#[test]
fn cup_and_coproduct_form_a_bialgebra() {
    for n in [4, 8] {
        let b: Vec<_> = (0..=5).flat_map(|d| charged_basis(n, d)).collect();
        for x in &b {
            for y in &b {
                let lhs = coproduct(&cup_mono(x, y));
                let rhs = tensor_cup(&coproduct_mono(x), &coproduct_mono(y));
                assert_eq!(lhs, rhs, "{x:?} {y:?}");
            }
        }
    }
}

#[test]
fn coproduct_is_coassociative_and_equivariant() {
    for z in cells(12, 6) {
        let dz = coproduct_mono(&z);
        let mut left: Sum<(ChargedMonomial, ChargedMonomial, ChargedMonomial)> = Sum::zero();
        let mut right = Sum::zero();
        for (a, b) in &dz {
            for (c, e) in &coproduct_mono(a) {
                left.toggle((c.clone(), e.clone(), b.clone()));
            }
            for (c, e) in &coproduct_mono(b) {
                right.toggle((a.clone(), c.clone(), e.clone()));
            }
        }
        assert_eq!(left, right, "{z:?}");
        assert_eq!(iota_tensor(&dz, true, false), coproduct_mono(&z.iota()), "{z:?}");
        let twisted: ChargedTensor = dz.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        assert_eq!(twisted, dz, "cocommutative {z:?}");
    }
}

#[test]
fn transfer_identities() {
    let all = cells(8, 5);
    for x in &all {
        let t = tr(&el(x));
        let back = res(&t).unwrap();
        let mut expect = el(x);
        expect.add_sum(&el(&x.iota()));
        if x.charge() == Charge::Zero {
            expect = ChargedElement::zero();
        }
        assert_eq!(back, expect, "res tr {x:?}");
        for y in all.iter().filter(|y| y.n() == x.n() && y.dim() + x.dim() <= 8) {
            let lhs = hopf::cup(&tr(&el(x)), &tr(&el(y)));
            let mut inner = cup_mono(x, y);
            inner.add_sum(&cup_mono(&x.iota(), y));
            assert_eq!(lhs, tr(&inner), "tr {x:?} {y:?}");
        }
    }
}

#[test]
fn frobenius_and_transfer_product() {
    for n in 1..=8 {
        for d in 0..=4 {
            for x in basis(n, d).iter() {
                let rx = res(&Element::from_term(x.clone())).unwrap();
                for z in (0..=4).flat_map(|e| charged_basis(n, e)) {
                    let lhs = tr(&cup(&el(&z), &rx));
                    let rhs = hopf::cup(&tr(&el(&z)), &Element::from_term(x.clone()));
                    assert_eq!(lhs, rhs, "{z:?} {x:?}");
                }
            }
        }
    }
    let small = cells(6, 4);
    for x in &small {
        for y in &small {
            let lhs = tr(&transfer(&el(x), &el(y)));
            let rhs = hopf::transfer(&tr(&el(x)), &tr(&el(y)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn expansion_agrees_on_all_blocks() {
    for n in [4u32, 8, 12, 16] {
        for d in 0..=16 {
            for z in charged_basis(n, d) {
                if z.charge() != Charge::Plus || z.base().blocks().len() != 1 {
                    continue;
                }
                let b = &z.base().blocks()[0];
                assert_eq!(expand_charged_block(b, Charge::Plus).unwrap(), el(&z), "{b:?}");
                assert_eq!(expand_charged_block(b, Charge::Minus).unwrap(), el(&z.iota()));
            }
        }
    }
}
