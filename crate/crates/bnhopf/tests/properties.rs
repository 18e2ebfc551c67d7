// SPDX-License-Identifier: MIT
use bnhopf::block::Block;
use bnhopf::charged::{self, charged_basis, iota, Charge, ChargedElement, ChargedMonomial};
use bnhopf::fncheck::{Sign, SignedPermutation, SignedTuple};
use bnhopf::gysin::{classify, euler, reduce_mod_euler, reduce_mod_euler_full, GysinClass};
use bnhopf::hopf::{self, basis};
use bnhopf::partition::Partition;
use bnhopf::syntax::{eval_str, fmt_charged_element, fmt_element, Value};
use bnhopf::{Element, Monomial};
use proptest::prelude::*;
use proptest::sample::Index;

fn pick_b(n: u32, d: u32, i: &Index) -> Option<Monomial> {
    let b = basis(n, d);
    (!b.is_empty()).then(|| b[i.index(b.len())].clone())
}

fn pick_c(n: u32, d: u32, i: &Index) -> Option<ChargedMonomial> {
    let b = charged_basis(n, d);
    (!b.is_empty()).then(|| b[i.index(b.len())].clone())
}

fn b_elem() -> impl Strategy<Value = (u32, u32, Vec<Index>)> {
    (1u32..=8, 0u32..=6, prop::collection::vec(any::<Index>(), 1..4))
}

fn element(n: u32, d: u32, idx: &[Index]) -> Element {
    idx.iter().filter_map(|i| pick_b(n, d, i)).fold(Element::zero(), |mut acc, m| {
        acc.toggle(m);
        acc
    })
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        .prop_map(|(p, s)| {
            let imgs = p.into_iter().zip(s).map(|(v, neg)| if neg { -v } else { v }).collect();
            SignedPermutation::new(imgs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn block_bidegree(n in 1u32..=32, a0 in 0u32..4, exps in prop::collection::vec(0u32..4, 0..5)) {
        match Block::new(n, a0, exps.clone()) {
            Ok(b) => {
                let mut dim = a0 * n;
                for (i, &a) in exps.iter().enumerate() {
                    let k = i as u32 + 1;
                    prop_assert!(a == 0 || n % (1 << k) == 0);
                    if a > 0 {
                        dim += a * (n - (n >> k));
                    }
                }
                prop_assert_eq!(b.dim(), dim);
                prop_assert_eq!(b.n(), n);
            }
            Err(_) => {
                let bad = exps.iter().enumerate().any(|(i, &a)| a > 0 && n % (1 << (i + 1)) != 0);
                prop_assert!(bad);
            }
        }
    }

    #[test]
    fn monomials_are_canonical((n, d, idx) in b_elem()) {
        if let Some(m) = pick_b(n, d, &idx[0]) {
            let keys: Vec<_> = m.blocks().iter().map(|b| b.key()).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), keys.len());
            prop_assert!(m.blocks().windows(2).all(|w| w[0] <= w[1]));
            prop_assert_eq!(m.bidegree(), (n, d));
            let rebuilt = Monomial::from_blocks(m.blocks().iter().rev().cloned());
            prop_assert_eq!(rebuilt, Some(m));
        }
    }

    #[test]
    fn addition_is_set_symmetric_difference((n, d, idx) in b_elem()) {
        let x = element(n, d, &idx);
        let mut y = x.clone();
        y.add_sum(&x);
        prop_assert!(y.is_zero());
    }

    #[test]
    fn charges_follow_the_classifier(n in 0u32..=8, d in 0u32..=6, i in any::<Index>()) {
        if let Some(z) = pick_c(n, d, &i) {
            if z.n() > 0 {
                let class = classify(z.base());
                match z.charge() {
                    Charge::Zero => prop_assert_eq!(class, GysinClass::QuotOnly),
                    _ => prop_assert_eq!(class, GysinClass::Ann),
                }
            }
            prop_assert_eq!(z.bidegree(), z.base().bidegree());
        }
    }

    #[test]
    fn involution_is_an_algebra_map(n in 1u32..=8, d1 in 0u32..=4, d2 in 0u32..=4,
                                    i in any::<Index>(), j in any::<Index>()) {
        if let (Some(z), Some(w)) = (pick_c(n, d1, &i), pick_c(n, d2, &j)) {
            prop_assert_eq!(z.iota().iota(), z.clone());
            prop_assert_eq!(iota(&charged::cup_mono(&z, &w)), charged::cup_mono(&z.iota(), &w.iota()));
            let t: ChargedElement = charged::transfer_mono(&z, &w).into_iter().collect();
            let ti = charged::transfer(&ChargedElement::from_term(z.iota()), &ChargedElement::from_term(w.clone()));
            prop_assert_eq!(iota(&t), ti);
        }
    }

    #[test]
    fn euler_reduction_is_idempotent((n, d, idx) in b_elem()) {
        let x = element(n, d, &idx);
        let r = reduce_mod_euler(&x).unwrap();
        prop_assert_eq!(reduce_mod_euler(&r).unwrap(), r.clone());
        prop_assert_eq!(reduce_mod_euler_full(&x).unwrap(), r.clone());
        if d >= 1 {
            if let Some(y) = pick_b(n, d - 1, &idx[0]) {
                let ey = hopf::cup(&euler(n), &Element::from_term(y));
                prop_assert!(reduce_mod_euler(&ey).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn printing_round_trips((n, d, idx) in b_elem()) {
        let x = element(n, d, &idx);
        let text = fmt_element(&x);
        let back = eval_str(&text).unwrap();
        let expect = if x.is_zero() { Value::Zero } else { Value::B(x) };
        prop_assert_eq!(back, expect, "{}", text);
    }

    #[test]
    fn charged_printing_round_trips(n in 0u32..=8, d in 0u32..=6, i in any::<Index>(), j in any::<Index>()) {
        let z: ChargedElement = [pick_c(n, d, &i), pick_c(n, d, &j)].into_iter().flatten().collect();
        let text = fmt_charged_element(&z);
        let back = eval_str(&text).unwrap();
        let expect = if z.is_zero() { Value::Zero } else { Value::Plus(z) };
        prop_assert_eq!(back, expect, "{}", text);
    }

    #[test]
    fn signed_permutation_sign_is_multiplicative(p in signed_perm(5), q in signed_perm(5)) {
        for i in 1..=5 {
            prop_assert_eq!(p.apply(-i), -p.apply(i));
        }
        prop_assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
    }

    #[test]
    fn tuple_degree_is_entry_sum(entries in prop::collection::vec(0u32..5, 0..8), minus in any::<bool>()) {
        let t = SignedTuple::new(entries.clone(), Sign::from_parity(minus));
        prop_assert_eq!(t.degree(), entries.iter().sum::<u32>());
        prop_assert_eq!(t.iota().iota(), t);
    }

    #[test]
    fn admissible_partitions(n in 1u32..=16) {
        for p in Partition::all(n) {
            prop_assert!(p.parts().iter().all(|x| x.is_power_of_two()));
            prop_assert_eq!(p.parts().iter().sum::<u32>(), n);
        }
    }
}
