// SPDX-License-Identifier: MIT

use bnhopf::gysin::{
    ann_basis, classify, eliminator, oracle, quot_basis, reduce_mod_euler, reduce_mod_euler_full, GysinClass,
};
use bnhopf::hopf::basis;
use bnhopf::{Block, Element, Monomial};

#[test]
fn oracle_up_to_8() {
    for n in 0..=8 {
        for d in 0..=8 {
            let r = oracle(n, d);
            assert!(r.ok(), "{r:?}");
        }
    }
}

#[test]
fn fast_reduction_matches_elimination() {
    for n in 0..=8 {
        for d in 0..=8 {
            assert!(eliminator(n, d, false).pivots_are_neither(), "({n},{d})");
            for m in basis(n, d).iter() {
                let x = Element::from_term(m.clone());
                let fast = reduce_mod_euler(&x).unwrap();
                assert_eq!(fast, reduce_mod_euler_full(&x).unwrap(), "{m:?}");
                assert!(fast.iter().all(|t| classify(t) != GysinClass::Neither));
                assert_eq!(reduce_mod_euler(&fast).unwrap(), fast);
            }
        }
    }
}

#[test]
fn annihilators_need_component_divisible_by_4() {
    for n in (1..=12).filter(|n| n % 4 != 0) {
        for d in 0..=6 {
            assert!(ann_basis(n, d).is_empty());
        }
    }
}

#[test]
fn mixed_level_one_example() {
    // gamma_{2,1} o (gamma_{1,1} w^[2]) o gamma_{1,2}^2: the lexicographically
    // largest level-one block is (k, l) = (1, 1), so it survives in the quotient.
    let x = Monomial::from_blocks([
        Block::gamma(2, 1).unwrap(),
        Block::new(2, 1, vec![1]).unwrap(),
        Block::new(4, 0, vec![2]).unwrap(),
    ])
    .unwrap();
    assert_eq!(x.bidegree(), (10, 10));
    assert_eq!(classify(&x), GysinClass::QuotOnly);
    let (_, rest) = x.split_ann();
    let q = quot_basis(rest.n(), rest.dim());
    assert!(q.contains(&rest));
    let r = oracle(rest.n(), rest.dim());
    assert!(r.ok(), "{r:?}");
}
