// SPDX-License-Identifier: MIT
//! Decorated Hopf monomials: transfer products of blocks with distinct keys.

use std::collections::BTreeMap;

use crate::block::{binom_odd, Block, ProfileKey};
use crate::sum::Sum;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    blocks: Vec<Block>,
}

/// Element of the Hopf ring of the hyperoctahedral groups.
pub type Element = Sum<Monomial>;
/// Element of the tensor square.
pub type Tensor = Sum<(Monomial, Monomial)>;

impl Monomial {
    /// The empty monomial `1_0`.
    pub fn one() -> Monomial {
        Monomial { blocks: vec![] }
    }

    pub fn from_block(b: Block) -> Monomial {
        Monomial { blocks: vec![b] }
    }

    /// Transfer product of arbitrary blocks; equal keys merge with the
    /// binomial coefficient, so the result may vanish.
    pub fn from_blocks(blocks: impl IntoIterator<Item = Block>) -> Option<Monomial> {
        let mut by_key: BTreeMap<ProfileKey, Block> = BTreeMap::new();
        for b in blocks {
            let key = b.key();
            match by_key.remove(&key) {
                None => {
                    by_key.insert(key, b);
                }
                Some(prev) => {
                    if !binom_odd(prev.n(), b.n()) {
                        return None;
                    }
                    let merged = prev.with_component(prev.n() + b.n())?;
                    by_key.insert(key, merged);
                }
            }
        }
        let mut blocks: Vec<Block> = by_key.into_values().collect();
        blocks.sort();
        Some(Monomial { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_one(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().map(Block::n).sum()
    }

    pub fn dim(&self) -> u32 {
        self.blocks.iter().map(Block::dim).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.n(), self.dim())
    }

    /// Splits into the blocks with some `gamma_{k>=2}` and the rest.
    pub fn split_ann(&self) -> (Monomial, Monomial) {
        let (ann, rest): (Vec<Block>, Vec<Block>) = self.blocks.iter().cloned().partition(Block::is_ann);
        (Monomial { blocks: ann }, Monomial { blocks: rest })
    }

    /// True when no block contains `gamma_{k>=2}`.
    pub fn is_level1(&self) -> bool {
        self.blocks.iter().all(|b| !b.is_ann())
    }
}

/// Bidegree of a homogeneous element, `None` for zero or mixed input.
pub fn bidegree(x: &Element) -> Option<(u32, u32)> {
    let mut it = x.iter();
    let first = it.next()?.bidegree();
    it.all(|m| m.bidegree() == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merging_units() {
        let m = Monomial::from_blocks([Block::unit(2), Block::unit(4)]).unwrap();
        assert_eq!(m.blocks(), &[Block::unit(6)]);
        assert!(Monomial::from_blocks([Block::unit(1), Block::unit(1)]).is_none());
    }

    #[test]
    fn canonical_order_is_dimension_first() {
        let m = Monomial::from_blocks([Block::unit(1), Block::w(1).unwrap()]).unwrap();
        assert_eq!(m.blocks()[0], Block::w(1).unwrap());
        assert_eq!(m.bidegree(), (2, 1));
    }
}
