// SPDX-License-Identifier: MIT
//! Gathered blocks: cup products of generators sharing one component.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A block with its component forgotten: gamma exponents and decoration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileKey {
    pub gam: Vec<u32>,
    pub a0: u32,
}

/// `(w^[n])^a0 * prod_k gamma_{k, n/2^k}^{a_k}`.
///
/// `gam[k-1]` holds `a_k`; trailing zeros are trimmed so equal blocks
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    n: u32,
    a0: u32,
    gam: Vec<u32>,
}

/// Which of the three Gysin families a single block belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Contains some `gamma_{k,*}` with `k >= 2`.
    Ann,
    /// `gamma_{1,n/2}^l (w^[n])^k` with `l >= 1`.
    Level1 { l: u32, k: u32 },
    /// `(w^[n])^k`, including units.
    Decoration { k: u32 },
}

impl Block {
    pub fn new(n: u32, a0: u32, gam: Vec<u32>) -> Result<Block> {
        let mut gam = gam;
        while gam.last() == Some(&0) {
            gam.pop();
        }
        if n == 0 {
            return Err(Error::InvalidBlock("component must be positive".into()));
        }
        if let Some(k) = gam.len().checked_sub(1) {
            let k = k as u32 + 1;
            if k >= 32 || !n.is_multiple_of(1u32 << k) {
                return Err(Error::InvalidBlock(format!("2^{k} does not divide component {n}")));
            }
        }
        Ok(Block { n, a0, gam })
    }

    pub fn unit(n: u32) -> Block {
        Block::new(n, 0, vec![]).expect("unit block")
    }

    /// `gamma_{k,m}`.
    pub fn gamma(k: u32, m: u32) -> Result<Block> {
        if k == 0 || m == 0 {
            return Err(Error::InvalidBlock(format!("gamma({k},{m})")));
        }
        let mut gam = vec![0; k as usize];
        gam[k as usize - 1] = 1;
        Block::new(m << k, 0, gam)
    }

    /// `w^[r]`.
    pub fn w(r: u32) -> Result<Block> {
        Block::new(r, 1, vec![])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a0(&self) -> u32 {
        self.a0
    }

    pub fn gam(&self) -> &[u32] {
        &self.gam
    }

    /// Exponent `a_k` (`k >= 1`).
    pub fn exp(&self, k: u32) -> u32 {
        if k == 0 {
            return self.a0;
        }
        self.gam.get(k as usize - 1).copied().unwrap_or(0)
    }

    /// Largest `k` with `a_k > 0`, or 0.
    pub fn max_index(&self) -> u32 {
        self.gam.len() as u32
    }

    pub fn is_unit(&self) -> bool {
        self.a0 == 0 && self.gam.is_empty()
    }

    pub fn dim(&self) -> u32 {
        let mut d = self.a0 * self.n;
        for (i, &a) in self.gam.iter().enumerate() {
            let k = i as u32 + 1;
            d += a * (self.n - (self.n >> k));
        }
        d
    }

    pub fn key(&self) -> ProfileKey {
        ProfileKey { gam: self.gam.clone(), a0: self.a0 }
    }

    pub fn same_key(&self, other: &Block) -> bool {
        self.a0 == other.a0 && self.gam == other.gam
    }

    /// The same exponents on another component, if that is allowed.
    pub fn with_component(&self, n: u32) -> Option<Block> {
        if n == 0 || !n.is_multiple_of(1u32 << self.max_index()) {
            return None;
        }
        Some(Block { n, a0: self.a0, gam: self.gam.clone() })
    }

    /// Cup product of two blocks with the same component.
    ///
    /// # Panics
    /// Panics if the components differ.
    #[must_use]
    pub fn cup(&self, other: &Block) -> Block {
        assert_eq!(self.n, other.n, "cup of blocks with different components");
        let len = self.gam.len().max(other.gam.len());
        let gam = (0..len).map(|i| self.gam.get(i).unwrap_or(&0) + other.gam.get(i).unwrap_or(&0)).collect();
        Block { n: self.n, a0: self.a0 + other.a0, gam }
    }

    /// Adds `e` to the exponent `a_k` (`k >= 1`).
    pub fn bump(&self, k: u32, e: u32) -> Result<Block> {
        let mut gam = self.gam.clone();
        if gam.len() < k as usize {
            gam.resize(k as usize, 0);
        }
        gam[k as usize - 1] += e;
        Block::new(self.n, self.a0, gam)
    }

    /// The `w`/`gamma_1` part of the block, on the same component.
    pub fn level1_part(&self) -> Block {
        let gam = self.gam.iter().take(1).copied().collect();
        Block::new(self.n, self.a0, gam).expect("level one part")
    }

    pub fn kind(&self) -> BlockKind {
        if self.gam.len() >= 2 {
            BlockKind::Ann
        } else if let Some(&l) = self.gam.first() {
            BlockKind::Level1 { l, k: self.a0 }
        } else {
            BlockKind::Decoration { k: self.a0 }
        }
    }

    pub fn is_ann(&self) -> bool {
        self.gam.len() >= 2
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dim()
            .cmp(&self.dim())
            .then(other.n.cmp(&self.n))
            .then_with(|| self.gam.cmp(&other.gam))
            .then(self.a0.cmp(&other.a0))
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `C(a+b, a)` mod 2.
pub fn binom_odd(a: u32, b: u32) -> bool {
    a & b == 0
}

/// `C(n, k)` mod 2 for `k <= n`.
pub fn choose_odd(n: u32, k: u32) -> bool {
    k <= n && binom_odd(k, n - k)
}
