// SPDX-License-Identifier: MIT
//! Mod 2 cohomology of the hyperoctahedral groups `B_n` and of their
//! index-two subgroups `B_n^+`, as (almost) Hopf rings.

pub mod block;
pub mod charged;
pub mod error;
pub mod fncheck;
pub mod gf2;
pub mod gysin;
pub mod hopf;
pub mod invariants;
pub mod monomial;
pub mod partition;
pub mod poly;
pub mod restrict;
pub mod sum;
pub mod syntax;
pub mod uv;
pub mod verify;

mod memo;

pub use block::{Block, BlockKind};
pub use error::{Error, Result};
pub use monomial::{Element, Monomial, Tensor};
pub use sum::Sum;
