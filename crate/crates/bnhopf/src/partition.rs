// SPDX-License-Identifier: MIT
//! Partitions of `n` into powers of two.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Multiplicities `m_k` of the parts `2^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    mult: Vec<u32>,
}

impl Partition {
    pub fn new(mut mult: Vec<u32>) -> Partition {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        Partition { mult }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// From a list of part sizes, each a power of two.
    pub fn from_parts(parts: &[u32]) -> Result<Partition> {
        let mut mult = Vec::new();
        for &p in parts {
            if p == 0 || !p.is_power_of_two() {
                return Err(Error::InvalidPartition(format!("part {p} is not a power of 2")));
            }
            let k = p.trailing_zeros() as usize;
            if mult.len() <= k {
                mult.resize(k + 1, 0);
            }
            mult[k] += 1;
        }
        Ok(Partition::new(mult))
    }

    /// `m_k`, the number of parts equal to `2^k`.
    pub fn m(&self, k: u32) -> u32 {
        self.mult.get(k as usize).copied().unwrap_or(0)
    }

    pub fn n(&self) -> u32 {
        self.mult.iter().enumerate().map(|(k, &m)| m << k).sum()
    }

    /// Part sizes in increasing order; variables are numbered along this list.
    pub fn parts(&self) -> Vec<u32> {
        self.mult.iter().enumerate().flat_map(|(k, &m)| std::iter::repeat_n(1u32 << k, m as usize)).collect()
    }

    pub fn len(&self) -> usize {
        self.mult.iter().sum::<u32>() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// No parts of size 1 or 2: the subgroup lies entirely in the index-two subgroup.
    pub fn is_even_type(&self) -> bool {
        self.m(0) == 0 && self.m(1) == 0
    }

    /// Irrelevant means `m_0 = 2` and `m_1 = 0`: there the subgroup for the
    /// two parts of size 1 coincides with the one for a single part of size 2.
    /// Annotation only; detection runs over every partition.
    pub fn is_relevant(&self) -> bool {
        !(self.m(0) == 2 && self.m(1) == 0)
    }

    /// All partitions of `n` into powers of two.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, k: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if k == 0 {
                let mut m = acc.clone();
                m.push(n);
                m.reverse();
                out.push(Partition::new(m));
                return;
            }
            let size = 1 << k;
            for c in 0..=n / size {
                acc.push(c);
                go(n - c * size, k - 1, acc, out);
                acc.pop();
            }
        }
        let top = if n == 0 { 0 } else { 31 - n.leading_zeros() };
        let mut out = Vec::new();
        go(n, top, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let s = self
            .mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| if m == 1 { format!("{}", 1 << k) } else { format!("{}^{m}", 1 << k) })
            .join(" ");
        write!(f, "{s}")
    }
}

/// Accepts `"1^2 4"`, `"2 2"`, `"4^3"`; `"()"` or blank is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',' || c == '+').filter(|t| !t.is_empty()) {
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => (b, m),
                None => (tok, "1"),
            };
            let bad = || Error::InvalidPartition(format!("bad token {tok:?}"));
            let b: u32 = base.parse().map_err(|_| bad())?;
            let m: usize = mult.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(b, m));
        }
        Partition::from_parts(&parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: Partition = "1^2 4".parse().unwrap();
        assert_eq!(p.parts(), vec![1, 1, 4]);
        assert_eq!(p.to_string(), "1^2 4");
        assert_eq!(p.n(), 6);
        assert!("3".parse::<Partition>().is_err());
        assert!("2^x".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Partition::all(4).len(), 4);
        assert_eq!(Partition::all(8).len(), 10);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        for n in 0..=12 {
            assert!(Partition::all(n).iter().all(|p| p.n() == n));
        }
    }
}
