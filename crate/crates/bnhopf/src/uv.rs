// SPDX-License-Identifier: MIT
//! Polynomials in `u = gamma^+_{2,m}` and `v = gamma^-_{2,m}`.
//!
//! They satisfy `uv = u^2 + v^2 + c` for odd `m` and `uv = c` for even `m`,
//! where `c` is a charge-zero class. A homogeneous polynomial of degree `D`
//! is rewritten as `alpha E_D(u,v) + beta E_D(v,u) + c G` with
//! `E_D(u,v) = sum_{k <= D/2} C(D,k) v^k u^(D-k)`, the polynomial that
//! defines the charged block `(gamma_{2,m}^D)^+`.

use crate::block::choose_odd;
use crate::sum::Sum;

/// Terms are `(i, j)` for `u^i v^j`.
pub type UvPoly = Sum<(u32, u32)>;

/// `E_d(u, v)`, or `E_d(v, u)` when `swap` is set.
pub fn e_poly(d: u32, swap: bool) -> UvPoly {
    (0..=d / 2).filter(|&k| choose_odd(d, k)).map(|k| if swap { (k, d - k) } else { (d - k, k) }).collect()
}

pub fn mul(p: &UvPoly, q: &UvPoly) -> UvPoly {
    p.bilinear(q, |&(a, b), &(c, d)| UvPoly::from_term((a + c, b + d)))
}

/// `alpha E_D(u,v) + beta E_D(v,u) + c * rest`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub alpha: bool,
    pub beta: bool,
    pub rest: UvPoly,
}

/// Coordinates of `s_i = u^i v^(D-i)`: `(coefficient of s_0, of s_1, c-part)`.
type Coord = (bool, bool, UvPoly);

fn add(a: &Coord, b: &Coord) -> Coord {
    (a.0 ^ b.0, a.1 ^ b.1, a.2.clone() + b.2.clone())
}

/// Reduces a homogeneous polynomial of degree `d >= 1`.
///
/// # Panics
/// Panics on inhomogeneous input or `d = 0`.
pub fn reduce(f: &UvPoly, d: u32, m_odd: bool) -> Reduced {
    assert!(d >= 1, "degree must be positive");
    assert!(f.iter().all(|&(i, j)| i + j == d), "inhomogeneous polynomial");
    if m_odd {
        reduce_odd(f, d)
    } else {
        reduce_even(f, d)
    }
}

fn reduce_even(f: &UvPoly, d: u32) -> Reduced {
    let mut out = Reduced { alpha: false, beta: false, rest: UvPoly::zero() };
    let mixed = |i: u32, j: u32| (i - 1, j - 1);
    for &(i, j) in f {
        if i > 0 && j > 0 {
            out.rest.toggle(mixed(i, j));
            continue;
        }
        // A pure power is E_d minus its mixed terms.
        if j == 0 {
            out.alpha ^= true;
        } else {
            out.beta ^= true;
        }
        for k in (1..=d / 2).filter(|&k| choose_odd(d, k)) {
            let (a, b) = if j == 0 { (d - k, k) } else { (k, d - k) };
            out.rest.toggle(mixed(a, b));
        }
    }
    out
}

fn reduce_odd(f: &UvPoly, d: u32) -> Reduced {
    let n = d as usize;
    let mut s: Vec<Coord> = Vec::with_capacity(n + 1);
    s.push((true, false, UvPoly::zero()));
    if n >= 1 {
        s.push((false, true, UvPoly::zero()));
    }
    for i in 1..n {
        // s_{i+1} = s_i + s_{i-1} + c u^{i-1} v^{d-1-i}
        let mut next = add(&s[i], &s[i - 1]);
        next.2.toggle((i as u32 - 1, d - 1 - i as u32));
        s.push(next);
    }
    let combine = |idx: &mut dyn Iterator<Item = usize>| {
        idx.fold((false, false, UvPoly::zero()), |acc, i| add(&acc, &s[i]))
    };
    let target = combine(&mut f.iter().map(|&(i, _)| i as usize));
    let ks: Vec<u32> = (0..=d / 2).filter(|&k| choose_odd(d, k)).collect();
    let e_uv = combine(&mut ks.iter().map(|&k| (d - k) as usize));
    let e_vu = combine(&mut ks.iter().map(|&k| k as usize));
    let det = (e_uv.0 & e_vu.1) ^ (e_vu.0 & e_uv.1);
    assert!(det, "E_{d}(u,v) and E_{d}(v,u) are dependent modulo c");
    // Cramer's rule over the two-element field.
    let alpha = (target.0 & e_vu.1) ^ (e_vu.0 & target.1);
    let beta = (e_uv.0 & target.1) ^ (target.0 & e_uv.1);
    let mut rest = target.2;
    if alpha {
        rest.add_sum(&e_uv.2);
    }
    if beta {
        rest.add_sum(&e_vu.2);
    }
    Reduced { alpha, beta, rest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, u32)]) -> UvPoly {
        terms.iter().copied().collect()
    }

    /// Expands `alpha E + beta E' + c G` back, substituting `c` by the
    /// relation, and compares with `f` in the polynomial ring where `c` is
    /// the formal symbol `uv + (u^2 + v^2 if odd)`.
    fn expand(r: &Reduced, d: u32, m_odd: bool) -> UvPoly {
        let c = if m_odd { poly(&[(1, 1), (2, 0), (0, 2)]) } else { poly(&[(1, 1)]) };
        let mut out = mul(&c, &r.rest);
        if r.alpha {
            out.add_sum(&e_poly(d, false));
        }
        if r.beta {
            out.add_sum(&e_poly(d, true));
        }
        out
    }

    #[test]
    fn relation_six() {
        let r = reduce(&poly(&[(1, 1)]), 2, true);
        assert_eq!(r, Reduced { alpha: true, beta: true, rest: poly(&[(0, 0)]) });
        let r = reduce(&poly(&[(1, 1)]), 2, false);
        assert_eq!(r, Reduced { alpha: false, beta: false, rest: poly(&[(0, 0)]) });
    }

    #[test]
    fn e_polys() {
        assert_eq!(e_poly(2, false), poly(&[(2, 0)]));
        assert_eq!(e_poly(3, false), poly(&[(3, 0), (2, 1)]));
        assert_eq!(e_poly(3, true), poly(&[(0, 3), (1, 2)]));
        assert_eq!(e_poly(1, false), poly(&[(1, 0)]));
    }

    #[test]
    fn reductions_round_trip() {
        for d in 1..=24 {
            for m_odd in [false, true] {
                for i in 0..=d {
                    let f = poly(&[(i, d - i)]);
                    let r = reduce(&f, d, m_odd);
                    assert_eq!(expand(&r, d, m_odd), f, "d={d} i={i} odd={m_odd}");
                    assert!(r.rest.iter().all(|&(a, b)| a + b + 2 == d));
                }
            }
        }
    }
}
