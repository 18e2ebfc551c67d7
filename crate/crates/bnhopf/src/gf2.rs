// SPDX-License-Identifier: MIT
//! Dense bit-packed linear algebra over the two-element field.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> BitRow {
        let mut r = BitRow::zeros(len);
        for i in idx {
            r.flip(i);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        if self.get(i) != v {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &BitRow) -> BitRow {
        let mut r = BitRow::zeros(self.len + other.len);
        for i in self.ones() {
            r.flip(i);
        }
        for i in other.ones() {
            r.flip(self.len + i);
        }
        r
    }

    /// Bits `[from, to)` as a new row.
    pub fn slice(&self, from: usize, to: usize) -> BitRow {
        BitRow::from_indices(to - from, self.ones().filter(|&i| i >= from && i < to).map(|i| i - from))
    }
}

/// Reduced echelon form of a set of rows, with pivots chosen by a column
/// priority order.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<BitRow>,
    pivots: Vec<usize>,
    order: Vec<usize>,
}

impl Echelon {
    /// Pivots are searched in natural column order.
    pub fn new(rows: impl IntoIterator<Item = BitRow>, ncols: usize) -> Echelon {
        Echelon::with_order(rows, (0..ncols).collect())
    }

    /// Pivots are searched in the given column order: each row's pivot is its
    /// first nonzero column in `order`.
    pub fn with_order(rows: impl IntoIterator<Item = BitRow>, order: Vec<usize>) -> Echelon {
        let mut e = Echelon { rows: Vec::new(), pivots: Vec::new(), order };
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Adds a row; returns false if it was already in the span.
    pub fn insert(&mut self, mut row: BitRow) -> bool {
        self.reduce(&mut row);
        let Some(p) = self.order.iter().copied().find(|&c| row.get(c)) else {
            return false;
        };
        for r in &mut self.rows {
            if r.get(p) {
                r.xor_assign(&row);
            }
        }
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    /// Clears all pivot columns of `row` using the stored rows.
    pub fn reduce(&self, row: &mut BitRow) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row.get(p) {
                row.xor_assign(r);
            }
        }
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        let mut r = row.clone();
        self.reduce(&mut r);
        r.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }
}

pub fn rank(rows: &[BitRow], ncols: usize) -> usize {
    Echelon::new(rows.iter().cloned(), ncols).rank()
}

/// Kernel of the linear map sending basis vector `j` to `images[j]`.
pub fn kernel(images: &[BitRow], target_dim: usize) -> Vec<BitRow> {
    let n = images.len();
    let aug: Vec<BitRow> =
        images.iter().enumerate().map(|(j, v)| v.concat(&BitRow::from_indices(n, [j]))).collect();
    let e = Echelon::new(aug, target_dim + n);
    e.rows()
        .iter()
        .zip(e.pivots())
        .filter(|(_, &p)| p >= target_dim)
        .map(|(r, _)| r.slice(target_dim, target_dim + n))
        .collect()
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[BitRow], b: &[BitRow], ncols: usize) -> bool {
    let ra = rank(a, ncols);
    ra == rank(b, ncols) && ra == rank(&[a, b].concat(), ncols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let rows = vec![
            BitRow::from_indices(3, [0, 1]),
            BitRow::from_indices(3, [1, 2]),
            BitRow::from_indices(3, [0, 2]),
        ];
        assert_eq!(rank(&rows, 3), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k, vec![BitRow::from_indices(3, [0, 1, 2])]);
    }

    #[test]
    fn pivot_order_is_respected() {
        let e = Echelon::with_order([BitRow::from_indices(4, [0, 3])], vec![3, 2, 1, 0]);
        assert_eq!(e.pivots(), &[3]);
        let mut r = BitRow::from_indices(4, [3]);
        e.reduce(&mut r);
        assert_eq!(r, BitRow::from_indices(4, [0]));
    }

    #[test]
    fn wide_rows() {
        let mut r = BitRow::zeros(200);
        r.flip(130);
        r.flip(5);
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![5, 130]);
        assert_eq!(r.slice(100, 200).ones().collect::<Vec<_>>(), vec![30]);
    }
}
