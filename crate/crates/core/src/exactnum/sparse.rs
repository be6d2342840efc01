//! Column-compressed rational matrices for maps between tensor powers.
//!
//! Tensor powers grow quickly (six factors of a six dimensional space already
//! have 46656 basis vectors) while the maps between them are signed permutations
//! or averages of few terms, so they are stored by column.

use super::matrix::{EntryDiff, RatMatrix};
use super::rat::Rat;
use crate::error::{Error, Result};
use crate::exec;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    /// For each column, `(row, value)` pairs sorted by row with nonzero values.
    colv: Vec<Vec<(usize, Rat)>>,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, colv: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: n, colv: (0..n).map(|k| vec![(k, Rat::one())]).collect() }
    }

    /// Build from column lists; entries are sorted and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Rat)>>) -> Self {
        let cols = columns.len();
        let colv = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|(_, v)| !v.is_zero());
                c.sort_by_key(|(r, _)| *r);
                debug_assert!(c.windows(2).all(|w| w[0].0 < w[1].0), "duplicate row entries");
                c
            })
            .collect();
        SparseMat { rows, cols, colv }
    }

    pub fn from_dense(m: &RatMatrix) -> Self {
        let colv = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMat { rows: m.rows(), cols: m.cols(), colv }
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.colv.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, Rat)] {
        &self.colv[c]
    }

    pub fn nnz(&self) -> usize {
        self.colv.iter().map(Vec::len).sum()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        SparseMat {
            rows: self.rows,
            cols: self.cols,
            colv: self
                .colv
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("sparse add".into()));
        }
        let colv = self
            .colv
            .iter()
            .zip(&other.colv)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                        out.push(a[i].clone());
                        i += 1;
                    } else if i == a.len() || b[j].0 < a[i].0 {
                        out.push(b[j].clone());
                        j += 1;
                    } else {
                        let s = &a[i].1 + &b[j].1;
                        if !s.is_zero() {
                            out.push((a[i].0, s));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        Ok(SparseMat { rows: self.rows, cols: self.cols, colv })
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "sparse mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let colv = exec::map_range(other.cols, |j| {
            let mut acc: std::collections::BTreeMap<usize, Rat> = Default::default();
            for (t, b) in &other.colv[j] {
                for (r, a) in &self.colv[*t] {
                    *acc.entry(*r).or_insert_with(Rat::zero) += a * b;
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        });
        Ok(SparseMat { rows: self.rows, cols: other.cols, colv })
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut colv = Vec::with_capacity(self.cols * other.cols);
        for ca in &self.colv {
            for cb in &other.colv {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ra, va) in ca {
                    for (rb, vb) in cb {
                        col.push((ra * other.rows + rb, va * vb));
                    }
                }
                colv.push(col);
            }
        }
        SparseMat { rows: self.rows * other.rows, cols: self.cols * other.cols, colv }
    }

    /// First differing entry in column-major order, or `None` when equal.
    pub fn first_difference(&self, other: &Self) -> Option<EntryDiff> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(EntryDiff { row: 0, col: 0, left: Rat::zero(), right: Rat::zero() });
        }
        for (c, (a, b)) in self.colv.iter().zip(&other.colv).enumerate() {
            if a == b {
                continue;
            }
            let lookup = |col: &[(usize, Rat)], r: usize| {
                col.iter().find(|(k, _)| *k == r).map(|(_, v)| v.clone()).unwrap_or_else(Rat::zero)
            };
            let row = a
                .iter()
                .map(|(r, _)| *r)
                .chain(b.iter().map(|(r, _)| *r))
                .filter(|&r| lookup(a, r) != lookup(b, r))
                .min()
                .expect("columns differ");
            return Some(EntryDiff { row, col: c, left: lookup(a, row), right: lookup(b, row) });
        }
        None
    }

    pub fn transpose(&self) -> Self {
        let mut colv: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.colv.iter().enumerate() {
            for (r, v) in col {
                colv[*r].push((c, v.clone()));
            }
        }
        SparseMat { rows: self.cols, cols: self.rows, colv }
    }
}
