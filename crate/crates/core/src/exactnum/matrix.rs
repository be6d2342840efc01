use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::rat::{common_denominator, Rat};
use crate::error::{Error, Result};
use crate::exec;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// First entry where two equal-shaped matrices disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryDiff {
    pub row: usize,
    pub col: usize,
    pub left: Rat,
    pub right: Rat,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_identity(n, &Rat::one())
    }

    pub fn scalar_identity(n: usize, c: &Rat) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = c.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Build from integer rows; panics on ragged input (intended for literals).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Rat::from_int(rows[i][j]))
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| rows[i][j].clone()))
    }

    /// A single column built from a vector.
    pub fn column_vector(v: &[Rat]) -> Self {
        RatMatrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_one() {
            return self.clone();
        }
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(integer_product(self, other))
    }

    /// Kronecker product with lexicographic pair indexing.
    pub fn kron(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |r, c| {
            let a = self.get(r / r2, c / c2);
            if a.is_zero() {
                Rat::zero()
            } else {
                a * other.get(r % r2, c % c2)
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape("hstack row counts differ".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Shape("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RatMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Columns as a list of single-column matrices.
    pub fn columns(&self) -> Vec<RatMatrix> {
        (0..self.cols).map(|c| Self::column_vector(&self.column(c))).collect()
    }

    /// Reduced row echelon form and pivot columns (first nonzero pivot rule).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row reduce considering only the first `limit` columns as pivot candidates.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&k| !self.data[k * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].recip().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..cols {
                    if !self.data[r * cols + j].is_zero() {
                        self.data[r * cols + j] *= &inv;
                    }
                }
            }
            let pivot_row: Vec<(usize, Rat)> = (c..cols)
                .filter(|&j| !self.data[r * cols + j].is_zero())
                .map(|j| (j, self.data[r * cols + j].clone()))
                .collect();
            for k in 0..rows {
                if k == r {
                    continue;
                }
                let f = self.data[k * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let t = &f * v;
                    self.data[k * cols + j] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis as the columns of a matrix, using the free-variable convention of the RREF.
    pub fn kernel_matrix(&self) -> Self {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            k.set(f, idx, Rat::one());
            for (row, &p) in pivots.iter().enumerate() {
                let v = red.get(row, f);
                if !v.is_zero() {
                    k.set(p, idx, -v);
                }
            }
        }
        k
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(n))?;
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Deterministic left inverse of a full-column-rank matrix: the first independent rows
    /// are inverted and every other row is weighted by zero.
    pub fn solve_left_inverse(&self) -> Result<Self> {
        let (_, row_pivots) = self.transpose().rref();
        if row_pivots.len() < self.cols {
            return Err(Error::NoLeftInverse { rank: row_pivots.len(), cols: self.cols });
        }
        let square = self.select_rows(&row_pivots);
        let inv = square.inverse()?;
        let mut p = Self::zeros(self.cols, self.rows);
        for (k, &r) in row_pivots.iter().enumerate() {
            for i in 0..self.cols {
                p.set(i, r, inv.get(i, k).clone());
            }
        }
        Ok(p)
    }

    /// True iff the column spans of the two matrices agree.
    pub fn same_column_span(&self, other: &Self) -> bool {
        if self.rows != other.rows {
            return false;
        }
        let a = self.rank();
        let b = other.rank();
        if a != b {
            return false;
        }
        match self.hstack(other) {
            Ok(m) => m.rank() == a,
            Err(_) => false,
        }
    }

    /// First differing entry, or `None` if the matrices are equal; shape mismatch reports (0,0).
    pub fn first_difference(&self, other: &Self) -> Option<EntryDiff> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(EntryDiff { row: 0, col: 0, left: Rat::zero(), right: Rat::zero() });
        }
        self.data.iter().zip(&other.data).enumerate().find(|(_, (a, b))| a != b).map(
            |(k, (a, b))| EntryDiff {
                row: k / self.cols,
                col: k % self.cols,
                left: a.clone(),
                right: b.clone(),
            },
        )
    }

    /// If `self = c * other` for a scalar `c`, return it. Zero `other` only matches zero.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Rat> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        let k = other.data.iter().position(|x| !x.is_zero());
        let c = match k {
            None => return if self.is_zero() { Some(Rat::zero()) } else { None },
            Some(k) => &self.data[k] / &other.data[k],
        };
        if self.data.iter().zip(&other.data).all(|(a, b)| *a == &c * b) {
            Some(c)
        } else {
            None
        }
    }

    pub fn trace(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|k| self.get(k, k)).sum())
    }
}

/// Product of the integer images of both operands under a common denominator,
/// accumulated in `i128` when the bit budget allows and in `BigInt` otherwise.
fn integer_product(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let (n, k, m) = (a.rows, a.cols, b.cols);
    if n == 0 || m == 0 {
        return RatMatrix::zeros(n, m);
    }
    let da = common_denominator(&a.data);
    let db = common_denominator(&b.data);
    let ai: Vec<BigInt> = a.data.iter().map(|x| x.numer() * (&da / x.denom())).collect();
    let bi: Vec<BigInt> = b.data.iter().map(|x| x.numer() * (&db / x.denom())).collect();
    let den = &da * &db;
    let bits = |v: &[BigInt]| v.iter().map(|x| x.bits()).max().unwrap_or(0);
    let k_bits = 64 - (k as u64).leading_zeros() as u64;
    let small = bits(&ai) <= 62 && bits(&bi) <= 62 && bits(&ai) + bits(&bi) + k_bits <= 125;

    let rows: Vec<Vec<Rat>> = if small {
        let a64: Vec<i64> = ai.iter().map(|x| x.to_i64().unwrap()).collect();
        let b64: Vec<i64> = bi.iter().map(|x| x.to_i64().unwrap()).collect();
        exec::map_range(n, |r| {
            let mut acc = vec![0i128; m];
            for t in 0..k {
                let x = a64[r * k + t] as i128;
                if x == 0 {
                    continue;
                }
                let brow = &b64[t * m..(t + 1) * m];
                for (c, y) in brow.iter().enumerate() {
                    if *y != 0 {
                        acc[c] += x * (*y as i128);
                    }
                }
            }
            acc.into_iter()
                .map(|v| {
                    if v == 0 {
                        Rat::zero()
                    } else {
                        Rat::from_big(BigInt::from(v), den.clone()).expect("nonzero denominator")
                    }
                })
                .collect()
        })
    } else {
        exec::map_range(n, |r| {
            let mut acc = vec![BigInt::zero(); m];
            for t in 0..k {
                let x = &ai[r * k + t];
                if x.is_zero() {
                    continue;
                }
                for c in 0..m {
                    let y = &bi[t * m + c];
                    if !y.is_zero() {
                        acc[c] += x * y;
                    }
                }
            }
            acc.into_iter()
                .map(|v| {
                    if v.is_zero() {
                        Rat::zero()
                    } else {
                        Rat::from_big(v, den.clone()).expect("nonzero denominator")
                    }
                })
                .collect()
        })
    };
    RatMatrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
}

/// Free-function form of [`RatMatrix::mul`].
pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    a.mul(b)
}

/// Kernel basis as a list of column vectors.
pub fn mat_kernel(m: &RatMatrix) -> Vec<RatMatrix> {
    m.kernel_matrix().columns()
}

/// Left inverse chosen from the first independent rows.
pub fn solve_left_inverse(f: &RatMatrix) -> Result<RatMatrix> {
    f.solve_left_inverse()
}

/// True iff the product of `m - λ` over the distinct candidate roots vanishes.
pub fn annihilation_check(m: &RatMatrix, roots: &[Rat]) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let mut distinct: Vec<Rat> = roots.to_vec();
    distinct.sort();
    distinct.dedup();
    let n = m.rows;
    let mut acc = RatMatrix::identity(n);
    for root in &distinct {
        let shifted = m.sub(&RatMatrix::scalar_identity(n, root))?;
        acc = acc.mul(&shifted)?;
        if acc.is_zero() {
            return Ok(true);
        }
    }
    Ok(acc.is_zero())
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
