use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse integer matrix keyed by `(row, col)`. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigInt::one())
    }

    pub fn scalar(n: usize, c: BigInt) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds from `(row, col, value)` triples; repeated positions accumulate.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_at(r, c, &v);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            n,
            m,
            rows.iter().enumerate().flat_map(|(i, row)| {
                assert_eq!(row.len(), m, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .map(move |(j, &v)| (i, j, BigInt::from(v)))
            }),
        )
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

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &BigInt) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&pos, v)| (pos, v * k)).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        let mut s = vec![BigInt::zero(); self.rows];
        for (r, _, v) in self.iter() {
            s[r] += v;
        }
        s
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        let mut s = vec![BigInt::zero(); self.cols];
        for (_, c, v) in self.iter() {
            s[c] += v;
        }
        s
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Self::identity(self.rows);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Row-indexed view used by multiplication.
    fn by_row(&self) -> Vec<Vec<(usize, &BigInt)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].push((c, v));
        }
        rows
    }
}

impl Mul for &SparseIntMatrix {
    type Output = SparseIntMatrix;

    fn mul(self, rhs: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let rhs_rows = rhs.by_row();
        let mut out = SparseIntMatrix::zeros(self.rows, rhs.cols);
        for (i, row) in self.by_row().into_iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, a) in row {
                for &(j, b) in &rhs_rows[k] {
                    *acc.entry(j).or_default() += a * b;
                }
            }
            for (j, v) in acc {
                if !v.is_zero() {
                    out.entries.insert((i, j), v);
                }
            }
        }
        out
    }
}

impl Add for &SparseIntMatrix {
    type Output = SparseIntMatrix;

    fn add(self, rhs: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (r, c, v) in rhs.iter() {
            out.add_at(r, c, v);
        }
        out
    }
}

impl Sub for &SparseIntMatrix {
    type Output = SparseIntMatrix;

    fn sub(self, rhs: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (r, c, v) in rhs.iter() {
            out.add_at(r, c, &-v);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl Serialize for SparseIntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.iter().map(|(r, c, v)| (r, c, v.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseIntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = MatrixRepr::deserialize(d)?;
        let mut m = SparseIntMatrix::zeros(repr.rows, repr.cols);
        for (r, c, v) in repr.entries {
            if r >= repr.rows || c >= repr.cols {
                return Err(D::Error::custom(format!("entry ({r}, {c}) out of bounds")));
            }
            let v: BigInt = v.parse().map_err(D::Error::custom)?;
            m.add_at(r, c, &v);
        }
        Ok(m)
    }
}
