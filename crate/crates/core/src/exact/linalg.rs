use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs with strictly increasing indices and
/// no zero values.
pub type SparseVec = Vec<(usize, Rational)>;

/// `a - c * b`, merged.
fn sub_scaled(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, a)| **a != 0).map(|(k, a)| (k, a.clone())).collect()
}

pub(crate) fn dense_from_sparse(v: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; len];
    for (k, a) in v {
        out[*k] = a.clone();
    }
    out
}

/// Reduced row echelon form of a row space. Unique for a given row space and
/// column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    ncols: usize,
    pivots: Vec<usize>,
    rows: Vec<SparseVec>,
    /// `pivot_of[c]` is the row whose pivot is column `c`.
    pivot_of: Vec<Option<usize>>,
}

impl Rref {
    /// Gauss-Jordan elimination, column by column from the left. Among the
    /// candidate rows for a pivot the shortest is taken, which limits fill-in
    /// on the sparse systems produced by moment graphs.
    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut buckets: Vec<Vec<SparseVec>> = vec![Vec::new(); ncols];
        for row in rows {
            debug_assert!(row.iter().all(|(c, a)| *c < ncols && *a != 0));
            if let Some(&(lead, _)) = row.first() {
                buckets[lead].push(row);
            }
        }

        let mut pivots = Vec::new();
        let mut echelon: Vec<SparseVec> = Vec::new();
        for col in 0..ncols {
            let mut bucket = std::mem::take(&mut buckets[col]);
            if bucket.is_empty() {
                continue;
            }
            let best = (0..bucket.len()).min_by_key(|&k| bucket[k].len()).unwrap();
            let mut pivot = bucket.swap_remove(best);
            let inv = Rational::ONE / &pivot[0].1;
            for entry in pivot.iter_mut() {
                entry.1 *= &inv;
            }
            for row in bucket {
                let factor = row[0].1.clone();
                let reduced = sub_scaled(&row, &factor, &pivot);
                if let Some(&(lead, _)) = reduced.first() {
                    buckets[lead].push(reduced);
                }
            }
            pivots.push(col);
            echelon.push(pivot);
        }

        let mut pivot_of = vec![None; ncols];
        for (k, &c) in pivots.iter().enumerate() {
            pivot_of[c] = Some(k);
        }
        // Back substitution, bottom-up: rows below are already reduced, so
        // each subtraction only touches non-pivot columns.
        for k in (0..echelon.len()).rev() {
            let targets: Vec<(usize, Rational)> = echelon[k]
                .iter()
                .skip(1)
                .filter_map(|(c, a)| pivot_of[*c].map(|r| (r, a.clone())))
                .collect();
            for (r, a) in targets {
                let reduced = sub_scaled(&echelon[k], &a, &echelon[r]);
                echelon[k] = reduced;
            }
        }
        Self { ncols, pivots, rows: echelon, pivot_of }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of[col].is_some()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of[c].is_none()).collect()
    }

    /// Null space basis, one vector per free column `f`, with a 1 at `f` and
    /// zeros at every other free column.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut basis: Vec<SparseVec> = free.iter().map(|&f| vec![(f, Rational::ONE)]).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, a) in row.iter().skip(1) {
                basis[slot[*c]].push((p, -a));
            }
        }
        for v in &mut basis {
            v.sort_by_key(|e| e.0);
        }
        basis
    }

    /// Reduces a dense vector modulo the row space in place; what remains is
    /// supported on free columns.
    pub fn reduce_dense(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] == 0 {
                continue;
            }
            let c = v[p].clone();
            for (k, a) in row {
                v[*k] -= &c * a;
            }
        }
    }

    pub fn reduce_sparse(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut cur: SparseVec = v.to_vec();
        loop {
            let hit = cur.iter().find_map(|(c, a)| self.pivot_of[*c].map(|r| (r, a.clone())));
            match hit {
                Some((r, a)) => cur = sub_scaled(&cur, &a, &self.rows[r]),
                None => return cur,
            }
        }
    }
}

/// Null space of `a`, in the canonical form derived from its RREF.
pub fn solve_linear_system(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    let rref = a.rref();
    rref.kernel().iter().map(|v| dense_from_sparse(v, a.cols())).collect()
}

/// Dense matrix over `Q`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: nrows, cols, data })
    }

    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::Dimension { expected: nrows, found: col.len() });
            }
            for (i, a) in col.iter().enumerate() {
                m.data[i * m.cols + j] = a.clone();
            }
        }
        Ok(m)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&a| Rational::from(a)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, a: Rational) {
        self.data[i * self.cols + j] = a;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if *a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if *b != 0 {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if *a != 0 && *b != 0 {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::ZERO, |acc, i| acc + self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == u32::from(i == j)))
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| sparse_from_dense(self.row(i))).collect()
    }

    pub fn rref(&self) -> Rref {
        Rref::from_rows(self.cols, self.sparse_rows())
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        solve_linear_system(self)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented: Vec<SparseVec> = (0..n)
            .map(|i| {
                let mut row = sparse_from_dense(self.row(i));
                row.push((n + i, Rational::ONE));
                row
            })
            .collect();
        let rref = Rref::from_rows(2 * n, augmented);
        if rref.rank() != n || rref.pivots().iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for (i, row) in rref.rows().iter().enumerate() {
            for (c, a) in row {
                if *c >= n {
                    inv.set(i, c - n, a.clone());
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
