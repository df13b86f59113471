use super::linalg::{dense_from_sparse, sparse_from_dense, Rref, SparseVec};
use super::{RationalMatrix, Rational};
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient`, stored by the RREF of a spanning set.
/// Two subspaces are equal iff their RREFs are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    rref: Rref,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { rref: Rref::from_rows(ambient, Vec::new()) }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_sparse(ambient, (0..ambient).map(|k| vec![(k, Rational::from(1))]))
    }

    pub fn span<V: AsRef<[Rational]>>(ambient: usize, vectors: impl IntoIterator<Item = V>) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::Dimension { expected: ambient, found: v.len() });
            }
            rows.push(sparse_from_dense(v));
        }
        Ok(Self { rref: Rref::from_rows(ambient, rows) })
    }

    pub fn from_sparse(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        Self { rref: Rref::from_rows(ambient, vectors) }
    }

    pub fn ambient(&self) -> usize {
        self.rref.ncols()
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    /// The canonical basis (RREF rows), dense.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rref.rows().iter().map(|r| dense_from_sparse(r, self.ambient())).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::Dimension { expected: self.ambient(), found: other.ambient() });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient() {
            return Err(Error::Dimension { expected: self.ambient(), found: v.len() });
        }
        let mut w = v.to_vec();
        self.rref.reduce_dense(&mut w);
        Ok(w.iter().all(|a| *a == 0))
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for row in other.rref.rows() {
            if !self.rref.reduce_sparse(row).is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let rows = self.rref.rows().iter().chain(other.rref.rows()).cloned();
        Ok(Self::from_sparse(self.ambient(), rows))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        // Coefficient vectors c with sum c_k u_k reducing to zero modulo `other`.
        let reduced: Vec<Vec<Rational>> = self
            .rref
            .rows()
            .iter()
            .map(|u| dense_from_sparse(&other.rref.reduce_sparse(u), self.ambient()))
            .collect();
        let m = RationalMatrix::from_columns(self.ambient(), &reduced)?;
        let basis = self.basis();
        let vectors = m.kernel().into_iter().map(|c| {
            let mut v = vec![Rational::from(0); self.ambient()];
            for (ck, u) in c.iter().zip(&basis) {
                if *ck != 0 {
                    for (vi, ui) in v.iter_mut().zip(u) {
                        *vi += ck * ui;
                    }
                }
            }
            v
        });
        Self::span(self.ambient(), vectors.collect::<Vec<_>>())
    }

    /// `dim (self + other) / other`.
    pub fn quotient_dim(&self, other: &Self) -> Result<usize> {
        Ok(self.sum(other)?.dim() - other.dim())
    }

    pub fn image_under(&self, map: &RationalMatrix) -> Result<Self> {
        if map.cols() != self.ambient() {
            return Err(Error::Dimension { expected: self.ambient(), found: map.cols() });
        }
        let images = self
            .basis()
            .iter()
            .map(|u| map.mul_vec(u))
            .collect::<Result<Vec<_>>>()?;
        Self::span(map.rows(), images)
    }

    /// Coordinates of `v + self` in the quotient `Q^ambient / self`, with
    /// respect to the unit vectors of the non-pivot columns.
    pub fn quotient_coordinates(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.ambient() {
            return Err(Error::Dimension { expected: self.ambient(), found: v.len() });
        }
        let mut w = v.to_vec();
        self.rref.reduce_dense(&mut w);
        Ok(self.rref.free_columns().into_iter().map(|c| w[c].clone()).collect())
    }

    /// Columns whose unit vectors complete a basis of `self` to one of the
    /// ambient space.
    pub fn complement_columns(&self) -> Vec<usize> {
        self.rref.free_columns()
    }
}
