//! Exact arithmetic over the rationals: scalars, linear forms, sparse
//! multivariate polynomials, and the elimination kernel every other module
//! builds on.
//!
//! All computations are carried out in `Q`; there is no floating point
//! anywhere in the crate.

mod linalg;
mod poly;
mod subspace;

use std::fmt;

pub use malachite_q::Rational;

pub use linalg::{solve_linear_system, RationalMatrix, Rref, SparseVec};
pub use poly::{monomials_of_degree, poly_arith, Monomial, PolyOp, Polynomial};
pub use subspace::Subspace;
pub(crate) use poly::hyperplane_substitution;

use malachite_base::num::basic::traits::{One, Zero};

use crate::error::{Error, Result};

pub fn zero() -> Rational {
    Rational::ZERO
}

pub fn one() -> Rational {
    Rational::ONE
}

pub fn int(n: i64) -> Rational {
    Rational::from(n)
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::from_signeds(p, q)
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

/// `a` as an integer, if it is one and fits.
pub fn to_i64(a: &Rational) -> Option<i64> {
    i64::try_from(a).ok()
}

/// A linear form on the torus Lie algebra, i.e. an element of degree one in
/// the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(vec![zero(); nvars])
    }

    /// The coordinate function `x_k` (0-based).
    pub fn coordinate(nvars: usize, k: usize) -> Self {
        let mut form = Self::zero(nvars);
        form.coeffs[k] = one();
        form
    }

    /// `x_i - x_j` (0-based indices).
    pub fn difference(nvars: usize, i: usize, j: usize) -> Self {
        let mut form = Self::zero(nvars);
        form.coeffs[i] = one();
        form.coeffs[j] = int(-1);
        form
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c != 0)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::Dimension { expected: self.nvars(), found: point.len() });
        }
        let mut acc = zero();
        for (c, a) in self.coeffs.iter().zip(point) {
            if *c != 0 {
                acc += c * a;
            }
        }
        Ok(acc)
    }

    /// Pairing with an integer coweight.
    pub fn pair(&self, coweight: &[i64]) -> Result<Rational> {
        let point: Vec<Rational> = coweight.iter().map(|&c| int(c)).collect();
        self.eval(&point)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.nvars() != self.nvars() {
            return Err(Error::Dimension { expected: self.nvars(), found: other.nvars() });
        }
        Ok(Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    /// Rescaled so that the first nonzero coefficient is 1. Two nonzero forms
    /// define the same hyperplane iff their normalizations agree.
    pub fn normalized(&self) -> Option<Self> {
        let k = self.first_nonzero()?;
        let inv = Rational::ONE / &self.coeffs[k];
        Some(self.scale(&inv))
    }

    /// `true` if `self = ±other`.
    pub fn equals_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_linear(self)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_polynomial(), f)
    }
}
