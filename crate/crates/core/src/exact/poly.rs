use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use malachite_base::num::arithmetic::traits::Pow;

use super::{int, one, LinearForm, Rational};
use crate::error::{Error, Result};

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographically with `x1` most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = one();
        for (e, a) in self.0.iter().zip(point) {
            if *e > 0 {
                acc *= a.pow(u64::from(*e));
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, largest first in
/// graded-lex order (`x1^d` leads).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, k: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == nvars {
            cur[k] = remaining;
            out.push(Monomial(cur.clone()));
            cur[k] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            cur[k] = e;
            rec(nvars, k + 1, remaining - e, cur, out);
        }
        cur[k] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Sparse polynomial with rational coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic.
pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => p.checked_add(q),
        PolyOp::Sub => p.checked_sub(q),
        PolyOp::Mul => p.checked_mul(q),
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        Self::monomial(Monomial::var(nvars, k), one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_linear(form: &LinearForm) -> Self {
        let n = form.nvars();
        let mut p = Self::zero(n);
        for (k, c) in form.coeffs().iter().enumerate() {
            p.add_term(Monomial::var(n, k), c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension { expected: nvars, found: e.len() });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            Some(d) => self.is_homogeneous_of(d),
            None => true,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if *c == 0 {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: point.len() });
        }
        let mut acc = Rational::default();
        for (m, c) in &self.terms {
            acc += c * m.eval(point);
        }
        Ok(acc)
    }

    /// Composes with a linear change of variables: variable `k` is replaced
    /// by `images[k]`. The result lives in `images[k].nvars()` variables.
    pub fn substitute_linear(&self, images: &[LinearForm]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: images.len() });
        }
        let target = images.first().map_or(0, LinearForm::nvars);
        if let Some(bad) = images.iter().find(|f| f.nvars() != target) {
            return Err(Error::Dimension { expected: target, found: bad.nvars() });
        }
        let lin: Vec<Polynomial> = images.iter().map(Polynomial::from_linear).collect();
        // powers[k][e] = images[k]^e, filled on demand
        let mut powers: Vec<Vec<Polynomial>> =
            vec![vec![Polynomial::constant(target, one())]; self.nvars];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap() * &lin[k];
                    powers[k].push(next);
                }
                term = &term * &powers[k][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Restriction to the hyperplane `alpha = 0`, obtained by solving for the
    /// variable of the first nonzero coefficient of `alpha`. The result is
    /// expressed in the same variables, with the eliminated one absent.
    pub fn restrict_to_hyperplane(&self, alpha: &LinearForm) -> Result<Self> {
        if alpha.nvars() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: alpha.nvars() });
        }
        let pivot = alpha.first_nonzero().ok_or(Error::InvalidWeight)?;
        let images = hyperplane_substitution(alpha, pivot);
        self.substitute_linear(&images)
    }

    /// Whether `alpha` divides `self`, i.e. whether `self` vanishes on the
    /// hyperplane `alpha = 0`.
    pub fn divisible_by_linear(&self, alpha: &LinearForm) -> Result<bool> {
        Ok(self.restrict_to_hyperplane(alpha)?.is_zero())
    }

    /// Splits the variables at `k`: returns, for each monomial in the
    /// trailing `nvars - k` variables, its coefficient as a polynomial in the
    /// leading `k` variables.
    pub fn split_variables(&self, k: usize) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (head, tail) = m.exponents().split_at(k);
            out.entry(Monomial(tail.to_vec()))
                .or_insert_with(|| Polynomial::zero(k))
                .add_term(Monomial(head.to_vec()), c.clone());
        }
        out
    }

    /// Embeds into `nvars + extra` variables, the new ones trailing.
    pub fn pad_variables(&self, extra: usize) -> Self {
        let nvars = self.nvars + extra;
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }
}

/// Images of the variables under the substitution that solves `alpha = 0`
/// for variable `pivot`.
pub(crate) fn hyperplane_substitution(alpha: &LinearForm, pivot: usize) -> Vec<LinearForm> {
    let n = alpha.nvars();
    let lead = alpha.coeff(pivot).clone();
    (0..n)
        .map(|k| {
            if k == pivot {
                let mut c: Vec<Rational> =
                    alpha.coeffs().iter().map(|a| -(a / &lead)).collect();
                c[pivot] = Rational::default();
                LinearForm::new(c)
            } else {
                LinearForm::coordinate(n, k)
            }
        })
        .collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial variable counts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial variable counts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&int(-1))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < 0;
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| if e == 1 { format!("x{}", k + 1) } else { format!("x{}^{}", k + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
