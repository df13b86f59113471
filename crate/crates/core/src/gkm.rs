//! Graded pieces of the GKM ring of a moment graph and the forgetful quotient
//! to ordinary cohomology.
//!
//! Every edge weight lies in the span `W` of all edge weights. Choosing
//! coordinates `y'` on `W` (the RREF rows of the weight matrix) and completing
//! them with the remaining coordinate functions `y''`, the GKM ring splits as
//! `H_W ⊗ Q[y'']` where `H_W` is the GKM ring of the same graph over `Q[y']`.
//! Kernels are therefore solved in `dim W` variables only, and the ordinary
//! quotient `H / Q[x]^+ H` equals `H_W / (y') H_W`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    monomials_of_degree, LinearForm, Monomial, Polynomial, Rational, RationalMatrix, Rref, SparseVec, Subspace,
};
use crate::graph::MomentGraph;
use crate::partition::binomial;

/// A vertex-indexed tuple of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmClass {
    values: Vec<Polynomial>,
}

impl GkmClass {
    pub fn new(values: Vec<Polynomial>) -> Self {
        Self { values }
    }

    pub fn constant(nvars: usize, nvertices: usize, c: Rational) -> Self {
        Self::new(vec![Polynomial::constant(nvars, c); nvertices])
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn value(&self, vertex: usize) -> &Polynomial {
        &self.values[vertex]
    }

    pub fn num_vertices(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    /// Whether every vertex value is homogeneous of degree `d` (or zero).
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.values.iter().all(|p| p.is_homogeneous_of(d as u32))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Polynomial, &Polynomial) -> Result<Polynomial>) -> Result<Self> {
        if self.num_vertices() != other.num_vertices() {
            return Err(Error::Dimension { expected: self.num_vertices(), found: other.num_vertices() });
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(Self::new(values))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, Polynomial::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, Polynomial::checked_sub)
    }

    /// Vertexwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, Polynomial::checked_mul)
    }

    /// Multiplication by a polynomial scalar.
    pub fn scale_by(&self, p: &Polynomial) -> Result<Self> {
        let values = self.values.iter().map(|v| v.checked_mul(p)).collect::<Result<_>>()?;
        Ok(Self::new(values))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.values.iter().map(|v| v.scale(c)).collect())
    }

    /// Keeps the given vertices, in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        Self::new(vertices.iter().map(|&v| self.values[v].clone()).collect())
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.values.iter().map(|p| p.eval(point)).collect()
    }
}

/// The edge condition: `f(u) - f(v)` is divisible by the weight of every edge.
pub fn is_gkm_class(g: &MomentGraph, class: &GkmClass) -> Result<bool> {
    Ok(first_gkm_violation(g, class)?.is_none())
}

/// Index of the first edge whose divisibility condition fails.
pub fn first_gkm_violation(g: &MomentGraph, class: &GkmClass) -> Result<Option<usize>> {
    if class.num_vertices() != g.num_vertices() {
        return Err(Error::Dimension { expected: g.num_vertices(), found: class.num_vertices() });
    }
    for (k, e) in g.edges().iter().enumerate() {
        let diff = class.values[e.u].checked_sub(&class.values[e.v])?;
        if !diff.divisible_by_linear(&e.weight)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Membership in the degree-`d` piece: homogeneity plus every edge condition.
pub fn check_in_piece(g: &MomentGraph, class: &GkmClass, d: usize) -> Result<()> {
    if !class.is_homogeneous_of(d) {
        return Err(Error::NotInPiece { degree: d, reason: "not homogeneous of this degree".into() });
    }
    if let Some(k) = first_gkm_violation(g, class)? {
        let e = &g.edges()[k];
        return Err(Error::NotInPiece {
            degree: d,
            reason: format!("edge {{{}, {}}} with weight {} fails divisibility", g.vertices()[e.u], g.vertices()[e.v], e.weight),
        });
    }
    Ok(())
}

/// Dimension of the space of degree-`k` polynomials in `r` variables.
pub fn num_monomials(r: usize, k: usize) -> usize {
    if r == 0 {
        usize::from(k == 0)
    } else {
        binomial(r + k - 1, k) as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameKind {
    /// Coordinates adapted to the span of the edge weights.
    Reduced,
    /// The original coordinates, with no reduction.
    Identity,
}

/// Linear coordinates `z = (y', y'')` used for the kernel computations.
#[derive(Clone, Debug)]
pub struct WeightFrame {
    nvars: usize,
    rank: usize,
    /// `y'_k` as forms in `x`.
    rows: Vec<LinearForm>,
    /// The `x` coordinates serving as `y''`.
    free: Vec<usize>,
    to_x: Vec<LinearForm>,
    to_z: Vec<LinearForm>,
    /// Edge weights in the `y'` coordinates.
    edge_weights: Vec<LinearForm>,
}

impl WeightFrame {
    pub fn new(g: &MomentGraph, kind: FrameKind) -> Self {
        let n = g.nvars();
        match kind {
            FrameKind::Identity => {
                let coords: Vec<LinearForm> = (0..n).map(|k| LinearForm::coordinate(n, k)).collect();
                Self {
                    nvars: n,
                    rank: n,
                    rows: coords.clone(),
                    free: Vec::new(),
                    to_x: coords.clone(),
                    to_z: coords,
                    edge_weights: g.edges().iter().map(|e| e.weight.clone()).collect(),
                }
            }
            FrameKind::Reduced => {
                let sparse = g.edges().iter().map(|e| {
                    e.weight.coeffs().iter().enumerate().filter(|(_, a)| **a != 0).map(|(k, a)| (k, a.clone())).collect()
                });
                let rref = Rref::from_rows(n, sparse);
                let r = rref.rank();
                let free = rref.free_columns();
                let rows: Vec<LinearForm> = rref
                    .rows()
                    .iter()
                    .map(|row| {
                        let mut c = vec![Rational::from(0); n];
                        for (k, a) in row {
                            c[*k] = a.clone();
                        }
                        LinearForm::new(c)
                    })
                    .collect();
                let mut to_x = rows.clone();
                to_x.extend(free.iter().map(|&f| LinearForm::coordinate(n, f)));
                let mut to_z = vec![LinearForm::zero(n); n];
                for (k, &p) in rref.pivots().iter().enumerate() {
                    let mut c = vec![Rational::from(0); n];
                    c[k] = Rational::from(1);
                    for (j, &f) in free.iter().enumerate() {
                        c[r + j] = -rows[k].coeff(f);
                    }
                    to_z[p] = LinearForm::new(c);
                }
                for (j, &f) in free.iter().enumerate() {
                    to_z[f] = LinearForm::coordinate(n, r + j);
                }
                let edge_weights = g
                    .edges()
                    .iter()
                    .map(|e| LinearForm::new(rref.pivots().iter().map(|&p| e.weight.coeff(p).clone()).collect()))
                    .collect();
                Self { nvars: n, rank: r, rows, free, to_x, to_z, edge_weights }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The forms `y'_k` spanning the weight span.
    pub fn span_forms(&self) -> &[LinearForm] {
        &self.rows
    }

    pub fn complement_coordinates(&self) -> &[usize] {
        &self.free
    }

    /// `y'(a)` for a point `a` in `x` coordinates.
    pub fn span_point(&self, a: &[Rational]) -> Result<Vec<Rational>> {
        self.rows.iter().map(|f| f.eval(a)).collect()
    }

    fn is_identity(&self) -> bool {
        self.rank == self.nvars && self.free.is_empty() && self.rows.iter().enumerate().all(|(k, f)| *f == LinearForm::coordinate(self.nvars, k))
    }

    /// A polynomial in the `y'` variables, rewritten in `x`.
    fn span_poly_to_x(&self, p: &Polynomial) -> Result<Polynomial> {
        let padded = p.pad_variables(self.nvars - self.rank);
        if self.is_identity() {
            Ok(padded)
        } else {
            padded.substitute_linear(&self.to_x)
        }
    }

    /// The monomial `y''^m` in `x`.
    fn tail_monomial_to_x(&self, tail: &Monomial) -> Monomial {
        let mut e = vec![0u32; self.nvars];
        for (j, &f) in self.free.iter().enumerate() {
            e[f] = tail.exponents()[j];
        }
        Monomial::new(e)
    }

    /// Splits an `x` polynomial into `y''`-monomials with coefficients in `y'`.
    fn split(&self, p: &Polynomial) -> Result<BTreeMap<Monomial, Polynomial>> {
        let z = if self.is_identity() { p.clone() } else { p.substitute_linear(&self.to_z)? };
        Ok(z.split_variables(self.rank))
    }
}

#[derive(Clone, Debug)]
struct ReducedPiece {
    monomials: Vec<Monomial>,
    constraints: Rref,
    free_cols: Vec<usize>,
    /// Kernel basis over columns `vertex * monomials.len() + monomial`.
    basis: Vec<SparseVec>,
    /// Span of `y'_k` times the previous piece, in kernel coordinates.
    products: Subspace,
}

impl ReducedPiece {
    fn width(&self) -> usize {
        self.monomials.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub b: Vec<usize>,
    /// False when the degree cap was reached before the Betti numbers
    /// summed to the number of vertices.
    pub complete: bool,
}

impl BettiVector {
    pub fn total(&self) -> usize {
        self.b.iter().sum()
    }
}

/// Comparison of a computed piece dimension against the free-module count
/// `sum_j b_j * dim Q[y']_{d-j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessRow {
    pub degree: usize,
    pub dim: usize,
    pub expected: usize,
}

#[derive(Clone, Debug)]
pub struct GkmGradedPiece {
    pub degree: usize,
    pub basis: Vec<GkmClass>,
}

impl GkmGradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Representatives of a basis of the degree-`d` ordinary cohomology.
#[derive(Clone, Debug)]
pub struct OrdinaryBasis {
    pub degree: usize,
    pub representatives: Vec<GkmClass>,
}

impl OrdinaryBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// The GKM ring of a graph, computed lazily degree by degree.
#[derive(Clone, Debug)]
pub struct GkmModule {
    graph: MomentGraph,
    frame: WeightFrame,
    pieces: Vec<ReducedPiece>,
}

impl GkmModule {
    pub fn new(g: &MomentGraph) -> Result<Self> {
        Self::with_frame(g, FrameKind::Reduced)
    }

    pub fn with_frame(g: &MomentGraph, kind: FrameKind) -> Result<Self> {
        g.check_valid()?;
        Ok(Self { graph: g.clone(), frame: WeightFrame::new(g, kind), pieces: Vec::new() })
    }

    pub fn graph(&self) -> &MomentGraph {
        &self.graph
    }

    pub fn frame(&self) -> &WeightFrame {
        &self.frame
    }

    fn ensure(&mut self, d: usize) -> Result<()> {
        while self.pieces.len() <= d {
            let piece = self.compute_piece(self.pieces.len());
            self.pieces.push(piece);
        }
        Ok(())
    }

    fn compute_piece(&self, d: usize) -> ReducedPiece {
        let r = self.frame.rank;
        let nv = self.graph.num_vertices();
        let monomials = monomials_of_degree(r, d as u32);
        let width = monomials.len();

        let mut tables: HashMap<LinearForm, Vec<Vec<(usize, Rational)>>> = HashMap::new();
        let mut rows: Vec<SparseVec> = Vec::new();
        for (e, alpha) in self.graph.edges().iter().zip(&self.frame.edge_weights) {
            let key = alpha.normalized().expect("validated graphs have nonzero weights");
            let table = tables.entry(key.clone()).or_insert_with(|| restriction_table(&key, &monomials));
            let mut per_out: BTreeMap<usize, SparseVec> = BTreeMap::new();
            for (mi, terms) in table.iter().enumerate() {
                for (o, c) in terms {
                    let row = per_out.entry(*o).or_default();
                    row.push((e.u * width + mi, c.clone()));
                    row.push((e.v * width + mi, -c));
                }
            }
            for (_, mut row) in per_out {
                row.sort_by_key(|t| t.0);
                rows.push(row);
            }
        }
        let constraints = Rref::from_rows(nv * width, rows);
        let basis = constraints.kernel();
        let free_cols = constraints.free_columns();

        let products = if d == 0 {
            Subspace::zero(basis.len())
        } else {
            let lower = &self.pieces[d - 1];
            let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(k, m)| (m, k)).collect();
            let mut free_pos = vec![usize::MAX; nv * width];
            for (k, &c) in free_cols.iter().enumerate() {
                free_pos[c] = k;
            }
            let mut vectors = Vec::with_capacity(lower.basis.len() * r);
            for k in 0..r {
                let var = Monomial::var(r, k);
                let shift: Vec<usize> = lower.monomials.iter().map(|m| index[&m.mul(&var)]).collect();
                for b in &lower.basis {
                    let mut v: SparseVec = b
                        .iter()
                        .filter_map(|(col, c)| {
                            let (vert, mi) = (col / lower.width(), col % lower.width());
                            let p = free_pos[vert * width + shift[mi]];
                            (p != usize::MAX).then(|| (p, c.clone()))
                        })
                        .collect();
                    v.sort_by_key(|t| t.0);
                    vectors.push(v);
                }
            }
            Subspace::from_sparse(basis.len(), vectors)
        };
        ReducedPiece { monomials, constraints, free_cols, basis, products }
    }

    /// Dimension of the degree-`d` piece of `H_W`.
    pub fn span_dim(&mut self, d: usize) -> Result<usize> {
        self.ensure(d)?;
        Ok(self.pieces[d].basis.len())
    }

    /// Dimension of the degree-`d` piece of the GKM ring in all `nvars` variables.
    pub fn dim(&mut self, d: usize) -> Result<usize> {
        let extra = self.frame.nvars - self.frame.rank;
        let mut total = 0;
        for j in 0..=d {
            total += self.span_dim(j)? * num_monomials(extra, d - j);
        }
        Ok(total)
    }

    /// The degree-`d` Betti number: `dim H_d - dim (Q[x]^+ H)_d`.
    pub fn betti_number(&mut self, d: usize) -> Result<usize> {
        self.ensure(d)?;
        let p = &self.pieces[d];
        Ok(p.basis.len() - p.products.dim())
    }

    /// Betti numbers, degree by degree until they sum to the number of
    /// vertices or `max_degree` is passed.
    pub fn betti(&mut self, max_degree: usize) -> Result<BettiVector> {
        let target = self.graph.num_vertices();
        let mut b = Vec::new();
        let mut total = 0;
        for d in 0..=max_degree {
            if total >= target {
                break;
            }
            let bd = self.betti_number(d)?;
            total += bd;
            b.push(bd);
        }
        Ok(BettiVector { b, complete: total == target })
    }

    /// Free-module dimension check for degrees `0..=max_degree`.
    pub fn freeness(&mut self, max_degree: usize) -> Result<Vec<FreenessRow>> {
        let r = self.frame.rank;
        let mut betti = Vec::new();
        let mut rows = Vec::new();
        for d in 0..=max_degree {
            betti.push(self.betti_number(d)?);
            let expected = (0..=d).map(|j| betti[j] * num_monomials(r, d - j)).sum();
            rows.push(FreenessRow { degree: d, dim: self.span_dim(d)?, expected });
        }
        Ok(rows)
    }

    fn span_class(&self, d: usize, v: &SparseVec) -> Result<GkmClass> {
        let p = &self.pieces[d];
        let r = self.frame.rank;
        let mut values = vec![Polynomial::zero(r); self.graph.num_vertices()];
        for (col, c) in v {
            values[col / p.width()].add_term(p.monomials[col % p.width()].clone(), c.clone());
        }
        let values = values.iter().map(|q| self.frame.span_poly_to_x(q)).collect::<Result<_>>()?;
        Ok(GkmClass::new(values))
    }

    /// Basis of the degree-`d` piece of `H_W`, written in `x`.
    pub fn span_basis(&mut self, d: usize) -> Result<Vec<GkmClass>> {
        self.ensure(d)?;
        self.pieces[d].basis.iter().map(|v| self.span_class(d, v)).collect()
    }

    /// Basis of the degree-`d` piece of the GKM ring: products `P * y''^m`
    /// with `P` running over bases of `H_W`, ordered by `deg P`, then `m`.
    pub fn piece(&mut self, d: usize) -> Result<GkmGradedPiece> {
        let extra = self.frame.nvars - self.frame.rank;
        let mut basis = Vec::new();
        for j in 0..=d {
            let span = self.span_basis(j)?;
            for tail in monomials_of_degree(extra, (d - j) as u32) {
                let m = self.frame.tail_monomial_to_x(&tail);
                for b in &span {
                    basis.push(GkmClass::new(b.values.iter().map(|p| p.mul_monomial(&m)).collect()));
                }
            }
        }
        Ok(GkmGradedPiece { degree: d, basis })
    }

    /// Kernel coordinates of a dense vector in the degree-`d` piece of `H_W`.
    fn span_coordinates(&self, d: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        let p = &self.pieces[d];
        for row in p.constraints.rows() {
            let dot: Rational = row.iter().map(|(c, a)| a * &v[*c]).sum();
            if dot != 0 {
                return Err(Error::NotInPiece { degree: d, reason: "an edge condition fails".into() });
            }
        }
        Ok(p.free_cols.iter().map(|&c| v[c].clone()).collect())
    }

    fn check_class(&self, class: &GkmClass, d: usize) -> Result<()> {
        if class.num_vertices() != self.graph.num_vertices() {
            return Err(Error::Dimension { expected: self.graph.num_vertices(), found: class.num_vertices() });
        }
        if !class.is_homogeneous_of(d) {
            return Err(Error::NotInPiece { degree: d, reason: "not homogeneous of this degree".into() });
        }
        Ok(())
    }

    /// Splits each vertex value by `y''`-monomial, then lays out each
    /// coefficient tuple as a dense vector in the matching piece of `H_W`.
    fn split_class(&mut self, class: &GkmClass, d: usize) -> Result<BTreeMap<Monomial, Vec<Rational>>> {
        self.check_class(class, d)?;
        self.ensure(d)?;
        let nv = self.graph.num_vertices();
        let mut out: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (vert, p) in class.values.iter().enumerate() {
            for (tail, head) in self.frame.split(p)? {
                let j = d - tail.degree() as usize;
                let piece = &self.pieces[j];
                let width = piece.width();
                let dense = out.entry(tail).or_insert_with(|| vec![Rational::from(0); nv * width]);
                for (m, c) in head.terms() {
                    let mi = piece.monomials.iter().position(|x| x == m).expect("homogeneous head");
                    dense[vert * width + mi] = c.clone();
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of a class with respect to [`GkmModule::piece`].
    pub fn coordinates(&mut self, d: usize, class: &GkmClass) -> Result<Vec<Rational>> {
        let split = self.split_class(class, d)?;
        let extra = self.frame.nvars - self.frame.rank;
        let nv = self.graph.num_vertices();
        let mut coords = Vec::new();
        for j in 0..=d {
            for tail in monomials_of_degree(extra, (d - j) as u32) {
                let width = self.pieces[j].width();
                let zero = vec![Rational::from(0); nv * width];
                let dense = split.get(&tail).unwrap_or(&zero);
                coords.extend(self.span_coordinates(j, dense)?);
            }
        }
        Ok(coords)
    }

    /// Basis of ordinary cohomology in degree `d`, by representatives.
    pub fn ordinary_basis(&mut self, d: usize) -> Result<OrdinaryBasis> {
        self.ensure(d)?;
        let p = &self.pieces[d];
        let reps = p
            .products
            .complement_columns()
            .into_iter()
            .map(|k| self.span_class(d, &p.basis[k]))
            .collect::<Result<_>>()?;
        Ok(OrdinaryBasis { degree: d, representatives: reps })
    }

    /// Coordinates of the image of a degree-`d` class in ordinary cohomology,
    /// with respect to [`GkmModule::ordinary_basis`].
    pub fn ordinary_coordinates(&mut self, d: usize, class: &GkmClass) -> Result<Vec<Rational>> {
        let split = self.split_class(class, d)?;
        let extra = self.frame.nvars - self.frame.rank;
        let nv = self.graph.num_vertices();
        let zero = vec![Rational::from(0); nv * self.pieces[d].width()];
        let dense = split.get(&Monomial::one(extra)).unwrap_or(&zero);
        let coords = self.span_coordinates(d, dense)?;
        self.pieces[d].products.quotient_coordinates(&coords)
    }

    /// Spanning set of `(Q[x]^+ H)_d`: every coordinate function times every
    /// basis class of degree `d - 1`.
    pub fn positive_products(&mut self, d: usize) -> Result<Vec<GkmClass>> {
        if d == 0 {
            return Ok(Vec::new());
        }
        let lower = self.piece(d - 1)?;
        let n = self.frame.nvars;
        let mut out = Vec::new();
        for k in 0..n {
            let var = Monomial::var(n, k);
            for b in &lower.basis {
                out.push(GkmClass::new(b.values.iter().map(|p| p.mul_monomial(&var)).collect()));
            }
        }
        Ok(out)
    }

    /// Evaluations at `a` of a basis of the degree-`d` piece of `H_W`; they
    /// span the evaluations of the whole degree-`d` piece.
    pub fn evaluations(&mut self, d: usize, a: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        if a.len() != self.frame.nvars {
            return Err(Error::Dimension { expected: self.frame.nvars, found: a.len() });
        }
        self.ensure(d)?;
        let y = self.frame.span_point(a)?;
        let p = &self.pieces[d];
        let values: Vec<Rational> = p.monomials.iter().map(|m| m.eval(&y)).collect();
        let nv = self.graph.num_vertices();
        Ok(p
            .basis
            .iter()
            .map(|b| {
                let mut out = vec![Rational::from(0); nv];
                for (col, c) in b {
                    out[col / p.width()] += c * &values[col % p.width()];
                }
                out
            })
            .collect())
    }
}

/// For each monomial, the terms of its restriction to `alpha = 0`, indexed by
/// a local numbering of the output monomials.
fn restriction_table(alpha: &LinearForm, monomials: &[Monomial]) -> Vec<Vec<(usize, Rational)>> {
    let pivot = alpha.first_nonzero().expect("nonzero weight");
    let images = crate::exact::hyperplane_substitution(alpha, pivot);
    let mut out_index: HashMap<Monomial, usize> = HashMap::new();
    monomials
        .iter()
        .map(|m| {
            let restricted = Polynomial::monomial(m.clone(), Rational::from(1))
                .substitute_linear(&images)
                .expect("matching variable count");
            restricted
                .terms()
                .map(|(t, c)| {
                    let next = out_index.len();
                    (*out_index.entry(t.clone()).or_insert(next), c.clone())
                })
                .collect()
        })
        .collect()
}

pub fn gkm_piece(g: &MomentGraph, d: usize) -> Result<GkmGradedPiece> {
    GkmModule::new(g)?.piece(d)
}

pub fn betti(g: &MomentGraph, max_degree: usize) -> Result<BettiVector> {
    GkmModule::new(g)?.betti(max_degree)
}

pub fn ordinary_basis(g: &MomentGraph, d: usize) -> Result<OrdinaryBasis> {
    GkmModule::new(g)?.ordinary_basis(d)
}

/// Positions in `big` of the vertices of `small`, matched by label.
pub fn vertex_embedding(big: &MomentGraph, small: &MomentGraph) -> Result<Vec<usize>> {
    if big.nvars() != small.nvars() {
        return Err(Error::Dimension { expected: big.nvars(), found: small.nvars() });
    }
    let index = big.label_index();
    small
        .vertices()
        .iter()
        .map(|l| {
            index
                .get(l.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("vertex {l:?} is not a vertex of the larger graph")))
        })
        .collect()
}

/// Matrix of restriction from the degree-`d` piece of `big` to that of
/// `small` (columns indexed by the basis of `big`).
pub fn restrict_classes(big: &mut GkmModule, small: &mut GkmModule, d: usize) -> Result<RationalMatrix> {
    let embed = vertex_embedding(big.graph(), small.graph())?;
    let columns = big
        .piece(d)?
        .basis
        .iter()
        .map(|c| small.coordinates(d, &c.restrict(&embed)))
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_columns(small.dim(d)?, &columns)
}

/// The induced map on ordinary cohomology in degree `d`.
pub fn restrict_ordinary(big: &mut GkmModule, small: &mut GkmModule, d: usize) -> Result<RationalMatrix> {
    let embed = vertex_embedding(big.graph(), small.graph())?;
    let columns = big
        .ordinary_basis(d)?
        .representatives
        .iter()
        .map(|c| small.ordinary_coordinates(d, &c.restrict(&embed)))
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_columns(small.betti_number(d)?, &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::graph::{bruhat_graph, hessenberg_graph, schubert_graph, Edge, HessenbergFunction};
    use crate::weyl::Permutation;

    fn hex() -> MomentGraph {
        hessenberg_graph(&HessenbergFunction::new(vec![2, 3, 3]).unwrap()).unwrap()
    }

    #[test]
    fn piece_dimensions() {
        let g2 = bruhat_graph(2).unwrap();
        assert_eq!(gkm_piece(&g2, 0).unwrap().dim(), 1);
        assert_eq!(gkm_piece(&g2, 1).unwrap().dim(), 3);
        assert_eq!(gkm_piece(&bruhat_graph(3).unwrap(), 1).unwrap().dim(), 5);
    }

    #[test]
    fn frames_agree() {
        for g in [bruhat_graph(2).unwrap(), bruhat_graph(3).unwrap(), hex()] {
            let mut reduced = GkmModule::new(&g).unwrap();
            let mut ident = GkmModule::with_frame(&g, FrameKind::Identity).unwrap();
            for d in 0..=3 {
                assert_eq!(reduced.dim(d).unwrap(), ident.dim(d).unwrap(), "degree {d}");
                assert_eq!(reduced.betti_number(d).unwrap(), ident.betti_number(d).unwrap(), "degree {d}");
            }
        }
    }

    #[test]
    fn basis_classes_satisfy_edge_conditions() {
        for g in [bruhat_graph(3).unwrap(), hex(), schubert_graph(3, &"231".parse().unwrap()).unwrap()] {
            let mut m = GkmModule::new(&g).unwrap();
            for d in 0..=3 {
                let piece = m.piece(d).unwrap();
                for class in &piece.basis {
                    check_in_piece(&g, class, d).unwrap();
                }
                // coordinates of basis vectors are unit vectors
                for (k, class) in piece.basis.iter().enumerate() {
                    let c = m.coordinates(d, class).unwrap();
                    assert!(c.iter().enumerate().all(|(j, a)| *a == i64::from(j == k)));
                }
            }
        }
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(&bruhat_graph(2).unwrap(), 12).unwrap().b, vec![1, 1]);
        assert_eq!(betti(&bruhat_graph(3).unwrap(), 12).unwrap().b, vec![1, 2, 2, 1]);
        assert_eq!(betti(&hex(), 12).unwrap().b, vec![1, 4, 1]);
        let schubert = schubert_graph(3, &"231".parse().unwrap()).unwrap();
        assert_eq!(betti(&schubert, 12).unwrap().b, vec![1, 2, 1]);
        assert_eq!(ordinary_basis(&schubert, 1).unwrap().dim(), 2);
        assert_eq!(ordinary_basis(&bruhat_graph(3).unwrap(), 1).unwrap().dim(), 2);
        let capped = betti(&bruhat_graph(3).unwrap(), 1).unwrap();
        assert_eq!(capped, BettiVector { b: vec![1, 2], complete: false });
    }

    #[test]
    fn disconnected_and_edgeless_graphs() {
        let points = hessenberg_graph(&HessenbergFunction::new(vec![1, 2, 3]).unwrap()).unwrap();
        assert_eq!(betti(&points, 12).unwrap().b, vec![6]);
        // two disjoint copies of P^1 with different weights
        let g = MomentGraph::new(
            3,
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            vec![
                Edge { u: 0, v: 1, weight: LinearForm::from_ints(&[1, -1, 0]) },
                Edge { u: 2, v: 3, weight: LinearForm::from_ints(&[0, 1, -1]) },
            ],
            vec![2, 1, 0],
        );
        assert_eq!(betti(&g, 12).unwrap().b, vec![2, 2]);
    }

    #[test]
    fn freeness_on_built_ins() {
        for g in [bruhat_graph(3).unwrap(), hex()] {
            let mut m = GkmModule::new(&g).unwrap();
            for row in m.freeness(4).unwrap() {
                assert_eq!(row.dim, row.expected, "{row:?}");
            }
        }
    }

    #[test]
    fn ordinary_coordinates_of_representatives() {
        let g = bruhat_graph(3).unwrap();
        let mut m = GkmModule::new(&g).unwrap();
        for d in 0..=3 {
            let basis = m.ordinary_basis(d).unwrap();
            for (k, rep) in basis.representatives.iter().enumerate() {
                let c = m.ordinary_coordinates(d, rep).unwrap();
                assert!(c.iter().enumerate().all(|(j, a)| *a == i64::from(j == k)));
            }
            for p in m.positive_products(d).unwrap() {
                assert!(m.ordinary_coordinates(d, &p).unwrap().iter().all(|a| *a == 0));
            }
        }
    }

    #[test]
    fn restriction_maps() {
        let mut big = GkmModule::new(&bruhat_graph(3).unwrap()).unwrap();
        let mut same = GkmModule::new(&schubert_graph(3, &Permutation::longest(3)).unwrap()).unwrap();
        let id = restrict_classes(&mut big, &mut same, 1).unwrap();
        assert!(id.is_identity());
        let mut h = GkmModule::new(&hex()).unwrap();
        assert_eq!(restrict_classes(&mut big, &mut h, 1).unwrap().rank(), 5);
        let mut bad = GkmModule::new(&bruhat_graph(2).unwrap()).unwrap();
        assert!(restrict_classes(&mut big, &mut bad, 1).is_err());
    }

    #[test]
    fn non_members_are_rejected() {
        let g = bruhat_graph(2).unwrap();
        let x1 = Polynomial::var(2, 0);
        let bad = GkmClass::new(vec![x1.clone(), Polynomial::zero(2)]);
        assert!(!is_gkm_class(&g, &bad).unwrap());
        let mut m = GkmModule::new(&g).unwrap();
        assert!(matches!(m.coordinates(1, &bad), Err(Error::NotInPiece { .. })));
        let good = GkmClass::new(vec![Polynomial::zero(2), Polynomial::from_linear(&LinearForm::from_ints(&[1, -1]))]);
        assert_eq!(m.coordinates(1, &good).unwrap().len(), 3);
        assert_eq!(good.scale(&int(2)).values()[1].num_terms(), 2);
    }

    #[test]
    fn products_stay_in_pieces() {
        let g = bruhat_graph(3).unwrap();
        let mut m = GkmModule::new(&g).unwrap();
        let p1 = m.piece(1).unwrap();
        let p2 = m.piece(2).unwrap();
        for u in &p1.basis {
            for v in p2.basis.iter().step_by(3) {
                check_in_piece(&g, &u.mul(v).unwrap(), 3).unwrap();
            }
        }
    }
}
