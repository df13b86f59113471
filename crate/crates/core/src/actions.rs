//! The two actions of `S_n` on GKM classes of a graph with vertices in `S_n`,
//! and the representations they induce on ordinary cohomology.
//!
//! The left (dot) action is `(w.f)(x) = w(f(w^{-1}x))`, built from left
//! translation of vertices. The right action is `(f.w)(x) = f(xw^{-1})`,
//! built from right translation. Right translation preserves edge weights, so
//! the right action is `Q[x]`-linear and respects the edge conditions.
//! Pulling back along left translation (`f(wx)`) does not: it sends the edge
//! condition for `a` to one for `w^{-1}a`. A graph without right translations,
//! such as a proper Hessenberg graph, has no right action here.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::RationalMatrix;
use crate::gkm::{check_in_piece, GkmClass, GkmModule};
use crate::graph::{apply_symmetry, right_translation, GraphSymmetry, MomentGraph};
use crate::reps::{class_function_from_elements, CharacterVector};
use crate::weyl::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Left,
    Right,
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Left => "left",
            Self::Right => "right",
        })
    }
}

impl FromStr for ActionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Self::Left),
            "right" => Ok(Self::Right),
            _ => Err(Error::Parse(format!("unknown action {s:?}"))),
        }
    }
}

fn check_size(g: &MomentGraph, class: &GkmClass) -> Result<()> {
    if class.num_vertices() != g.num_vertices() {
        return Err(Error::Dimension { expected: g.num_vertices(), found: class.num_vertices() });
    }
    Ok(())
}

/// `out(x) = f(sym(x))`: pull a class back along a weight-preserving symmetry.
pub fn right_action_with(sym: &GraphSymmetry, class: &GkmClass) -> GkmClass {
    GkmClass::new(sym.vertex_map.iter().map(|&y| class.value(y).clone()).collect())
}

/// `(w.f)(x) = w(f(w^{-1}x))`, given the symmetry of `w`.
pub fn left_action_with(sym: &GraphSymmetry, class: &GkmClass) -> GkmClass {
    let mut values = class.values().to_vec();
    for (y, &wy) in sym.vertex_map.iter().enumerate() {
        values[wy] = sym.apply_poly(class.value(y));
    }
    GkmClass::new(values)
}

/// The symmetry whose action gives the matrix of `w`: right translation by
/// `w` for the right action, left translation with twist for the left one.
pub fn symmetry_for(g: &MomentGraph, kind: ActionKind, w: &Permutation) -> Result<GraphSymmetry> {
    match kind {
        ActionKind::Left => apply_symmetry(g, w),
        ActionKind::Right => right_translation(g, w),
    }
}

fn act_with(kind: ActionKind, sym: &GraphSymmetry, class: &GkmClass) -> GkmClass {
    match kind {
        ActionKind::Left => left_action_with(sym, class),
        ActionKind::Right => right_action_with(sym, class),
    }
}

/// `(f.w)(x) = f(xw^{-1})`.
pub fn right_action_on_class(g: &MomentGraph, w: &Permutation, class: &GkmClass) -> Result<GkmClass> {
    check_size(g, class)?;
    Ok(right_action_with(&right_translation(g, &w.inverse())?, class))
}

pub fn left_action_on_class(g: &MomentGraph, w: &Permutation, class: &GkmClass) -> Result<GkmClass> {
    check_size(g, class)?;
    Ok(left_action_with(&apply_symmetry(g, w)?, class))
}

/// Symmetries of `g` for every element of `S_nvars`, in lexicographic order.
pub fn all_symmetries(g: &MomentGraph, kind: ActionKind) -> Result<Vec<(Permutation, GraphSymmetry)>> {
    Permutation::all(g.nvars())
        .into_iter()
        .map(|w| {
            let sym = symmetry_for(g, kind, &w)?;
            Ok((w, sym))
        })
        .collect()
}

/// Matrices of an action on one degree of ordinary cohomology. For the right
/// action the matrix of `w` is that of `f -> f.w^{-1}`, so both kinds are
/// homomorphisms `M(vw) = M(v) M(w)`.
#[derive(Clone, Debug)]
pub struct ActionMatrices {
    pub kind: ActionKind,
    pub degree: usize,
    pub elements: Vec<Permutation>,
    pub matrices: Vec<RationalMatrix>,
}

impl ActionMatrices {
    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(0, RationalMatrix::rows)
    }

    pub fn matrix(&self, w: &Permutation) -> Option<&RationalMatrix> {
        self.elements.iter().position(|x| x == w).map(|k| &self.matrices[k])
    }

    pub fn verify_homomorphism(&self) -> Result<()> {
        for (v, mv) in self.elements.iter().zip(&self.matrices) {
            if mv.inverse().is_none() {
                return Err(Error::Representation(format!("matrix of {v} is singular")));
            }
            for (w, mw) in self.elements.iter().zip(&self.matrices) {
                let vw = v.compose(w)?;
                let mvw = self
                    .matrix(&vw)
                    .ok_or_else(|| Error::Representation(format!("no matrix for {vw}")))?;
                if &mv.mul(mw)? != mvw {
                    return Err(Error::Representation(format!("M({vw}) differs from M({v}) M({w})")));
                }
            }
        }
        Ok(())
    }

    /// Dimension of the subspace fixed by every matrix.
    pub fn invariants_dim(&self) -> Result<usize> {
        let d = self.dim();
        let mut stacked = Vec::new();
        for m in &self.matrices {
            let diff = m.sub(&RationalMatrix::identity(d))?;
            for i in 0..d {
                stacked.push(diff.row(i).to_vec());
            }
        }
        if stacked.is_empty() {
            return Ok(d);
        }
        Ok(d - RationalMatrix::from_rows(stacked)?.rank())
    }
}

/// The action of `S_n` on ordinary cohomology in degree `d`, computed on the
/// quotient by `Q[x]^+ H`. The quotient action is checked to be well defined
/// by mapping a spanning set of `Q[x]^+ H` and checking it lands in zero.
pub fn action_on_ordinary(module: &mut GkmModule, kind: ActionKind, d: usize) -> Result<ActionMatrices> {
    let syms = all_symmetries(module.graph(), kind)?;
    let reps = module.ordinary_basis(d)?.representatives;
    let subtracted = module.positive_products(d)?;
    let act = |sym: &GraphSymmetry, c: &GkmClass| act_with(kind, sym, c);
    let mut elements = Vec::with_capacity(syms.len());
    let mut matrices = Vec::with_capacity(syms.len());
    for (w, sym) in &syms {
        for p in &subtracted {
            let image = module.ordinary_coordinates(d, &act(sym, p))?;
            if image.iter().any(|a| *a != 0) {
                return Err(Error::QuotientAction(format!("{kind} action of {w} moves Q[x]^+ H out of itself in degree {d}")));
            }
        }
        let columns = reps
            .iter()
            .map(|r| module.ordinary_coordinates(d, &act(sym, r)))
            .collect::<Result<Vec<_>>>()?;
        elements.push(w.clone());
        matrices.push(RationalMatrix::from_columns(reps.len(), &columns)?);
    }
    let am = ActionMatrices { kind, degree: d, elements, matrices };
    am.verify_homomorphism()?;
    Ok(am)
}

/// Traces, checked to be constant on conjugacy classes.
pub fn character_of_action(am: &ActionMatrices) -> Result<CharacterVector> {
    let n = am.elements.first().map_or(0, Permutation::n);
    class_function_from_elements(n, |w| {
        am.matrix(w)
            .map(RationalMatrix::trace)
            .ok_or_else(|| Error::Representation(format!("no matrix for {w}")))
    })
}

/// Pairs `(element, basis index)` whose image fails the edge conditions.
pub fn stability_failures(g: &MomentGraph, kind: ActionKind, basis: &[GkmClass], d: usize) -> Result<Vec<(Permutation, usize)>> {
    let mut out = Vec::new();
    for (w, sym) in all_symmetries(g, kind)? {
        for (k, c) in basis.iter().enumerate() {
            if check_in_piece(g, &act_with(kind, &sym, c), d).is_err() {
                out.push((w.clone(), k));
            }
        }
    }
    Ok(out)
}
