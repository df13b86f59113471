//! The evaluation filtration of the space of functions on vertices.
//!
//! At a regular point `a`, evaluating every class of degree at most `i`
//! gives a subspace `F_i` of `Q^vertices`. The `F_i` are nested, multiply
//! like a filtered algebra, exhaust the space, and their successive quotients
//! have the dimensions of ordinary cohomology.

use std::fmt::Write as _;

use crate::actions::{action_on_ordinary, character_of_action, ActionKind};
use crate::error::{Error, Result};
use crate::exact::{int, Rational, Subspace};
use crate::gkm::{vertex_embedding, GkmModule};
use crate::graph::{apply_symmetry, right_translation, MomentGraph};
use crate::reps::{class_function_from_elements, CharacterVector};
use crate::report::CheckReport;
use crate::weyl::Permutation;

/// A point at which no edge weight of the graph it was built for vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularPoint(Vec<Rational>);

impl RegularPoint {
    pub fn new(g: &MomentGraph, a: Vec<Rational>) -> Result<Self> {
        if a.len() != g.nvars() {
            return Err(Error::Dimension { expected: g.nvars(), found: a.len() });
        }
        if let Some(edge) = first_vanishing_edge(g, &a)? {
            return Err(Error::NotRegular { edge });
        }
        Ok(Self(a))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

fn first_vanishing_edge(g: &MomentGraph, a: &[Rational]) -> Result<Option<usize>> {
    for (k, e) in g.edges().iter().enumerate() {
        if e.weight.eval(a)? == 0 {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn geometric(nvars: usize, t: i64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(nvars);
    let mut p = int(1);
    for _ in 0..nvars {
        out.push(p.clone());
        p *= int(t);
    }
    out
}

/// The first `count` points `(1, t, t^2, ...)`, `t = 1, 2, ...`, regular for
/// every graph in `graphs`. All graphs must share the number of variables.
/// Terminates because each weight vanishes at finitely many `t`.
pub fn regular_points(graphs: &[&MomentGraph], count: usize) -> Result<Vec<RegularPoint>> {
    let Some(first) = graphs.first() else {
        return Err(Error::InvalidArgument("no graphs given".into()));
    };
    let nvars = first.nvars();
    if let Some(g) = graphs.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::Dimension { expected: nvars, found: g.nvars() });
    }
    let mut out = Vec::with_capacity(count);
    let mut t = 1;
    while out.len() < count {
        let a = geometric(nvars, t);
        let mut regular = true;
        for g in graphs {
            regular &= first_vanishing_edge(g, &a)?.is_none();
        }
        if regular && !out.iter().any(|p: &RegularPoint| p.0 == a) {
            out.push(RegularPoint(a));
        }
        t += 1;
    }
    Ok(out)
}

pub fn find_regular_point(g: &MomentGraph) -> Result<RegularPoint> {
    Ok(regular_points(&[g], 1)?.remove(0))
}

/// Evaluations at `a` of all classes of degree at most `i`.
pub fn evaluate_classes(module: &mut GkmModule, a: &RegularPoint, i: usize) -> Result<Subspace> {
    let g = module.graph();
    if let Some(edge) = first_vanishing_edge(g, a.coords())? {
        return Err(Error::NotRegular { edge });
    }
    let nv = g.num_vertices();
    let mut vectors = Vec::new();
    for d in 0..=i {
        vectors.extend(module.evaluations(d, a.coords())?);
    }
    Subspace::span(nv, vectors)
}

#[derive(Clone, Debug)]
pub struct Filtration {
    point: RegularPoint,
    levels: Vec<Subspace>,
}

impl Filtration {
    /// Assemble a filtration from given levels without checking anything,
    /// for feeding the checks with hand-made data.
    pub fn from_parts(point: RegularPoint, levels: Vec<Subspace>) -> Self {
        Self { point, levels }
    }

    pub fn point(&self) -> &RegularPoint {
        &self.point
    }

    pub fn levels(&self) -> &[Subspace] {
        &self.levels
    }

    pub fn ambient(&self) -> usize {
        self.levels.first().map_or(0, Subspace::ambient)
    }

    /// `F_i`, with levels past the last one equal to the last one.
    pub fn level(&self, i: usize) -> Option<&Subspace> {
        self.levels.get(i).or(self.levels.last())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Subspace::dim).collect()
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        let mut prev = 0;
        self.dims()
            .into_iter()
            .map(|d| {
                let g = d.saturating_sub(prev);
                prev = d;
                g
            })
            .collect()
    }
}

/// Levels `F_0, F_1, ...` at `point`, stopping at the first full one.
pub fn build_filtration_at(module: &mut GkmModule, point: RegularPoint, max_degree: usize) -> Result<Filtration> {
    let nv = module.graph().num_vertices();
    let mut levels: Vec<Subspace> = Vec::new();
    let mut i = 0;
    loop {
        if i > max_degree {
            return Err(Error::DegreeCap { max_degree });
        }
        let mut vectors = levels.last().map(Subspace::basis).unwrap_or_default();
        vectors.extend(module.evaluations(i, point.coords())?);
        let level = Subspace::span(nv, vectors)?;
        let full = level.dim() == nv;
        levels.push(level);
        if full {
            return Ok(Filtration { point, levels });
        }
        i += 1;
    }
}

pub fn build_filtration(module: &mut GkmModule, max_degree: usize) -> Result<Filtration> {
    let point = find_regular_point(module.graph())?;
    build_filtration_at(module, point, max_degree)
}

fn trim(v: &[usize]) -> &[usize] {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
    &v[..end]
}

fn pointwise(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    u.iter().zip(v).map(|(a, b)| a * b).collect()
}

/// Checks that `filt` has graded dimensions equal to the Betti numbers, is
/// nested, exhausts the space, and satisfies `F_i F_j` in `F_{i+j}` on all
/// pairs of basis vectors.
pub fn check_graded_iso(module: &mut GkmModule, filt: &Filtration, max_degree: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let nv = module.graph().num_vertices();
    let betti = module.betti(max_degree)?;
    let graded = filt.graded_dims();
    r.check(
        "graded-dims-equal-betti",
        trim(&graded) == trim(&betti.b),
        format!("graded {graded:?}, betti {:?}", betti.b),
    );
    let mut nested = None;
    for (i, w) in filt.levels.windows(2).enumerate() {
        if nested.is_none() && !w[1].contains_subspace(&w[0])? {
            nested = Some(i);
        }
    }
    r.check(
        "levels-nested",
        nested.is_none(),
        nested.map_or_else(String::new, |i| format!("F_{i} is not contained in F_{}", i + 1)),
    );
    let top = filt.levels.last().map_or(0, Subspace::dim);
    r.check("union-is-everything", top == nv, format!("top level has dimension {top} of {nv}"));
    let bases: Vec<Vec<Vec<Rational>>> = filt.levels.iter().map(Subspace::basis).collect();
    let mut violation = String::new();
    let mut pairs = 0usize;
    'outer: for i in 0..bases.len() {
        for j in i..bases.len() {
            let target = filt.level(i + j).expect("nonempty filtration");
            for (p, u) in bases[i].iter().enumerate() {
                for (q, v) in bases[j].iter().enumerate() {
                    pairs += 1;
                    if !target.contains(&pointwise(u, v))? {
                        let _ = write!(violation, "basis vector {p} of F_{i} times basis vector {q} of F_{j} leaves F_{}", i + j);
                        break 'outer;
                    }
                }
            }
        }
    }
    r.check(
        "product-rule",
        violation.is_empty(),
        if violation.is_empty() { format!("{pairs} pairs") } else { violation },
    );
    Ok(r)
}

/// Pull a vector back along a vertex map: `out[x] = v[map[x]]`.
fn pull_back(map: &[usize], v: &[Rational]) -> Vec<Rational> {
    map.iter().map(|&y| v[y].clone()).collect()
}

fn first_unstable_level(filt: &Filtration, maps: &[(Permutation, Vec<usize>)]) -> Result<Option<(usize, Permutation)>> {
    for (i, level) in filt.levels.iter().enumerate() {
        let basis = level.basis();
        for (w, map) in maps {
            for v in &basis {
                if !level.contains(&pull_back(map, v))? {
                    return Ok(Some((i, w.clone())));
                }
            }
        }
    }
    Ok(None)
}

/// Every `F_i` is stable under the right action. The right action moves
/// values between vertices and leaves polynomials alone, so evaluation at any
/// `a` commutes with it, and stability means stability under right translation
/// of vertices. Fails with `SymmetryViolation` when the graph has no right
/// translations.
pub fn check_right_stability(g: &MomentGraph, filt: &Filtration) -> Result<CheckReport> {
    let maps = Permutation::all(g.nvars())
        .into_iter()
        .map(|w| {
            let sym = right_translation(g, &w)?;
            Ok((w, sym.vertex_map))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut r = CheckReport::new();
    let bad = first_unstable_level(filt, &maps)?;
    r.check(
        "right-action-stable",
        bad.is_none(),
        bad.map_or_else(String::new, |(i, w)| format!("F_{i} is not stable under {w}")),
    );
    Ok(r)
}

/// Whether each level is stable under left translation of vertices, which is
/// not implied by anything and is only recorded.
pub fn observe_left_translation(g: &MomentGraph, filt: &Filtration, r: &mut CheckReport) -> Result<()> {
    let maps = Permutation::all(g.nvars())
        .into_iter()
        .map(|w| {
            let sym = apply_symmetry(g, &w)?;
            Ok((w.inverse(), sym.vertex_map))
        })
        .collect::<Result<Vec<_>>>()?;
    let value = match first_unstable_level(filt, &maps)? {
        None => "stable".to_string(),
        Some((i, w)) => format!("F_{i} moved by {w}"),
    };
    r.observe("left-translation-stability", value);
    Ok(())
}

/// Rebuilds the filtration at `count` distinct regular points. Graded
/// dimensions are asserted equal; whether the subspaces coincide is recorded.
pub fn check_point_independence(module: &mut GkmModule, count: usize, max_degree: usize) -> Result<CheckReport> {
    let points = regular_points(&[module.graph()], count)?;
    let mut filts = Vec::with_capacity(count);
    for p in points {
        filts.push(build_filtration_at(module, p, max_degree)?);
    }
    let mut r = CheckReport::new();
    let dims: Vec<Vec<usize>> = filts.iter().map(Filtration::graded_dims).collect();
    r.check(
        "graded-dims-independent-of-point",
        dims.windows(2).all(|w| w[0] == w[1]),
        format!("{dims:?} at {:?}", filts.iter().map(|f| f.point.to_strings()).collect::<Vec<_>>()),
    );
    let same = filts.windows(2).all(|w| w[0].levels == w[1].levels);
    r.observe("subspaces-independent-of-point", same.to_string());
    Ok(r)
}

/// Whether ordinary restriction from the larger graph is known to be onto.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surjectivity {
    Known,
    Unknown,
}

/// Compares `rho^*(E_i)`, the restriction to the small graph's vertices of
/// the big graph's filtration, with the small graph's own `F_i`, both taken
/// at a point regular for both. Equality is asserted only when restriction is
/// known to be onto; otherwise containments are recorded.
pub fn check_subgraph_compat(
    big: &mut GkmModule,
    small: &mut GkmModule,
    surjectivity: Surjectivity,
    max_degree: usize,
) -> Result<CheckReport> {
    let embed = vertex_embedding(big.graph(), small.graph())?;
    let point = regular_points(&[big.graph(), small.graph()], 1)?.remove(0);
    let e = build_filtration_at(big, point.clone(), max_degree)?;
    let f = build_filtration_at(small, point.clone(), max_degree)?;
    let nv = small.graph().num_vertices();
    let mut r = CheckReport::new();
    r.observe("common-regular-point", format!("{:?}", point.to_strings()));
    let top = e.levels.len().max(f.levels.len());
    let mut first_mismatch = None;
    for i in 0..top {
        let rho = Subspace::span(nv, e.level(i).expect("nonempty").basis().iter().map(|v| pull_back(&embed, v)))?;
        let fi = f.level(i).expect("nonempty");
        let equal = &rho == fi;
        if !equal && first_mismatch.is_none() {
            first_mismatch = Some(i);
        }
        if surjectivity == Surjectivity::Unknown {
            r.observe(
                format!("level-{i}"),
                format!(
                    "dim rho(E) {}, dim F {}, rho(E) in F {}, F in rho(E) {}",
                    rho.dim(),
                    fi.dim(),
                    fi.contains_subspace(&rho)?,
                    rho.contains_subspace(fi)?
                ),
            );
        }
    }
    if surjectivity == Surjectivity::Known {
        r.check(
            "restricted-filtration-equal",
            first_mismatch.is_none(),
            first_mismatch.map_or_else(|| format!("{top} levels"), |i| format!("rho(E_{i}) differs from F_{i}")),
        );
    }
    Ok(r)
}

/// Character of right translation on the vertices.
pub fn vertex_permutation_character(g: &MomentGraph) -> Result<CharacterVector> {
    class_function_from_elements(g.nvars(), |w| {
        let sym = right_translation(g, w)?;
        let fixed = sym.vertex_map.iter().enumerate().filter(|(x, y)| x == *y).count();
        Ok(int(fixed as i64))
    })
}

/// Compares the permutation character on vertices with the sum over degrees
/// of the right-action characters on ordinary cohomology, and checks that the
/// filtration is stable under the right action.
pub fn check_equivalence_theorem(module: &mut GkmModule, max_degree: usize) -> Result<CheckReport> {
    let g = module.graph().clone();
    let perm = vertex_permutation_character(&g)?;
    let betti = module.betti(max_degree)?;
    if !betti.complete {
        return Err(Error::DegreeCap { max_degree });
    }
    let mut total = CharacterVector::zero(g.nvars());
    for d in 0..betti.b.len() {
        let am = action_on_ordinary(module, ActionKind::Right, d)?;
        total = total.add(&character_of_action(&am)?)?;
    }
    let mut r = CheckReport::new();
    r.check("characters-equal", total == perm, format!("cohomology {total}, vertices {perm}"));
    let filt = build_filtration(module, max_degree)?;
    r.extend(check_right_stability(&g, &filt)?);
    observe_left_translation(&g, &filt, &mut r)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bruhat_graph, hessenberg_graph, schubert_graph, HessenbergFunction};

    const CAP: usize = 12;

    fn hex() -> MomentGraph {
        hessenberg_graph(&HessenbergFunction::new(vec![2, 3, 3]).unwrap()).unwrap()
    }

    #[test]
    fn regular_point_search() {
        let g = bruhat_graph(2).unwrap();
        assert_eq!(find_regular_point(&g).unwrap().coords(), &[int(1), int(2)]);
        let single = MomentGraph::new(2, vec!["12".into()], Vec::new(), vec![1, 0]);
        assert_eq!(find_regular_point(&single).unwrap().coords(), &[int(1), int(1)]);
        let pts = regular_points(&[&bruhat_graph(3).unwrap()], 3).unwrap();
        assert_eq!(pts.len(), 3);
        assert_ne!(pts[1], pts[2]);
        assert!(matches!(RegularPoint::new(&g, vec![int(3), int(3)]), Err(Error::NotRegular { edge: 0 })));
    }

    #[test]
    fn filtration_dims() {
        let cases = [(bruhat_graph(2).unwrap(), vec![1, 2]), (bruhat_graph(3).unwrap(), vec![1, 3, 5, 6]), (hex(), vec![1, 5, 6])];
        for (g, dims) in cases {
            let mut m = GkmModule::new(&g).unwrap();
            let f = build_filtration(&mut m, CAP).unwrap();
            assert_eq!(f.dims(), dims);
            let r = check_graded_iso(&mut m, &f, CAP).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn evaluation_low_degrees() {
        let g = bruhat_graph(2).unwrap();
        let mut m = GkmModule::new(&g).unwrap();
        let a = find_regular_point(&g).unwrap();
        assert_eq!(evaluate_classes(&mut m, &a, 0).unwrap().dim(), 1);
        assert_eq!(evaluate_classes(&mut m, &a, 1).unwrap(), Subspace::full(2));
    }

    #[test]
    fn corrupted_filtration_is_caught() {
        let g = bruhat_graph(3).unwrap();
        let mut m = GkmModule::new(&g).unwrap();
        let f = build_filtration(&mut m, CAP).unwrap();
        let mut levels = f.levels().to_vec();
        // Swap in a level 1 that misses the constants.
        let e0: Vec<Rational> = (0..6).map(|k| int(i64::from(k == 0))).collect();
        let e1: Vec<Rational> = (0..6).map(|k| int(i64::from(k == 1))).collect();
        levels[1] = Subspace::span(6, [e0, e1]).unwrap();
        let bad = Filtration::from_parts(f.point().clone(), levels);
        let r = check_graded_iso(&mut m, &bad, CAP).unwrap();
        assert!(!r.find("levels-nested").unwrap().passed);
        assert!(!r.find("graded-dims-equal-betti").unwrap().passed);
        assert!(!check_right_stability(&g, &bad).unwrap().passed());
    }

    #[test]
    fn right_stability_and_equivalence() {
        for n in [2, 3] {
            let g = bruhat_graph(n).unwrap();
            let mut m = GkmModule::new(&g).unwrap();
            let r = check_equivalence_theorem(&mut m, CAP).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(vertex_permutation_character(&g).unwrap(), CharacterVector::regular(n));
        }
        let mut m = GkmModule::new(&hex()).unwrap();
        assert!(matches!(check_equivalence_theorem(&mut m, CAP), Err(Error::SymmetryViolation(_))));
    }

    #[test]
    fn schubert_compatibility() {
        let big = bruhat_graph(3).unwrap();
        let small = schubert_graph(3, &"231".parse().unwrap()).unwrap();
        let mut mb = GkmModule::new(&big).unwrap();
        let mut ms = GkmModule::new(&small).unwrap();
        let r = check_subgraph_compat(&mut mb, &mut ms, Surjectivity::Known, CAP).unwrap();
        assert!(r.passed(), "{r:?}");
        let mut mb2 = GkmModule::new(&big).unwrap();
        let r = check_subgraph_compat(&mut mb, &mut mb2, Surjectivity::Known, CAP).unwrap();
        assert!(r.passed());
        let mut mh = GkmModule::new(&hex()).unwrap();
        let r = check_subgraph_compat(&mut mb, &mut mh, Surjectivity::Unknown, CAP).unwrap();
        assert!(r.assertions.is_empty());
        assert!(!r.observations.is_empty());
    }

    #[test]
    fn point_independence() {
        for g in [bruhat_graph(3).unwrap(), hex()] {
            let mut m = GkmModule::new(&g).unwrap();
            let r = check_point_independence(&mut m, 3, CAP).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
