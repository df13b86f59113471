//! Moment graphs: torus-fixed points as vertices, invariant curves as edges
//! labeled by their weights, plus an orientation coweight.
//!
//! Edge weights are stored up to sign. An edge `{u, v, alpha}` is read as
//! carrying the tangent character `alpha` at `u`, so its source is `u` when
//! `<alpha, lambda> > 0` and `v` otherwise.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, LinearForm, Polynomial, Rational, RationalMatrix};
use crate::weyl::{bruhat_leq, weyl_act_on_form, Permutation, RootSystemA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: LinearForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentGraph {
    nvars: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    lambda: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    LambdaLength { expected: usize, found: usize },
    DuplicateLabel { label: String },
    EndpointOutOfRange { edge: usize },
    Loop { edge: usize },
    WeightLength { edge: usize, found: usize },
    ZeroWeight { edge: usize },
    OrientationDegenerate { edge: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LambdaLength { expected, found } => write!(f, "lambda has length {found}, expected {expected}"),
            Self::DuplicateLabel { label } => write!(f, "vertex label {label:?} repeated"),
            Self::EndpointOutOfRange { edge } => write!(f, "edge {edge} has an endpoint out of range"),
            Self::Loop { edge } => write!(f, "edge {edge} joins a vertex to itself"),
            Self::WeightLength { edge, found } => write!(f, "edge {edge} weight has {found} coefficients"),
            Self::ZeroWeight { edge } => write!(f, "edge {edge} has zero weight"),
            Self::OrientationDegenerate { edge } => write!(f, "lambda is orthogonal to the weight of edge {edge}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Conditions that are legal but unusual, e.g. isolated vertices.
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msgs: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

impl MomentGraph {
    /// Unchecked constructor; see [`MomentGraph::validate`].
    pub fn new(nvars: usize, vertices: Vec<String>, edges: Vec<Edge>, lambda: Vec<i64>) -> Self {
        Self { nvars, vertices, edges, lambda }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.lambda.len() != self.nvars {
            report.violations.push(Violation::LambdaLength { expected: self.nvars, found: self.lambda.len() });
        }
        let mut seen = HashMap::new();
        for label in &self.vertices {
            if seen.insert(label.as_str(), ()).is_some() {
                report.violations.push(Violation::DuplicateLabel { label: label.clone() });
            }
        }
        let n = self.vertices.len();
        let mut degree = vec![0usize; n];
        for (k, e) in self.edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                report.violations.push(Violation::EndpointOutOfRange { edge: k });
                continue;
            }
            if e.u == e.v {
                report.violations.push(Violation::Loop { edge: k });
            }
            degree[e.u] += 1;
            degree[e.v] += 1;
            if e.weight.nvars() != self.nvars {
                report.violations.push(Violation::WeightLength { edge: k, found: e.weight.nvars() });
                continue;
            }
            if e.weight.is_zero() {
                report.violations.push(Violation::ZeroWeight { edge: k });
                continue;
            }
            if self.lambda.len() == self.nvars && e.weight.pair(&self.lambda).is_ok_and(|p| p == 0) {
                report.violations.push(Violation::OrientationDegenerate { edge: k });
            }
        }
        if n > 1 {
            let isolated = degree.iter().filter(|&&d| d == 0).count();
            if isolated > 0 {
                report.warnings.push(format!("{isolated} isolated vertices"));
            }
        }
        report
    }

    pub fn check_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report))
        }
    }

    /// `(source, sink)` of edge `k` under the orientation coweight.
    pub fn orient(&self, k: usize) -> Result<(usize, usize)> {
        let e = &self.edges[k];
        let p = e.weight.pair(&self.lambda)?;
        if p > 0 {
            Ok((e.u, e.v))
        } else if p < 0 {
            Ok((e.v, e.u))
        } else {
            Err(Error::InvalidGraph(ValidationReport {
                violations: vec![Violation::OrientationDegenerate { edge: k }],
                warnings: Vec::new(),
            }))
        }
    }

    /// Number of vertices with exactly `i` incoming edges, for each `i`.
    pub fn in_degree_census(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.num_vertices()];
        for k in 0..self.edges.len() {
            indeg[self.orient(k)?.1] += 1;
        }
        let top = indeg.iter().copied().max().unwrap_or(0);
        let mut census = vec![0; top + 1];
        for d in indeg {
            census[d] += 1;
        }
        Ok(census)
    }

    /// Full subgraph on the given vertices, in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Self {
        let mut new_index = vec![None; self.num_vertices()];
        for (k, &v) in keep.iter().enumerate() {
            new_index[v] = Some(k);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (new_index[e.u], new_index[e.v]) {
                (Some(u), Some(v)) => Some(Edge { u, v, weight: e.weight.clone() }),
                _ => None,
            })
            .collect();
        Self {
            nvars: self.nvars,
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges,
            lambda: self.lambda.clone(),
        }
    }

    /// Vertex labels parsed as permutations of `{1..nvars}`.
    pub fn vertex_permutations(&self) -> Result<Vec<Permutation>> {
        self.vertices
            .iter()
            .map(|l| {
                let w: Permutation = l.parse()?;
                if w.n() != self.nvars {
                    return Err(Error::InvalidArgument(format!("vertex {l:?} is not in S_{}", self.nvars)));
                }
                Ok(w)
            })
            .collect()
    }

    /// Edge lookup by unordered endpoint pair.
    pub fn edge_map(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (k, e) in self.edges.iter().enumerate() {
            map.entry((e.u.min(e.v), e.u.max(e.v))).or_default().push(k);
        }
        map
    }

    /// Connected components as a vertex-to-component map.
    pub fn components(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            if e.u < n && e.v < n {
                let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
                parent[a] = b;
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }
}

fn default_lambda(n: usize) -> Vec<i64> {
    (0..n as i64).rev().collect()
}

/// Moment graph of the flag variety `GL_n / B`: vertices `S_n`, an edge
/// `{x, r_alpha x}` with weight the positive root `alpha` for every
/// reflection, oriented by `lambda = (n-1, ..., 1, 0)`. The first endpoint of
/// each edge is the shorter one.
pub fn bruhat_graph(n: usize) -> Result<MomentGraph> {
    bruhat_with_filter(n, |_, _, _| true)
}

fn bruhat_with_filter(
    n: usize,
    mut keep: impl FnMut(&Permutation, &Permutation, &LinearForm) -> bool,
) -> Result<MomentGraph> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let perms = Permutation::all(n);
    let index: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let roots = RootSystemA::new(n);
    let mut edges = Vec::new();
    for (ix, x) in perms.iter().enumerate() {
        for (i, j, alpha) in roots.positive_roots() {
            let t = Permutation::transposition(n, i + 1, j + 1)?;
            let y = t.compose(x)?;
            if y.length() > x.length() && keep(x, &y, alpha) {
                edges.push(Edge { u: ix, v: index[&y], weight: alpha.clone() });
            }
        }
    }
    Ok(MomentGraph::new(n, perms.iter().map(ToString::to_string).collect(), edges, default_lambda(n)))
}

/// Full subgraph of `bruhat_graph(n)` on the Bruhat interval `[e, w]`.
pub fn schubert_graph(n: usize, w: &Permutation) -> Result<MomentGraph> {
    if w.n() != n {
        return Err(Error::Dimension { expected: n, found: w.n() });
    }
    let full = bruhat_graph(n)?;
    let perms = full.vertex_permutations()?;
    let mut keep = Vec::new();
    for (k, x) in perms.iter().enumerate() {
        if bruhat_leq(x, w)? {
            keep.push(k);
        }
    }
    Ok(full.induced_subgraph(&keep))
}

/// A Hessenberg function: nondecreasing `h: {1..n} -> {1..n}` with `h(i) >= i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd)]
pub struct HessenbergFunction(Vec<usize>);

impl HessenbergFunction {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        for (i, &v) in h.iter().enumerate() {
            if v < i + 1 || v > n {
                return Err(Error::InvalidArgument(format!("h({}) = {v} is out of range [{}, {n}]", i + 1, i + 1)));
            }
        }
        if h.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(format!("{h:?} is not nondecreasing")));
        }
        Ok(Self(h))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Whether the root `x_i - x_j` (0-based) lies in `Phi(h)`: all positive
    /// roots, and the negative root `x_i - x_j`, `i > j`, when `i <= h(j)`.
    pub fn contains_root(&self, i: usize, j: usize) -> bool {
        i < j || (i > j && i < self.0[j])
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.n() == other.n() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Moment graph of the regular semisimple Hessenberg variety `X_h`: the edge
/// `{x, r_alpha x}` of the Bruhat graph is kept iff `x^{-1}(alpha)` lies in
/// `Phi(h)`, tested at both endpoints.
pub fn hessenberg_graph(h: &HessenbergFunction) -> Result<MomentGraph> {
    let n = h.n();
    let roots = RootSystemA::new(n);
    bruhat_with_filter(n, |x, y, alpha| {
        [x, y].iter().all(|z| {
            let beta = weyl_act_on_form(&z.inverse(), alpha).expect("sizes agree");
            let (i, j) = roots.as_root(&beta).expect("image of a root is a root");
            h.contains_root(i, j)
        })
    })
}

/// A vertex permutation together with a linear map on coordinates (columns
/// are the images of the coordinate functions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSymmetry {
    pub vertex_map: Vec<usize>,
    pub form_map: RationalMatrix,
}

impl GraphSymmetry {
    pub fn apply_form(&self, alpha: &LinearForm) -> LinearForm {
        LinearForm::new(self.form_map.mul_vec(alpha.coeffs()).expect("form map matches nvars"))
    }

    /// The algebra automorphism of the polynomial ring extending the form map.
    pub fn apply_poly(&self, p: &Polynomial) -> Polynomial {
        let images: Vec<LinearForm> =
            (0..self.form_map.cols()).map(|k| LinearForm::new(self.form_map.column(k))).collect();
        p.substitute_linear(&images).expect("form map matches nvars")
    }

    /// Checks that every edge maps to an edge with weight `±form_map(alpha)`.
    pub fn check(&self, g: &MomentGraph) -> Result<()> {
        if self.vertex_map.len() != g.num_vertices() {
            return Err(Error::Dimension { expected: g.num_vertices(), found: self.vertex_map.len() });
        }
        let edges = g.edge_map();
        for (k, e) in g.edges().iter().enumerate() {
            let (a, b) = (self.vertex_map[e.u], self.vertex_map[e.v]);
            let image = self.apply_form(&e.weight);
            let ok = edges
                .get(&(a.min(b), a.max(b)))
                .is_some_and(|ks| ks.iter().any(|&j| g.edges()[j].weight.equals_up_to_sign(&image)));
            if !ok {
                return Err(Error::SymmetryViolation(format!(
                    "edge {k} {{{}, {}}} maps to {{{}, {}}} with weight {image}, which is not an edge",
                    g.vertices[e.u], g.vertices[e.v], g.vertices[a], g.vertices[b]
                )));
            }
        }
        Ok(())
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            vertex_map: other.vertex_map.iter().map(|&v| self.vertex_map[v]).collect(),
            form_map: self.form_map.mul(&other.form_map)?,
        })
    }
}

pub fn permutation_matrix(w: &Permutation) -> RationalMatrix {
    let n = w.n();
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        m.set(w.apply(i), i, Rational::from(1));
    }
    m
}

/// Left translation by `w` on a graph whose vertices are permutations:
/// `x -> wx` on vertices and `w` on coordinates.
pub fn apply_symmetry(g: &MomentGraph, w: &Permutation) -> Result<GraphSymmetry> {
    if w.n() != g.nvars() {
        return Err(Error::Dimension { expected: g.nvars(), found: w.n() });
    }
    let perms = g.vertex_permutations()?;
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut vertex_map = Vec::with_capacity(perms.len());
    for x in &perms {
        let wx = w.compose(x)?;
        let k = index
            .get(&wx)
            .ok_or_else(|| Error::SymmetryViolation(format!("{w} maps vertex {x} to {wx}, which is not a vertex")))?;
        vertex_map.push(*k);
    }
    let sym = GraphSymmetry { vertex_map, form_map: permutation_matrix(w) };
    sym.check(g)?;
    Ok(sym)
}

/// Right translation `x -> xw` on a graph whose vertices are permutations,
/// with the identity map on forms. Exists only when every edge weight is
/// preserved, which holds for Bruhat graphs but fails for most Hessenberg
/// graphs.
pub fn right_translation(g: &MomentGraph, w: &Permutation) -> Result<GraphSymmetry> {
    if w.n() != g.nvars() {
        return Err(Error::Dimension { expected: g.nvars(), found: w.n() });
    }
    let perms = g.vertex_permutations()?;
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut vertex_map = Vec::with_capacity(perms.len());
    for x in &perms {
        let xw = x.compose(w)?;
        let k = index
            .get(&xw)
            .ok_or_else(|| Error::SymmetryViolation(format!("right translation by {w} maps vertex {x} to {xw}, which is not a vertex")))?;
        vertex_map.push(*k);
    }
    let sym = GraphSymmetry { vertex_map, form_map: RationalMatrix::identity(g.nvars()) };
    sym.check(g)?;
    Ok(sym)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RationalJson {
    Int(i64),
    Str(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct EdgeJson {
    u: usize,
    v: usize,
    weight: Vec<RationalJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphJson {
    nvars: usize,
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
    lambda: Vec<i64>,
}

impl MomentGraph {
    /// Interchange format:
    /// `{"nvars", "vertices", "edges": [{"u", "v", "weight"}], "lambda"}`,
    /// with weight coefficients written as rational strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = GraphJson {
            nvars: self.nvars,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    u: e.u,
                    v: e.v,
                    weight: e.weight.coeffs().iter().map(|c| RationalJson::Str(c.to_string())).collect(),
                })
                .collect(),
            lambda: self.lambda.clone(),
        };
        serde_json::to_value(doc).expect("graph serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("graph serializes")
    }

    /// Parses the interchange format. Weights may be integers or rational
    /// strings. The result is not validated.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let edges = doc
            .edges
            .into_iter()
            .map(|e| {
                let coeffs = e
                    .weight
                    .iter()
                    .map(|c| match c {
                        RationalJson::Int(i) => Ok(Rational::from(*i)),
                        RationalJson::Str(s) => parse_rational(s),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Edge { u: e.u, v: e.v, weight: LinearForm::new(coeffs) })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(doc.nvars, doc.vertices, edges, doc.lambda))
    }
}
