//! Result documents and command implementations behind the `gkm` binary.

pub mod suite;

use serde::Serialize;
use serde_json::{json, Map, Value};

use gkm_core::actions::{action_on_ordinary, character_of_action, ActionKind};
use gkm_core::gkm::{restrict_ordinary, GkmModule};
use gkm_core::graph::{bruhat_graph, hessenberg_graph, schubert_graph, HessenbergFunction, MomentGraph};
use gkm_core::partition::{compositions, parse_list, Partition};
use gkm_core::report::{Assertion, CheckReport, Observation};
use gkm_core::reps::{decompose, CharacterVector};
use gkm_core::springer::{fixed_point_orbit_model, levi_assignments, springer_character, springer_via_levi_recursion, SpringerInstance};
use gkm_core::weyl::Permutation;
use gkm_core::Error;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INSTANCE: i32 = 3;
pub const EXIT_NO_SYMMETRY: i32 = 4;

/// Exit code for an error raised while running a command on valid arguments.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SymmetryViolation(_) => EXIT_NO_SYMMETRY,
        Error::TheoremViolation(_) | Error::QuotientAction(_) | Error::Representation(_) => EXIT_ASSERTION,
        _ => EXIT_INVALID_INSTANCE,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub command: String,
    pub arguments: Map<String, Value>,
    pub instance: Value,
    pub result: Value,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
    pub observations: Vec<Observation>,
}

impl ResultDocument {
    pub fn new(command: &str, arguments: Map<String, Value>, instance: Value, result: Value, report: CheckReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            arguments,
            instance,
            passed: report.passed(),
            result,
            assertions: report.assertions,
            observations: report.observations,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// `{"1,1,1": "1", "2,1": "1", "3": "1"}` in class order.
pub fn character_json(chi: &CharacterVector) -> Value {
    let classes = gkm_core::partition::class_order(chi.n());
    Value::Object(classes.iter().zip(chi.values()).map(|(mu, v)| (mu.to_string(), json!(v.to_string()))).collect())
}

pub fn decomposition_json(chi: &CharacterVector) -> Result<Value, Error> {
    Ok(Value::Object(decompose(chi)?.into_iter().map(|(p, m)| (p.to_string(), json!(m))).collect()))
}

/// A built-in graph family and its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Bruhat { n: usize },
    Schubert { n: usize, w: Permutation },
    Hessenberg { h: HessenbergFunction },
}

impl GraphSpec {
    pub fn build(&self) -> Result<MomentGraph, Error> {
        match self {
            Self::Bruhat { n } => bruhat_graph(*n),
            Self::Schubert { n, w } => schubert_graph(*n, w),
            Self::Hessenberg { h } => hessenberg_graph(h),
        }
    }

    /// Parses command-line parameters; `h` and `w` are comma lists.
    pub fn from_params(kind: &str, n: usize, w: Option<&str>, h: Option<&str>) -> Result<Self, Error> {
        match kind {
            "bruhat" => Ok(Self::Bruhat { n }),
            "schubert" => {
                let w: Permutation = w.ok_or_else(|| Error::InvalidArgument("schubert needs --w".into()))?.parse()?;
                if w.n() != n {
                    return Err(Error::InvalidArgument(format!("{w} is not a permutation of {n}")));
                }
                Ok(Self::Schubert { n, w })
            }
            "hessenberg" => {
                let h = parse_list(h.ok_or_else(|| Error::InvalidArgument("hessenberg needs --h".into()))?)?;
                if h.len() != n {
                    return Err(Error::InvalidArgument(format!("h has {} values, expected {n}", h.len())));
                }
                Ok(Self::Hessenberg { h: HessenbergFunction::new(h)? })
            }
            _ => Err(Error::InvalidArgument(format!("unknown graph kind {kind:?}"))),
        }
    }
}

fn instance_json(g: &MomentGraph) -> Value {
    json!({ "nvars": g.nvars(), "vertices": g.num_vertices(), "edges": g.edges().len() })
}

fn validated(g: &MomentGraph, report: &mut CheckReport) -> Result<(), Error> {
    let v = g.validate();
    for w in &v.warnings {
        report.observe("graph-warning", w.to_string());
    }
    if !v.is_valid() {
        return Err(Error::InvalidGraph(v));
    }
    Ok(())
}

pub fn betti_document(g: &MomentGraph, max_degree: usize) -> Result<ResultDocument, Error> {
    let mut report = CheckReport::new();
    validated(g, &mut report)?;
    let mut m = GkmModule::new(g)?;
    let betti = m.betti(max_degree)?;
    if !betti.complete {
        return Err(Error::DegreeCap { max_degree });
    }
    let top = betti.b.len().saturating_sub(1);
    let freeness = m.freeness(top)?;
    for row in &freeness {
        report.check(
            format!("free-in-degree-{}", row.degree),
            row.dim == row.expected,
            format!("dim {} of H_S, {} predicted by freeness", row.dim, row.expected),
        );
    }
    report.check(
        "betti-sum-equals-vertices",
        betti.total() == g.num_vertices(),
        format!("{} vs {}", betti.total(), g.num_vertices()),
    );
    let census = g.in_degree_census()?;
    report.observe("in-degree-census", format!("{census:?}"));
    let result = json!({ "betti": betti.b, "freeness": freeness });
    let mut args = Map::new();
    args.insert("max_degree".into(), json!(max_degree));
    Ok(ResultDocument::new("betti", args, instance_json(g), result, report))
}

/// Which degrees of ordinary cohomology a character command covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSelection {
    One(usize),
    Total,
}

impl std::str::FromStr for DegreeSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "total" {
            return Ok(Self::Total);
        }
        s.parse().map(Self::One).map_err(|_| Error::Parse(format!("degree must be a number or \"total\", got {s:?}")))
    }
}

/// Whether the vertices are exactly the permutations of `n = nvars`, as for
/// Hessenberg graphs.
fn has_all_permutations(g: &MomentGraph) -> bool {
    let n = g.nvars();
    g.vertex_permutations().is_ok_and(|perms| perms.len() as u128 == gkm_core::partition::factorial(n))
}

/// Dimension of the image of ordinary restriction from the flag variety in
/// degree `d`.
pub fn flag_image_dim(g: &MomentGraph, d: usize) -> Result<usize, Error> {
    let big = bruhat_graph(g.nvars())?;
    let mut mb = GkmModule::new(&big)?;
    let mut ms = GkmModule::new(g)?;
    Ok(restrict_ordinary(&mut mb, &mut ms, d)?.rank())
}

pub fn character_document(g: &MomentGraph, kind: ActionKind, degree: DegreeSelection, max_degree: usize) -> Result<ResultDocument, Error> {
    let mut report = CheckReport::new();
    validated(g, &mut report)?;
    let mut m = GkmModule::new(g)?;
    let betti = m.betti(max_degree)?;
    if !betti.complete {
        return Err(Error::DegreeCap { max_degree });
    }
    let degrees: Vec<usize> = match degree {
        DegreeSelection::One(d) => vec![d],
        DegreeSelection::Total => (0..betti.b.len()).collect(),
    };
    let compare_with_flag = kind == ActionKind::Left && has_all_permutations(g);
    let mut total = CharacterVector::zero(g.nvars());
    let mut per_degree = Vec::new();
    for &d in &degrees {
        let am = action_on_ordinary(&mut m, kind, d)?;
        let chi = character_of_action(&am)?;
        total = total.add(&chi)?;
        let invariants = am.invariants_dim()?;
        let mut entry = Map::new();
        entry.insert("degree".into(), json!(d));
        entry.insert("dimension".into(), json!(am.dim()));
        entry.insert("character".into(), character_json(&chi));
        entry.insert("decomposition".into(), decomposition_json(&chi)?);
        entry.insert("invariants_dim".into(), json!(invariants));
        if compare_with_flag {
            let image = flag_image_dim(g, d)?;
            entry.insert("flag_image_dim".into(), json!(image));
            report.check(
                format!("invariants-equal-flag-image-{d}"),
                invariants == image,
                format!("invariants {invariants}, image of restriction {image}"),
            );
        }
        per_degree.push(Value::Object(entry));
    }
    let mut result = Map::new();
    result.insert("action".into(), json!(kind));
    result.insert("degrees".into(), Value::Array(per_degree));
    if degree == DegreeSelection::Total {
        result.insert("total_character".into(), character_json(&total));
        result.insert("total_decomposition".into(), decomposition_json(&total)?);
    }
    let mut args = Map::new();
    args.insert("action".into(), json!(kind));
    args.insert(
        "degree".into(),
        match degree {
            DegreeSelection::One(d) => json!(d),
            DegreeSelection::Total => json!("total"),
        },
    );
    args.insert("max_degree".into(), json!(max_degree));
    Ok(ResultDocument::new("character", args, instance_json(g), Value::Object(result), report))
}

/// Largest `n` for which every Levi refinement is cross-checked.
const LEVI_CHECK_MAX_N: usize = 6;

pub fn springer_document(n: usize, lambda: &Partition) -> Result<ResultDocument, Error> {
    let inst = SpringerInstance::with_n(n, lambda.clone())?;
    let chi = springer_character(&inst)?;
    let mut report = CheckReport::new();
    let fixed = inst.fixed_point_count();
    report.check("dimension-equals-fixed-points", *chi.dim() == fixed, format!("dim {}, fixed points {fixed}", chi.dim()));
    let decomposition = decompose(&chi)?;
    let own = decomposition.iter().find(|(p, _)| p == lambda).map_or(0, |(_, m)| *m);
    report.check("own-irreducible-once", own == 1, format!("multiplicity of {lambda} is {own}"));
    let orbit = fixed_point_orbit_model(&inst);
    report.check("orbit-model-agrees", orbit.is_ok(), orbit.err().map_or_else(String::new, |e| e.to_string()));
    if n <= LEVI_CHECK_MAX_N {
        let mut checked = 0;
        let mut bad = None;
        for c in compositions(n) {
            if levi_assignments(lambda, &c).is_empty() {
                continue;
            }
            checked += 1;
            match springer_via_levi_recursion(&inst, &c) {
                Ok(x) if x == chi => {}
                Ok(x) => bad = bad.or(Some(format!("Levi {c:?} gives {x}"))),
                Err(e) => bad = bad.or(Some(format!("Levi {c:?}: {e}"))),
            }
        }
        report.check("levi-recursion-agrees", bad.is_none(), bad.unwrap_or_else(|| format!("{checked} Levi subgroups")));
    } else {
        report.observe("levi-recursion", format!("skipped for n > {LEVI_CHECK_MAX_N}"));
    }
    let result = json!({
        "dimension": chi.dim().to_string(),
        "fixed_points": fixed.to_string(),
        "character": character_json(&chi),
        "decomposition": decomposition_json(&chi)?,
    });
    let mut args = Map::new();
    args.insert("n".into(), json!(n));
    args.insert("lambda".into(), json!(lambda.to_string()));
    let instance = json!({ "n": n, "jordan_type": lambda.to_string() });
    Ok(ResultDocument::new("springer", args, instance, result, report))
}

pub fn generate_json(spec: &GraphSpec) -> Result<String, Error> {
    let mut s = spec.build()?.to_json();
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_documents() {
        let g = GraphSpec::Bruhat { n: 3 }.build().unwrap();
        let doc = betti_document(&g, 12).unwrap();
        assert!(doc.passed);
        assert_eq!(doc.result["betti"], json!([1, 2, 2, 1]));
        let text = doc.to_json();
        assert!(text.starts_with("{\n  \"schema_version\": 1,"));
    }

    #[test]
    fn character_keys_in_class_order() {
        let chi = CharacterVector::from_ints(3, &[2, 0, -1]).unwrap();
        let v = character_json(&chi);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["1,1,1", "2,1", "3"]);
        assert_eq!(v["3"], json!("-1"));
    }

    #[test]
    fn hessenberg_left_invariants_match_flag_image() {
        let g = GraphSpec::from_params("hessenberg", 3, None, Some("2,3,3")).unwrap().build().unwrap();
        let doc = character_document(&g, ActionKind::Left, DegreeSelection::Total, 12).unwrap();
        assert!(doc.passed, "{:?}", doc.assertions);
        assert_eq!(doc.result["degrees"][1]["invariants_dim"], json!(2));
        assert_eq!(doc.result["degrees"][1]["flag_image_dim"], json!(2));
        let err = character_document(&g, ActionKind::Right, DegreeSelection::Total, 12).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_NO_SYMMETRY);
    }

    #[test]
    fn springer_two_two() {
        let doc = springer_document(4, &"2,2".parse().unwrap()).unwrap();
        assert!(doc.passed);
        assert_eq!(doc.result["dimension"], json!("6"));
        assert_eq!(doc.result["decomposition"], json!({"4": 1, "3,1": 1, "2,2": 1}));
    }
}
