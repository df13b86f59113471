//! The bundled verification suites run by `gkm verify`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use gkm_core::actions::{action_on_ordinary, all_symmetries, character_of_action, stability_failures, ActionKind};
use gkm_core::exact::{int, LinearForm, Rational, Subspace};
use gkm_core::filtration::{
    build_filtration, check_equivalence_theorem, check_graded_iso, check_point_independence, check_right_stability,
    check_subgraph_compat, vertex_permutation_character, Filtration, Surjectivity,
};
use gkm_core::gkm::GkmModule;
use gkm_core::graph::{bruhat_graph, hessenberg_graph, schubert_graph, Edge, HessenbergFunction, MomentGraph};
use gkm_core::partition::{compositions, factorial, partitions};
use gkm_core::report::CheckReport;
use gkm_core::reps::{character_table, class_sizes, decompose, induced_trivial, permutation_character, CharacterVector, FiniteAction};
use gkm_core::weyl::YoungSubgroup;
use gkm_core::{Error, Result};

use crate::{betti_document, flag_image_dim, springer_document, ResultDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Gkm,
    Filtration,
    Springer,
    Actions,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Self::All),
            "gkm" => Ok(Self::Gkm),
            "filtration" => Ok(Self::Filtration),
            "springer" => Ok(Self::Springer),
            "actions" => Ok(Self::Actions),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::All => "all",
            Self::Gkm => "gkm",
            Self::Filtration => "filtration",
            Self::Springer => "springer",
            Self::Actions => "actions",
        })
    }
}

/// A corrupted fixture substituted into the suite; the suite must then fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// An edge of the flag graph gets weight zero (gkm suite).
    ZeroWeight,
    /// Level 1 of a filtration is replaced by coordinate vectors (filtration suite).
    BrokenFiltration,
    /// A Schubert graph stands in for the flag graph in the action checks (actions suite).
    NonSymmetry,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero-weight" => Ok(Self::ZeroWeight),
            "broken-filtration" => Ok(Self::BrokenFiltration),
            "non-symmetry" => Ok(Self::NonSymmetry),
            _ => Err(Error::Parse(format!("unknown fault {s:?}"))),
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ZeroWeight => "zero-weight",
            Self::BrokenFiltration => "broken-filtration",
            Self::NonSymmetry => "non-symmetry",
        })
    }
}

fn hex() -> Result<MomentGraph> {
    hessenberg_graph(&HessenbergFunction::new(vec![2, 3, 3])?)
}

fn schubert_231() -> Result<MomentGraph> {
    schubert_graph(3, &"231".parse()?)
}

/// Runs `f`, turning an error into a failed assertion named `name`.
fn guarded(report: &mut CheckReport, name: &str, f: impl FnOnce() -> Result<CheckReport>) {
    match f() {
        Ok(r) => report.extend(r.scoped(name)),
        Err(e) => {
            report.check(name, false, e.to_string());
        }
    }
}

/// Coefficients of `prod_{k=1..n} (1 + q + ... + q^{k-1})`.
pub fn q_factorial(n: usize) -> Vec<usize> {
    let mut c = vec![1usize];
    for k in 1..=n {
        let mut next = vec![0; c.len() + k - 1];
        for (i, a) in c.iter().enumerate() {
            for j in 0..k {
                next[i + j] += a;
            }
        }
        c = next;
    }
    c
}

fn zero_weight_flag_graph() -> Result<MomentGraph> {
    let g = bruhat_graph(3)?;
    let mut edges = g.edges().to_vec();
    edges[0] = Edge { u: edges[0].u, v: edges[0].v, weight: LinearForm::zero(3) };
    Ok(MomentGraph::new(3, g.vertices().to_vec(), edges, g.lambda().to_vec()))
}

fn betti_of(g: &MomentGraph) -> Result<Vec<usize>> {
    let doc = betti_document(g, 12)?;
    serde_json::from_value(doc.result["betti"].clone()).map_err(|e| Error::Parse(e.to_string()))
}

fn gkm_suite(report: &mut CheckReport, fault: Option<Fault>) {
    for n in 2..=4 {
        guarded(report, &format!("bruhat-{n}"), || {
            let g = if fault == Some(Fault::ZeroWeight) && n == 3 { zero_weight_flag_graph()? } else { bruhat_graph(n)? };
            let mut r = CheckReport::new();
            let b = betti_of(&g)?;
            let q = q_factorial(n);
            r.check("betti-equals-q-factorial", b == q, format!("{b:?} vs {q:?}"));
            let census = g.in_degree_census()?;
            r.check("betti-equals-in-degree-census", census == b, format!("census {census:?}"));
            Ok(r)
        });
    }
    guarded(report, "schubert-231", || {
        let b = betti_of(&schubert_231()?)?;
        let mut r = CheckReport::new();
        r.check("betti", b == [1, 2, 1], format!("{b:?}"));
        Ok(r)
    });
    guarded(report, "hessenberg-233", || {
        let b = betti_of(&hex()?)?;
        let mut r = CheckReport::new();
        r.check("betti", b == [1, 4, 1], format!("{b:?}"));
        Ok(r)
    });
}

fn total_character(m: &mut GkmModule, kind: ActionKind, top: usize) -> Result<CharacterVector> {
    let mut total = CharacterVector::zero(m.graph().nvars());
    for d in 0..=top {
        total = total.add(&character_of_action(&action_on_ordinary(m, kind, d)?)?)?;
    }
    Ok(total)
}

fn actions_suite(report: &mut CheckReport, fault: Option<Fault>) {
    let flag = |n: usize| -> Result<MomentGraph> {
        if fault == Some(Fault::NonSymmetry) && n == 3 {
            schubert_231()
        } else {
            bruhat_graph(n)
        }
    };
    for n in [2, 3] {
        guarded(report, &format!("regular-representation-{n}"), || {
            let g = flag(n)?;
            let mut m = GkmModule::new(&g)?;
            let top = n * (n - 1) / 2;
            let total = total_character(&mut m, ActionKind::Right, top)?;
            let perm = vertex_permutation_character(&g)?;
            let mut r = CheckReport::new();
            r.check("total-right-character-regular", total == CharacterVector::regular(n), total.to_string());
            r.check("equals-vertex-permutation-character", total == perm, perm.to_string());
            Ok(r)
        });
        guarded(report, &format!("trivial-left-action-{n}"), || {
            let g = flag(n)?;
            let mut m = GkmModule::new(&g)?;
            let mut r = CheckReport::new();
            for d in 0..=n * (n - 1) / 2 {
                let am = action_on_ordinary(&mut m, ActionKind::Left, d)?;
                let bad = am.elements.iter().zip(&am.matrices).find(|(_, mat)| !mat.is_identity());
                r.check(
                    format!("identity-in-degree-{d}"),
                    bad.is_none(),
                    bad.map_or_else(String::new, |(w, _)| format!("{w} acts nontrivially")),
                );
            }
            Ok(r)
        });
    }
    guarded(report, "stability-3", || {
        let mut r = CheckReport::new();
        for g in [flag(3)?, hex()?] {
            let mut m = GkmModule::new(&g)?;
            let top = m.betti(12)?.b.len() - 1;
            for d in 0..=top {
                let basis = m.piece(d)?.basis;
                for kind in [ActionKind::Left, ActionKind::Right] {
                    let label = format!("{kind}-{}-vertices-degree-{d}", g.num_vertices());
                    match stability_failures(&g, kind, &basis, d) {
                        Ok(f) => {
                            r.check(label, f.is_empty(), format!("{} failures", f.len()));
                        }
                        Err(Error::SymmetryViolation(e)) if kind == ActionKind::Right && is_hex(&g) => {
                            r.observe(label, format!("no right action: {e}"));
                        }
                        Err(e) => {
                            r.check(label, false, e.to_string());
                        }
                    }
                }
            }
        }
        Ok(r)
    });
    guarded(report, "hessenberg-233", || {
        let g = hex()?;
        let mut m = GkmModule::new(&g)?;
        let mut r = CheckReport::new();
        let b = m.betti(12)?.b;
        r.check("betti", b == [1, 4, 1], format!("{b:?}"));
        for d in 0..b.len() {
            let am = action_on_ordinary(&mut m, ActionKind::Left, d)?;
            let inv = am.invariants_dim()?;
            let image = flag_image_dim(&g, d)?;
            r.check(format!("left-invariants-equal-flag-image-{d}"), inv == image, format!("invariants {inv}, image {image}"));
        }
        match total_character(&mut m, ActionKind::Right, b.len() - 1) {
            Ok(total) => r.check("total-right-character-regular", total == CharacterVector::regular(3), total.to_string()),
            Err(e) => r.check("total-right-character-regular", false, e.to_string()),
        };
        Ok(r)
    });
}

fn is_hex(g: &MomentGraph) -> bool {
    g.num_vertices() == 6 && g.edges().len() == 6
}

fn corrupt(f: &Filtration) -> Result<Filtration> {
    let n = f.ambient();
    let mut levels = f.levels().to_vec();
    let unit = |k: usize| -> Vec<Rational> { (0..n).map(|j| int(i64::from(j == k))).collect() };
    levels[1] = Subspace::span(n, [unit(0), unit(1)])?;
    Ok(Filtration::from_parts(f.point().clone(), levels))
}

type Builder = fn() -> Result<MomentGraph>;

fn filtration_suite(report: &mut CheckReport, fault: Option<Fault>) {
    let instances: Vec<(&str, Builder)> = vec![
        ("bruhat-2", || bruhat_graph(2)),
        ("bruhat-3", || bruhat_graph(3)),
        ("schubert-231", schubert_231),
        ("hessenberg-233", hex),
    ];
    for (name, make) in instances {
        guarded(report, &format!("filtration-{name}"), || {
            let g = make()?;
            let mut m = GkmModule::new(&g)?;
            let mut f = build_filtration(&mut m, 12)?;
            if fault == Some(Fault::BrokenFiltration) && name == "bruhat-3" {
                f = corrupt(&f)?;
            }
            let mut r = check_graded_iso(&mut m, &f, 12)?;
            r.observe("dims", format!("{:?}", f.dims()));
            match check_right_stability(&g, &f) {
                Ok(s) => r.extend(s),
                Err(e) if all_symmetries(&g, ActionKind::Left).is_err() => {
                    r.observe("right-action-stable", format!("not applicable, no Weyl group symmetry: {e}"));
                }
                Err(e) => {
                    r.check("right-action-stable", false, e.to_string());
                }
            }
            r.extend(check_point_independence(&mut m, 3, 12)?);
            Ok(r)
        });
    }
    guarded(report, "schubert-in-flag", || {
        let mut big = GkmModule::new(&bruhat_graph(3)?)?;
        let mut small = GkmModule::new(&schubert_231()?)?;
        check_subgraph_compat(&mut big, &mut small, Surjectivity::Known, 12)
    });
    guarded(report, "hessenberg-in-flag", || {
        let mut big = GkmModule::new(&bruhat_graph(3)?)?;
        let mut small = GkmModule::new(&hex()?)?;
        check_subgraph_compat(&mut big, &mut small, Surjectivity::Unknown, 12)
    });
    for (name, make) in [("bruhat-2", (|| bruhat_graph(2)) as fn() -> Result<MomentGraph>), ("bruhat-3", || bruhat_graph(3)), ("hessenberg-233", hex)] {
        guarded(report, &format!("equivalence-{name}"), || check_equivalence_theorem(&mut GkmModule::new(&make()?)?, 12));
    }
}

/// `K_{nu, lambda}` by peeling horizontal strips of size `lambda_last` off
/// `nu`.
pub fn kostka(nu: &[usize], lambda: &[usize]) -> u64 {
    let Some((&last, rest)) = lambda.split_last() else {
        return u64::from(nu.iter().all(|&p| p == 0));
    };
    let mut total = 0;
    let mut mu = nu.to_vec();
    strips(nu, 0, last, &mut mu, rest, &mut total);
    total
}

fn strips(nu: &[usize], row: usize, left: usize, mu: &mut Vec<usize>, rest: &[usize], total: &mut u64) {
    if row == nu.len() {
        if left == 0 {
            let trimmed: Vec<usize> = mu.iter().copied().filter(|&p| p > 0).collect();
            *total += kostka(&trimmed, rest);
        }
        return;
    }
    let below = nu.get(row + 1).copied().unwrap_or(0);
    let max_remove = (nu[row] - below).min(left);
    for k in 0..=max_remove {
        mu[row] = nu[row] - k;
        strips(nu, row + 1, left - k, mu, rest, total);
    }
    mu[row] = nu[row];
}

fn springer_suite(report: &mut CheckReport) {
    for n in 1..=5 {
        for lambda in partitions(n) {
            guarded(report, &format!("springer-{lambda}"), || {
                let doc = springer_document(n, &lambda)?;
                let mut r = CheckReport { assertions: doc.assertions, observations: Vec::new() };
                let chi = gkm_core::springer::springer_character(&gkm_core::springer::SpringerInstance::new(lambda.clone())?)?;
                let dec = decompose(&chi)?;
                let mut mismatch = None;
                for nu in partitions(n) {
                    let m = dec.iter().find(|(p, _)| *p == nu).map_or(0, |(_, m)| *m);
                    let k = kostka(nu.parts(), lambda.parts());
                    if m != k && mismatch.is_none() {
                        mismatch = Some(format!("multiplicity of {nu} is {m}, Kostka {k}"));
                    }
                }
                r.check("multiplicities-equal-kostka", mismatch.is_none(), mismatch.unwrap_or_default());
                if lambda.len() == 1 {
                    r.check("regular-nilpotent-trivial", chi == CharacterVector::trivial(n), chi.to_string());
                }
                if lambda.len() == n {
                    r.check("zero-nilpotent-regular", chi == CharacterVector::regular(n), chi.to_string());
                }
                Ok(r)
            });
        }
    }
    for n in 1..=5 {
        guarded(report, &format!("orthogonality-{n}"), || {
            let table = character_table(n);
            let sizes = class_sizes(n);
            let mut r = CheckReport::new();
            let mut bad = None;
            for (l, a) in &table {
                for (m, b) in &table {
                    let s: Rational = a.values().iter().zip(b.values()).zip(&sizes).map(|((x, y), c)| x * y * Rational::from(*c)).sum();
                    let want = if l == m { Rational::from(factorial(n)) } else { Rational::from(0) };
                    if s != want && bad.is_none() {
                        bad = Some(format!("<{l}, {m}> = {s}"));
                    }
                }
            }
            r.check("row-orthogonality", bad.is_none(), bad.unwrap_or_default());
            Ok(r)
        });
        guarded(report, &format!("induction-{n}"), || {
            let mut r = CheckReport::new();
            let mut bad = None;
            for c in compositions(n) {
                let h = YoungSubgroup::new(c.clone())?;
                let (_, action) = FiniteAction::on_cosets(&h)?;
                let perm = permutation_character(&action)?;
                let ind = induced_trivial(&h)?;
                if perm != ind && bad.is_none() {
                    bad = Some(format!("{c:?}: cosets {perm}, induced {ind}"));
                }
            }
            r.check("induction-equals-coset-character", bad.is_none(), bad.unwrap_or_else(|| format!("{} subgroups", compositions(n).len())));
            Ok(r)
        });
    }
}

pub fn run_suite(suite: Suite, fault: Option<Fault>) -> CheckReport {
    let mut report = CheckReport::new();
    if matches!(suite, Suite::All | Suite::Gkm) {
        gkm_suite(&mut report, fault);
    }
    if matches!(suite, Suite::All | Suite::Actions) {
        actions_suite(&mut report, fault);
    }
    if matches!(suite, Suite::All | Suite::Filtration) {
        filtration_suite(&mut report, fault);
    }
    if matches!(suite, Suite::All | Suite::Springer) {
        springer_suite(&mut report);
    }
    report
}

pub fn verify_document(suite: Suite, fault: Option<Fault>) -> ResultDocument {
    let report = run_suite(suite, fault);
    let mut args = Map::new();
    args.insert("suite".into(), json!(suite.to_string()));
    if let Some(f) = fault {
        args.insert("inject_fault".into(), json!(f.to_string()));
    }
    let failed: Vec<&str> = report.failures().map(|a| a.name.as_str()).collect();
    let result = json!({ "checked": report.assertions.len(), "failed": failed });
    ResultDocument::new("verify", args, Value::Null, result, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(3), [1, 2, 2, 1]);
        assert_eq!(q_factorial(4), [1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&[2, 2], &[2, 1, 1]), 1);
        assert_eq!(kostka(&[3, 1], &[2, 2]), 1);
        assert_eq!(kostka(&[2, 2], &[3, 1]), 0);
    }

    #[test]
    fn springer_suite_passes() {
        let r = run_suite(Suite::Springer, None);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
