//! Acceptance suite: ten criteria, one PASS/FAIL line each. Expected values
//! come from oracles written here (inversion and descent counts, tableau
//! enumeration, brute-force coset fixed points), not from the library.

use std::collections::BTreeMap;
use std::process::Command;

use gkm_cli::exit_code;
use gkm_core::actions::{action_on_ordinary, all_symmetries, character_of_action, ActionKind};
use gkm_core::exact::{int, LinearForm, Polynomial, Rational, Subspace};
use gkm_core::filtration::{
    build_filtration, build_filtration_at, check_graded_iso, check_subgraph_compat, regular_points, Filtration, Surjectivity,
};
use gkm_core::gkm::{restrict_ordinary, GkmClass, GkmModule};
use gkm_core::graph::{apply_symmetry, bruhat_graph, hessenberg_graph, right_translation, schubert_graph, Edge, HessenbergFunction, MomentGraph};
use gkm_core::partition::{class_order, compositions, partitions, Partition};
use gkm_core::reps::{character_table, class_sizes, decompose, induced_trivial, CharacterVector};
use gkm_core::springer::{levi_assignments, springer_character, springer_via_levi_recursion, SpringerInstance};
use gkm_core::weyl::{Permutation, YoungSubgroup};
use gkm_core::Error;

const CAP: usize = 12;

/// Sub-assertions of one criterion.
#[derive(Default)]
struct Criterion {
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn ok<T>(&mut self, r: Result<T, Error>, what: &str) -> Option<T> {
        match r {
            Ok(v) => {
                self.checks += 1;
                Some(v)
            }
            Err(e) => {
                self.check(false, format!("{what}: {e}"));
                None
            }
        }
    }
}

// ---- oracles ----

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

fn descents(w: &[usize]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

fn histogram(values: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut h = Vec::new();
    for v in values {
        if h.len() <= v {
            h.resize(v + 1, 0);
        }
        h[v] += 1;
    }
    h
}

/// Coefficients of `[n]_q!`, as the length generating function of `S_n`.
fn q_factorial(n: usize) -> Vec<usize> {
    histogram(all_perms(n).iter().map(|w| inversions(w)))
}

/// Eulerian numbers: permutations of `n` by descents.
fn eulerian(n: usize) -> Vec<usize> {
    histogram(all_perms(n).iter().map(|w| descents(w)))
}

/// `(v w)(i) = v(w(i))` on 1-based one-line arrays.
fn compose(v: &[usize], w: &[usize]) -> Vec<usize> {
    w.iter().map(|&i| v[i - 1]).collect()
}

fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

fn cycle_type(w: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; w.len()];
    let mut parts = Vec::new();
    for s in 0..w.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = w[i] - 1;
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Class function from per-element values, indexed by increasing lex order
/// of cycle types.
fn class_function(n: usize, f: impl Fn(&[usize]) -> i64) -> Vec<i64> {
    let mut by_type: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for w in all_perms(n) {
        by_type.insert(cycle_type(&w), f(&w));
    }
    by_type.into_values().collect()
}

fn regular_values(n: usize) -> Vec<i64> {
    class_function(n, |w| if w.iter().enumerate().all(|(i, &v)| v == i + 1) { (1..=n as i64).product() } else { 0 })
}

fn as_ints(chi: &CharacterVector) -> Vec<i64> {
    chi.integer_values().expect("integer character")
}

/// Fixed cosets of `w` on `S_n / H`: `#{g : g^{-1} w g in H} / |H|`.
fn coset_fixed_points(w: &[usize], blocks: &[usize]) -> i64 {
    let labels: Vec<usize> = blocks.iter().enumerate().flat_map(|(k, &b)| std::iter::repeat_n(k, b)).collect();
    let in_h = |x: &[usize]| x.iter().enumerate().all(|(i, &v)| labels[v - 1] == labels[i]);
    let perms = all_perms(w.len());
    let hits = perms.iter().filter(|g| in_h(&compose(&inverse(g), &compose(w, g)))).count() as i64;
    let order: i64 = blocks.iter().map(|&b| (1..=b as i64).product::<i64>()).product();
    hits / order
}

/// Semistandard tableaux of shape `nu` and content `lambda`, by filling
/// cells row by row.
fn kostka(nu: &[usize], lambda: &[usize]) -> u64 {
    fn fill(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += fill(cells, k + 1, grid, left);
            left[v] += 1;
        }
        total
    }
    let cells: Vec<(usize, usize)> = nu.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = nu.iter().map(|&len| vec![0; len]).collect();
    fill(&cells, 0, &mut grid, &mut lambda.to_vec())
}

/// Whether `p` vanishes after substituting `x_i = x_j`, where the weight is
/// a multiple of `x_i - x_j`.
fn divisible_by_root(p: &Polynomial, weight: &LinearForm) -> bool {
    let nz: Vec<usize> = (0..weight.nvars()).filter(|&k| *weight.coeff(k) != 0).collect();
    assert!(nz.len() == 2 && *weight.coeff(nz[0]) == -weight.coeff(nz[1]).clone(), "root weight expected");
    let (i, j) = (nz[0], nz[1]);
    let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut e = m.exponents().to_vec();
        e[j] += e[i];
        e[i] = 0;
        *acc.entry(e).or_insert_with(|| int(0)) += c;
    }
    acc.values().all(|c| *c == 0)
}

fn gkm_member(g: &MomentGraph, f: &GkmClass) -> bool {
    g.edges().iter().all(|e| {
        let diff = f.value(e.u).checked_sub(f.value(e.v)).expect("same variables");
        divisible_by_root(&diff, &e.weight)
    })
}

fn hex() -> MomentGraph {
    hessenberg_graph(&HessenbergFunction::new(vec![2, 3, 3]).unwrap()).unwrap()
}

fn schubert_231() -> MomentGraph {
    schubert_graph(3, &"231".parse().unwrap()).unwrap()
}

fn labels_as_arrays(g: &MomentGraph) -> Vec<Vec<usize>> {
    g.vertex_permutations().unwrap().iter().map(Permutation::one_line).collect()
}

fn betti(g: &MomentGraph) -> Result<Vec<usize>, Error> {
    let b = GkmModule::new(g)?.betti(CAP)?;
    assert!(b.complete);
    Ok(b.b)
}

// ---- criteria ----

fn bruhat_betti() -> Criterion {
    let mut c = Criterion::default();
    for n in 2..=4 {
        let g = bruhat_graph(n).unwrap();
        if let Some(b) = c.ok(betti(&g), &format!("betti n={n}")) {
            let q = q_factorial(n);
            c.check(b == q, format!("n={n}: betti {b:?}, [n]_q! {q:?}"));
            let census = g.in_degree_census().unwrap();
            c.check(census == b, format!("n={n}: census {census:?}"));
        }
    }
    c
}

fn total_character(m: &mut GkmModule, kind: ActionKind) -> Result<CharacterVector, Error> {
    let top = m.betti(CAP)?.b.len() - 1;
    let mut total = CharacterVector::zero(m.graph().nvars());
    for d in 0..=top {
        total = total.add(&character_of_action(&action_on_ordinary(m, kind, d)?)?)?;
    }
    Ok(total)
}

fn regular_representation() -> Criterion {
    let mut c = Criterion::default();
    for n in [2, 3] {
        let g = bruhat_graph(n).unwrap();
        let mut m = GkmModule::new(&g).unwrap();
        if let Some(total) = c.ok(total_character(&mut m, ActionKind::Right), "right action") {
            let reg = regular_values(n);
            c.check(as_ints(&total) == reg, format!("n={n}: total {total}"));
            let verts = labels_as_arrays(&g);
            let perm = class_function(n, |w| verts.iter().filter(|x| compose(x, w) == **x).count() as i64);
            c.check(as_ints(&total) == perm, format!("n={n}: vertex permutation character {perm:?}"));
        }
    }
    c
}

fn trivial_left_action() -> Criterion {
    let mut c = Criterion::default();
    for n in [2, 3] {
        let mut m = GkmModule::new(&bruhat_graph(n).unwrap()).unwrap();
        for d in 0..=n * (n - 1) / 2 {
            if let Some(am) = c.ok(action_on_ordinary(&mut m, ActionKind::Left, d), "left action") {
                for (w, mat) in am.elements.iter().zip(&am.matrices) {
                    c.check(mat.is_identity(), format!("n={n}, degree {d}: {w} acts nontrivially"));
                }
            }
        }
    }
    c
}

fn stability() -> Criterion {
    let mut c = Criterion::default();
    let g = bruhat_graph(3).unwrap();
    let mut m = GkmModule::new(&g).unwrap();
    for d in 0..=3 {
        let basis = m.piece(d).unwrap().basis;
        for kind in [ActionKind::Left, ActionKind::Right] {
            let syms = all_symmetries(&g, kind).unwrap();
            for f in &basis {
                c.check(gkm_member(&g, f), format!("degree {d}: basis class fails the edge conditions"));
                for (w, sym) in &syms {
                    let image = match kind {
                        ActionKind::Left => gkm_core::actions::left_action_with(sym, f),
                        ActionKind::Right => gkm_core::actions::right_action_with(sym, f),
                    };
                    c.check(gkm_member(&g, &image), format!("{kind} image under {w} in degree {d}"));
                }
            }
        }
    }
    c
}

/// `x -> x w` as a vertex map, from labels.
fn right_translation_map(g: &MomentGraph, w: &[usize]) -> Option<Vec<usize>> {
    let verts = labels_as_arrays(g);
    verts.iter().map(|x| verts.iter().position(|y| *y == compose(x, w))).collect()
}

fn right_stable(f: &Filtration, g: &MomentGraph) -> Result<bool, String> {
    for w in all_perms(g.nvars()) {
        let map = right_translation_map(g, &w).ok_or_else(|| format!("vertex set is not closed under right translation by {w:?}"))?;
        for level in f.levels() {
            for v in level.basis() {
                let moved: Vec<Rational> = map.iter().map(|&y| v[y].clone()).collect();
                if !level.contains(&moved).unwrap() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn has_right_action(g: &MomentGraph) -> bool {
    all_symmetries(g, ActionKind::Right).is_ok()
}

fn filtration_theorem() -> Criterion {
    let mut c = Criterion::default();
    let schubert_betti = histogram(labels_as_arrays(&schubert_231()).iter().map(|w| inversions(w)));
    let cases = [
        ("bruhat_graph(2)", bruhat_graph(2).unwrap(), q_factorial(2)),
        ("bruhat_graph(3)", bruhat_graph(3).unwrap(), q_factorial(3)),
        ("schubert_graph(3, 231)", schubert_231(), schubert_betti),
        ("hessenberg_graph(2,3,3)", hex(), eulerian(3)),
    ];
    for (name, g, expected) in cases {
        let mut m = GkmModule::new(&g).unwrap();
        let Some(f) = c.ok(build_filtration(&mut m, CAP), name) else { continue };
        let gr = f.graded_dims();
        c.check(gr == expected, format!("{name}: Gr dims {gr:?}, expected {expected:?}"));
        let r = check_graded_iso(&mut m, &f, CAP).unwrap();
        let product = r.find("product-rule").unwrap();
        c.check(product.passed, format!("{name}: product rule: {}", product.detail));
        let has_weyl_symmetry = all_symmetries(&g, ActionKind::Left).is_ok();
        match right_stable(&f, &g) {
            Ok(stable) => c.check(
                stable || !has_right_action(&g),
                format!("{name}: F_i not right-action stable"),
            ),
            Err(why) if has_weyl_symmetry => c.check(false, format!("{name}: no right action ({why})")),
            Err(_) => {}
        }
        if !has_right_action(&g) && has_weyl_symmetry {
            c.check(false, format!("{name}: right translation is not a graph symmetry, so there is no right action to be stable under"));
        }
        let points = regular_points(&[&g], 3).unwrap();
        let dims: Vec<Vec<usize>> = points.into_iter().map(|p| build_filtration_at(&mut m, p, CAP).unwrap().graded_dims()).collect();
        c.check(dims.windows(2).all(|w| w[0] == w[1]), format!("{name}: graded dims vary with the point: {dims:?}"));
    }
    c
}

fn hessenberg() -> Criterion {
    let mut c = Criterion::default();
    let g = hex();
    let mut m = GkmModule::new(&g).unwrap();
    let b = betti(&g).unwrap();
    c.check(b == eulerian(3), format!("betti {b:?}, Eulerian {:?}", eulerian(3)));
    match total_character(&mut m, ActionKind::Right) {
        Ok(total) => c.check(as_ints(&total) == regular_values(3), format!("total right character {total}")),
        Err(e) => c.check(false, format!("total right character = regular: {e}")),
    }
    if let Some(am) = c.ok(action_on_ordinary(&mut m, ActionKind::Left, 1), "left action") {
        let chi = as_ints(&character_of_action(&am).unwrap());
        let sizes = class_function(3, |w| all_perms(3).iter().filter(|x| cycle_type(x) == cycle_type(w)).count() as i64);
        let invariants = chi.iter().zip(&sizes).map(|(a, s)| a * s).sum::<i64>() / 6;
        c.check(am.invariants_dim().unwrap() as i64 == invariants, "invariant dimension disagrees with character average");
        let mut big = GkmModule::new(&bruhat_graph(3).unwrap()).unwrap();
        let image = restrict_ordinary(&mut big, &mut m, 1).unwrap().rank() as i64;
        c.check(invariants == image, format!("left invariants {invariants}, image of restriction {image}"));
    }
    c
}

fn subgraph_compat() -> Criterion {
    let mut c = Criterion::default();
    let small = schubert_231();
    let b = betti(&small).unwrap();
    c.check(b == [1, 2, 1], format!("Schubert betti {b:?}"));
    let mut mb = GkmModule::new(&bruhat_graph(3).unwrap()).unwrap();
    let mut ms = GkmModule::new(&small).unwrap();
    if let Some(r) = c.ok(check_subgraph_compat(&mut mb, &mut ms, Surjectivity::Known, CAP), "compatibility") {
        c.check(r.passed() && !r.assertions.is_empty(), format!("{:?}", r.failures().collect::<Vec<_>>()));
    }
    c
}

fn springer() -> Criterion {
    let mut c = Criterion::default();
    for n in 1..=5 {
        let fact: u64 = (1..=n as u64).product();
        for lambda in partitions(n) {
            let inst = SpringerInstance::new(lambda.clone()).unwrap();
            let chi = springer_character(&inst).unwrap();
            let want: u64 = fact / lambda.parts().iter().map(|&p| (1..=p as u64).product::<u64>()).product::<u64>();
            c.check(*chi.dim() == want, format!("{lambda}: dim {}, expected {want}", chi.dim()));
            let dec = decompose(&chi).unwrap();
            for nu in partitions(n) {
                let m = dec.iter().find(|(p, _)| *p == nu).map_or(0, |(_, m)| *m);
                let k = kostka(nu.parts(), lambda.parts());
                c.check(m == k, format!("{lambda}: multiplicity of {nu} is {m}, Kostka {k}"));
            }
            if lambda.len() == 1 {
                c.check(as_ints(&chi) == class_function(n, |_| 1), format!("({n}) not trivial"));
            }
            if lambda.len() == n {
                c.check(as_ints(&chi) == regular_values(n), format!("(1^{n}) not regular"));
            }
            if n <= 4 {
                for comp in compositions(n) {
                    let fits = !levi_assignments(&lambda, &comp).is_empty();
                    match springer_via_levi_recursion(&inst, &comp) {
                        Ok(x) => c.check(fits && x == chi, format!("{lambda} in Levi {comp:?}: {x}")),
                        Err(Error::InvalidArgument(_)) => c.check(!fits, format!("{lambda} in Levi {comp:?} rejected")),
                        Err(e) => c.check(false, format!("{lambda} in Levi {comp:?}: {e}")),
                    }
                }
            }
        }
    }
    c
}

fn character_infrastructure() -> Criterion {
    let mut c = Criterion::default();
    for n in 1..=5 {
        let fact: i64 = (1..=n as i64).product();
        let table = character_table(n);
        let sizes = class_sizes(n);
        for (l, a) in &table {
            for (m, b) in &table {
                let s: Rational = a.values().iter().zip(b.values()).zip(&sizes).map(|((x, y), k)| x * y * Rational::from(*k)).sum();
                let want = if l == m { fact } else { 0 };
                c.check(s == want, format!("n={n}: <{l},{m}> sums to {s}"));
            }
        }
        for comp in compositions(n) {
            let ind = as_ints(&induced_trivial(&YoungSubgroup::new(comp.clone()).unwrap()).unwrap());
            let oracle = class_function(n, |w| coset_fixed_points(w, &comp));
            c.check(ind == oracle, format!("n={n}, blocks {comp:?}: induced {ind:?}, cosets {oracle:?}"));
        }
    }
    let classes: Vec<Partition> = class_order(3);
    c.check(classes.first().map(Partition::len) == Some(3), "class order starts at the identity class");
    c
}

fn gkm_binary() -> String {
    env!("CARGO_BIN_EXE_gkm").to_string()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(gkm_binary()).args(args).output().expect("gkm runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn failed_names(stdout: &str) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_str(stdout).expect("verify prints JSON");
    v["result"]["failed"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

fn negative_controls() -> Criterion {
    let mut c = Criterion::default();
    // Zero weight.
    let g = bruhat_graph(3).unwrap();
    let mut edges = g.edges().to_vec();
    edges[2] = Edge { u: edges[2].u, v: edges[2].v, weight: LinearForm::zero(3) };
    let bad = MomentGraph::new(3, g.vertices().to_vec(), edges, g.lambda().to_vec());
    let err = bad.check_valid().unwrap_err();
    c.check(matches!(err, Error::InvalidGraph(_)) && exit_code(&err) == 3, format!("zero weight: {err}"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.json");
    std::fs::write(&path, bad.to_json()).unwrap();
    let (code, _) = run_cli(&["betti", "--graph", path.to_str().unwrap()]);
    c.check(code == 3, format!("betti on zero-weight graph exits {code}"));
    let (code, out) = run_cli(&["verify", "--suite", "gkm", "--inject-fault", "zero-weight"]);
    c.check(code == 1 && failed_names(&out).iter().any(|n| n.starts_with("bruhat-3")), format!("zero-weight fault exits {code}"));

    // Broken filtration.
    let mut m = GkmModule::new(&g).unwrap();
    let f = build_filtration(&mut m, CAP).unwrap();
    let mut levels = f.levels().to_vec();
    let unit = |k: usize| -> Vec<Rational> { (0..6).map(|j| int(i64::from(j == k))).collect() };
    levels[1] = Subspace::span(6, [unit(3), unit(4)]).unwrap();
    let broken = Filtration::from_parts(f.point().clone(), levels);
    let r = check_graded_iso(&mut m, &broken, CAP).unwrap();
    c.check(!r.passed(), "corrupted filtration passes");
    c.check(r.into_result().is_err_and(|e| exit_code(&e) == 1), "corrupted filtration maps to exit 1");
    let (code, out) = run_cli(&["verify", "--suite", "filtration", "--inject-fault", "broken-filtration"]);
    c.check(
        code == 1 && failed_names(&out).iter().any(|n| n.starts_with("filtration-bruhat-3/")),
        format!("broken-filtration fault exits {code}"),
    );

    // Non-symmetry.
    let s = schubert_231();
    let w: Permutation = "213".parse().unwrap();
    let e = apply_symmetry(&s, &"132".parse().unwrap()).unwrap_err();
    c.check(matches!(e, Error::SymmetryViolation(_)) && exit_code(&e) == 4, format!("non-symmetry: {e}"));
    c.check(right_translation(&s, &w).is_err(), "Schubert interval closed under right translation");
    let (code, _) = run_cli(&["character", "--kind", "schubert", "--n", "3", "--w", "2,3,1", "--action", "left"]);
    c.check(code == 4, format!("character on a Schubert graph exits {code}"));
    let (code, out) = run_cli(&["verify", "--suite", "actions", "--inject-fault", "non-symmetry"]);
    c.check(
        code == 1 && failed_names(&out).iter().any(|n| n.starts_with("regular-representation-3")),
        format!("non-symmetry fault exits {code}"),
    );
    c
}

type CriterionFn = fn() -> Criterion;

fn main() {
    let criteria: [(&str, CriterionFn); 10] = [
        ("Bruhat Betti numbers are [n]_q! and match the in-degree census (n = 2, 3, 4)", bruhat_betti),
        ("total right character on G/B is regular and equals the vertex character (n = 2, 3)", regular_representation),
        ("left action on H*(G/B) is trivial (n = 2, 3)", trivial_left_action),
        ("both actions preserve GKM classes (n = 3, all degrees)", stability),
        ("evaluation filtration: Gr = Betti, products, right stability, point independence", filtration_theorem),
        ("permutohedral Hessenberg: Betti, regular right character, invariants = flag image", hessenberg),
        ("Schubert-in-flag restriction of filtrations", subgraph_compat),
        ("Springer characters: dimension, Kostka multiplicities, Levi recursion (n <= 5)", springer),
        ("character orthogonality and Frobenius induction (n <= 5)", character_infrastructure),
        ("negative controls are caught with their exit codes", negative_controls),
    ];
    let start = std::time::Instant::now();
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let c = run();
        let status = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}  {title}  [{} checks]", k + 1, c.checks);
        for f in &c.failures {
            println!("             - {f}");
        }
        if !c.failures.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
