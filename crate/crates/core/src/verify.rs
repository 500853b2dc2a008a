//! Self-checks grouped into suites: brute-force complexes against closed
//! forms (`oracle`), polygon models against root combinatorics (`models`),
//! and the invariant algorithms against known values (`catalog`).
//!
//! Every check carries the number of the acceptance criterion it feeds.

use std::fmt;

use serde::Serialize;

use crate::diagram::{parse_diagram, AffineType, CoxeterDiagram, FiniteType, VertexSet};
use crate::exactmath::{int, rat, Poly, Rational};
use crate::formulas::{
    diameter_face_count, eval_all, f_poly_recursive, f_vector_closed, h_from_f_numeric,
    h_vector_closed, n_plus_product, n_product,
};
use crate::gcc::{ClusterComplex, DEFAULT_BUDGET};
use crate::invariants::{compute_all, run_method, Method, MethodResult, DEFAULT_MAX_RANK};
use crate::polygon::{
    audit_type_a, audit_type_b, audit_type_d, dissection_f_vector, DVertex, Flavor, TypeBModel,
    TypeDModel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Models,
    Catalog,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Oracle, Suite::Models, Suite::Catalog];

    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        Some(match s {
            "oracle" => vec![Suite::Oracle],
            "models" => vec![Suite::Models],
            "catalog" => vec![Suite::Catalog],
            "all" => Suite::ALL.to_vec(),
            _ => return None,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Oracle => "oracle",
            Suite::Models => "models",
            Suite::Catalog => "catalog",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Limits for a verification run.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_rank: usize,
    pub max_m: usize,
    /// Cap on the vertex count of any brute-force complex.
    pub vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_rank: 8,
            max_m: 3,
            vertices: DEFAULT_BUDGET,
        }
    }
}

pub fn run(suites: &[Suite], budget: &Budget) -> Vec<Check> {
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::Oracle => oracle(budget, &mut out),
            Suite::Models => models(budget, &mut out),
            Suite::Catalog => catalog(budget, &mut out),
        }
    }
    out
}

struct Sink<'a> {
    suite: Suite,
    out: &'a mut Vec<Check>,
}

impl Sink<'_> {
    fn push(&mut self, criterion: u8, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(Check {
            suite: self.suite,
            criterion,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

fn ints(v: &[u64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x as i64)).collect()
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(", "))
}

// --------------------------------------------------------------- oracle

/// The finite types whose complexes are enumerated, each with its colours.
pub fn oracle_instances(max_rank: usize, max_m: usize) -> Vec<(FiniteType, usize)> {
    use FiniteType::*;
    let mut types: Vec<FiniteType> = (1..=5).map(A).collect();
    types.extend((2..=4).map(B));
    types.extend([D(4), F4, H(3)]);
    types.extend((3..=8).map(I2));
    let mut out = Vec::new();
    for t in types {
        if t.rank() > max_rank {
            continue;
        }
        let top = if t.rank() <= 2 { 3 } else { 2 };
        out.extend((1..=top.min(max_m)).map(|m| (t, m)));
    }
    out
}

fn type_name(t: FiniteType, m: usize) -> String {
    format!("{t} m={m}")
}

fn oracle(budget: &Budget, out: &mut Vec<Check>) {
    let mut sink = Sink {
        suite: Suite::Oracle,
        out,
    };
    for (t, m) in oracle_instances(budget.max_rank, budget.max_m) {
        let name = type_name(t, m);
        let g = t.diagram();
        let cx = match ClusterComplex::from_diagram(&g, m, budget.vertices) {
            Ok(cx) => cx,
            Err(e) => {
                sink.push(1, format!("{name} enumeration"), false, e.to_string());
                continue;
            }
        };
        let census = cx.census(false);
        let brute = ints(&census.f);
        let closed = eval_all(&f_vector_closed(t), m as i64);
        let h = int(t.coxeter_number() as i64);
        let recur = f_poly_recursive(&g, &h).map(|f| eval_all(&f, m as i64));
        sink.push(
            1,
            format!("{name} f-vector"),
            Some(&brute) == recur.as_ref() && brute == closed,
            format!("enumerated {} closed {}", show(&brute), show(&closed)),
        );
        sink.push(
            2,
            format!("{name} purity and ridges"),
            census.is_pure() && census.ridge_degree_ok(),
            format!(
                "{} non-pure maximal faces, {} bad ridges",
                census.non_pure_maximal, census.bad_ridges
            ),
        );
        let hv = h_from_f_numeric(&brute);
        let hv_closed = eval_all(&h_vector_closed(t), m as i64);
        sink.push(
            4,
            format!("{name} h-vector"),
            hv == hv_closed,
            format!("from f {} closed {}", show(&hv), show(&hv_closed)),
        );
        let n = t.rank();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let euler = n_product(t).eval(&int(m as i64 - 1)) * int(sign);
        sink.push(
            4,
            format!("{name} reduced Euler characteristic"),
            int(census.reduced_euler() as i64) == euler,
            format!("enumerated {} expected {euler}", census.reduced_euler()),
        );
        let np = n_plus_product(t).eval(&int(m as i64));
        sink.push(
            5,
            format!("{name} positive facets"),
            int(census.positive_facets as i64) == np,
            format!("enumerated {} product {np}", census.positive_facets),
        );
        if n <= 4 && m <= 2 {
            let full = g.vertex_set();
            let bad: Vec<VertexSet> = full
                .subsets()
                .filter(|&j| !j.is_empty() && j != full)
                .filter(|&j| !cx.restriction_check(j).unwrap_or(false))
                .collect();
            sink.push(
                2,
                format!("{name} restriction to parabolics"),
                bad.is_empty(),
                format!("{} failing subsets", bad.len()),
            );
        }
    }
    named_counts(budget, &mut sink);
}

fn named_counts(budget: &Budget, sink: &mut Sink) {
    use FiniteType::*;
    let build = |t: FiniteType, m: usize| ClusterComplex::from_diagram(&t.diagram(), m, budget.vertices);
    if budget.max_m >= 2 {
        if let Ok(cx) = build(A(2), 2) {
            let f = cx.census(false).f;
            sink.push(3, "A2 m=2 vertices and edges", f[1] == 8 && f[2] == 12, format!("{f:?}"));
        }
    }
    if budget.max_m >= 3 {
        if let Ok(cx) = build(B(2), 3) {
            let n = cx.vertices().len();
            let regular = (0..n).all(|i| cx.degree(i) == 4);
            sink.push(3, "B2 m=3 is 4-regular on 14 vertices", n == 14 && regular, format!("{n} vertices"));
        }
    }
    if budget.max_rank >= 4 && budget.max_m >= 2 {
        match build(D(4), 2) {
            Ok(cx) => {
                let got = cx.census(false).facet_count();
                let want = n_product(D(4)).eval(&int(2));
                sink.push(
                    3,
                    "D4 m=2 facets",
                    int(got as i64) == want && got == 336,
                    format!("enumerated {got} product {want}"),
                );
            }
            Err(e) => sink.push(3, "D4 m=2 facets", false, e.to_string()),
        }
    }
    if budget.max_rank >= 3 {
        if let Ok(cx) = build(H(3), 1) {
            let got = cx.census(false).facet_count();
            let want = n_product(H(3)).eval(&int(1));
            sink.push(
                3,
                "H3 m=1 facets",
                int(got as i64) == want && got == 32,
                format!("enumerated {got} product {want}"),
            );
        }
    }
}

// --------------------------------------------------------------- models

fn models(budget: &Budget, out: &mut Vec<Check>) {
    let mut sink = Sink {
        suite: Suite::Models,
        out,
    };
    let mm = budget.max_m.min(2);
    let mut audit = |name: String, r: Result<crate::polygon::AuditReport, _>| match r {
        Ok(r) => {
            let detail = format!(
                "{} roots, {} model vertices, {} compatibility and {} rotation mismatches",
                r.colored_roots, r.model_vertices, r.compat_mismatches, r.rotation_mismatches
            );
            sink.push(6, name, r.passed(), detail);
        }
        Err(e) => sink.push(6, name, false, format!("{e}")),
    };
    for m in 1..=mm {
        for n in 1..=budget.max_rank.min(4) {
            audit(format!("A{n} m={m} model audit"), audit_type_a(n, m));
        }
        for n in 2..=budget.max_rank.min(3) {
            audit(format!("B{n} m={m} model audit"), audit_type_b(n, m));
        }
        for n in 3..=budget.max_rank.min(4) {
            audit(format!("D{n} m={m} model audit"), audit_type_d(n, m));
        }
    }
    for n in 1..=budget.max_rank.min(4) {
        for m in 1..=budget.max_m.min(3) {
            let name = format!("A{n} m={m} dissection counts");
            match dissection_f_vector(n, m) {
                Ok(f) => {
                    let got = ints(&f);
                    let want = eval_all(&f_vector_closed(FiniteType::A(n)), m as i64);
                    sink.push(6, name, got == want, format!("{} vs {}", show(&got), show(&want)));
                }
                Err(e) => sink.push(6, name, false, e.to_string()),
            }
        }
    }
    for n in 2..=budget.max_rank.min(3) {
        for m in 1..=mm {
            let name = format!("B{n} m={m} diameter faces");
            let (f, d) = match TypeBModel::new(n, m) {
                Ok(model) => model.face_census(),
                Err(e) => {
                    sink.push(6, name, false, e.to_string());
                    continue;
                }
            };
            let ok = (1..=n).all(|k| {
                rat(d[k] as i64, f[k] as i64) == rat(k as i64, n as i64)
                    && int(d[k] as i64) == diameter_face_count(n as i64, k as i64, m as i64)
            });
            sink.push(6, name, ok, format!("with diameter {d:?} of {f:?}"));
        }
    }
    if budget.max_rank >= 3 && budget.max_m >= 2 {
        let gray = DVertex::Diameter {
            pos: 1,
            flavor: Flavor::Gray,
        };
        let got = TypeDModel::new(3, 2).map(|m| m.face_census(&gray).1);
        sink.push(
            6,
            "D3 m=2 facets through the gray primary diameter",
            got == Ok(12),
            match &got {
                Ok(k) => k.to_string(),
                Err(e) => e.to_string(),
            },
        );
    }
}

// -------------------------------------------------------------- catalog

/// The diagrams over which the invariant algorithms are cross-checked:
/// finite irreducible types of rank 3..=8, affine types with up to nine
/// vertices, and a handful of other infinite types.
pub fn invariant_catalog(max_rank: usize) -> Vec<(String, CoxeterDiagram)> {
    let mut out = Vec::new();
    for rank in 3..=max_rank.min(8) {
        for t in FiniteType::catalog(rank, 6) {
            out.push((t.to_string(), t.diagram()));
        }
    }
    for v in 3..=(max_rank + 1).min(9) {
        for t in AffineType::catalog(v) {
            out.push((t.to_string(), t.diagram()));
        }
    }
    for (name, text) in OTHER_DIAGRAMS {
        let g = parse_diagram(text).expect("catalog diagram");
        if g.rank() <= max_rank {
            out.push((name.to_string(), g));
        }
    }
    out
}

const OTHER_DIAGRAMS: [(&str, &str); 9] = [
    ("triangle 5,3,3", "n=3; 1-2 2-3 1-3:5"),
    ("path 5,4", "n=3; 1-2:5 2-3:4"),
    ("triangle 4,4,4", "n=3; 1-2:4 2-3:4 1-3:4"),
    ("K4", "n=4; 1-2 1-3 1-4 2-3 2-4 3-4"),
    ("4-cycle 3,4,3,4", "n=4; 1-2 2-3:4 3-4 1-4:4"),
    ("4-cycle one 4", "n=4; 1-2 2-3 3-4 1-4:4"),
    ("4-cycle one 5", "n=4; 1-2 2-3 3-4 1-4:5"),
    ("path 3,4,4", "n=4; 1-2 2-3:4 3-4:4"),
    ("path 4,3,5", "n=4; 1-2:4 2-3 3-4:5"),
];

fn exps_match(r: &MethodResult, want: &[Rational]) -> bool {
    r.exponents.as_ref().is_some_and(|e| e.all_rational() && e.rational == want)
}

fn summary(r: &MethodResult) -> String {
    let h = r.h.as_ref().map_or("-".to_string(), ToString::to_string);
    format!("{} h={h}", r.status)
}

fn catalog(budget: &Budget, out: &mut Vec<Check>) {
    let mut sink = Sink {
        suite: Suite::Catalog,
        out,
    };
    let max_rank = budget.max_rank.min(DEFAULT_MAX_RANK);
    for rank in 3..=max_rank.min(8) {
        for t in FiniteType::catalog(rank, 6) {
            let rep = compute_all(&t.diagram());
            let h = int(t.coxeter_number() as i64);
            let e: Vec<Rational> = t.exponents().iter().map(|&x| int(x as i64)).collect();
            let bad: Vec<String> = rep
                .results
                .iter()
                .filter(|(_, r)| !(r.status.is_ok() && r.h.as_ref() == Some(&h) && exps_match(r, &e)))
                .map(|(m, r)| format!("{m}: {}", summary(r)))
                .collect();
            sink.push(7, format!("{t} invariants"), bad.is_empty(), bad.join("; "));
        }
    }
    m_table(max_rank, &mut sink);
    fake_catalog(max_rank, &mut sink);
    agreement(max_rank, &mut sink);
}

fn m_table(max_rank: usize, sink: &mut Sink) {
    use FiniteType::*;
    let mut rows: Vec<(FiniteType, i64)> = Vec::new();
    for n in 1..=max_rank.min(8) {
        rows.push((A(n), 1));
        if n >= 2 {
            rows.push((B(n), n as i64));
        }
        if n >= 4 {
            rows.push((D(n), n as i64 - 2));
        }
    }
    rows.extend([(E(6), 7), (E(7), 16), (E(8), 44), (F4, 10), (H(3), 8), (H(4), 42)]);
    rows.extend((5..=9).map(|a| (I2(a), a as i64 - 2)));
    for (t, want) in rows {
        if t.rank() > max_rank {
            continue;
        }
        let g = t.diagram();
        let got: Vec<(Method, Option<Rational>)> = [Method::ReciprocityGeneral, Method::Mg]
            .into_iter()
            .map(|m| (m, run_method(&g, m, max_rank).m_value))
            .collect();
        let ok = got.iter().all(|(_, v)| v.as_ref() == Some(&int(want)));
        sink.push(7, format!("{t} M value"), ok, format!("expected {want}, got {got:?}"));
    }
}

struct Expect {
    name: &'static str,
    text: &'static str,
    h: Option<Rational>,
    rational: Vec<Rational>,
    /// Primitive polynomial for the irrational exponents, low degree first.
    irrational: Option<Vec<i64>>,
}

fn fake_catalog(max_rank: usize, sink: &mut Sink) {
    let mut push = |name: String, ok: bool, detail: String| sink.push(8, name, ok, detail);
    let run_all = |text: &str| compute_all(&parse_diagram(text).expect("catalog diagram"));

    for n in 3..=6usize {
        if n > max_rank {
            continue;
        }
        let b = FiniteType::B(n);
        let h = int(b.coxeter_number() as i64);
        let e: Vec<Rational> = b.exponents().iter().map(|&x| int(x as i64)).collect();
        let rep = run_all(&format!("~A{}", n - 1));
        let ok = rep
            .results
            .iter()
            .all(|(_, r)| r.status.is_ok() && r.h.as_ref() == Some(&h) && exps_match(r, &e));
        push(format!("~A{} has B{n} invariants", n - 1), ok, rep.consensus.as_str().into());
    }

    for (text, a) in [
        ("n=3; 1-2 2-3", 8),
        ("n=3; 1-2 2-3:4", 9),
        ("n=3; 1-2 2-3:5", 10),
        ("n=3; 1-2 2-3:6", 11),
        ("n=3; 1-2 2-3 1-3:5", 11),
    ] {
        let rep = run_all(text);
        let want = rat(2 * a, 12 - a);
        let ok = rep.results.iter().all(|(_, r)| r.h.as_ref() == Some(&want));
        push(format!("rank 3 label sum {a}: h = {want}"), ok, text.into());
    }

    let mg_zero = |text: &str| {
        let rep = run_all(text);
        let all_fail = rep.results.iter().all(|(_, r)| !r.status.is_ok());
        let mg = rep.get(Method::Mg).map(|r| r.status.as_str()).unwrap_or("-");
        (all_fail && mg == "zero-denominator", format!("mg {mg}"))
    };
    let (ok, d) = mg_zero("n=4; 1-2 1-3 1-4 2-3 2-4 3-4");
    push("K4 fails in every method".into(), ok, d);
    let (ok, d) = mg_zero("n=4; 1-2 2-3:4 3-4 1-4:4");
    push("4-cycle 3,4,3,4 fails in every method".into(), ok, d);

    let cases = [
        Expect {
            name: "~G2",
            text: "~G2",
            h: Some(int(22)),
            rational: vec![int(1), int(11), int(21)],
            irrational: None,
        },
        Expect {
            name: "~B2/~C2",
            text: "~C2",
            h: Some(int(10)),
            rational: vec![int(1), int(5), int(9)],
            irrational: None,
        },
        Expect {
            name: "~C3",
            text: "~C3",
            h: Some(int(13)),
            rational: vec![int(1), int(12)],
            irrational: Some(vec![38, -13, 1]),
        },
        Expect {
            name: "~B3",
            text: "~B3",
            h: Some(rat(76, 5)),
            rational: vec![int(1), rat(33, 5), rat(43, 5), rat(71, 5)],
            irrational: None,
        },
        Expect {
            name: "4-cycle one 4",
            text: "n=4; 1-2 2-3 3-4 1-4:4",
            h: Some(rat(43, 2)),
            rational: vec![int(1), rat(41, 2)],
            irrational: Some(vec![213, -43, 2]),
        },
    ];
    for c in cases {
        if parse_diagram(c.text).map_or(true, |g| g.rank() > max_rank) {
            continue;
        }
        let rep = run_all(c.text);
        let poly = c.irrational.as_deref().map(Poly::from_ints);
        let ok = rep.results.iter().all(|(_, r)| {
            r.status.is_ok()
                && r.h == c.h
                && r.exponents.as_ref().is_some_and(|e| {
                    e.rational == c.rational
                        && match &poly {
                            Some(p) => &e.irrational_poly == p,
                            None => e.all_rational(),
                        }
                })
        });
        let detail: Vec<String> = rep.results.iter().map(|(m, r)| format!("{m}: {}", summary(r))).collect();
        push(format!("{} fake invariants", c.name), ok, detail.join("; "));
    }

    if max_rank >= 5 {
        let rep = run_all("~D4");
        let e6 = [1, 6, 6, 9, 13].map(int);
        let recip = [Method::ReciprocitySimple, Method::ReciprocityGeneral].iter().all(|&m| {
            rep.get(m)
                .is_some_and(|r| r.status.is_ok() && r.h == Some(int(14)) && exps_match(r, &e6))
        });
        let sym = rep.get(Method::Symmetry).expect("symmetry ran");
        let sym_ok = sym.status.as_str() == "asymmetric-Q" && sym.h == Some(int(14));
        let euler_fails = !rep.get(Method::Euler).expect("euler ran").status.is_ok();
        let detail: Vec<String> = rep.results.iter().map(|(m, r)| format!("{m}: {}", summary(r))).collect();
        push("~D4 ambiguity".into(), recip && sym_ok && euler_fails, detail.join("; "));
    }
}

/// Keys of the methods that can detect a non-constant `h` or an asymmetric
/// `Q`; the other two solve for a single number and always succeed unless
/// a denominator vanishes.
pub const CERTIFYING_METHODS: [Method; 3] =
    [Method::Euler, Method::Symmetry, Method::ReciprocityGeneral];

fn agreement(max_rank: usize, sink: &mut Sink) {
    let mut all_pairs = Vec::new();
    let mut certified = Vec::new();
    let mut checked = 0;
    for (name, g) in invariant_catalog(max_rank) {
        checked += 1;
        let rep = compute_all(&g);
        let ok: Vec<&(Method, MethodResult)> = rep.results.iter().filter(|(_, r)| r.status.is_ok()).collect();
        for (i, (ma, ra)) in ok.iter().enumerate() {
            for (mb, rb) in &ok[i + 1..] {
                if !ra.agrees_with(rb) {
                    let line = format!("{name}: {ma} {} vs {mb} {}", summary(ra), summary(rb));
                    if CERTIFYING_METHODS.contains(ma) && CERTIFYING_METHODS.contains(mb) {
                        certified.push(line.clone());
                    }
                    all_pairs.push(line);
                }
            }
        }
    }
    sink.push(
        9,
        "ok methods agree pairwise",
        all_pairs.is_empty(),
        format!(
            "{checked} diagrams; {} disagreeing pairs, first: {}",
            all_pairs.len(),
            all_pairs.iter().take(4).cloned().collect::<Vec<_>>().join("; ")
        ),
    );
    sink.push(
        9,
        "euler, symmetry and general reciprocity agree when ok",
        certified.is_empty(),
        format!("{checked} diagrams; {}", certified.join("; ")),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_list_respects_budget() {
        let v = oracle_instances(2, 2);
        assert!(v.iter().all(|(t, m)| t.rank() <= 2 && *m <= 2));
        assert!(v.contains(&(FiniteType::I2(8), 2)));
        assert_eq!(oracle_instances(5, 3).len(), 43);
    }

    #[test]
    fn small_oracle_run_passes() {
        let b = Budget {
            max_rank: 3,
            max_m: 2,
            vertices: DEFAULT_BUDGET,
        };
        let checks = run(&[Suite::Oracle], &b);
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn catalog_names_are_unique() {
        let cat = invariant_catalog(8);
        let mut names: Vec<&String> = cat.iter().map(|(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
    }
}
