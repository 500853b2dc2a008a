use std::fmt::Write;

use serde_json::{json, Value};

use ccx_core::diagram::{classify, parse_diagram, CoxeterDiagram};
use ccx_core::exactmath::{fmt_rational, int, Poly, Rational};
use ccx_core::formulas::{eval_all, f_vector_for_diagram, h_from_f, h_from_f_numeric};
use ccx_core::gcc::{ClusterComplex, GccError, DEFAULT_BUDGET};
use ccx_core::invariants::{compute, InvariantReport, Method};
use ccx_core::polygon::{Family, Model};
use ccx_core::verify::{self, Budget, Suite};

use crate::{Command, Emit, FaceArgs, Target};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

pub enum CliError {
    Usage(String),
    Domain { kind: &'static str, message: String },
}

impl CliError {
    fn domain(kind: &'static str, message: impl ToString) -> Self {
        CliError::Domain {
            kind,
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Usage(message) => json!({"error": "usage", "message": message}),
            CliError::Domain { kind, message } => json!({"error": kind, "message": message}),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Vertex budget for brute-force enumeration, overridable by `CCX_BUDGET`.
fn budget() -> Result<usize> {
    match std::env::var("CCX_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("CCX_BUDGET must be a number, got {s:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn diagram(t: &Target) -> Result<CoxeterDiagram> {
    let text = t.ty.as_deref().or(t.diagram.as_deref()).unwrap_or_default();
    if t.ty.is_some() && text.trim_start().starts_with("n=") {
        return Err(CliError::Usage("--type takes a named type; use --diagram for edge lists".into()));
    }
    parse_diagram(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn require_finite(g: &CoxeterDiagram) -> Result<()> {
    let c = classify(g);
    if c.is_finite() {
        Ok(())
    } else {
        Err(CliError::domain(
            "not-finite-type",
            format!("{} is of type {}", g.canonical_spec(), c.describe()),
        ))
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn unsupported(emit: Emit, cmd: &str) -> CliError {
    let name = match emit {
        Emit::Json => "json",
        Emit::Text => "text",
        Emit::Csv => "csv",
        Emit::Svg => "svg",
    };
    CliError::Usage(format!("--emit {name} is not available for {cmd}"))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

fn plain(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Complex {
            target,
            m,
            facets,
            emit,
        } => complex(&target, m, facets, emit),
        Command::Fvector(a) => faces(&a, false),
        Command::Hvector(a) => faces(&a, true),
        Command::Dissect {
            family,
            n,
            m,
            facet,
            emit,
        } => dissect(&family, n, m, facet, emit),
        Command::Invariants {
            target,
            method,
            max_rank,
            emit,
        } => invariants(&target, &method, max_rank, emit),
        Command::Verify {
            max_rank,
            max_m,
            suite,
            emit,
        } => run_verify(max_rank, max_m, &suite, emit),
    }
}

fn complex(t: &Target, m: usize, facets: bool, emit: Emit) -> Result<Output> {
    let g = diagram(t)?;
    require_finite(&g)?;
    let cx = ClusterComplex::from_diagram(&g, m, budget()?).map_err(|e| match e {
        GccError::BudgetExceeded(..) => CliError::domain("budget", e),
        other => CliError::domain("root-system", other),
    })?;
    let census = cx.census(facets);
    let f: Vec<Rational> = census.f.iter().map(|&x| int(x as i64)).collect();
    let h = h_from_f_numeric(&f);
    let kind = classify(&g).describe();
    match emit {
        Emit::Json => {
            let mut v = json!({
                "type": kind,
                "diagram": g.canonical_spec(),
                "rank": cx.rank(),
                "m": m,
                "f": census.f,
                "h": strings(&h),
                "facet_count": census.facet_count(),
                "positive_facets": census.positive_facets,
                "reduced_euler": census.reduced_euler().to_string(),
                "pure": census.is_pure(),
                "ridge_degree_ok": census.ridge_degree_ok(),
                "rotation_order": cx.rotation_order(),
            });
            if facets {
                v["complex"] = cx.to_json(census.facets.as_deref());
            }
            Ok(Output::ok(pretty(&v)))
        }
        Emit::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type {kind}, rank {}, m = {m}", cx.rank());
            let _ = writeln!(s, "f = {:?}", census.f);
            let _ = writeln!(s, "h = {}", plain(&h));
            let _ = writeln!(s, "facets {}, positive facets {}", census.facet_count(), census.positive_facets);
            let _ = writeln!(s, "reduced Euler characteristic {}", census.reduced_euler());
            let _ = writeln!(
                s,
                "pure {}, every ridge in m+1 facets {}, R_m of order {}",
                census.is_pure(),
                census.ridge_degree_ok(),
                cx.rotation_order()
            );
            if let Some(fs) = &census.facets {
                for facet in fs {
                    let _ = writeln!(s, "facet {facet:?}");
                }
            }
            Ok(Output::ok(s))
        }
        other => Err(unsupported(other, "complex")),
    }
}

fn faces(a: &FaceArgs, h_only: bool) -> Result<Output> {
    let g = diagram(&a.target)?;
    require_finite(&g)?;
    let f = f_vector_for_diagram(&g).map_err(|e| CliError::domain("not-finite-type", e))?;
    let h = h_from_f(&f);
    let n = g.rank();
    let kind = classify(&g).describe();
    let fv = eval_all(&f, a.m);
    let hv = eval_all(&h, a.m);
    let polys = |ps: &[Poly]| ps.iter().map(Poly::to_strings).collect::<Vec<_>>();
    match a.emit {
        Emit::Json => {
            let v = if h_only {
                json!({"type": kind, "rank": n, "m": a.m, "h": strings(&hv), "h_poly": polys(&h)})
            } else {
                json!({
                    "type": kind,
                    "rank": n,
                    "m": a.m,
                    "f": strings(&fv),
                    "f_poly": polys(&f),
                    "h": strings(&hv),
                })
            };
            Ok(Output::ok(pretty(&v)))
        }
        Emit::Text => {
            let (name, vals, ps) = if h_only { ("h", &hv, &h) } else { ("f", &fv, &f) };
            let mut s = format!("{kind} at m = {}: {name} = {}\n", a.m, plain(vals));
            for (k, p) in ps.iter().enumerate() {
                let _ = writeln!(s, "  {name}_{k}(m) coefficients {}", p.to_strings().join(" "));
            }
            Ok(Output::ok(s))
        }
        Emit::Csv => {
            let mut s = String::from("type,n,m,k,f_k,h_k\n");
            for k in 0..=n {
                let _ = writeln!(s, "{kind},{n},{},{k},{},{}", a.m, fv[k], hv[k]);
            }
            Ok(Output::ok(s))
        }
        Emit::Svg => Err(unsupported(Emit::Svg, if h_only { "hvector" } else { "fvector" })),
    }
}

fn dissect(family: &str, n: usize, m: usize, facet: Option<usize>, emit: Emit) -> Result<Output> {
    let fam: Family = family.parse().map_err(|e: ccx_core::polygon::PolygonError| CliError::Usage(e.to_string()))?;
    let model = Model::new(fam, n, m).map_err(|e| CliError::domain("model", e))?;
    let limit = budget()?;
    if model.vertex_count() > limit {
        return Err(CliError::domain(
            "budget",
            format!("{} model vertices exceed the budget of {limit}", model.vertex_count()),
        ));
    }
    let negatives = model.negatives().map_err(|e| CliError::domain("model", e))?;
    let chosen = match facet {
        Some(0) => return Err(CliError::Usage("--facet is 1-based".into())),
        Some(k) => Some(
            model
                .facets(k)
                .into_iter()
                .nth(k - 1)
                .ok_or_else(|| CliError::domain("no-such-facet", format!("the model has fewer than {k} facets")))?,
        ),
        None => None,
    };
    let picture = chosen.as_ref().unwrap_or(&negatives);
    match emit {
        Emit::Svg => Ok(Output::ok(picture.svg())),
        Emit::Json => {
            let mut v = json!({
                "family": fam.to_string(),
                "n": n,
                "m": m,
                "polygon_size": model.size(),
                "model_vertices": model.vertex_count(),
                "f": model.f_vector(),
                "negative_simple_roots": negatives.labels(),
            });
            if let (Some(k), Some(p)) = (facet, &chosen) {
                v["facet"] = json!({"index": k, "chords": p.labels()});
            }
            Ok(Output::ok(pretty(&v)))
        }
        Emit::Text => {
            let mut s = format!(
                "type {fam}{n} model on the {}-gon, m = {m}, {} vertices\n",
                model.size(),
                model.vertex_count()
            );
            let _ = writeln!(s, "f = {:?}", model.f_vector());
            let _ = writeln!(s, "negative simple roots: {}", negatives.labels().join(", "));
            if let (Some(k), Some(p)) = (facet, &chosen) {
                let _ = writeln!(s, "facet {k}: {}", p.labels().join(", "));
            }
            Ok(Output::ok(s))
        }
        Emit::Csv => Err(unsupported(Emit::Csv, "dissect")),
    }
}

fn invariants(t: &Target, method: &str, max_rank: usize, emit: Emit) -> Result<Output> {
    let g = diagram(t)?;
    let methods = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![Method::parse(method).ok_or_else(|| CliError::Usage(format!("unknown method {method:?}")))?]
    };
    let rep = compute(&g, &methods, max_rank);
    match emit {
        Emit::Json => Ok(Output::ok(pretty(&rep.to_json()))),
        Emit::Text => Ok(Output::ok(invariants_text(&rep))),
        other => Err(unsupported(other, "invariants")),
    }
}

fn invariants_text(rep: &InvariantReport) -> String {
    let mut s = format!("{} ({}), consensus {}\n", rep.diagram, rep.classification, rep.consensus.as_str());
    for (m, r) in &rep.results {
        let _ = write!(s, "  {:<20} {}", m.key(), r.status);
        if let Some(h) = &r.h {
            let _ = write!(s, "  h = {h}");
        }
        if let Some(e) = &r.exponents {
            let _ = write!(s, "  exponents {}", plain(&e.rational));
            for x in &e.irrational_approx {
                let _ = write!(s, " ~{x:.6}");
            }
        }
        if let Some(mv) = &r.m_value {
            let _ = write!(s, "  M = {mv}");
        }
        s.push('\n');
    }
    s
}

fn run_verify(max_rank: usize, max_m: usize, suite: &str, emit: Emit) -> Result<Output> {
    let suites = Suite::parse(suite).ok_or_else(|| CliError::Usage(format!("unknown suite {suite:?}")))?;
    let b = Budget {
        max_rank,
        max_m,
        vertices: budget()?,
    };
    let checks = verify::run(&suites, &b);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let stdout = match emit {
        Emit::Json => pretty(&json!({
            "checks": checks,
            "passed": checks.len() - failed,
            "failed": failed,
        })),
        Emit::Text => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(
                    s,
                    "{} [{} {}] {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite,
                    c.criterion,
                    c.name,
                    c.detail
                );
            }
            let _ = writeln!(s, "{} checks, {failed} failed", checks.len());
            s
        }
        other => return Err(unsupported(other, "verify")),
    };
    Ok(Output {
        stdout,
        code: u8::from(failed > 0),
    })
}
