use ccx_core::diagram::parse_diagram;
use ccx_core::invariants::{compute, compute_all, Method, DEFAULT_MAX_RANK};
use ccx_core::verify::{run, Budget, Suite};

#[test]
fn invariant_report_schema() {
    let rep = compute_all(&parse_diagram("~A3").unwrap());
    let v = rep.to_json();
    for key in ["diagram", "classification", "methods", "consensus"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let methods = v["methods"].as_object().unwrap();
    let keys: Vec<&str> = methods.keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["euler", "mg", "reciprocity_general", "reciprocity_simple", "symmetry"]
    );
    let mg = &methods["mg"];
    assert_eq!(mg["h"], "8/1");
    assert_eq!(mg["exponents"]["rational"], serde_json::json!(["1/1", "3/1", "5/1", "7/1"]));
    assert_eq!(v["consensus"], "agree");
}

#[test]
fn irrational_exponents_in_json() {
    let v = compute_all(&parse_diagram("~C3").unwrap()).to_json();
    let e = &v["methods"]["euler"]["exponents"];
    assert_eq!(e["irrational"]["poly"], serde_json::json!(["38/1", "-13/1", "1/1"]));
    let approx = e["irrational"]["approx"].as_array().unwrap();
    assert!((approx[0].as_f64().unwrap() - (13.0 - 17f64.sqrt()) / 2.0).abs() < 1e-9);
}

#[test]
fn single_method_report() {
    let rep = compute(&parse_diagram("H4").unwrap(), &[Method::Mg], DEFAULT_MAX_RANK);
    assert_eq!(rep.results.len(), 1);
    assert_eq!(rep.to_json()["methods"]["mg"]["M"], "42/1");
}

#[test]
fn models_suite_passes() {
    let checks = run(&[Suite::Models], &Budget { max_rank: 3, max_m: 2, ..Budget::default() });
    assert!(checks.len() > 10);
    assert!(checks.iter().all(|c| c.passed && c.criterion == 6), "{checks:?}");
}
