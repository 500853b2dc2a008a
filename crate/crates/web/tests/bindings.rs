use ccx_web::{face_numbers, invariants, polygon_svg};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn face_numbers_of_a2() {
    let v = parse(&face_numbers("A2", 2));
    assert_eq!(v["f"], serde_json::json!(["1/1", "8/1", "12/1"]));
    assert_eq!(v["N"], "12/1");
    assert_eq!(v["N_plus"], "7/1");
}

#[test]
fn errors_are_json() {
    assert!(parse(&face_numbers("~A2", 1))["error"].is_string());
    assert!(parse(&polygon_svg("E", 3, 1, 0))["error"].is_string());
    assert!(parse(&polygon_svg("A", 2, 1, 99))["error"].is_string());
    assert!(parse(&invariants("nonsense"))["error"].is_string());
}

#[test]
fn pictures() {
    let svg = polygon_svg("A", 3, 2, 0);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<line").count(), 3);
    let facet = polygon_svg("D", 3, 2, 5);
    assert!(facet.starts_with("<svg"));
}

#[test]
fn invariants_of_cyclic_diagram() {
    let v = parse(&invariants("~A4"));
    assert_eq!(v["consensus"], "agree");
    assert_eq!(v["methods"]["euler"]["h"], "10/1");
}
