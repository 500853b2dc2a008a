use super::*;
use crate::diagram::{parse_diagram, FiniteType};
use crate::exactmath::rat;
use crate::rootsys::RootSystem;

fn g(text: &str) -> CoxeterDiagram {
    parse_diagram(text).unwrap()
}

fn r(p: i64, q: i64) -> Rational {
    rat(p, q)
}

fn run(text: &str, m: Method) -> MethodResult {
    run_method(&g(text), m, DEFAULT_MAX_RANK)
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn finite_types_recover_h_and_exponents() {
    for rank in 3..=8 {
        for ty in FiniteType::catalog(rank, 6) {
            let rep = compute_all(&ty.diagram());
            let h = int(ty.coxeter_number() as i64);
            let exps: Vec<Rational> = ty.exponents().iter().map(|&e| int(e as i64)).collect();
            for (method, res) in &rep.results {
                assert!(res.status.is_ok(), "{ty} {method}: {res:?}");
                assert!(res.exponents.is_some(), "{ty} {method}: {res:?}");
                assert_eq!(res.h.as_ref(), Some(&h), "{ty} {method}");
                let e = res.exponents.as_ref().expect("exponents");
                assert!(e.all_rational(), "{ty} {method}");
                assert_eq!(e.rational, exps, "{ty} {method}");
            }
            assert_eq!(rep.consensus, Consensus::Agree, "{ty}");
        }
    }
}

#[test]
fn m_value_matches_table() {
    let table = [
        ("A5", 1),
        ("B4", 4),
        ("D5", 3),
        ("E6", 7),
        ("E7", 16),
        ("E8", 44),
        ("F4", 10),
        ("H3", 8),
        ("H4", 42),
    ];
    for (name, m) in table {
        let res = run(name, Method::ReciprocityGeneral);
        assert_eq!(res.m_value, Some(int(m)), "{name}");
        assert_eq!(run(name, Method::Mg).m_value, Some(int(m)), "{name}");
    }
}

#[test]
fn m_values_sum_to_positive_root_count() {
    for name in ["A4", "B3", "D4", "F4", "H3", "E6"] {
        let d = g(name);
        let n = d.rank();
        let mut total = Rational::zero();
        for s in d.vertex_set().subsets() {
            let sub = d.restrict(s);
            if s.len() >= 1 && sub.is_connected() {
                total += run_method(&sub, Method::Mg, DEFAULT_MAX_RANK)
                    .m_value
                    .unwrap();
            }
        }
        let h = run(name, Method::Mg).h.unwrap();
        assert_eq!(total, h * int(n as i64) / int(2), "{name}");
        let rs = RootSystem::new(&d).unwrap();
        assert_eq!(total, int(rs.num_positive() as i64), "{name}");
    }
}

#[test]
fn rank_three_closed_forms() {
    // label sum a over the three pairs
    let cases = [
        ("A3", 8),
        ("B3", 9),
        ("~A2", 9),
        ("H3", 10),
        ("~C2", 10),
        ("~G2", 11),
        ("n=3; 1-2:5 2-3:4", 11),
        ("n=3; 1-2 2-3 1-3:5", 11),
    ];
    for (text, a) in cases {
        let expect_h = r(2 * a, 12 - a);
        let expect_m = r((a - 6) * (a - 6), 12 - a);
        let expect_n1 = r(4 * (a + 6), 12 - a);
        let expect_np1 = r((a - 3) * (a - 4), 12 - a);
        for m in Method::ALL {
            let res = run(text, m);
            assert_eq!(res.h.as_ref(), Some(&expect_h), "{text} {m}");
            assert_eq!(res.m_value.as_ref(), Some(&expect_m), "{text} {m}");
            let n = res.n_poly.as_ref().unwrap();
            let np = res.n_plus_poly.as_ref().unwrap();
            assert_eq!(n.eval(&int(1)), expect_n1, "{text} {m}");
            assert_eq!(np.eval(&int(1)), expect_np1, "{text} {m}");
        }
    }
}

#[test]
fn rank_three_at_label_sum_twelve_has_no_solution() {
    for text in ["n=3; 1-2:4 2-3:4 1-3:4", "n=3; 1-2 2-3 1-3:6"] {
        let d = g(text);
        for m in Method::ALL {
            let res = run_method(&d, m, DEFAULT_MAX_RANK);
            assert_eq!(res.status, MethodStatus::ZeroDenominator, "{text} {m}");
            assert!(res.h.is_none());
        }
    }
}

#[test]
fn h3_counts() {
    let res = run("H3", Method::ReciprocitySimple);
    assert_eq!(res.at_one, Some((int(32), int(21))));
    let n = run("H3", Method::Euler).n_poly.unwrap();
    assert_eq!(n.eval(&int(1)), int(32));
}

#[test]
fn cyclic_a_gives_b_invariants() {
    for n in 3..=6 {
        let rep = compute_all(&g(&format!("~A{}", n - 1)));
        let b = FiniteType::B(n);
        let exps: Vec<Rational> = b.exponents().iter().map(|&e| int(e as i64)).collect();
        assert_eq!(rep.consensus, Consensus::Agree, "n = {n}");
        for (_, res) in &rep.results {
            assert_eq!(res.h, Some(int(b.coxeter_number() as i64)));
            assert_eq!(res.exponents.as_ref().unwrap().rational, exps);
        }
    }
}

#[test]
fn affine_rank_three() {
    for (text, h, e) in [("~G2", 22, [1, 11, 21]), ("~C2", 10, [1, 5, 9])] {
        let rep = compute_all(&g(text));
        assert_eq!(rep.consensus, Consensus::Agree, "{text}");
        for (_, res) in &rep.results {
            assert_eq!(res.h, Some(int(h)));
            assert_eq!(res.exponents.as_ref().unwrap().rational, ints(&e));
        }
    }
}

#[test]
fn affine_c3_has_irrational_exponents() {
    let rep = compute_all(&g("~C3"));
    assert_eq!(rep.consensus, Consensus::Agree);
    for (_, res) in &rep.results {
        assert_eq!(res.h, Some(int(13)));
        let e = res.exponents.as_ref().unwrap();
        assert_eq!(e.rational, ints(&[1, 12]));
        // (13 +- sqrt 17) / 2
        assert_eq!(e.irrational_poly, Poly::from_ints(&[38, -13, 1]));
        let s = 17f64.sqrt();
        let want = [(13.0 - s) / 2.0, (13.0 + s) / 2.0];
        for (a, b) in e.irrational_approx.iter().zip(want) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn affine_b3() {
    let rep = compute_all(&g("~B3"));
    for (_, res) in &rep.results {
        assert_eq!(res.h, Some(r(76, 5)));
        assert_eq!(
            res.exponents.as_ref().unwrap().rational,
            vec![int(1), r(33, 5), r(43, 5), r(71, 5)]
        );
    }
}

#[test]
fn affine_d4() {
    let d = g("~D4");
    for m in [Method::ReciprocitySimple, Method::ReciprocityGeneral] {
        let res = run_method(&d, m, DEFAULT_MAX_RANK);
        assert!(res.status.is_ok(), "{m}: {res:?}");
        assert_eq!(res.h, Some(int(14)));
        assert_eq!(res.exponents.unwrap().rational, ints(&[1, 6, 6, 9, 13]));
    }
    let sym = run_method(&d, Method::Symmetry, DEFAULT_MAX_RANK);
    assert_eq!(sym.status, MethodStatus::AsymmetricQ);
    assert_eq!(sym.h, Some(int(14)));
    assert!(!run_method(&d, Method::Euler, DEFAULT_MAX_RANK).status.is_ok());
}

#[test]
fn four_cycles() {
    let one4 = "n=4; 1-2 2-3 3-4 1-4:4";
    for m in Method::ALL {
        let res = run(one4, m);
        assert_eq!(res.h, Some(r(43, 2)), "{m}");
        let e = res.exponents.unwrap();
        assert_eq!(e.rational, vec![int(1), r(41, 2)]);
        assert_eq!(e.irrational_poly, Poly::from_ints(&[213, -43, 2]));
    }
    let one5 = "n=4; 1-2 2-3 3-4 1-4:5";
    for m in Method::ALL {
        let res = run(one5, m);
        assert_eq!(res.status, MethodStatus::NegativeH, "{m}");
        assert_eq!(res.h, Some(int(-22)));
    }
    let alt = "n=4; 1-2 2-3:4 3-4 1-4:4";
    assert_eq!(run(alt, Method::Mg).status, MethodStatus::ZeroDenominator);
    assert!(compute_all(&g(alt)).results.iter().all(|(_, r)| !r.status.is_ok()));
}

#[test]
fn complete_graph_fails_everywhere() {
    let k4 = "n=4; 1-2 1-3 1-4 2-3 2-4 3-4";
    let rep = compute_all(&g(k4));
    assert!(rep.results.iter().all(|(_, r)| !r.status.is_ok()));
    assert_eq!(
        rep.get(Method::Mg).unwrap().status,
        MethodStatus::ZeroDenominator
    );
}

#[test]
fn rank_four_paths() {
    for (text, h) in [("n=4; 1-2 2-3:4 3-4:4", 98), ("n=4; 1-2:4 2-3 3-4:5", 104)] {
        let rep = compute_all(&g(text));
        for (m, res) in &rep.results {
            assert_eq!(res.h, Some(int(h)), "{text} {m}");
        }
    }
}

#[test]
fn mg_on_affine_families() {
    let res = run("~B5", Method::Mg);
    assert_eq!((res.h, res.m_value), (Some(int(22)), Some(int(26))));
    assert_eq!(
        run("~B5", Method::ReciprocityGeneral).status,
        MethodStatus::NonConstantH
    );
    for n in 2..=6 {
        let res = run(&format!("~C{n}"), Method::Mg);
        assert_eq!(res.h, Some(int(3 * n + 4)), "n = {n}");
        assert_eq!(res.m_value, Some(int(3 * n + 2)), "n = {n}");
    }
    let res = run("~E8", Method::Mg);
    assert_eq!((res.h, res.m_value), (Some(int(98)), Some(int(306))));
}

#[test]
fn reciprocity_variants_agree_at_one() {
    for name in ["A4", "B4", "D4", "H3", "F4", "~A3", "~G2"] {
        let s = run(name, Method::ReciprocitySimple);
        let gen = run(name, Method::ReciprocityGeneral);
        let (n1, np1) = s.at_one.clone().unwrap();
        assert_eq!(gen.n_poly.unwrap().eval(&int(1)), n1, "{name}");
        assert_eq!(gen.n_plus_poly.unwrap().eval(&int(1)), np1, "{name}");
    }
}

#[test]
fn inapplicable_inputs() {
    let res = run("A2xA1", Method::Euler);
    assert_eq!(res.status, MethodStatus::NotApplicable);
    let res = run_method(&g("A5"), Method::Mg, 4);
    assert_eq!(res.status, MethodStatus::BudgetExceeded);
}

#[test]
fn report_json_shape() {
    let v = compute_all(&g("A3")).to_json();
    assert_eq!(v["consensus"], "agree");
    assert_eq!(v["methods"]["mg"]["h"], "4/1");
    assert_eq!(v["methods"]["euler"]["status"], "ok");
}

#[test]
fn four_cycle_with_a_five_has_negative_h() {
    let res = run("n=4; 1-2 2-3 3-4 1-4:5", Method::Euler);
    let e = res.exponents.unwrap();
    assert_eq!(e.rational, ints(&[-23, 1]));
    // -11 +- 2 sqrt 3
    assert_eq!(e.irrational_poly, Poly::from_ints(&[109, 22, 1]));
}

#[test]
fn five_cycle_fails() {
    let rep = compute_all(&g("n=5; 1-2 2-3 3-4 4-5 1-5:4"));
    for m in [Method::Euler, Method::Symmetry, Method::ReciprocityGeneral] {
        assert!(!rep.get(m).unwrap().status.is_ok(), "{m}");
    }
}

#[test]
fn other_affine_types_fail_in_the_main_methods() {
    use crate::diagram::AffineType;
    let works = ["~C2", "~G2", "~B3", "~C3", "~D4"];
    for v in 3..=7 {
        for t in AffineType::catalog(v) {
            let name = t.to_string();
            if matches!(t, AffineType::A(_)) || works.contains(&name.as_str()) {
                continue;
            }
            let rep = compute_all(&t.diagram());
            for m in [Method::Euler, Method::Symmetry, Method::ReciprocityGeneral] {
                assert!(!rep.get(m).unwrap().status.is_ok(), "{name} {m}");
            }
        }
    }
}
