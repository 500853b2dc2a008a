use ccx_core::diagram::{CoxeterDiagram, FiniteType};
use ccx_core::exactmath::{int, rat, Rational};
use ccx_core::formulas::{eval_all, f_poly_recursive, f_vector_closed};
use ccx_core::invariants::{compute_all, Consensus, Method, MethodStatus};
use ccx_core::polygon::{allowable_diagonals, Diagonal};
use proptest::prelude::*;

fn finite_type() -> impl Strategy<Value = FiniteType> {
    (1usize..=6).prop_flat_map(|r| {
        let list = FiniteType::catalog(r, 9);
        (0..list.len()).prop_map(move |i| list[i])
    })
}

fn label() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), 3u32..=7]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recurrence_reproduces_closed_forms(t in finite_type(), m in 0i64..5) {
        let g = t.diagram();
        let h = int(t.coxeter_number() as i64);
        let rec = f_poly_recursive(&g, &h).unwrap();
        prop_assert_eq!(eval_all(&rec, m), eval_all(&f_vector_closed(t), m));
    }

    #[test]
    fn rank_three_coxeter_number(a in label(), b in label(), c in label()) {
        let edges: Vec<(usize, usize, u32)> = [(1, 2, a), (2, 3, b), (1, 3, c)]
            .into_iter()
            .filter(|e| e.2 > 2)
            .collect();
        let g = CoxeterDiagram::new(3, &edges).unwrap();
        prop_assume!(g.is_connected());
        let s = (a + b + c) as i64;
        let rep = compute_all(&g);
        for (m, r) in &rep.results {
            if s == 12 {
                prop_assert_eq!(r.status, MethodStatus::ZeroDenominator);
            } else {
                prop_assert_eq!(r.h.clone(), Some(rat(2 * s, 12 - s)), "{}", m);
            }
        }
    }

    #[test]
    fn rational_exponents_sum_to_half_nh(
        labels in proptest::collection::vec(label(), 6),
    ) {
        // a random diagram on four vertices
        let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        let edges: Vec<(usize, usize, u32)> = pairs
            .iter()
            .zip(&labels)
            .filter(|(_, &l)| l > 2)
            .map(|(&(i, j), &l)| (i, j, l))
            .collect();
        let g = CoxeterDiagram::new(4, &edges).unwrap();
        prop_assume!(g.is_connected());
        let rep = compute_all(&g);
        for (m, r) in &rep.results {
            let (Some(h), Some(e)) = (&r.h, &r.exponents) else { continue };
            if r.status.is_ok() && e.all_rational() {
                let sum: Rational = e.rational.iter().sum();
                prop_assert_eq!(sum, h * int(4) / int(2), "{}", m);
            }
        }
        let ok: Vec<_> = rep.results.iter().filter(|(_, r)| r.status.is_ok()).collect();
        if ok.len() == Method::ALL.len() {
            prop_assert_eq!(rep.consensus, Consensus::Agree);
        }
    }

    #[test]
    fn crossing_is_symmetric_and_rotation_invariant(
        n in 1usize..5, m in 1usize..4, i in 0usize..64, j in 0usize..64, s in 0usize..40,
    ) {
        let d = allowable_diagonals(n, m);
        let (a, b) = (d[i % d.len()], d[j % d.len()]);
        prop_assert_eq!(a.crosses(&b), b.crosses(&a));
        prop_assert_eq!(a.crosses(&b), a.rotate(s).crosses(&b.rotate(s)));
        prop_assert!(!a.crosses(&a));
        prop_assert_eq!(a.rotate(s).rotate(a.size - s % a.size), a);
        prop_assert!(a.rotate(m).is_allowable(m));
    }
}

#[test]
fn diagonal_labels_are_one_based() {
    let d = Diagonal::from_labels(1, 4, 8);
    assert_eq!((d.i, d.j), (0, 3));
    assert_eq!(d.to_string(), "P1-P4");
}
