use std::collections::BTreeSet;

use serde::Serialize;

use super::{PolygonError, TypeAModel, TypeBModel, TypeDModel};
use crate::diagram::{FiniteType, VertexSet};
use crate::gcc::{apply_r_m, colored_ground_set, m_compatible, ColoredRoot};
use crate::rootsys::RootSystem;

/// Outcome of comparing a polygon model with `Delta^m` built from roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub family: String,
    pub rank: usize,
    pub m: usize,
    pub colored_roots: usize,
    pub model_vertices: usize,
    pub injective: bool,
    pub surjective: bool,
    pub pairs_checked: u64,
    pub compat_mismatches: u64,
    pub rotation_mismatches: u64,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.surjective
            && self.compat_mismatches == 0
            && self.rotation_mismatches == 0
    }
}

fn odd_plus(g: &crate::diagram::CoxeterDiagram) -> VertexSet {
    g.bipartition().expect("tree diagram").0
}

fn integer_coeffs(v: &[f64]) -> Option<Vec<i64>> {
    v.iter()
        .map(|&x| {
            let r = x.round();
            ((x - r).abs() < 1e-6).then_some(r as i64)
        })
        .collect()
}

fn run<V: Clone + Ord>(
    family: &str,
    rs: &RootSystem,
    m: usize,
    model: &[V],
    image: impl Fn(ColoredRoot) -> Result<V, PolygonError>,
    compat: impl Fn(&V, &V) -> bool,
    rotate: impl Fn(&V) -> V,
) -> Result<AuditReport, PolygonError> {
    let ground = colored_ground_set(rs, m);
    let images: Vec<V> = ground.iter().map(|&v| image(v)).collect::<Result<_, _>>()?;
    let distinct: BTreeSet<&V> = images.iter().collect();
    let model_set: BTreeSet<&V> = model.iter().collect();
    let mut report = AuditReport {
        family: family.to_string(),
        rank: rs.rank(),
        m,
        colored_roots: ground.len(),
        model_vertices: model.len(),
        injective: distinct.len() == images.len(),
        surjective: distinct == model_set,
        pairs_checked: 0,
        compat_mismatches: 0,
        rotation_mismatches: 0,
    };
    for a in 0..ground.len() {
        for b in a + 1..ground.len() {
            report.pairs_checked += 1;
            if m_compatible(rs, ground[a], ground[b]) != compat(&images[a], &images[b]) {
                report.compat_mismatches += 1;
            }
        }
        if image(apply_r_m(rs, m, ground[a]))? != rotate(&images[a]) {
            report.rotation_mismatches += 1;
        }
    }
    Ok(report)
}

/// Audit the `A_n` dissection model against `m`-compatibility.
pub fn audit_type_a(n: usize, m: usize) -> Result<AuditReport, PolygonError> {
    let model = TypeAModel::new(n, m)?;
    let g = FiniteType::A(n).diagram();
    let rs = RootSystem::with_plus(&g, odd_plus(&g))?;
    let image = |v: ColoredRoot| {
        if rs.is_negative(v.root) {
            return Ok(model.negative(rs.vertices()[v.root]));
        }
        let s: Vec<usize> = rs.support(v.root).iter().collect();
        Ok(model.positive(s[0], s[s.len() - 1], v.color))
    };
    run(
        &format!("A{n}"),
        &rs,
        m,
        model.diagonals(),
        image,
        |a, b| !a.crosses(b),
        |d| d.rotate(1),
    )
}

/// Simple-root coefficients of a `B_n` root with `a_n` short.
fn b_coeffs(rs: &RootSystem, id: usize) -> Option<Vec<i64>> {
    let n = rs.rank();
    let scaled: Vec<f64> = (1..=n)
        .map(|v| {
            let len = if v < n { 2f64.sqrt() } else { 1.0 };
            rs.coord_at(id, v) / len
        })
        .collect();
    [1.0, 2f64.sqrt()]
        .iter()
        .find_map(|s| integer_coeffs(&scaled.iter().map(|x| x * s).collect::<Vec<_>>()))
}

/// Audit the `B_n` centrally symmetric model.
pub fn audit_type_b(n: usize, m: usize) -> Result<AuditReport, PolygonError> {
    let model = TypeBModel::new(n, m)?;
    let g = FiniteType::B(n).diagram();
    let rs = RootSystem::with_plus(&g, odd_plus(&g))?;
    let image = |v: ColoredRoot| {
        if rs.is_negative(v.root) {
            return model.negative(rs.vertices()[v.root]);
        }
        let c = b_coeffs(&rs, v.root)
            .ok_or_else(|| PolygonError::NoImage(format!("{:?}", rs.coords(v.root))))?;
        model.positive(&c, v.color)
    };
    run(
        &format!("B{n}"),
        &rs,
        m,
        model.vertices(),
        image,
        |a, b| a.compatible(b),
        |v| v.rotate(1),
    )
}

/// Audit the `D_n` model with flavored diameters.
pub fn audit_type_d(n: usize, m: usize) -> Result<AuditReport, PolygonError> {
    let model = TypeDModel::new(n, m)?;
    let g = FiniteType::D(n).diagram();
    let rs = RootSystem::with_plus(&g, odd_plus(&g))?;
    let image = |v: ColoredRoot| {
        if rs.is_negative(v.root) {
            return model.negative(rs.vertices()[v.root]);
        }
        let c = integer_coeffs(rs.coords(v.root))
            .ok_or_else(|| PolygonError::NoImage(format!("{:?}", rs.coords(v.root))))?;
        model.positive(&c, v.color)
    };
    run(
        &format!("D{n}"),
        &rs,
        m,
        model.vertices(),
        image,
        |a, b| model.compatible(a, b),
        |v| model.rotate(v),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(r: AuditReport) {
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.colored_roots, r.model_vertices);
    }

    #[test]
    fn type_a_models_are_isomorphic() {
        for n in 1..=4 {
            for m in 1..=2 {
                check(audit_type_a(n, m).unwrap());
            }
        }
    }

    #[test]
    fn type_b_models_are_isomorphic() {
        for n in 2..=3 {
            for m in 1..=2 {
                check(audit_type_b(n, m).unwrap());
            }
        }
    }

    #[test]
    fn type_d_models_are_isomorphic() {
        for n in 3..=4 {
            for m in 1..=2 {
                check(audit_type_d(n, m).unwrap());
            }
        }
    }

    #[test]
    fn larger_models_are_isomorphic() {
        check(audit_type_a(5, 3).unwrap());
        check(audit_type_b(4, 1).unwrap());
        check(audit_type_d(5, 1).unwrap());
        check(audit_type_d(3, 3).unwrap());
    }
}
