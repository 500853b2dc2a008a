//! Generalized cluster complexes: coloured almost positive roots, the
//! coloured rotation `R_m`, `m`-compatibility, and brute-force face
//! enumeration of the resulting clique complex.

mod bits;

pub use bits::Bits;

use std::collections::HashMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::diagram::{CoxeterDiagram, VertexSet};
use crate::rootsys::{RootId, RootSysError, RootSystem};

pub const DEFAULT_BUDGET: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GccError {
    #[error(transparent)]
    RootSystem(#[from] RootSysError),
    #[error("complex would have {0} vertices, above the budget of {1}")]
    BudgetExceeded(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredRoot {
    pub root: RootId,
    pub color: usize,
}

/// `Delta^m(Phi)` as a clique complex on coloured roots.
#[derive(Clone, Debug)]
pub struct ClusterComplex {
    rs: RootSystem,
    m: usize,
    vertices: Vec<ColoredRoot>,
    index: HashMap<ColoredRoot, usize>,
    adj: Vec<Bits>,
}

/// Coloured ground set in the order (root id, colour). With `m = 0` only
/// the negative simple roots remain.
pub fn colored_ground_set(rs: &RootSystem, m: usize) -> Vec<ColoredRoot> {
    let mut out = Vec::new();
    for root in 0..rs.len() {
        if rs.is_negative(root) {
            out.push(ColoredRoot { root, color: 1 });
        } else {
            out.extend((1..=m).map(|color| ColoredRoot { root, color }));
        }
    }
    out
}

/// The coloured rotation. Requires `m >= 1`.
pub fn apply_r_m(rs: &RootSystem, m: usize, v: ColoredRoot) -> ColoredRoot {
    assert!(m >= 1, "R_m needs at least one colour");
    if !rs.is_negative(v.root) && v.color < m {
        ColoredRoot {
            root: v.root,
            color: v.color + 1,
        }
    } else {
        ColoredRoot {
            root: rs.apply_r(v.root),
            color: 1,
        }
    }
}

/// The five-case compatibility of coloured roots; roots in different
/// irreducible components are always compatible.
pub fn m_compatible(rs: &RootSystem, u: ColoredRoot, v: ColoredRoot) -> bool {
    if rs.component(u.root) != rs.component(v.root) {
        return true;
    }
    let (a, k) = (u.root, u.color);
    let (b, l) = (v.root, v.color);
    let (da, db) = (rs.depth(a), rs.depth(b));
    use std::cmp::Ordering::*;
    match k.cmp(&l) {
        Greater if da <= db => rs.compatible(rs.apply_r(a), b),
        Less if da >= db => rs.compatible(a, rs.apply_r(b)),
        _ => rs.compatible(a, b),
    }
}

/// Face statistics gathered in one pass over all cliques.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceCensus {
    /// `f[k]` = number of `k`-element faces, `f[0] = 1`.
    pub f: Vec<u64>,
    /// Maximal cliques with fewer than `n` elements.
    pub non_pure_maximal: u64,
    /// `(n-1)`-faces contained in a number of facets other than `m + 1`.
    pub bad_ridges: u64,
    /// Facets consisting of positive coloured roots only.
    pub positive_facets: u64,
    /// Facets as sorted vertex indices, if requested.
    pub facets: Option<Vec<Vec<usize>>>,
}

impl FaceCensus {
    pub fn is_pure(&self) -> bool {
        self.non_pure_maximal == 0
    }

    pub fn ridge_degree_ok(&self) -> bool {
        self.bad_ridges == 0
    }

    pub fn facet_count(&self) -> u64 {
        *self.f.last().unwrap_or(&1)
    }

    /// `sum_k (-1)^(k-1) f_k` over all faces including the empty one.
    pub fn reduced_euler(&self) -> i128 {
        self.f
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 1 { x as i128 } else { -(x as i128) })
            .sum()
    }
}

impl ClusterComplex {
    pub fn build(rs: RootSystem, m: usize) -> Result<Self, GccError> {
        Self::build_with_budget(rs, m, DEFAULT_BUDGET)
    }

    pub fn build_with_budget(rs: RootSystem, m: usize, budget: usize) -> Result<Self, GccError> {
        let count = m * rs.num_positive() + rs.rank();
        if count > budget {
            return Err(GccError::BudgetExceeded(count, budget));
        }
        let vertices = colored_ground_set(&rs, m);
        let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = (0..vertices.len())
            .map(|i| {
                let mut row = Bits::new(vertices.len());
                for j in 0..vertices.len() {
                    if i != j && m_compatible(&rs, vertices[i], vertices[j]) {
                        row.set(j);
                    }
                }
                row
            })
            .collect();
        Ok(ClusterComplex {
            rs,
            m,
            vertices,
            index,
            adj,
        })
    }

    pub fn from_diagram(g: &CoxeterDiagram, m: usize, budget: usize) -> Result<Self, GccError> {
        let rs = RootSystem::from_finite(g)?;
        Self::build_with_budget(rs, m, budget)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn vertices(&self) -> &[ColoredRoot] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: ColoredRoot) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].get(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count).sum::<usize>() / 2
    }

    /// `R_m` as a permutation of vertex indices.
    pub fn rotation(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .map(|&v| self.index[&apply_r_m(&self.rs, self.m, v)])
            .collect()
    }

    /// Order of `R_m` as a permutation.
    pub fn rotation_order(&self) -> usize {
        use num_integer::Integer;
        let perm = self.rotation();
        let mut seen = vec![false; perm.len()];
        let mut order = 1usize;
        for s in 0..perm.len() {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            if len > 0 {
                order = order.lcm(&len);
            }
        }
        order
    }

    /// Count all faces, check purity and ridge degrees; optionally collect
    /// the facets.
    pub fn census(&self, keep_facets: bool) -> FaceCensus {
        let n = self.rank();
        let nv = self.vertices.len();
        let mut census = FaceCensus {
            f: vec![0; n + 1],
            facets: keep_facets.then(Vec::new),
            ..Default::default()
        };
        let negative: Bits = {
            let mut b = Bits::new(nv);
            for (i, v) in self.vertices.iter().enumerate() {
                if self.rs.is_negative(v.root) {
                    b.set(i);
                }
            }
            b
        };
        let mut stack = Vec::with_capacity(n);
        self.walk(
            &mut stack,
            &Bits::full(nv),
            &Bits::full(nv),
            &negative,
            &mut census,
        );
        census
    }

    fn walk(
        &self,
        clique: &mut Vec<usize>,
        forward: &Bits,
        common: &Bits,
        negative: &Bits,
        out: &mut FaceCensus,
    ) {
        let k = clique.len();
        if k < out.f.len() {
            out.f[k] += 1;
        }
        let n = self.rank();
        let common_size = common.count();
        if common_size == 0 && k < n {
            out.non_pure_maximal += 1;
        }
        if k + 1 == n && common_size != self.m + 1 {
            out.bad_ridges += 1;
        }
        if k == n {
            if !clique.iter().any(|&v| negative.get(v)) {
                out.positive_facets += 1;
            }
            if let Some(f) = out.facets.as_mut() {
                f.push(clique.clone());
            }
            return;
        }
        for v in forward.iter() {
            let next_common = common.and(&self.adj[v]);
            let mut next_forward = forward.and(&self.adj[v]);
            next_forward.clear_below(v + 1);
            clique.push(v);
            self.walk(clique, &next_forward, &next_common, negative, out);
            clique.pop();
        }
    }

    /// Vertices whose root support avoids the given diagram vertices.
    pub fn vertices_supported_on(&self, j: VertexSet) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.rs.support(self.vertices[i].root).is_subset(j))
            .collect()
    }

    /// The restriction of compatibility to coloured roots supported on `j`
    /// agrees with the parabolic system's own `m`-compatibility.
    pub fn restriction_check(&self, j: VertexSet) -> Result<bool, GccError> {
        let (sub, embed) = self.rs.parabolic(j)?;
        let sub_vertices = colored_ground_set(&sub, self.m);
        let lifted: Vec<usize> = sub_vertices
            .iter()
            .map(|v| {
                self.index[&ColoredRoot {
                    root: embed[v.root],
                    color: v.color,
                }]
            })
            .collect();
        let mut expected = self.vertices_supported_on(j);
        let mut got = lifted.clone();
        expected.sort_unstable();
        got.sort_unstable();
        if expected != got {
            return Ok(false);
        }
        for (a, &u) in sub_vertices.iter().enumerate() {
            for (b, &v) in sub_vertices.iter().enumerate() {
                if a != b && m_compatible(&sub, u, v) != self.adjacent(lifted[a], lifted[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Rotate `vertex` to a negative simple root `(-a_i)^1` and check that
    /// the link there is the complex of the parabolic system on `I - {i}`,
    /// and that the two links have the same face numbers.
    pub fn link_decomposition_check(&self, vertex: usize) -> Result<bool, GccError> {
        if self.m == 0 {
            return Ok(true);
        }
        let perm = self.rotation();
        let mut x = vertex;
        let mut steps = 0;
        while !self.rs.is_negative(self.vertices[x].root) {
            x = perm[x];
            steps += 1;
            if steps > perm.len() {
                return Ok(false);
            }
        }
        let v = self.rs.vertices()[self.vertices[x].root];
        let rest = self.rs.diagram().vertex_set().without(v);
        let link: Vec<usize> = self.adj[x].iter().collect();
        let mut supported = self.vertices_supported_on(rest);
        supported.sort_unstable();
        if link != supported || !self.restriction_check(rest)? {
            return Ok(false);
        }
        let original: Vec<usize> = self.adj[vertex].iter().collect();
        Ok(self.induced_f_vector(&original) == self.induced_f_vector(&link))
    }

    /// Face numbers of the subcomplex induced on a vertex subset.
    pub fn induced_f_vector(&self, subset: &[usize]) -> Vec<u64> {
        let mut mask = Bits::new(self.vertices.len());
        for &v in subset {
            mask.set(v);
        }
        let mut f = vec![0u64; subset.len() + 1];
        fn go(c: &ClusterComplex, k: usize, cand: &Bits, f: &mut Vec<u64>) {
            f[k] += 1;
            for v in cand.iter() {
                let mut next = cand.and(&c.adj[v]);
                next.clear_below(v + 1);
                go(c, k + 1, &next, f);
            }
        }
        go(self, 0, &mask, &mut f);
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        f
    }

    pub fn to_json(&self, facets: Option<&[Vec<usize>]>) -> Value {
        let verts: Vec<Value> = self
            .vertices
            .iter()
            .map(|v| {
                let coords: Vec<f64> = self
                    .rs
                    .coords(v.root)
                    .iter()
                    .map(|c| (c * 1e6).round() / 1e6)
                    .collect();
                json!({ "root": coords, "color": v.color })
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..self.vertices.len() {
            for j in self.adj[i].iter().filter(|&j| j > i) {
                edges.push(json!([i, j]));
            }
        }
        let mut out = json!({ "vertices": verts, "edges": edges });
        if let Some(fs) = facets {
            out["facets"] = json!(fs);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn cx(s: &str, m: usize) -> ClusterComplex {
        let g = parse_diagram(s).unwrap();
        ClusterComplex::build(RootSystem::new(&g).unwrap(), m).unwrap()
    }

    #[test]
    fn ground_set_sizes() {
        assert_eq!(cx("A1", 4).vertices().len(), 5);
        assert_eq!(cx("B2", 3).vertices().len(), 14);
        assert_eq!(cx("E6", 0).vertices().len(), 6);
    }

    #[test]
    fn zero_colours_give_a_simplex() {
        let c = cx("D4", 0).census(false);
        assert_eq!(c.f, vec![1, 4, 6, 4, 1]);
        assert_eq!(c.positive_facets, 0);
    }

    #[test]
    fn named_complexes() {
        assert_eq!(cx("A2", 1).census(false).f, vec![1, 5, 5]);
        assert_eq!(cx("A2", 2).census(false).f, vec![1, 8, 12]);
        let b2 = cx("B2", 3);
        assert_eq!(b2.census(false).f, vec![1, 14, 28]);
        assert!((0..14).all(|i| b2.degree(i) == 4));
        assert_eq!(cx("D4", 2).census(false).facet_count(), 336);
        assert_eq!(cx("H3", 1).census(false).facet_count(), 32);
        assert_eq!(cx("A2", 1).census(false).positive_facets, 2);
    }

    #[test]
    fn a1_is_m_plus_one_points() {
        let c = cx("A1", 3).census(false);
        assert_eq!(c.f, vec![1, 4]);
        assert!(c.is_pure());
        assert!(c.ridge_degree_ok());
    }

    #[test]
    fn negative_simple_compatibility_is_support() {
        let c = cx("B3", 2);
        let rs = c.root_system();
        for &v in c.vertices() {
            for i in rs.vertices().to_vec() {
                let neg = ColoredRoot {
                    root: rs.neg_simple(i),
                    color: 1,
                };
                if neg == v {
                    continue;
                }
                let free = rs.coord_at(v.root, i).abs() < 1e-9;
                assert_eq!(m_compatible(rs, neg, v), free);
            }
        }
    }

    #[test]
    fn rotation_invariance_and_order() {
        for (s, m) in [("A3", 1), ("A3", 3), ("B3", 2), ("H3", 3), ("A2", 3), ("I2(5)", 2)] {
            let c = cx(s, m);
            let perm = c.rotation();
            let nv = c.vertices().len();
            for a in 0..nv {
                for b in 0..nv {
                    if a != b {
                        assert_eq!(c.adjacent(a, b), c.adjacent(perm[a], perm[b]), "{s} {m}");
                        assert_eq!(c.adjacent(a, b), c.adjacent(b, a));
                    }
                }
            }
            let h = c.root_system().coxeter_number() as usize;
            let full = m * h + 2;
            let want = if c.root_system().minus_one_longest() { full / 2 } else { full };
            assert_eq!(c.rotation_order(), want, "{s} {m}");
        }
    }

    #[test]
    fn smaller_m_is_induced_subcomplex() {
        let big = cx("B3", 3);
        let small = cx("B3", 2);
        for (a, &u) in small.vertices().iter().enumerate() {
            for (b, &v) in small.vertices().iter().enumerate() {
                let (x, y) = (big.vertex_index(u).unwrap(), big.vertex_index(v).unwrap());
                if a != b {
                    assert_eq!(small.adjacent(a, b), big.adjacent(x, y));
                }
            }
        }
    }

    #[test]
    fn links() {
        let a2 = cx("A2", 2);
        let neg = a2.vertex_index(ColoredRoot { root: 0, color: 1 }).unwrap();
        assert_eq!(a2.degree(neg), 3);
        assert!(a2.link_decomposition_check(neg).unwrap());
        let a1 = cx("A1", 2);
        for v in 0..a1.vertices().len() {
            assert_eq!(a1.degree(v), 0);
            assert!(a1.link_decomposition_check(v).unwrap());
        }
        for s in ["A3", "B3", "H3"] {
            for m in 1..=2 {
                let c = cx(s, m);
                for v in 0..c.vertices().len() {
                    assert!(c.link_decomposition_check(v).unwrap(), "{s} {m} {v}");
                }
            }
        }
    }

    #[test]
    fn reducible_is_join() {
        let c = cx("A1xA2", 1).census(false);
        // join of 2 points and a pentagon
        assert_eq!(c.f, vec![1, 7, 5 + 10, 10]);
    }

    #[test]
    fn budget() {
        let g = parse_diagram("E8").unwrap();
        let rs = RootSystem::new(&g).unwrap();
        assert_eq!(
            ClusterComplex::build_with_budget(rs, 20, 2000).unwrap_err(),
            GccError::BudgetExceeded(2408, 2000)
        );
    }
}
