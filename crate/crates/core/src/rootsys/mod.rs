//! Finite root systems in the symmetric geometric representation, with the
//! deformed Coxeter rotation `R = tau_- tau_+` on almost positive roots,
//! the depth function, and the non-coloured compatibility relation.
//!
//! Coordinates are floating point in the simple-root basis. Everything
//! exported beyond coordinates (root ids, the permutation `R`, depths,
//! compatibility) is discrete and computed once at build time after
//! de-duplication on a `1e-6` grid.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_integer::Integer as _;
use thiserror::Error;

use crate::diagram::{classify, Classification, CoxeterDiagram, DiagramError, VertexSet};

pub const EPS: f64 = 1e-9;
const GRID: f64 = 1e6;
const MIN_SEPARATION: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("diagram is not of finite type (root closure exceeded {0} roots)")]
    NotFiniteType(usize),
    #[error("root lookup failed; numeric de-duplication is unreliable")]
    LookupMiss,
    #[error("distinct roots closer than the quantisation margin")]
    QuantizationMargin,
    #[error("R has order {order}, expected (h+2)/2 or h+2 with h = {h}")]
    BadOrder { order: usize, h: u32 },
}

pub type RootId = usize;

#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: CoxeterDiagram,
    /// `vertices[i]` is the diagram vertex of coordinate `i`.
    vertices: Vec<usize>,
    gram: Vec<Vec<f64>>,
    /// Ids `0..n` are the negative simple roots, then positive roots by
    /// height.
    coords: Vec<Vec<f64>>,
    index: HashMap<Vec<i64>, RootId>,
    i_plus: VertexSet,
    i_minus: VertexSet,
    r: Vec<RootId>,
    r_inv: Vec<RootId>,
    r_order: usize,
    depth: Vec<usize>,
    compat: Vec<Vec<bool>>,
    component: Vec<usize>,
}

fn key(v: &[f64]) -> Vec<i64> {
    v.iter().map(|c| (c * GRID).round() as i64).collect()
}

impl RootSystem {
    /// Builds the system with the default bipartition (smallest id of each
    /// component in `I_+`).
    pub fn new(g: &CoxeterDiagram) -> Result<Self, RootSysError> {
        let (plus, _) = g.bipartition()?;
        Self::with_plus(g, plus)
    }

    /// Builds the system with a prescribed `I_+`; its complement in the
    /// vertex set is `I_-`. Both must be independent sets of the skeleton.
    pub fn with_plus(g: &CoxeterDiagram, i_plus: VertexSet) -> Result<Self, RootSysError> {
        let vertices = g.vertices().to_vec();
        let n = vertices.len();
        let i_plus = VertexSet(i_plus.0 & g.vertex_set().0);
        let i_minus = g.vertex_set().minus(i_plus);
        for class in [i_plus, i_minus] {
            for a in class.iter() {
                if g.neighbors(a).any(|b| class.contains(b)) {
                    return Err(DiagramError::OddCycle.into());
                }
            }
        }
        let gram: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            1.0
                        } else {
                            -(PI / g.label(vertices[i], vertices[j]) as f64).cos()
                        }
                    })
                    .collect()
            })
            .collect();

        // orbit closure of the simple roots
        let budget = n * 60;
        let unit = |i: usize| -> Vec<f64> { (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect() };
        let mut positives: Vec<Vec<f64>> = (0..n).map(unit).collect();
        let mut seen: HashMap<Vec<i64>, usize> =
            positives.iter().enumerate().map(|(i, v)| (key(v), i)).collect();
        let mut next = 0;
        while next < positives.len() {
            let v = positives[next].clone();
            next += 1;
            for i in 0..n {
                let w = reflect(&gram, i, &v);
                if w.iter().any(|&c| c < -EPS) {
                    continue;
                }
                let k = key(&w);
                if !seen.contains_key(&k) {
                    seen.insert(k, positives.len());
                    positives.push(w);
                    if positives.len() > budget {
                        return Err(RootSysError::NotFiniteType(budget));
                    }
                }
            }
        }
        positives.sort_by(|a, b| {
            let ha: f64 = a.iter().sum();
            let hb: f64 = b.iter().sum();
            ha.total_cmp(&hb).then_with(|| key(a).cmp(&key(b)))
        });

        let mut coords: Vec<Vec<f64>> = (0..n).map(|i| unit(i).iter().map(|c| -c).collect()).collect();
        coords.extend(positives);
        let index: HashMap<Vec<i64>, RootId> =
            coords.iter().enumerate().map(|(i, v)| (key(v), i)).collect();

        for a in 0..coords.len() {
            for b in a + 1..coords.len() {
                let d = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0, f64::max);
                if d < MIN_SEPARATION {
                    return Err(RootSysError::QuantizationMargin);
                }
            }
        }

        let comps = g.component_sets();
        let comp_of_coord: Vec<usize> = vertices
            .iter()
            .map(|&v| comps.iter().position(|c| c.contains(v)).unwrap())
            .collect();
        let component = coords
            .iter()
            .map(|v| {
                let i = v.iter().position(|c| c.abs() > EPS).expect("nonzero root");
                comp_of_coord[i]
            })
            .collect();

        let mut rs = RootSystem {
            diagram: g.clone(),
            vertices,
            gram,
            coords,
            index,
            i_plus,
            i_minus,
            r: vec![],
            r_inv: vec![],
            r_order: 0,
            depth: vec![],
            compat: vec![],
            component,
        };
        rs.r = (0..rs.len())
            .map(|id| {
                let v = rs.tau(true, &rs.coords[id]);
                let w = rs.tau(false, &v);
                rs.lookup(&w)
            })
            .collect::<Result<_, _>>()?;
        let mut inv = vec![0; rs.len()];
        for (a, &b) in rs.r.iter().enumerate() {
            inv[b] = a;
        }
        rs.r_inv = inv;
        rs.r_order = rs.compute_order();
        rs.depth = (0..rs.len()).map(|id| rs.compute_depth(id)).collect();
        rs.compat = (0..rs.len())
            .map(|a| (0..rs.len()).map(|b| rs.compute_compat(a, b)).collect())
            .collect();
        if rs.diagram.is_connected() {
            let h = rs.coxeter_number();
            let o = rs.r_order;
            if 2 * o != h as usize + 2 && o != h as usize + 2 {
                return Err(RootSysError::BadOrder { order: o, h });
            }
        }
        Ok(rs)
    }

    /// Builds from a diagram and checks it classifies as finite first.
    pub fn from_finite(g: &CoxeterDiagram) -> Result<Self, RootSysError> {
        match classify(g) {
            c if c.is_finite() => Self::new(g),
            _ => Err(RootSysError::NotFiniteType(g.rank() * 60)),
        }
    }

    fn tau(&self, plus: bool, v: &[f64]) -> Vec<f64> {
        let (own, other) = if plus {
            (self.i_plus, self.i_minus)
        } else {
            (self.i_minus, self.i_plus)
        };
        if let Some(i) = neg_simple_index(v) {
            if other.contains(self.vertices[i]) {
                return v.to_vec();
            }
        }
        let mut w = v.to_vec();
        for (i, &vert) in self.vertices.iter().enumerate() {
            if own.contains(vert) {
                w = reflect(&self.gram, i, &w);
            }
        }
        w
    }

    fn lookup(&self, v: &[f64]) -> Result<RootId, RootSysError> {
        self.index.get(&key(v)).copied().ok_or(RootSysError::LookupMiss)
    }

    fn compute_order(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut order = 1usize;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.r[x];
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    fn compute_depth(&self, id: RootId) -> usize {
        let mut x = id;
        for d in 0..=self.r_order {
            if self.is_negative(x) {
                return d;
            }
            x = self.r[x];
        }
        unreachable!("every R-orbit meets the negative simple roots")
    }

    /// Rotate both roots until one is a negative simple root `-a_i`; they
    /// are compatible iff the other has zero `a_i`-coordinate.
    fn compute_compat(&self, a: RootId, b: RootId) -> bool {
        let (mut x, mut y) = (a, b);
        for _ in 0..=self.r_order {
            if x < self.rank() {
                return self.coords[y][x].abs() < EPS;
            }
            if y < self.rank() {
                return self.coords[x][y].abs() < EPS;
            }
            x = self.r[x];
            y = self.r[y];
        }
        unreachable!("every R-orbit meets the negative simple roots")
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    /// Number of almost positive roots.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.len() - self.rank()
    }

    pub fn positive_ids(&self) -> std::ops::Range<RootId> {
        self.rank()..self.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn i_plus(&self) -> VertexSet {
        self.i_plus
    }

    pub fn i_minus(&self) -> VertexSet {
        self.i_minus
    }

    /// `2 |Phi_+| / n`; meaningful for irreducible systems.
    pub fn coxeter_number(&self) -> u32 {
        if self.rank() == 0 {
            return 0;
        }
        (2 * self.num_positive() / self.rank()) as u32
    }

    pub fn r_order(&self) -> usize {
        self.r_order
    }

    pub fn minus_one_longest(&self) -> bool {
        2 * self.r_order == self.coxeter_number() as usize + 2
    }

    pub fn coords(&self, id: RootId) -> &[f64] {
        &self.coords[id]
    }

    /// Coefficient of the simple root at diagram vertex `v`.
    pub fn coord_at(&self, id: RootId, v: usize) -> f64 {
        let i = self.vertices.iter().position(|&x| x == v).expect("vertex");
        self.coords[id][i]
    }

    pub fn is_negative(&self, id: RootId) -> bool {
        id < self.rank()
    }

    /// Id of `-a_v` for diagram vertex `v`.
    pub fn neg_simple(&self, v: usize) -> RootId {
        self.vertices.iter().position(|&x| x == v).expect("vertex")
    }

    /// Id of the simple root `a_v`.
    pub fn simple(&self, v: usize) -> RootId {
        let mut w = vec![0.0; self.rank()];
        w[self.neg_simple(v)] = 1.0;
        self.lookup(&w).expect("simple root present")
    }

    /// Diagram vertices where the root has nonzero coefficient.
    pub fn support(&self, id: RootId) -> VertexSet {
        VertexSet::from_ids(
            self.vertices
                .iter()
                .zip(&self.coords[id])
                .filter(|(_, c)| c.abs() > EPS)
                .map(|(&v, _)| v),
        )
    }

    /// Index of the connected component containing the root's support.
    pub fn component(&self, id: RootId) -> usize {
        self.component[id]
    }

    pub fn find(&self, coords: &[f64]) -> Option<RootId> {
        self.lookup(coords).ok()
    }

    pub fn apply_r(&self, id: RootId) -> RootId {
        self.r[id]
    }

    pub fn apply_r_inv(&self, id: RootId) -> RootId {
        self.r_inv[id]
    }

    pub fn depth(&self, id: RootId) -> usize {
        self.depth[id]
    }

    pub fn compatible(&self, a: RootId, b: RootId) -> bool {
        self.compat[a][b]
    }

    /// Roots of the parabolic subsystem on `j`, built on its own with the
    /// bipartition inherited from this system, and the embedding of its
    /// root ids into this system.
    pub fn parabolic(&self, j: VertexSet) -> Result<(RootSystem, Vec<RootId>), RootSysError> {
        let sub = self.diagram.restrict(j);
        let rs = RootSystem::with_plus(&sub, VertexSet(self.i_plus.0 & j.0))?;
        let embed = (0..rs.len())
            .map(|id| {
                let mut full = vec![0.0; self.rank()];
                for (i, &v) in rs.vertices.iter().enumerate() {
                    full[self.neg_simple(v)] = rs.coords[id][i];
                }
                self.lookup(&full)
            })
            .collect::<Result<_, _>>()?;
        Ok((rs, embed))
    }

    /// One root per line, coordinates to 6 decimals.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (id, v) in self.coords.iter().enumerate() {
            let cs: Vec<String> = v.iter().map(|c| format!("{c:.6}")).collect();
            out.push_str(&format!("{id}: [{}] d={}\n", cs.join(", "), self.depth[id]));
        }
        out
    }
}

fn reflect(gram: &[Vec<f64>], i: usize, v: &[f64]) -> Vec<f64> {
    let b: f64 = gram[i].iter().zip(v).map(|(g, c)| g * c).sum();
    let mut w = v.to_vec();
    w[i] -= 2.0 * b;
    for c in w.iter_mut() {
        if c.abs() < EPS {
            *c = 0.0;
        }
    }
    w
}

fn neg_simple_index(v: &[f64]) -> Option<usize> {
    let mut found = None;
    for (i, &c) in v.iter().enumerate() {
        if (c + 1.0).abs() < EPS {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        } else if c.abs() > EPS {
            return None;
        }
    }
    found
}

/// Convenience for callers that only know a classification.
pub fn is_buildable(g: &CoxeterDiagram) -> bool {
    matches!(
        classify(g),
        Classification::FiniteIrreducible(_) | Classification::FiniteReducible(_)
    ) && g.bipartition().is_ok()
}
