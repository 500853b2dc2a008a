//! Coxeter diagrams: labeled simple graphs with labels `>= 3` on edges and
//! an implicit label 2 between non-adjacent vertices.
//!
//! Vertex ids are `1..=n` in declaration order. Induced subdiagrams keep
//! the ids of their parent, so recursive algorithms can key caches by the
//! vertex subset alone.

mod classify;
mod parse;

pub use classify::{classify, AffineType, Classification, FiniteType};
pub use parse::parse_diagram;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Hard limit so that vertex subsets fit in one machine word.
pub const MAX_RANK: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed diagram spec: {0}")]
    Syntax(String),
    #[error("label {0} on edge {1}-{2} is not an integer >= 2")]
    BadLabel(String, usize, usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} given conflicting labels {2} and {3}")]
    ConflictingEdge(usize, usize, u32, u32),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    TooLarge(usize),
    #[error("diagram skeleton has an odd cycle; no bipartition exists")]
    OddCycle,
}

/// A set of vertex ids, bit `i - 1` for vertex `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 64 && self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn minus(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(t + 1)
        })
    }

    /// All subsets, in increasing order of the bit pattern.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full {
                None
            } else {
                Some((c.wrapping_sub(full)) & full)
            };
            Some(VertexSet(c))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone)]
pub struct CoxeterDiagram {
    vertices: Vec<usize>,
    labels: BTreeMap<(usize, usize), u32>,
    name: Option<String>,
}

impl PartialEq for CoxeterDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.labels == other.labels
    }
}

impl Eq for CoxeterDiagram {}

impl fmt::Debug for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n} [{}]", self.canonical_spec()),
            None => write!(f, "[{}]", self.canonical_spec()),
        }
    }
}

impl CoxeterDiagram {
    /// Diagram on `1..=n`; edges with label 2 are dropped.
    pub fn new(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self, DiagramError> {
        if n > MAX_RANK {
            return Err(DiagramError::TooLarge(n));
        }
        let mut labels = BTreeMap::new();
        for &(i, j, l) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(DiagramError::VertexOutOfRange(v, n));
                }
            }
            if i == j {
                return Err(DiagramError::SelfLoop(i));
            }
            if l < 2 {
                return Err(DiagramError::BadLabel(l.to_string(), i, j));
            }
            let key = (i.min(j), i.max(j));
            match labels.get(&key) {
                Some(&old) if old != l => {
                    return Err(DiagramError::ConflictingEdge(key.0, key.1, old, l))
                }
                _ => {
                    labels.insert(key, l);
                }
            }
        }
        labels.retain(|_, l| *l > 2);
        Ok(CoxeterDiagram {
            vertices: (1..=n).collect(),
            labels,
            name: None,
        })
    }

    pub fn empty() -> Self {
        CoxeterDiagram {
            vertices: vec![],
            labels: BTreeMap::new(),
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_ids(self.vertices.iter().copied())
    }

    /// Label `m_ij`; 2 for non-adjacent distinct vertices.
    pub fn label(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        *self.labels.get(&(i.min(j), i.max(j))).unwrap_or(&2)
    }

    /// Edges with label `>= 3`, `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.labels.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .copied()
            .filter(move |&j| j != i && self.label(i, j) > 2)
    }

    pub fn induced_subdiagram(&self, s: VertexSet) -> Result<Self, DiagramError> {
        if let Some(bad) = s.iter().find(|&v| !self.vertices.contains(&v)) {
            return Err(DiagramError::UnknownVertex(bad));
        }
        Ok(self.restrict(s))
    }

    /// Like `induced_subdiagram`, silently ignoring unknown ids.
    pub fn restrict(&self, s: VertexSet) -> Self {
        let vertices: Vec<usize> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| s.contains(v))
            .collect();
        let labels = self
            .labels
            .iter()
            .filter(|(&(i, j), _)| s.contains(i) && s.contains(j))
            .map(|(&k, &l)| (k, l))
            .collect();
        let name = if s == self.vertex_set() {
            self.name.clone()
        } else {
            None
        };
        CoxeterDiagram {
            vertices,
            labels,
            name,
        }
    }

    /// One entry per vertex: the subdiagram with that vertex removed.
    pub fn codim1_subdiagrams(&self) -> Vec<(usize, CoxeterDiagram)> {
        let all = self.vertex_set();
        self.vertices
            .iter()
            .map(|&v| (v, self.restrict(all.without(v))))
            .collect()
    }

    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::EMPTY;
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<CoxeterDiagram> {
        self.component_sets()
            .into_iter()
            .map(|s| self.restrict(s))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() == 1
    }

    /// Two-colouring of the skeleton; the smallest id of each component is
    /// placed in the first class.
    pub fn bipartition(&self) -> Result<(VertexSet, VertexSet), DiagramError> {
        let mut plus = VertexSet::EMPTY;
        let mut minus = VertexSet::EMPTY;
        for comp in self.component_sets() {
            let start = comp.iter().next().expect("nonempty component");
            plus.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let v_plus = plus.contains(v);
                for w in self.neighbors(v) {
                    let colored = plus.contains(w) || minus.contains(w);
                    if colored {
                        if plus.contains(w) == v_plus {
                            return Err(DiagramError::OddCycle);
                        }
                    } else {
                        if v_plus {
                            minus.insert(w);
                        } else {
                            plus.insert(w);
                        }
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok((plus, minus))
    }

    /// Copy with vertices renumbered `1..=n` in order.
    pub fn relabeled(&self) -> CoxeterDiagram {
        let pos = |v: usize| self.vertices.iter().position(|&x| x == v).unwrap() + 1;
        CoxeterDiagram {
            vertices: (1..=self.rank()).collect(),
            labels: self
                .labels
                .iter()
                .map(|(&(i, j), &l)| ((pos(i), pos(j)), l))
                .collect(),
            name: self.name.clone(),
        }
    }

    /// Disjoint union, the second diagram's ids shifted past the first.
    pub fn disjoint_union(&self, other: &CoxeterDiagram) -> CoxeterDiagram {
        let a = self.relabeled();
        let b = other.relabeled();
        let n = a.rank();
        let mut labels = a.labels.clone();
        for (&(i, j), &l) in &b.labels {
            labels.insert((i + n, j + n), l);
        }
        CoxeterDiagram {
            vertices: (1..=n + b.rank()).collect(),
            labels,
            name: None,
        }
    }

    /// Explicit form on renumbered vertices, edges sorted.
    pub fn canonical_spec(&self) -> String {
        let d = self.relabeled();
        let edges: Vec<String> = d
            .edges()
            .map(|(i, j, l)| format!("{i}-{j}:{l}"))
            .collect();
        if edges.is_empty() {
            format!("n={}", d.rank())
        } else {
            format!("n={}; {}", d.rank(), edges.join(" "))
        }
    }

    /// Sum of the labels over all edges of the complete graph, counting
    /// non-adjacent pairs as 2.
    pub fn label_sum(&self) -> u64 {
        let n = self.rank();
        let pairs = (n * n.saturating_sub(1) / 2) as u64;
        let extra: u64 = self.labels.values().map(|&l| l as u64 - 2).sum();
        2 * pairs + extra
    }
}
