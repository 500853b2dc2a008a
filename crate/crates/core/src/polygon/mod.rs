//! Polygon dissection models of the generalized cluster complexes of types
//! A, B and D, with explicit maps from coloured roots and audits that the
//! maps are isomorphisms.
//!
//! Polygon vertices are `0..size`; the label `P_k` is vertex `k - 1` and the
//! rotation `R_m` is `v -> v - 1 (mod size)`.

mod audit;
mod draw;
pub mod svg;
mod typea;
mod typeb;
mod typed;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::gcc::Bits;
use crate::rootsys::RootSysError;

pub use audit::{audit_type_a, audit_type_b, audit_type_d, AuditReport};
pub use draw::{Family, Model, Picture};
pub use typea::{
    allowable_diagonals, count_dissection_faces, dissection_f_vector, m_snake, TypeAModel,
};
pub use typeb::{BVertex, TypeBModel};
pub use typed::{
    all_diameter_flavoring, diameters_compatible, gap_condition, DVertex, Flavor, TypeDModel,
};

/// Cap on the number of candidate diagonals for brute-force dissection counts.
pub const DISSECTION_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("rank {0} is outside the range of this model")]
    BadRank(usize),
    #[error("m must be at least 1")]
    BadM,
    #[error("diagonals crossing snake segment {0}..{1} do not form one rotation orbit")]
    AmbiguousOrbit(usize, usize),
    #[error("a diagonal crosses a non-contiguous set of snake diagonals")]
    BadCrossingSet,
    #[error("root {0} has no image in the model")]
    NoImage(String),
    #[error("unknown model family {0:?} (expected A, B or D)")]
    UnknownFamily(String),
    #[error("{0} candidate diagonals exceed the budget of {1}")]
    BudgetExceeded(usize, usize),
    #[error(transparent)]
    RootSystem(#[from] RootSysError),
}

/// A chord `{i, j}` of a convex `size`-gon, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagonal {
    pub i: usize,
    pub j: usize,
    pub size: usize,
}

impl Diagonal {
    pub fn new(a: usize, b: usize, size: usize) -> Self {
        let (a, b) = (a % size, b % size);
        assert_ne!(a, b, "degenerate chord");
        Diagonal {
            i: a.min(b),
            j: a.max(b),
            size,
        }
    }

    /// Build from the 1-based labels `P_a`, `P_b`.
    pub fn from_labels(a: usize, b: usize, size: usize) -> Self {
        Self::new(a - 1, b - 1, size)
    }

    pub fn is_edge(&self) -> bool {
        self.j - self.i == 1 || self.j - self.i == self.size - 1
    }

    pub fn is_diameter(&self) -> bool {
        2 * (self.j - self.i) == self.size
    }

    /// Both boundary arcs pass through a multiple of `m` vertices.
    pub fn is_allowable(&self, m: usize) -> bool {
        let d = self.j - self.i;
        !self.is_edge() && (d - 1) % m == 0 && (self.size - d - 1) % m == 0
    }

    /// Interiors intersect; shared endpoints do not count.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b, c, d) = (self.i, self.j, other.i, other.j);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    /// Rotate by `steps` positions clockwise, i.e. `v -> v - steps`.
    pub fn rotate(&self, steps: usize) -> Self {
        let s = steps % self.size;
        Self::new(self.i + self.size - s, self.j + self.size - s, self.size)
    }

    /// Counter-clockwise shift `v -> v + steps`.
    pub fn shift(&self, steps: usize) -> Self {
        Self::new(self.i + steps, self.j + steps, self.size)
    }

    pub fn half_turn(&self) -> Self {
        self.shift(self.size / 2)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}-P{}", self.i + 1, self.j + 1)
    }
}

/// Adjacency rows for a compatibility relation on `n` items.
pub(crate) fn adjacency<T>(items: &[T], compat: impl Fn(&T, &T) -> bool) -> Vec<Bits> {
    let n = items.len();
    let mut adj = vec![Bits::new(n); n];
    for a in 0..n {
        for b in a + 1..n {
            if compat(&items[a], &items[b]) {
                adj[a].set(b);
                adj[b].set(a);
            }
        }
    }
    adj
}

/// Visit every clique with at most `max` elements, in lexicographic order.
pub(crate) fn for_each_clique(adj: &[Bits], max: usize, visit: &mut impl FnMut(&[usize])) {
    fn walk(
        adj: &[Bits],
        max: usize,
        clique: &mut Vec<usize>,
        forward: &Bits,
        visit: &mut impl FnMut(&[usize]),
    ) {
        visit(clique);
        if clique.len() == max {
            return;
        }
        for v in forward.iter() {
            let mut next = forward.and(&adj[v]);
            next.clear_below(v + 1);
            clique.push(v);
            walk(adj, max, clique, &next, visit);
            clique.pop();
        }
    }
    walk(adj, max, &mut Vec::new(), &Bits::full(adj.len()), visit);
}

/// `f[k]` = number of `k`-cliques for `k <= max`.
pub(crate) fn clique_counts(adj: &[Bits], max: usize) -> Vec<u64> {
    let mut f = vec![0u64; max + 1];
    for_each_clique(adj, max, &mut |c| f[c.len()] += 1);
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_predicate() {
        let d = |a, b| Diagonal::new(a, b, 8);
        assert!(d(0, 4).crosses(&d(2, 6)));
        assert!(!d(0, 4).crosses(&d(4, 6)));
        assert!(!d(0, 4).crosses(&d(0, 2)));
        assert!(!d(0, 2).crosses(&d(4, 6)));
        assert!(d(1, 5).crosses(&d(0, 3)));
    }

    #[test]
    fn rotation_and_half_turn() {
        let d = Diagonal::new(0, 3, 8);
        assert_eq!(d.rotate(1), Diagonal::new(7, 2, 8));
        assert_eq!(d.rotate(8), d);
        assert_eq!(d.half_turn(), Diagonal::new(4, 7, 8));
        assert!(Diagonal::new(2, 6, 8).is_diameter());
    }

    #[test]
    fn clique_counts_of_a_path() {
        let items = [0usize, 1, 2];
        let adj = adjacency(&items, |a, b| a.abs_diff(*b) == 1);
        assert_eq!(clique_counts(&adj, 3), vec![1, 3, 2, 0]);
    }
}
