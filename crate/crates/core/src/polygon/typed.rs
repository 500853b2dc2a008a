use std::collections::BTreeSet;

use serde::Serialize;

use super::{adjacency, for_each_clique, Diagonal, PolygonError, TypeAModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Dashed,
    Gray,
}

impl Flavor {
    pub fn flip(self) -> Flavor {
        match self {
            Flavor::Dashed => Flavor::Gray,
            Flavor::Gray => Flavor::Dashed,
        }
    }
}

/// A vertex of the type-D model. Diameter positions run over
/// `1..=(n-1)m+1`, position `k` being `[P_k, -P_k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DVertex {
    Pair(Diagonal, Diagonal),
    Diameter { pos: usize, flavor: Flavor },
}

/// One application of `R_m` to a flavored diameter of the
/// `(2(n-1)m+2)`-gon, where `half = (n-1)m+1`.
fn rotate_diameter(half: usize, m: usize, pos: usize, flavor: Flavor) -> (usize, Flavor) {
    let switch = pos == 1 || pos % m == 2 % m;
    let next = if pos == 1 { half } else { pos - 1 };
    (next, if switch { flavor.flip() } else { flavor })
}

/// Compatibility of two flavored diameters in the `D_n` model.
pub fn diameters_compatible(
    n: usize,
    m: usize,
    (p, f): (usize, Flavor),
    (q, g): (usize, Flavor),
) -> bool {
    if p == q {
        return f != g;
    }
    let half = (n - 1) * m + 1;
    let (mut a, mut b) = ((p, f), (q, g));
    while a.0 != 1 && b.0 != 1 {
        a = rotate_diameter(half, m, a.0, a.1);
        b = rotate_diameter(half, m, b.0, b.1);
    }
    a.1 == b.1
}

/// Condition on sorted positions: cyclically consecutive gaps are at most
/// `m`, the gap from the last back to the first wrapping through `(n-1)m+1`.
pub fn gap_condition(n: usize, m: usize, positions: &[usize]) -> bool {
    let mut a = positions.to_vec();
    a.sort_unstable();
    let Some(&first) = a.first() else {
        return false;
    };
    a.push(first + (n - 1) * m + 1);
    a.windows(2).all(|w| w[1] - w[0] <= m)
}

/// Every flavoring making the given diameters pairwise compatible.
pub fn all_diameter_flavoring(n: usize, m: usize, positions: &[usize]) -> Vec<Vec<Flavor>> {
    let k = positions.len();
    let mut out = Vec::new();
    for mask in 0u64..1 << k {
        let flavors: Vec<Flavor> = (0..k)
            .map(|i| if mask >> i & 1 == 1 { Flavor::Gray } else { Flavor::Dashed })
            .collect();
        let ok = (0..k).all(|a| {
            (a + 1..k).all(|b| {
                diameters_compatible(n, m, (positions[a], flavors[a]), (positions[b], flavors[b]))
            })
        });
        if ok {
            out.push(flavors);
        }
    }
    out
}

impl DVertex {
    pub fn is_diameter(&self) -> bool {
        matches!(self, DVertex::Diameter { .. })
    }
}

/// The type `D_n` model on the `(2(n-1)m+2)`-gon, built on the `A_{2n-3}`
/// model of the same polygon shifted so that the middle snake diagonal is
/// the primary diameter.
#[derive(Clone, Debug)]
pub struct TypeDModel {
    n: usize,
    m: usize,
    a: TypeAModel,
    shift: usize,
    vertices: Vec<DVertex>,
}

impl TypeDModel {
    pub fn new(n: usize, m: usize) -> Result<Self, PolygonError> {
        if n < 3 {
            return Err(PolygonError::BadRank(n));
        }
        let a = TypeAModel::new(2 * n - 3, m)?;
        let middle = a.negative(n - 1);
        if !middle.is_diameter() {
            return Err(PolygonError::NoImage(format!("-a{}", n - 1)));
        }
        let shift = middle.i;
        let half = (n - 1) * m + 1;
        let mut vertices = BTreeSet::new();
        for d in a.diagonals() {
            if !d.is_diameter() {
                let e = d.half_turn();
                vertices.insert(DVertex::Pair((*d).min(e), (*d).max(e)));
            }
        }
        for pos in 1..=half {
            for flavor in [Flavor::Dashed, Flavor::Gray] {
                vertices.insert(DVertex::Diameter { pos, flavor });
            }
        }
        Ok(TypeDModel {
            n,
            m,
            a,
            shift,
            vertices: vertices.into_iter().collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.a.size()
    }

    fn half(&self) -> usize {
        (self.n - 1) * self.m + 1
    }

    pub fn vertices(&self) -> &[DVertex] {
        &self.vertices
    }

    /// The diagonal of a diameter position, as a chord of the polygon.
    pub fn diameter_chord(&self, pos: usize) -> Diagonal {
        Diagonal::new(pos - 1, pos - 1 + self.half(), self.size())
    }

    fn chords(&self, v: &DVertex) -> Vec<Diagonal> {
        match *v {
            DVertex::Pair(a, b) => vec![a, b],
            DVertex::Diameter { pos, .. } => vec![self.diameter_chord(pos)],
        }
    }

    pub fn compatible(&self, u: &DVertex, v: &DVertex) -> bool {
        match (*u, *v) {
            (DVertex::Diameter { pos: p, flavor: f }, DVertex::Diameter { pos: q, flavor: g }) => {
                diameters_compatible(self.n, self.m, (p, f), (q, g))
            }
            _ => {
                let theirs = self.chords(v);
                self.chords(u)
                    .iter()
                    .all(|a| theirs.iter().all(|b| !a.crosses(b)))
            }
        }
    }

    /// `R_m` on the model.
    pub fn rotate(&self, v: &DVertex) -> DVertex {
        match *v {
            DVertex::Pair(a, b) => {
                let (a, b) = (a.rotate(1), b.rotate(1));
                DVertex::Pair(a.min(b), a.max(b))
            }
            DVertex::Diameter { pos, flavor } => {
                let (pos, flavor) = rotate_diameter(self.half(), self.m, pos, flavor);
                DVertex::Diameter { pos, flavor }
            }
        }
    }

    fn relabel(&self, d: Diagonal) -> Diagonal {
        d.rotate(self.shift)
    }

    fn pair(&self, x: Diagonal, y: Diagonal) -> Result<DVertex, PolygonError> {
        let (x, y) = (self.relabel(x), self.relabel(y));
        if x.is_diameter() || x == y || x.half_turn() != y {
            return Err(PolygonError::NoImage(format!("{x} and {y} are not a symmetric pair")));
        }
        Ok(DVertex::Pair(x.min(y), x.max(y)))
    }

    fn diameter(&self, d: Diagonal, flavor: Flavor) -> Result<DVertex, PolygonError> {
        let d = self.relabel(d);
        if !d.is_diameter() {
            return Err(PolygonError::NoImage(format!("{d} is not a diameter")));
        }
        Ok(DVertex::Diameter {
            pos: d.i + 1,
            flavor,
        })
    }

    /// Image of `-a_i`.
    pub fn negative(&self, i: usize) -> Result<DVertex, PolygonError> {
        let n = self.n;
        match i {
            _ if i + 2 <= n => self.pair(self.a.negative(i), self.a.negative(2 * n - 2 - i)),
            _ if i + 1 == n => self.diameter(self.a.negative(n - 1), Flavor::Dashed),
            _ => self.diameter(self.a.negative(n - 1), Flavor::Gray),
        }
    }

    /// Image of a coloured positive root given by its simple-root
    /// coefficients; `a_{n-1}` and `a_n` are the ends of the fork.
    pub fn positive(&self, coeffs: &[i64], color: usize) -> Result<DVertex, PolygonError> {
        let n = self.n;
        let fail = || PolygonError::NoImage(format!("{coeffs:?}"));
        if coeffs.len() != n {
            return Err(fail());
        }
        let b = |lo: usize, hi: usize| self.a.positive(lo, hi, color);
        let i = coeffs.iter().position(|&c| c != 0).ok_or_else(fail)? + 1;
        let (fork1, fork2) = (coeffs[n - 2], coeffs[n - 1]);
        let stem = &coeffs[..n - 2];
        let ones_from = |from: usize, to: usize| coeffs[from - 1..to].iter().all(|&c| c == 1);
        match (fork1, fork2) {
            (0, 0) => {
                let j = stem.iter().rposition(|&c| c != 0).ok_or_else(fail)? + 1;
                if !ones_from(i, j) {
                    return Err(fail());
                }
                self.pair(b(i, j), b(2 * n - j - 2, 2 * n - i - 2))
            }
            (1, 0) | (0, 1) => {
                if i + 1 < n && !ones_from(i, n - 2) {
                    return Err(fail());
                }
                let i = i.min(n - 1);
                let flavor = if fork1 == 1 { Flavor::Gray } else { Flavor::Dashed };
                self.diameter(b(i, 2 * n - i - 2), flavor)
            }
            (1, 1) => {
                let j = stem.iter().position(|&c| c == 2).map_or(n - 1, |p| p + 1);
                let shape_ok = i < j
                    && coeffs[i - 1..j - 1].iter().all(|&c| c == 1)
                    && stem[j - 1..].iter().all(|&c| c == 2);
                if !shape_ok {
                    return Err(fail());
                }
                self.pair(b(i, 2 * n - j - 2), b(j, 2 * n - i - 2))
            }
            _ => Err(fail()),
        }
    }

    /// `f`-vector of the model and the number of facets containing the
    /// given vertex.
    pub fn face_census(&self, through: &DVertex) -> (Vec<u64>, u64) {
        let adj = adjacency(&self.vertices, |u, v| self.compatible(u, v));
        let target = self.vertices.iter().position(|v| v == through);
        let mut f = vec![0u64; self.n + 1];
        let mut hits = 0u64;
        for_each_clique(&adj, self.n, &mut |c| {
            f[c.len()] += 1;
            if c.len() == self.n && target.is_some_and(|t| c.contains(&t)) {
                hits += 1;
            }
        });
        (f, hits)
    }

    /// Sets of `n` diameter positions carrying a pairwise compatible flavoring,
    /// with the number of such flavorings, found by clique enumeration.
    pub fn diameter_facets(&self) -> Vec<Vec<DVertex>> {
        let diams: Vec<DVertex> = self.vertices.iter().copied().filter(DVertex::is_diameter).collect();
        let adj = adjacency(&diams, |u, v| self.compatible(u, v));
        let mut out = Vec::new();
        for_each_clique(&adj, self.n, &mut |c| {
            if c.len() == self.n {
                out.push(c.iter().map(|&i| diams[i]).collect());
            }
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_rule_positions() {
        // m = 2, half = 5: switches at k = 1, 2, 4.
        let switched: Vec<usize> = (1..=5)
            .filter(|&k| rotate_diameter(5, 2, k, Flavor::Gray).1 == Flavor::Dashed)
            .collect();
        assert_eq!(switched, vec![1, 2, 4]);
        assert!((1..=4).all(|k| rotate_diameter(4, 1, k, Flavor::Gray).1 == Flavor::Dashed));
    }

    #[test]
    fn ceiling_parity_rule() {
        for n in 3..=5 {
            for m in 1..=3 {
                let half = (n - 1) * m + 1;
                for flavor in [Flavor::Dashed, Flavor::Gray] {
                    let mut r = (1, flavor);
                    for k in 1..half {
                        r = rotate_diameter(half, m, r.0, r.1);
                        let even = k.div_ceil(m) % 2 == 0;
                        assert_eq!(diameters_compatible(n, m, (1, flavor), r), even);
                        assert_eq!(diameters_compatible(n, m, (1, flavor.flip()), r), !even);
                    }
                }
            }
        }
    }

    #[test]
    fn same_position_opposite_flavors() {
        assert!(diameters_compatible(3, 2, (3, Flavor::Gray), (3, Flavor::Dashed)));
        assert!(!diameters_compatible(3, 2, (3, Flavor::Gray), (3, Flavor::Gray)));
    }

    #[test]
    fn d3_m2_gray_primary_facets() {
        let model = TypeDModel::new(3, 2).unwrap();
        let gray = DVertex::Diameter {
            pos: 1,
            flavor: Flavor::Gray,
        };
        assert_eq!(model.face_census(&gray).1, 12);
    }

    #[test]
    fn flavoring_lemma() {
        for (n, m) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] {
            let half = (n - 1) * m + 1;
            let model = TypeDModel::new(n, m).unwrap();
            let mut from_cliques = BTreeSet::new();
            for facet in model.diameter_facets() {
                let pos: Vec<usize> = facet
                    .iter()
                    .map(|v| match v {
                        DVertex::Diameter { pos, .. } => *pos,
                        DVertex::Pair(..) => unreachable!(),
                    })
                    .collect();
                from_cliques.insert(pos);
            }
            let mut lemma = BTreeSet::new();
            let positions: Vec<usize> = (1..=half).collect();
            for mask in 0u64..1 << half {
                if mask.count_ones() as usize != n {
                    continue;
                }
                let chosen: Vec<usize> = positions
                    .iter()
                    .copied()
                    .filter(|p| mask >> (p - 1) & 1 == 1)
                    .collect();
                let ways = all_diameter_flavoring(n, m, &chosen);
                assert!(ways.is_empty() || ways.len() == 2);
                if let [a, b] = ways.as_slice() {
                    assert!(a.iter().zip(b).all(|(x, y)| *x == y.flip()));
                }
                assert_eq!(!ways.is_empty(), gap_condition(n, m, &chosen), "{chosen:?}");
                if !ways.is_empty() {
                    lemma.insert(chosen);
                }
            }
            assert_eq!(from_cliques, lemma, "D{n} m={m}");
        }
    }

    #[test]
    fn gap_violation_has_no_flavoring() {
        assert!(all_diameter_flavoring(3, 2, &[1, 3, 5]).len() == 2);
        assert!(all_diameter_flavoring(3, 2, &[1, 2, 3]).is_empty());
    }
}
