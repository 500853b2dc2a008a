use std::collections::BTreeSet;

use serde::Serialize;

use super::{adjacency, for_each_clique, Diagonal, PolygonError, TypeAModel};

/// A vertex of the type-B model: a diameter or a centrally symmetric pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BVertex {
    Diameter(Diagonal),
    Pair(Diagonal, Diagonal),
}

impl BVertex {
    /// The vertex containing `d`: a diameter, or `d` with its half-turn.
    pub fn from_diagonal(d: Diagonal) -> Self {
        if d.is_diameter() {
            BVertex::Diameter(d)
        } else {
            let e = d.half_turn();
            BVertex::Pair(d.min(e), d.max(e))
        }
    }

    /// Both diagonals of a pair, or the single diameter.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        match *self {
            BVertex::Diameter(d) => vec![d],
            BVertex::Pair(a, b) => vec![a, b],
        }
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self, BVertex::Diameter(_))
    }

    pub fn rotate(&self, steps: usize) -> Self {
        match *self {
            BVertex::Diameter(d) => BVertex::Diameter(d.rotate(steps)),
            BVertex::Pair(a, b) => BVertex::from_diagonal(a.rotate(steps).min(b.rotate(steps))),
        }
    }

    /// No diagonal of one crosses a diagonal of the other.
    pub fn compatible(&self, other: &BVertex) -> bool {
        let theirs = other.diagonals();
        self.diagonals()
            .iter()
            .all(|a| theirs.iter().all(|b| !a.crosses(b)))
    }
}

/// The type `B_n` model on the centrally symmetric `(2nm+2)`-gon, built on
/// the `A_{2n-1}` model of the same polygon.
#[derive(Clone, Debug)]
pub struct TypeBModel {
    n: usize,
    a: TypeAModel,
    vertices: Vec<BVertex>,
}

impl TypeBModel {
    pub fn new(n: usize, m: usize) -> Result<Self, PolygonError> {
        if n < 2 {
            return Err(PolygonError::BadRank(n));
        }
        let a = TypeAModel::new(2 * n - 1, m)?;
        let vertices: BTreeSet<BVertex> = a
            .diagonals()
            .iter()
            .map(|&d| BVertex::from_diagonal(d))
            .collect();
        Ok(TypeBModel {
            n,
            a,
            vertices: vertices.into_iter().collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.a.m()
    }

    pub fn size(&self) -> usize {
        self.a.size()
    }

    pub fn vertices(&self) -> &[BVertex] {
        &self.vertices
    }

    fn pair(&self, d: Diagonal) -> Result<BVertex, PolygonError> {
        let v = BVertex::from_diagonal(d);
        match v {
            BVertex::Pair(x, y) if x.half_turn() == y && x != y => Ok(v),
            BVertex::Diameter(_) => Err(PolygonError::NoImage(format!("{d} is a diameter"))),
            _ => Err(PolygonError::NoImage(format!("{d} has no partner"))),
        }
    }

    fn both(&self, x: Diagonal, y: Diagonal) -> Result<BVertex, PolygonError> {
        let v = self.pair(x)?;
        if v != BVertex::from_diagonal(y) {
            return Err(PolygonError::NoImage(format!("{x} and {y} are not symmetric")));
        }
        Ok(v)
    }

    /// Image of `-a_i`.
    pub fn negative(&self, i: usize) -> Result<BVertex, PolygonError> {
        let n = self.n;
        if i == n {
            let d = self.a.negative(n);
            return if d.is_diameter() {
                Ok(BVertex::Diameter(d))
            } else {
                Err(PolygonError::NoImage(format!("-a{n}")))
            };
        }
        self.both(self.a.negative(i), self.a.negative(2 * n - i))
    }

    /// Image of a coloured positive root given by its coefficients in the
    /// simple roots, with `a_n` short.
    pub fn positive(&self, coeffs: &[i64], color: usize) -> Result<BVertex, PolygonError> {
        let n = self.n;
        let fail = || PolygonError::NoImage(format!("{coeffs:?}"));
        if coeffs.len() != n {
            return Err(fail());
        }
        let i = coeffs.iter().position(|&c| c != 0).ok_or_else(fail)? + 1;
        let b = |lo: usize, hi: usize| self.a.positive(lo, hi, color);
        let twos = coeffs.iter().position(|&c| c == 2).map(|p| p + 1);
        match twos {
            None => {
                let j = coeffs.iter().rposition(|&c| c != 0).unwrap() + 1;
                if coeffs[i - 1..j].iter().any(|&c| c != 1) {
                    return Err(fail());
                }
                if j < n {
                    self.both(b(i, j), b(2 * n - j, 2 * n - i))
                } else {
                    let d = b(i, 2 * n - i);
                    if d.is_diameter() {
                        Ok(BVertex::Diameter(d))
                    } else {
                        Err(fail())
                    }
                }
            }
            Some(j) => {
                let shape_ok = j > i
                    && coeffs[i - 1..j - 1].iter().all(|&c| c == 1)
                    && coeffs[j - 1..].iter().all(|&c| c == 2);
                if !shape_ok {
                    return Err(fail());
                }
                self.both(b(i, 2 * n - j), b(j, 2 * n - i))
            }
        }
    }

    /// `f[k]` and the number of `k`-faces containing a diameter.
    pub fn face_census(&self) -> (Vec<u64>, Vec<u64>) {
        let adj = adjacency(&self.vertices, BVertex::compatible);
        let mut f = vec![0u64; self.n + 1];
        let mut with_diameter = vec![0u64; self.n + 1];
        for_each_clique(&adj, self.n, &mut |c| {
            f[c.len()] += 1;
            if c.iter().any(|&v| self.vertices[v].is_diameter()) {
                with_diameter[c.len()] += 1;
            }
        });
        (f, with_diameter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use crate::formulas;

    #[test]
    fn diameter_count() {
        for n in 2..=4 {
            for m in 1..=3 {
                let model = TypeBModel::new(n, m).unwrap();
                let d = model.vertices().iter().filter(|v| v.is_diameter()).count();
                assert_eq!(d, n * m + 1);
            }
        }
    }

    #[test]
    fn b2_m2_facets() {
        let (f, _) = TypeBModel::new(2, 2).unwrap().face_census();
        assert_eq!(f[2], 15);
    }

    #[test]
    fn diameter_fraction_is_k_over_n() {
        for n in 2..=3 {
            for m in 1..=2 {
                let (f, d) = TypeBModel::new(n, m).unwrap().face_census();
                for k in 1..=n {
                    assert_eq!(rat(d[k] as i64, f[k] as i64), rat(k as i64, n as i64));
                    assert_eq!(
                        int(d[k] as i64),
                        formulas::diameter_face_count(n as i64, k as i64, m as i64)
                    );
                }
            }
        }
    }
}
