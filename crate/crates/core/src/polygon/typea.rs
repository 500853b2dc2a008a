use std::collections::BTreeMap;

use super::{adjacency, clique_counts, Diagonal, PolygonError, DISSECTION_BUDGET};

fn check_args(n: usize, m: usize) -> Result<(), PolygonError> {
    if n == 0 {
        return Err(PolygonError::BadRank(n));
    }
    if m == 0 {
        return Err(PolygonError::BadM);
    }
    Ok(())
}

fn polygon_size(n: usize, m: usize) -> usize {
    (n + 1) * m + 2
}

/// All `m`-allowable diagonals of the `((n+1)m+2)`-gon, sorted.
pub fn allowable_diagonals(n: usize, m: usize) -> Vec<Diagonal> {
    let size = polygon_size(n, m);
    let mut out = Vec::new();
    for i in 0..size {
        for j in i + 2..size {
            let d = Diagonal::new(i, j, size);
            if d.is_allowable(m) {
                out.push(d);
            }
        }
    }
    out
}

/// The `n` snake diagonals; entry `i - 1` encodes `-a_i`.
pub fn m_snake(n: usize, m: usize) -> Vec<Diagonal> {
    let size = polygon_size(n, m);
    (1..=n)
        .map(|s| {
            let i = s.div_ceil(2);
            let far = (n + 1 - i) * m + 2;
            if s % 2 == 1 {
                Diagonal::from_labels((i - 1) * m + 1, far, size)
            } else {
                Diagonal::from_labels(i * m + 1, far, size)
            }
        })
        .collect()
}

/// Brute-force count of `k`-sets of pairwise noncrossing `m`-allowable
/// diagonals.
pub fn count_dissection_faces(n: usize, m: usize, k: usize) -> Result<u64, PolygonError> {
    if k > n {
        check_args(n, m)?;
        return Ok(0);
    }
    Ok(dissection_f_vector(n, m)?[k])
}

/// `[f_0, ..., f_n]` of the dissection complex, by brute force.
pub fn dissection_f_vector(n: usize, m: usize) -> Result<Vec<u64>, PolygonError> {
    check_args(n, m)?;
    let diags = allowable_diagonals(n, m);
    if diags.len() > DISSECTION_BUDGET {
        return Err(PolygonError::BudgetExceeded(diags.len(), DISSECTION_BUDGET));
    }
    let adj = adjacency(&diags, |a, b| !a.crosses(b));
    Ok(clique_counts(&adj, n))
}

/// The type `A_n` model: snake plus the map from coloured roots to diagonals.
#[derive(Clone, Debug)]
pub struct TypeAModel {
    n: usize,
    m: usize,
    size: usize,
    snake: Vec<Diagonal>,
    diagonals: Vec<Diagonal>,
    /// Colour-1 image of `a_i + ... + a_j`, keyed by `(i, j)`.
    base: BTreeMap<(usize, usize), Diagonal>,
}

impl TypeAModel {
    pub fn new(n: usize, m: usize) -> Result<Self, PolygonError> {
        check_args(n, m)?;
        let size = polygon_size(n, m);
        let snake = m_snake(n, m);
        let diagonals = allowable_diagonals(n, m);
        let mut groups: BTreeMap<(usize, usize), Vec<Diagonal>> = BTreeMap::new();
        for d in &diagonals {
            if snake.contains(d) {
                continue;
            }
            let hit: Vec<usize> = (0..n).filter(|&s| d.crosses(&snake[s])).collect();
            let (lo, hi) = match (hit.first(), hit.last()) {
                (Some(&lo), Some(&hi)) if hi - lo + 1 == hit.len() => (lo + 1, hi + 1),
                _ => return Err(PolygonError::BadCrossingSet),
            };
            groups.entry((lo, hi)).or_default().push(*d);
        }
        let mut base = BTreeMap::new();
        for (&(i, j), group) in &groups {
            if group.len() != m {
                return Err(PolygonError::AmbiguousOrbit(i, j));
            }
            let starts: Vec<Diagonal> = group
                .iter()
                .copied()
                .filter(|d| (0..m).all(|t| group.contains(&d.rotate(t))))
                .collect();
            match starts.as_slice() {
                [d] => {
                    base.insert((i, j), *d);
                }
                _ => return Err(PolygonError::AmbiguousOrbit(i, j)),
            }
        }
        if base.len() != n * (n + 1) / 2 {
            return Err(PolygonError::BadCrossingSet);
        }
        Ok(TypeAModel {
            n,
            m,
            size,
            snake,
            diagonals,
            base,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn snake(&self) -> &[Diagonal] {
        &self.snake
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Image of `-a_i`.
    pub fn negative(&self, i: usize) -> Diagonal {
        self.snake[i - 1]
    }

    /// Image of `(a_i + ... + a_j)^color`.
    pub fn positive(&self, i: usize, j: usize, color: usize) -> Diagonal {
        assert!(1 <= color && color <= self.m, "colour out of range");
        self.base[&(i, j)].rotate(color - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::FiniteType;
    use crate::formulas;

    #[test]
    fn allowable_counts_match_f1() {
        assert_eq!(allowable_diagonals(2, 2).len(), 8);
        assert_eq!(allowable_diagonals(1, 3).len(), 4);
        for n in 1..=4 {
            for m in 1..=3 {
                assert_eq!(allowable_diagonals(n, m).len(), m * n * (n + 1) / 2 + n);
            }
        }
    }

    #[test]
    fn snake_is_a_noncrossing_allowable_set() {
        for n in 1..=6 {
            for m in 1..=4 {
                let s = m_snake(n, m);
                assert!(s.iter().all(|d| d.is_allowable(m)));
                for a in &s {
                    for b in &s {
                        assert!(!a.crosses(b));
                    }
                }
            }
        }
    }

    #[test]
    fn five_snake_for_a4() {
        let s = m_snake(4, 5);
        let labels: Vec<(usize, usize)> = s.iter().map(|d| (d.i + 1, d.j + 1)).collect();
        assert_eq!(labels, vec![(1, 22), (6, 22), (6, 17), (11, 17)]);
    }

    #[test]
    fn dissection_counts() {
        assert_eq!(count_dissection_faces(2, 2, 2).unwrap(), 12);
        assert_eq!(count_dissection_faces(3, 1, 3).unwrap(), 14);
        assert_eq!(count_dissection_faces(3, 2, 0).unwrap(), 1);
        for n in 1..=4 {
            for m in 1..=3 {
                let f = dissection_f_vector(n, m).unwrap();
                let expect = formulas::f_vector_closed(FiniteType::A(n));
                for k in 0..=n {
                    assert_eq!(
                        formulas::eval_all(&expect, m as i64)[k],
                        crate::exactmath::int(f[k] as i64),
                        "A{n} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn model_builds() {
        for n in 1..=5 {
            for m in 1..=3 {
                let model = TypeAModel::new(n, m).unwrap();
                assert_eq!(model.diagonals().len(), m * n * (n + 1) / 2 + n);
            }
        }
    }
}
