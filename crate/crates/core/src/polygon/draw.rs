//! Uniform access to the three models for listing facets and drawing them.

use std::fmt;
use std::str::FromStr;

use super::svg::{render, Stroke};
use super::{adjacency, for_each_clique, DVertex, Diagonal, Flavor, PolygonError};
use super::{TypeAModel, TypeBModel, TypeDModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    D,
}

impl FromStr for Family {
    type Err = PolygonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" | "C" => Ok(Family::B),
            "D" => Ok(Family::D),
            _ => Err(PolygonError::UnknownFamily(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        })
    }
}

/// A set of strokes on a `size`-gon.
#[derive(Clone, Debug, PartialEq)]
pub struct Picture {
    pub size: usize,
    pub chords: Vec<(Diagonal, Stroke)>,
}

impl Picture {
    pub fn svg(&self) -> String {
        render(self.size, &self.chords)
    }

    /// Chords as `P_i-P_j` labels with a stroke suffix for flavored diameters.
    pub fn labels(&self) -> Vec<String> {
        self.chords
            .iter()
            .map(|(d, s)| match s {
                Stroke::Solid => d.to_string(),
                Stroke::Dashed => format!("{d} dashed"),
                Stroke::Gray => format!("{d} gray"),
            })
            .collect()
    }
}

enum Inner {
    A(TypeAModel),
    B(TypeBModel),
    D(TypeDModel),
}

/// One of the polygon models, with its vertices rendered as chords.
pub struct Model {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    inner: Inner,
}

impl Model {
    pub fn new(family: Family, n: usize, m: usize) -> Result<Self, PolygonError> {
        let inner = match family {
            Family::A => Inner::A(TypeAModel::new(n, m)?),
            Family::B => Inner::B(TypeBModel::new(n, m)?),
            Family::D => Inner::D(TypeDModel::new(n, m)?),
        };
        Ok(Model {
            family,
            n,
            m,
            inner,
        })
    }

    pub fn size(&self) -> usize {
        match &self.inner {
            Inner::A(a) => a.size(),
            Inner::B(b) => b.size(),
            Inner::D(d) => d.size(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match &self.inner {
            Inner::A(a) => a.diagonals().len(),
            Inner::B(b) => b.vertices().len(),
            Inner::D(d) => d.vertices().len(),
        }
    }

    fn strokes(&self, i: usize) -> Vec<(Diagonal, Stroke)> {
        match &self.inner {
            Inner::A(a) => vec![(a.diagonals()[i], Stroke::Solid)],
            Inner::B(b) => b.vertices()[i]
                .diagonals()
                .into_iter()
                .map(|d| (d, Stroke::Solid))
                .collect(),
            Inner::D(d) => match d.vertices()[i] {
                DVertex::Pair(x, y) => vec![(x, Stroke::Solid), (y, Stroke::Solid)],
                DVertex::Diameter { pos, flavor } => {
                    let s = match flavor {
                        Flavor::Dashed => Stroke::Dashed,
                        Flavor::Gray => Stroke::Gray,
                    };
                    vec![(d.diameter_chord(pos), s)]
                }
            },
        }
    }

    fn compatible(&self, i: usize, j: usize) -> bool {
        match &self.inner {
            Inner::A(a) => !a.diagonals()[i].crosses(&a.diagonals()[j]),
            Inner::B(b) => b.vertices()[i].compatible(&b.vertices()[j]),
            Inner::D(d) => d.compatible(&d.vertices()[i], &d.vertices()[j]),
        }
    }

    fn picture(&self, ids: &[usize]) -> Picture {
        Picture {
            size: self.size(),
            chords: ids.iter().flat_map(|&i| self.strokes(i)).collect(),
        }
    }

    /// The images of the negative simple roots (the snake in type A).
    pub fn negatives(&self) -> Result<Picture, PolygonError> {
        let mut chords = Vec::new();
        for i in 1..=self.n {
            let v = match &self.inner {
                Inner::A(a) => vec![(a.negative(i), Stroke::Solid)],
                Inner::B(b) => b
                    .negative(i)?
                    .diagonals()
                    .into_iter()
                    .map(|d| (d, Stroke::Solid))
                    .collect(),
                Inner::D(d) => {
                    let v = d.negative(i)?;
                    let idx = d.vertices().iter().position(|w| *w == v).expect("model vertex");
                    self.strokes(idx)
                }
            };
            chords.extend(v);
        }
        Ok(Picture {
            size: self.size(),
            chords,
        })
    }

    /// Up to `limit` facets in lexicographic order of vertex indices.
    pub fn facets(&self, limit: usize) -> Vec<Picture> {
        let ids: Vec<usize> = (0..self.vertex_count()).collect();
        let adj = adjacency(&ids, |&i, &j| self.compatible(i, j));
        let mut out = Vec::new();
        for_each_clique(&adj, self.n, &mut |c| {
            if c.len() == self.n && out.len() < limit {
                out.push(self.picture(c));
            }
        });
        out
    }

    /// Number of faces of each size, `f[0] = 1`.
    pub fn f_vector(&self) -> Vec<u64> {
        let ids: Vec<usize> = (0..self.vertex_count()).collect();
        let adj = adjacency(&ids, |&i, &j| self.compatible(i, j));
        super::clique_counts(&adj, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::FiniteType;
    use crate::formulas::{eval_all, f_vector_closed};

    #[test]
    fn f_vectors_match_closed_forms() {
        for (fam, t) in [
            (Family::A, FiniteType::A(3)),
            (Family::B, FiniteType::B(3)),
            (Family::D, FiniteType::D(4)),
        ] {
            let model = Model::new(fam, t.rank(), 2).unwrap();
            let got: Vec<_> = model.f_vector().iter().map(|&x| crate::exactmath::int(x as i64)).collect();
            assert_eq!(got, eval_all(&f_vector_closed(t), 2), "{fam}");
        }
    }

    #[test]
    fn facets_and_negatives() {
        let model = Model::new(Family::A, 2, 2).unwrap();
        assert_eq!(model.size(), 8);
        assert_eq!(model.facets(100).len(), 12);
        let neg = model.negatives().unwrap();
        assert_eq!(neg.chords.len(), 2);
        assert!(neg.svg().contains("<line"));
        let d = Model::new(Family::D, 3, 1).unwrap();
        let labels = d.negatives().unwrap().labels();
        assert_eq!(labels.iter().filter(|l| l.ends_with("gray")).count(), 1);
        assert_eq!(labels.iter().filter(|l| l.ends_with("dashed")).count(), 1);
    }

    #[test]
    fn family_names() {
        assert_eq!("c".parse::<Family>().unwrap(), Family::B);
        assert!("E".parse::<Family>().is_err());
    }
}
