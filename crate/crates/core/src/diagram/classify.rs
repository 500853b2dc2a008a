use std::fmt;

use super::{CoxeterDiagram, VertexSet};

/// Finite irreducible Coxeter types, in canonical form: `B1 = A1`,
/// `D3 = A3`, `I2(3) = A2`, `I2(4) = B2`, `I2(6) = G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    I2(u32),
}

impl FiniteType {
    /// Canonical representative; `None` for parameters that name no
    /// irreducible finite type.
    pub fn canonical(self) -> Option<FiniteType> {
        use FiniteType::*;
        Some(match self {
            A(n) if n >= 1 => A(n),
            B(1) => A(1),
            B(n) if n >= 2 => B(n),
            D(3) => A(3),
            D(n) if n >= 4 => D(n),
            E(n) if (6..=8).contains(&n) => E(n),
            F4 => F4,
            G2 => G2,
            H(n) if n == 3 || n == 4 => H(n),
            I2(3) => A(2),
            I2(4) => B(2),
            I2(6) => G2,
            I2(a) if a >= 5 => I2(a),
            _ => return None,
        })
    }

    pub fn rank(self) -> usize {
        use FiniteType::*;
        match self {
            A(n) | B(n) | D(n) | E(n) | H(n) => n,
            F4 => 4,
            G2 | I2(_) => 2,
        }
    }

    pub fn coxeter_number(self) -> u32 {
        use FiniteType::*;
        match self {
            A(n) => n as u32 + 1,
            B(n) => 2 * n as u32,
            D(n) => 2 * n as u32 - 2,
            E(6) => 12,
            E(7) => 18,
            E(_) => 30,
            F4 => 12,
            G2 => 6,
            H(3) => 10,
            H(_) => 30,
            I2(a) => a,
        }
    }

    /// Exponents in ascending order.
    pub fn exponents(self) -> Vec<u32> {
        use FiniteType::*;
        let mut e: Vec<u32> = match self {
            A(n) => (1..=n as u32).collect(),
            B(n) => (1..=n as u32).map(|i| 2 * i - 1).collect(),
            D(n) => {
                let n = n as u32;
                let mut v: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                v.push(n - 1);
                v
            }
            E(6) => vec![1, 4, 5, 7, 8, 11],
            E(7) => vec![1, 5, 7, 9, 11, 13, 17],
            E(_) => vec![1, 7, 11, 13, 17, 19, 23, 29],
            F4 => vec![1, 5, 7, 11],
            G2 => vec![1, 5],
            H(3) => vec![1, 5, 9],
            H(_) => vec![1, 11, 19, 29],
            I2(a) => vec![1, a - 1],
        };
        e.sort_unstable();
        e
    }

    /// Whether the longest element acts as `-1`.
    pub fn minus_one_longest(self) -> bool {
        use FiniteType::*;
        match self {
            A(n) => n == 1,
            B(_) | E(7) | E(8) | F4 | G2 | H(_) => true,
            D(n) => n % 2 == 0,
            E(_) => false,
            I2(a) => a % 2 == 0,
        }
    }

    /// Standard labelled diagram on `1..=rank`.
    pub fn diagram(self) -> CoxeterDiagram {
        use FiniteType::*;
        let path = |n: usize| -> Vec<(usize, usize, u32)> { (1..n).map(|i| (i, i + 1, 3)).collect() };
        let (n, edges) = match self {
            A(n) => (n, path(n)),
            B(n) => {
                let mut e = path(n);
                if let Some(last) = e.last_mut() {
                    last.2 = 4;
                }
                (n, e)
            }
            D(n) => {
                let mut e = path(n - 1);
                e.push((n - 2, n, 3));
                (n, e)
            }
            E(n) => {
                let mut e = vec![(1, 3, 3), (2, 4, 3)];
                e.extend((3..n).map(|i| (i, i + 1, 3)));
                (n, e)
            }
            F4 => (4, vec![(1, 2, 3), (2, 3, 4), (3, 4, 3)]),
            G2 => (2, vec![(1, 2, 6)]),
            H(n) => {
                let mut e = path(n);
                e[0].2 = 5;
                (n, e)
            }
            I2(a) => (2, vec![(1, 2, a)]),
        };
        CoxeterDiagram::new(n, &edges)
            .expect("catalog diagram")
            .with_name(self.to_string())
    }

    /// All canonical types of a given rank (dihedral: labels up to `max_label`).
    pub fn catalog(rank: usize, max_label: u32) -> Vec<FiniteType> {
        use FiniteType::*;
        let mut out = vec![A(rank)];
        if rank >= 2 {
            out.push(B(rank));
        }
        if rank >= 4 {
            out.push(D(rank));
        }
        match rank {
            2 => {
                out.push(G2);
                out.extend((5..=max_label).filter(|&a| a != 6).map(I2));
            }
            3 => out.push(H(3)),
            4 => out.extend([F4, H(4)]),
            6..=8 => out.push(E(rank)),
            _ => {}
        }
        out
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FiniteType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E(n) => write!(f, "E{n}"),
            F4 => write!(f, "F4"),
            G2 => write!(f, "G2"),
            H(n) => write!(f, "H{n}"),
            I2(a) => write!(f, "I2({a})"),
        }
    }
}

/// Affine types by subscript; the diagram has one more vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AffineType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl AffineType {
    pub fn diagram(self) -> CoxeterDiagram {
        use AffineType::*;
        let (n, edges): (usize, Vec<(usize, usize, u32)>) = match self {
            A(k) => {
                let n = k + 1;
                let mut e: Vec<_> = (1..n).map(|i| (i, i + 1, 3)).collect();
                e.push((1, n, 3));
                (n, e)
            }
            B(k) => {
                let n = k + 1;
                let mut e = vec![(1, 3, 3), (2, 3, 3)];
                e.extend((3..n).map(|i| (i, i + 1, 3)));
                e.last_mut().unwrap().2 = 4;
                (n, e)
            }
            C(k) => {
                let n = k + 1;
                let mut e: Vec<_> = (1..n).map(|i| (i, i + 1, 3)).collect();
                e[0].2 = 4;
                e.last_mut().unwrap().2 = 4;
                (n, e)
            }
            D(k) => {
                let n = k + 1;
                let mut e = vec![(1, 3, 3), (2, 3, 3)];
                e.extend((3..n - 2).map(|i| (i, i + 1, 3)));
                e.push((n - 2, n - 1, 3));
                e.push((n - 2, n, 3));
                e.sort();
                e.dedup();
                (n, e)
            }
            E(k) => {
                let base = FiniteType::E(k).diagram();
                let mut e: Vec<_> = base.edges().collect();
                let attach = match k {
                    6 => 2,
                    7 => 1,
                    _ => 8,
                };
                e.push((attach, k + 1, 3));
                (k + 1, e)
            }
            F4 => (5, vec![(1, 2, 3), (2, 3, 3), (3, 4, 4), (4, 5, 3)]),
            G2 => (3, vec![(1, 2, 3), (2, 3, 6)]),
        };
        CoxeterDiagram::new(n, &edges)
            .expect("catalog diagram")
            .with_name(self.to_string())
    }

    /// Affine types whose diagram has `vertices` vertices.
    pub fn catalog(vertices: usize) -> Vec<AffineType> {
        use AffineType::*;
        let k = vertices.saturating_sub(1);
        let mut out = Vec::new();
        if k >= 2 {
            out.extend([A(k), C(k)]);
        }
        if k >= 3 {
            out.push(B(k));
        }
        if k >= 4 {
            out.push(D(k));
        }
        match k {
            2 => out.push(G2),
            4 => out.push(F4),
            6..=8 => out.push(E(k)),
            _ => {}
        }
        out
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AffineType::*;
        match self {
            A(n) => write!(f, "~A{n}"),
            B(n) => write!(f, "~B{n}"),
            C(n) => write!(f, "~C{n}"),
            D(n) => write!(f, "~D{n}"),
            E(n) => write!(f, "~E{n}"),
            F4 => write!(f, "~F4"),
            G2 => write!(f, "~G2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    FiniteIrreducible(FiniteType),
    /// Components in vertex order; the empty diagram has none.
    FiniteReducible(Vec<FiniteType>),
    Affine(AffineType),
    OtherInfinite,
}

impl Classification {
    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            Classification::FiniteIrreducible(_) | Classification::FiniteReducible(_)
        )
    }

    pub fn finite_type(&self) -> Option<FiniteType> {
        match self {
            Classification::FiniteIrreducible(t) => Some(*t),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Classification::FiniteIrreducible(t) => t.to_string(),
            Classification::FiniteReducible(ts) if ts.is_empty() => "empty".to_string(),
            Classification::FiniteReducible(ts) => ts
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join("x"),
            Classification::Affine(t) => t.to_string(),
            Classification::OtherInfinite => "infinite".to_string(),
        }
    }
}

fn classify_connected(g: &CoxeterDiagram) -> Classification {
    let n = g.rank();
    if n == 1 {
        return Classification::FiniteIrreducible(FiniteType::A(1));
    }
    if n == 2 {
        let a = g.label(g.vertices()[0], g.vertices()[1]);
        return Classification::FiniteIrreducible(FiniteType::I2(a).canonical().unwrap());
    }
    for t in FiniteType::catalog(n, 0) {
        if isomorphic(g, &t.diagram()) {
            return Classification::FiniteIrreducible(t);
        }
    }
    for t in AffineType::catalog(n) {
        if isomorphic(g, &t.diagram()) {
            return Classification::Affine(t);
        }
    }
    Classification::OtherInfinite
}

pub fn classify(g: &CoxeterDiagram) -> Classification {
    let comps = g.connected_components();
    if comps.len() == 1 {
        return classify_connected(&comps[0]);
    }
    let mut types = Vec::new();
    for c in &comps {
        match classify_connected(c) {
            Classification::FiniteIrreducible(t) => types.push(t),
            _ => return Classification::OtherInfinite,
        }
    }
    Classification::FiniteReducible(types)
}

/// Labelled graph isomorphism by backtracking with degree/label pruning.
pub(crate) fn isomorphic(a: &CoxeterDiagram, b: &CoxeterDiagram) -> bool {
    if a.rank() != b.rank() || a.edges().count() != b.edges().count() {
        return false;
    }
    let av: Vec<usize> = a.vertices().to_vec();
    let bv: Vec<usize> = b.vertices().to_vec();
    let sig = |g: &CoxeterDiagram, v: usize| {
        let mut s: Vec<u32> = g.neighbors(v).map(|w| g.label(v, w)).collect();
        s.sort_unstable();
        s
    };
    let asig: Vec<_> = av.iter().map(|&v| sig(a, v)).collect();
    let bsig: Vec<_> = bv.iter().map(|&v| sig(b, v)).collect();
    let mut asorted = asig.clone();
    let mut bsorted = bsig.clone();
    asorted.sort();
    bsorted.sort();
    if asorted != bsorted {
        return false;
    }
    let mut map = vec![usize::MAX; av.len()];
    let mut used = VertexSet::EMPTY;
    fn go(
        k: usize,
        a: &CoxeterDiagram,
        b: &CoxeterDiagram,
        av: &[usize],
        bv: &[usize],
        asig: &[Vec<u32>],
        bsig: &[Vec<u32>],
        map: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        if k == av.len() {
            return true;
        }
        for (j, &w) in bv.iter().enumerate() {
            if used.contains(j + 1) || asig[k] != bsig[j] {
                continue;
            }
            let ok = (0..k).all(|i| a.label(av[i], av[k]) == b.label(bv[map[i]], w));
            if !ok {
                continue;
            }
            map[k] = j;
            used.insert(j + 1);
            if go(k + 1, a, b, av, bv, asig, bsig, map, used) {
                return true;
            }
            *used = used.without(j + 1);
        }
        false
    }
    go(0, a, b, &av, &bv, &asig, &bsig, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::super::parse_diagram;
    use super::*;

    fn c(s: &str) -> Classification {
        classify(&parse_diagram(s).unwrap())
    }

    #[test]
    fn finite_examples() {
        let h4 = c("H4").finite_type().unwrap();
        assert_eq!(h4.coxeter_number(), 30);
        assert_eq!(h4.exponents(), vec![1, 11, 19, 29]);
        let e8 = c("E8").finite_type().unwrap();
        assert_eq!(e8.exponents(), vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(c("H3").finite_type().unwrap().coxeter_number(), 10);
        assert_eq!(c("D3"), Classification::FiniteIrreducible(FiniteType::A(3)));
        assert_eq!(c("I2(4)"), Classification::FiniteIrreducible(FiniteType::B(2)));
        assert_eq!(c("I2(6)"), Classification::FiniteIrreducible(FiniteType::G2));
        assert_eq!(c("I2(9)"), Classification::FiniteIrreducible(FiniteType::I2(9)));
    }

    #[test]
    fn stored_tables_are_consistent() {
        for n in 1..=8 {
            for t in FiniteType::catalog(n, 12) {
                let e = t.exponents();
                assert_eq!(e.len(), t.rank(), "{t}");
                let sum: u32 = e.iter().sum();
                assert_eq!(2 * sum, t.rank() as u32 * t.coxeter_number(), "{t}");
                // exponents pair up as e <-> h - e
                let mut dual: Vec<u32> = e.iter().map(|x| t.coxeter_number() - x).collect();
                dual.sort_unstable();
                assert_eq!(dual, e, "{t}");
            }
        }
    }

    #[test]
    fn named_constructors_classify_to_themselves() {
        for n in 1..=8 {
            for t in FiniteType::catalog(n, 12) {
                assert_eq!(
                    classify(&t.diagram()),
                    Classification::FiniteIrreducible(t),
                    "{t}"
                );
                assert_eq!(classify(&parse_diagram(&t.to_string()).unwrap()).finite_type(), Some(t));
            }
        }
    }

    #[test]
    fn affine_and_other() {
        assert_eq!(c("n=4; 1-2:3 2-3:4 3-4:3 1-4:4"), Classification::OtherInfinite);
        assert_eq!(c("n=3; 1-2 2-3 1-3"), Classification::Affine(AffineType::A(2)));
        assert_eq!(c("n=4; 1-2 1-3 1-4 2-3 2-4 3-4"), Classification::OtherInfinite);
        for n in 3..=9 {
            for t in AffineType::catalog(n) {
                let g = t.diagram();
                assert!(g.is_connected(), "{t}");
                assert_eq!(classify(&g), Classification::Affine(t), "{t}");
            }
        }
        assert_eq!(c("~D4").describe(), "~D4");
        assert_eq!(c("~B2"), Classification::Affine(AffineType::C(2)));
    }

    #[test]
    fn reducible() {
        assert_eq!(
            c("n=3; 2-3:5"),
            Classification::FiniteReducible(vec![FiniteType::A(1), FiniteType::I2(5)])
        );
        assert_eq!(c("n=0"), Classification::FiniteReducible(vec![]));
        assert_eq!(c("A1x~A2"), Classification::OtherInfinite);
    }
}
