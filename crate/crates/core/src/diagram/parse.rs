use super::classify::{AffineType, FiniteType};
use super::{CoxeterDiagram, DiagramError};

/// Parse a named type (`A4`, `C3`, `I2(7)`, `~D5`, products `A1xB2`) or an
/// explicit `n=<k>; i-j:label ...` edge list. A missing label means 3.
pub fn parse_diagram(text: &str) -> Result<CoxeterDiagram, DiagramError> {
    let t = text.trim();
    if t.starts_with("n=") || t.starts_with("n =") {
        return parse_explicit(t);
    }
    let parts: Vec<&str> = t
        .split(['x', '*', '×'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if parts.len() > 1 {
        let mut acc = CoxeterDiagram::empty();
        for p in &parts {
            acc = acc.disjoint_union(&parse_named(p)?);
        }
        return Ok(acc.with_name(parts.join("x")));
    }
    parse_named(t)
}

fn syntax(msg: impl Into<String>) -> DiagramError {
    DiagramError::Syntax(msg.into())
}

fn parse_named(t: &str) -> Result<CoxeterDiagram, DiagramError> {
    let bad = || syntax(format!("unknown diagram {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some(rest) = t.strip_prefix('~') {
        let (fam, n) = split_family(rest).ok_or_else(bad)?;
        let ty = match (fam, n) {
            ('A', n) if n >= 2 => AffineType::A(n),
            ('B', 2) | ('C', 2) => AffineType::C(2),
            ('B', n) if n >= 3 => AffineType::B(n),
            ('C', n) if n >= 2 => AffineType::C(n),
            ('D', n) if n >= 4 => AffineType::D(n),
            ('E', n) if (6..=8).contains(&n) => AffineType::E(n),
            ('F', 4) => AffineType::F4,
            ('G', 2) => AffineType::G2,
            _ => return Err(bad()),
        };
        return Ok(ty.diagram().with_name(format!("~{rest}")));
    }
    if let Some(arg) = t.strip_prefix("I2(").and_then(|s| s.strip_suffix(')')) {
        let a: u32 = arg.trim().parse().map_err(|_| bad())?;
        if a < 2 {
            return Err(DiagramError::BadLabel(arg.to_string(), 1, 2));
        }
        return CoxeterDiagram::new(2, &[(1, 2, a)]).map(|g| g.with_name(t));
    }
    let (fam, n) = split_family(t).ok_or_else(bad)?;
    let g = match (fam, n) {
        ('A', n) if n >= 1 => FiniteType::A(n).diagram(),
        ('B', n) | ('C', n) if n >= 2 => FiniteType::B(n).diagram(),
        ('B', 1) | ('C', 1) => FiniteType::A(1).diagram(),
        ('D', 3) => CoxeterDiagram::new(3, &[(1, 2, 3), (1, 3, 3)])?,
        ('D', n) if n >= 4 => FiniteType::D(n).diagram(),
        ('E', n) if (6..=8).contains(&n) => FiniteType::E(n).diagram(),
        ('F', 4) => FiniteType::F4.diagram(),
        ('G', 2) => FiniteType::G2.diagram(),
        ('H', n) if n == 3 || n == 4 => FiniteType::H(n).diagram(),
        _ => return Err(bad()),
    };
    Ok(g.with_name(t))
}

fn split_family(s: &str) -> Option<(char, usize)> {
    let mut chars = s.chars();
    let fam = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    Some((fam, n))
}

fn parse_explicit(t: &str) -> Result<CoxeterDiagram, DiagramError> {
    let (head, body) = match t.split_once(';') {
        Some((h, b)) => (h, b),
        None => (t, ""),
    };
    let n: usize = head
        .trim()
        .strip_prefix('n')
        .and_then(|s| s.trim_start().strip_prefix('='))
        .map(str::trim)
        .ok_or_else(|| syntax("expected n=<rank>"))?
        .parse()
        .map_err(|_| syntax(format!("bad rank in {head:?}")))?;
    let mut edges = Vec::new();
    for tok in body.split([' ', ',', '\t', ';']).filter(|s| !s.is_empty()) {
        let (pair, label) = match tok.split_once(':') {
            Some((p, l)) => (p, Some(l)),
            None => (tok, None),
        };
        let (i, j) = pair
            .split_once('-')
            .ok_or_else(|| syntax(format!("bad edge {tok:?}")))?;
        let i: usize = i.parse().map_err(|_| syntax(format!("bad vertex in {tok:?}")))?;
        let j: usize = j.parse().map_err(|_| syntax(format!("bad vertex in {tok:?}")))?;
        let l = match label {
            None => 3,
            Some(l) => l
                .parse::<u32>()
                .map_err(|_| DiagramError::BadLabel(l.to_string(), i, j))?,
        };
        edges.push((i, j, l));
    }
    CoxeterDiagram::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let g = parse_diagram("I2(7)").unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.label(1, 2), 7);
        let h3 = parse_diagram("H3").unwrap();
        assert_eq!(h3.label(1, 2), 5);
        assert_eq!(h3.label(2, 3), 3);
        assert_eq!(
            parse_diagram("C4").unwrap(),
            parse_diagram("B4").unwrap()
        );
        let b4 = parse_diagram("B4").unwrap();
        assert_eq!(b4.label(3, 4), 4);
        let f4 = parse_diagram("F4").unwrap();
        assert_eq!(f4.edges().map(|e| e.2).collect::<Vec<_>>(), vec![3, 4, 3]);
    }

    #[test]
    fn explicit_examples() {
        let g = parse_diagram("n=3; 1-2:3 2-3:3 1-3:3").unwrap();
        assert_eq!(g.edges().count(), 3);
        let g = parse_diagram("n=3;1-2:3 1-3:3 2-3:3").unwrap();
        assert_eq!(g.edges().count(), 3);
        let g = parse_diagram("n=2").unwrap();
        assert_eq!(g.edges().count(), 0);
        let g = parse_diagram("n=3; 1-2:2 2-3").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(2, 3, 3)]);
    }

    #[test]
    fn explicit_errors() {
        assert!(matches!(parse_diagram("n=3; 1-2:1"), Err(DiagramError::BadLabel(..))));
        assert!(matches!(parse_diagram("n=3; 1-2:inf"), Err(DiagramError::BadLabel(..))));
        assert!(matches!(parse_diagram("n=3; 1-2:3.5"), Err(DiagramError::BadLabel(..))));
        assert!(matches!(
            parse_diagram("n=3; 1-4"),
            Err(DiagramError::VertexOutOfRange(4, 3))
        ));
        assert!(matches!(
            parse_diagram("n=3; 1-2:3 2-1:4"),
            Err(DiagramError::ConflictingEdge(1, 2, 3, 4))
        ));
        assert!(parse_diagram("n=3; 1-2:3 2-1:3").is_ok());
        assert!(matches!(parse_diagram("n=3; 2-2"), Err(DiagramError::SelfLoop(2))));
        assert!(matches!(parse_diagram("n=x"), Err(DiagramError::Syntax(_))));
        assert!(matches!(parse_diagram("n=3; 12"), Err(DiagramError::Syntax(_))));
        assert!(matches!(parse_diagram("Q7"), Err(DiagramError::Syntax(_))));
        assert!(matches!(parse_diagram("E9"), Err(DiagramError::Syntax(_))));
        assert!(matches!(parse_diagram("~A1"), Err(DiagramError::Syntax(_))));
    }

    #[test]
    fn affine_names() {
        let g = parse_diagram("~A3").unwrap();
        assert_eq!(g.rank(), 4);
        assert_eq!(g.edges().count(), 4);
        assert_eq!(parse_diagram("~B2").unwrap(), parse_diagram("~C2").unwrap());
        assert_eq!(parse_diagram("~G2").unwrap().label(2, 3), 6);
        assert_eq!(parse_diagram("~E8").unwrap().rank(), 9);
    }

    #[test]
    fn products() {
        let g = parse_diagram("A1xA2").unwrap();
        assert_eq!(g.rank(), 3);
        assert_eq!(g.connected_components().len(), 2);
    }
}
