//! Enumerative formulas for `Delta^m(Phi)`: face numbers by recursion and
//! by closed products, h-vectors, Euler characteristics and positive
//! (reciprocal) counts. Everything is a polynomial in `m` with exact
//! rational coefficients.

mod tables;

use std::collections::HashMap;

use num_traits::One;
use thiserror::Error;

use crate::diagram::{classify, Classification, CoxeterDiagram, FiniteType, VertexSet};
use crate::exactmath::{binomial, int, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("diagram is not of finite type")]
    NotFinite,
    #[error("face index {0} out of range for rank {1}")]
    KOutOfRange(usize, usize),
}

fn table_key(t: FiniteType) -> String {
    t.to_string()
}

/// `(exponent, level)` pairs.
pub fn levels(t: FiniteType) -> Vec<(u32, usize)> {
    use FiniteType::*;
    match t {
        A(n) => (1..=n).map(|i| (i as u32, i)).collect(),
        B(n) => (1..=n).map(|i| (2 * i as u32 - 1, i)).collect(),
        D(n) => {
            let mut v = vec![(1, 1)];
            v.extend((3..=n).map(|j| (2 * j as u32 - 3, j)));
            v.push((n as u32 - 1, n - 1));
            v.sort();
            v
        }
        G2 => vec![(1, 1), (5, 2)],
        I2(a) => vec![(1, 1), (a - 1, 2)],
        _ => tables::tables().levels[&table_key(t)].clone(),
    }
}

fn d_correction_f(n: usize, k: usize) -> Poly {
    if [0, 1, n - 1, n].contains(&k) {
        return Poly::one();
    }
    let (n, k) = (n as i64, k as i64);
    Poly::from_ints(&[k * n, n * (n - 1) + k * (k - 1)]).scale(&Rational::new(1.into(), (k * n).into()))
}

fn d_correction_h(n: usize, k: usize) -> Poly {
    if [0, 1, n - 1, n].contains(&k) {
        return Poly::one();
    }
    let (n, k) = (n as i64, k as i64);
    // (n^2 - n + k^2 - k)(m(n-1) + 1) / (k n (n-1)) - 1
    let lin = Poly::from_ints(&[1, n - 1]);
    let c = Rational::new((n * n - n + k * k - k).into(), (k * n * (n - 1)).into());
    &lin.scale(&c) - &Poly::one()
}

/// The correction factor in the product formula for `f_k`.
pub fn c_f(t: FiniteType, k: usize) -> Poly {
    use FiniteType::*;
    match t {
        D(n) => d_correction_f(n, k),
        E(_) | F4 | H(4) => tables::tables().cf[&(table_key(t), k)].clone(),
        _ => Poly::one(),
    }
}

/// The correction factor in the product formula for `h_k`.
pub fn c_h(t: FiniteType, k: usize) -> Poly {
    use FiniteType::*;
    match t {
        D(n) => d_correction_h(n, k),
        E(_) | F4 | H(4) => tables::tables().ch[&(table_key(t), k)].clone(),
        _ => Poly::one(),
    }
}

/// Tabulated reference column for `D8`, used to check the closed forms.
pub fn d8_reference(k: usize) -> (Poly, Poly) {
    let t = tables::tables();
    (
        t.cf[&("D8".to_string(), k)].clone(),
        t.ch[&("D8".to_string(), k)].clone(),
    )
}

/// `M(G)` for an irreducible finite type, from the table of values.
pub fn m_value(t: FiniteType) -> Rational {
    use FiniteType::*;
    match t {
        A(_) => int(1),
        B(n) => int(n as i64),
        D(n) => int(n as i64 - 2),
        G2 => int(4),
        I2(a) => int(a as i64 - 2),
        _ => tables::tables().m_values[&table_key(t)].clone(),
    }
}

/// `binom(top, k)` for a polynomial `top`, as a polynomial.
pub fn binom_poly(top: &Poly, k: usize) -> Poly {
    let mut acc = Poly::one();
    for j in 0..k {
        acc = &acc * &(top - &Poly::constant(int(j as i64)));
    }
    let fact: Rational = (1..=k as i64).map(int).product();
    acc.scale(&(Rational::one() / fact))
}

fn level_product(t: FiniteType, k: usize, sign: i64) -> Poly {
    let h = t.coxeter_number() as i64;
    levels(t)
        .into_iter()
        .filter(|&(_, l)| l <= k)
        .map(|(e, _)| {
            let e = e as i64;
            Poly::from_ints(&[sign * e + 1, h]).scale(&Rational::new(1.into(), (e + 1).into()))
        })
        .product()
}

/// `c_f * binom(n, k) * prod_{level(e) <= k} (mh + e + 1)/(e + 1)`.
pub fn f_k_product(t: FiniteType, k: usize) -> Poly {
    let n = t.rank();
    (&c_f(t, k) * &level_product(t, k, 1)).scale(&binomial(n as i64, k as i64))
}

/// `c_h * binom(n, k) * prod_{level(e) <= k} (mh - e + 1)/(e + 1)`.
pub fn h_k_product(t: FiniteType, k: usize) -> Poly {
    let n = t.rank();
    (&c_h(t, k) * &level_product(t, k, -1)).scale(&binomial(n as i64, k as i64))
}

fn lin(a: i64, b: i64) -> Poly {
    Poly::from_ints(&[b, a])
}

/// Binomial closed forms for the classical families.
pub fn f_k_binomial(t: FiniteType, k: usize) -> Option<Poly> {
    let (ni, ki) = (t.rank() as i64, k as i64);
    Some(match t {
        FiniteType::A(n) => binom_poly(&lin(n as i64 + 1, ki + 1), k)
            .scale(&(binomial(ni, ki) / int(ki + 1))),
        FiniteType::B(_) => binom_poly(&lin(ni, ki), k).scale(&binomial(ni, ki)),
        FiniteType::D(_) => {
            let a = binom_poly(&lin(ni - 1, ki), k).scale(&binomial(ni, ki));
            let b = binom_poly(&lin(ni - 1, ki - 1), k).scale(&binomial(ni - 2, ki - 2));
            &a + &b
        }
        _ => return None,
    })
}

pub fn h_k_binomial(t: FiniteType, k: usize) -> Option<Poly> {
    let (ni, ki) = (t.rank() as i64, k as i64);
    Some(match t {
        FiniteType::A(n) => {
            binom_poly(&lin(n as i64 + 1, 0), k).scale(&(binomial(ni, ki) / int(ki + 1)))
        }
        FiniteType::B(_) => binom_poly(&lin(ni, 0), k).scale(&binomial(ni, ki)),
        FiniteType::D(_) => {
            let a = binom_poly(&lin(ni - 1, 0), k).scale(&binomial(ni, ki));
            let b = binom_poly(&lin(ni - 1, 1), k).scale(&binomial(ni - 2, ki - 2));
            &a + &b
        }
        _ => return None,
    })
}

/// `f_0..f_n` from the closed forms: binomial for A/B/D, level products
/// otherwise.
pub fn f_vector_closed(t: FiniteType) -> Vec<Poly> {
    (0..=t.rank())
        .map(|k| f_k_binomial(t, k).unwrap_or_else(|| f_k_product(t, k)))
        .collect()
}

pub fn h_vector_closed(t: FiniteType) -> Vec<Poly> {
    (0..=t.rank())
        .map(|k| h_k_binomial(t, k).unwrap_or_else(|| h_k_product(t, k)))
        .collect()
}

/// Face polynomials of a product: `f_k = sum f_{k1}(A) f_{k2}(B)`.
pub fn convolve(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Face polynomials of any finite diagram (joins for reducible ones).
pub fn f_vector_for_diagram(g: &CoxeterDiagram) -> Result<Vec<Poly>, FormulaError> {
    match classify(g) {
        Classification::FiniteIrreducible(t) => Ok(f_vector_closed(t)),
        Classification::FiniteReducible(ts) => Ok(ts
            .into_iter()
            .fold(vec![Poly::one()], |acc, t| convolve(&acc, &f_vector_closed(t)))),
        _ => Err(FormulaError::NotFinite),
    }
}

/// Face polynomials by the recursion
/// `f_k = (mh + 2)/(2k) * sum_i f_{k-1}(G - i)`, with joins for
/// disconnected subdiagrams. `h_of` supplies the Coxeter number of each
/// connected vertex subset; `None` aborts.
pub fn f_polys_with<F>(g: &CoxeterDiagram, h_of: F) -> Option<Vec<Poly>>
where
    F: FnMut(&CoxeterDiagram) -> Option<Rational>,
{
    let mut rec = Recursion {
        g,
        h_of,
        memo: HashMap::new(),
    };
    rec.f(g.vertex_set())
}

struct Recursion<'a, F> {
    g: &'a CoxeterDiagram,
    h_of: F,
    memo: HashMap<VertexSet, Vec<Poly>>,
}

impl<F> Recursion<'_, F>
where
    F: FnMut(&CoxeterDiagram) -> Option<Rational>,
{
    fn f(&mut self, s: VertexSet) -> Option<Vec<Poly>> {
        if let Some(v) = self.memo.get(&s) {
            return Some(v.clone());
        }
        let sub = self.g.restrict(s);
        let comps = sub.component_sets();
        let out = if s.is_empty() {
            vec![Poly::one()]
        } else if comps.len() > 1 {
            let mut acc = vec![Poly::one()];
            for c in comps {
                acc = convolve(&acc, &self.f(c)?);
            }
            acc
        } else {
            let h = (self.h_of)(&sub)?;
            let n = s.len();
            let lower: Vec<Vec<Poly>> = s
                .iter()
                .map(|v| self.f(s.without(v)))
                .collect::<Option<_>>()?;
            let mh2 = Poly::linear(h, int(2));
            let mut fs = vec![Poly::one()];
            for k in 1..=n {
                let sum: Poly = lower.iter().map(|l| l[k - 1].clone()).sum();
                fs.push((&mh2 * &sum).scale(&(Rational::one() / int(2 * k as i64))));
            }
            fs
        };
        self.memo.insert(s, out.clone());
        Some(out)
    }
}

/// The recursion with `h` supplied for the whole diagram and taken from
/// the classification for proper connected subdiagrams.
pub fn f_poly_recursive(g: &CoxeterDiagram, h: &Rational) -> Option<Vec<Poly>> {
    let full = g.vertex_set();
    f_polys_with(g, |sub| {
        if sub.vertex_set() == full {
            Some(h.clone())
        } else {
            classify(sub)
                .finite_type()
                .map(|t| int(t.coxeter_number() as i64))
        }
    })
}

/// `prod (mh + e + 1)/(e + 1)`.
pub fn n_product(t: FiniteType) -> Poly {
    let h = t.coxeter_number() as i64;
    t.exponents()
        .into_iter()
        .map(|e| lin(h, e as i64 + 1).scale(&Rational::new(1.into(), (e as i64 + 1).into())))
        .product()
}

/// `prod (mh + e - 1)/(e + 1)`.
pub fn n_plus_product(t: FiniteType) -> Poly {
    let h = t.coxeter_number() as i64;
    t.exponents()
        .into_iter()
        .map(|e| lin(h, e as i64 - 1).scale(&Rational::new(1.into(), (e as i64 + 1).into())))
        .product()
}

/// `(-1)^k f_k(-m - 1)`.
pub fn f_plus(f_k: &Poly, k: usize) -> Poly {
    let p = f_k.compose_linear(&int(-1), &int(-1));
    if k % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `h_k = sum_i (-1)^(k-i) binom(n-i, k-i) f_i`, the coefficients of
/// `F(x - 1)`.
pub fn h_from_f(f: &[Poly]) -> Vec<Poly> {
    let n = f.len() as i64 - 1;
    (0..=n)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    f[i as usize].scale(&(binomial(n - i, k - i) * int(sign)))
                })
                .sum()
        })
        .collect()
}

/// Numeric h-vector by shifting the f-polynomial `F(x) = sum f_{n-k} x^k`.
pub fn h_from_f_numeric(f: &[Rational]) -> Vec<Rational> {
    let n = f.len() - 1;
    let big_f = Poly::new((0..=n).map(|k| f[n - k].clone()).collect());
    let big_h = big_f.shift_down();
    (0..=n).map(|k| big_h.coeff(n - k)).collect()
}

/// `sum_k (-1)^(k-1) f_k`.
pub fn reduced_euler(f: &[Rational]) -> Rational {
    f.iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 1 { x.clone() } else { -x.clone() })
        .sum()
}

/// Faces of the type-B model with `k` diagonals that include a diameter:
/// `binom(n-1, k-1) binom(nm + k, k)`.
pub fn diameter_face_count(n: i64, k: i64, m: i64) -> Rational {
    binomial(n - 1, k - 1) * binomial(n * m + k, k)
}

/// `f_k(A_n, 1)` by the associahedron formula.
pub fn kirkman_cayley(n: i64, k: i64) -> Rational {
    binomial(n, k) * binomial(n + k + 2, k) / int(k + 1)
}

/// `binom((n+1)(m+1), n) / (n+1)`.
pub fn fuss(n: i64, m: i64) -> Rational {
    binomial((n + 1) * (m + 1), n) / int(n + 1)
}

pub fn eval_all(ps: &[Poly], m: i64) -> Vec<Rational> {
    ps.iter().map(|p| p.eval(&int(m))).collect()
}

/// Check that `k` is a valid face index.
pub fn check_k(t: FiniteType, k: usize) -> Result<(), FormulaError> {
    if k > t.rank() {
        Err(FormulaError::KOutOfRange(k, t.rank()))
    } else {
        Ok(())
    }
}

/// Whether every polynomial in the list has constant term one.
pub fn constant_terms_one(ps: &[Poly]) -> bool {
    ps.iter().all(|p| p.coeff(0) == Rational::one())
}
