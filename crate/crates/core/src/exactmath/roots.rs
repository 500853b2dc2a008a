//! Real root extraction for polynomials over Q.
//!
//! The input is split into square-free parts (Yun), real roots of each
//! part are isolated with a Sturm sequence and narrowed by exact bisection.
//! Once an isolating interval is shorter than `1/L^2` (`L` the leading
//! coefficient of the primitive part) it holds at most one rational with
//! denominator dividing `L`, and the simplest rational in the interval is
//! that candidate if any rational root is there at all. One exact
//! evaluation then decides rationality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{int, rational_to_f64, Rational};
use super::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    /// Rational roots with multiplicity, ascending.
    pub rational_roots: Vec<Rational>,
    /// Primitive integer polynomial with no rational roots; `1` if none left.
    pub residual_factor: Poly,
    /// Real roots of the residual factor with multiplicity, ascending.
    pub numeric_residual_roots: Vec<f64>,
    /// Number of non-real roots of the residual factor, with multiplicity.
    pub nonreal_count: usize,
}

/// Simplest rational (least denominator, then least absolute numerator)
/// in the open interval `(a, b)`.
pub fn simplest_rational_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a < b, "empty interval");
    if a.is_negative() && b.is_positive() {
        return Rational::zero();
    }
    if !b.is_positive() {
        return -simplest_open(&-b, Some(&-a));
    }
    simplest_open(a, Some(b))
}

/// `0 <= lo < hi`, `hi = None` for infinity.
fn simplest_open(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let n = lo.floor();
    let next = &n + Rational::one();
    if hi.is_none_or(|h| &next < h) {
        return next;
    }
    let hi = hi.unwrap();
    // (lo, hi) lies inside [n, n + 1]
    let frac_lo = lo - &n;
    let inv_hi = Rational::one() / (hi - &n);
    let inv_lo = if frac_lo.is_zero() {
        None
    } else {
        Some(Rational::one() / frac_lo)
    };
    n + Rational::one() / simplest_open(&inv_hi, inv_lo.as_ref())
}

/// Yun's square-free decomposition: `p = c * prod_i parts[i]^(i+1)`.
fn square_free_parts(p: &Poly) -> Vec<Poly> {
    let mut parts = Vec::new();
    let dp = p.derivative();
    let a0 = Poly::gcd(p, &dp);
    let mut b = p.divide_exact(&a0).expect("gcd divides");
    let mut c = dp.divide_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    while b.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&b, &d);
        parts.push(a.primitive());
        b = b.divide_exact(&a).expect("gcd divides");
        c = d.divide_exact(&a).expect("gcd divides");
        d = &c - &b.derivative();
    }
    parts
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero").1;
        if r.is_zero() {
            break;
        }
        // only signs matter, so rescale by a positive factor
        let flip = r.leading().is_negative();
        let r = r.primitive();
        chain.push(if flip { r } else { -r });
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for q in chain {
        let v = q.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Roots in `(a, b]`, valid when neither endpoint is a root.
fn count_roots(chain: &[Poly], a: &Rational, b: &Rational) -> usize {
    sign_changes(chain, a) - sign_changes(chain, b)
}

fn cauchy_bound(p: &Poly) -> Rational {
    let lead = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max / lead + Rational::one()
}

enum Isolated {
    Exact(Rational),
    Interval(Rational, Rational),
}

/// Isolating intervals (open, endpoints non-roots) or exact hits, ascending.
fn isolate(p: &Poly, chain: &[Poly]) -> Vec<Isolated> {
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(Isolated::Interval(lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / int(2);
        if p.eval(&mid).is_zero() {
            out.push(Isolated::Exact(mid.clone()));
            // nudge so both halves have non-root endpoints
            let eps = (&hi - &lo) / int(1 << 20);
            let mut left = &mid - &eps;
            let mut right = &mid + &eps;
            while p.eval(&left).is_zero()
                || p.eval(&right).is_zero()
                || count_roots(chain, &left, &right) != 1
            {
                left = (&left + &mid) / int(2);
                right = (&right + &mid) / int(2);
            }
            stack.push((right, hi));
            stack.push((lo, left));
        } else {
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
    }
    out.sort_by(|x, y| key(x).cmp(key(y)));
    out
}

fn key(i: &Isolated) -> &Rational {
    match i {
        Isolated::Exact(r) => r,
        Isolated::Interval(lo, _) => lo,
    }
}

enum RealRoot {
    Rational(Rational),
    Irrational(f64),
}

fn refine(p: &Poly, lo: Rational, hi: Rational) -> RealRoot {
    let lead: BigInt = p.leading().abs().to_integer();
    let target = Rational::new(BigInt::one(), &lead * &lead * BigInt::from(2));
    let (mut lo, mut hi) = (lo, hi);
    let sign_lo = p.eval(&lo).is_positive();
    loop {
        let mid = (&lo + &hi) / int(2);
        let v = p.eval(&mid);
        if v.is_zero() {
            return RealRoot::Rational(mid);
        }
        if v.is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        if &hi - &lo < target {
            break;
        }
    }
    let s = simplest_rational_between(&lo, &hi);
    if p.eval(&s).is_zero() {
        return RealRoot::Rational(s);
    }
    // irrational: keep bisecting in floating point sized steps
    for _ in 0..200 {
        let width = rational_to_f64(&(&hi - &lo));
        let scale = rational_to_f64(&lo).abs().max(1.0);
        if width <= 1e-15 * scale {
            break;
        }
        let mid = (&lo + &hi) / int(2);
        if p.eval(&mid).is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealRoot::Irrational(rational_to_f64(&((&lo + &hi) / int(2))))
}

fn real_roots_square_free(p: &Poly) -> Vec<RealRoot> {
    let chain = sturm_chain(p);
    isolate(p, &chain)
        .into_iter()
        .map(|iso| match iso {
            Isolated::Exact(r) => RealRoot::Rational(r),
            Isolated::Interval(lo, hi) => refine(p, lo, hi),
        })
        .collect()
}

/// Rational roots exactly, everything else numerically.
pub fn rational_roots(p: &Poly) -> RootSet {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let prim = p.primitive();
    let mut rational = Vec::new();
    let mut numeric = Vec::new();
    for (i, part) in square_free_parts(&prim).iter().enumerate() {
        let mult = i + 1;
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        for r in real_roots_square_free(part) {
            match r {
                RealRoot::Rational(q) => rational.extend(std::iter::repeat_n(q, mult)),
                RealRoot::Irrational(x) => numeric.extend(std::iter::repeat_n(x, mult)),
            }
        }
    }
    rational.sort();
    numeric.sort_by(f64::total_cmp);
    let linear: Poly = rational
        .iter()
        .map(|r| Poly::linear(Rational::one(), -r))
        .product();
    let residual = prim
        .divide_exact(&linear)
        .expect("rational roots divide")
        .primitive();
    let deg = residual.degree().unwrap_or(0);
    RootSet {
        rational_roots: rational,
        nonreal_count: deg - numeric.len(),
        numeric_residual_roots: numeric,
        residual_factor: residual,
    }
}

/// Exact reassembly check used by tests: `prod (x - r) * residual` is a
/// scalar multiple of `p`.
#[cfg(test)]
pub(crate) fn reassembles(p: &Poly, rs: &RootSet) -> bool {
    let linear: Poly = rs
        .rational_roots
        .iter()
        .map(|r| Poly::linear(Rational::one(), -r))
        .product();
    (&linear * &rs.residual_factor).primitive() == p.primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn a2_facet_polynomial() {
        // (3m+2)(m+1)/2
        let n = (&p(&[2, 3]) * &p(&[1, 1])).scale(&rat(1, 2));
        let rs = rational_roots(&n);
        assert_eq!(rs.rational_roots, vec![int(-1), rat(-2, 3)]);
        assert_eq!(rs.residual_factor, Poly::one());
        assert!(rs.numeric_residual_roots.is_empty());
    }

    #[test]
    fn double_zero_root() {
        let rs = rational_roots(&p(&[0, 0, 1]));
        assert_eq!(rs.rational_roots, vec![int(0), int(0)]);
    }

    #[test]
    fn irrational_pair_survives_as_residual() {
        // (m+1)(e^2 - 13e + 38) shape: roots (13 +- sqrt 17)/2
        let q = &p(&[1, 1]) * &p(&[38, -13, 1]);
        let rs = rational_roots(&q);
        assert_eq!(rs.rational_roots, vec![int(-1)]);
        assert_eq!(rs.residual_factor, p(&[38, -13, 1]));
        let s17 = 17f64.sqrt();
        let want = [(13.0 - s17) / 2.0, (13.0 + s17) / 2.0];
        for (got, w) in rs.numeric_residual_roots.iter().zip(want) {
            assert!((got - w).abs() < 1e-9);
        }
        assert!(reassembles(&q, &rs));
    }

    #[test]
    fn complex_roots_counted() {
        let rs = rational_roots(&p(&[1, 0, 1]));
        assert!(rs.rational_roots.is_empty());
        assert_eq!(rs.nonreal_count, 2);
    }

    #[test]
    fn repeated_rational_roots() {
        // (2m+1)^2 (m-3)
        let q = &p(&[1, 2]).pow(2) * &p(&[-3, 1]);
        let rs = rational_roots(&q);
        assert_eq!(rs.rational_roots, vec![rat(-1, 2), rat(-1, 2), int(3)]);
    }

    #[test]
    fn e8_facet_polynomial() {
        let exps = [1, 7, 11, 13, 17, 19, 23, 29];
        let n: Poly = exps.iter().map(|&e| p(&[e + 1, 30])).product();
        let rs = rational_roots(&n);
        let mut want: Vec<_> = exps.iter().map(|&e| rat(-(e + 1), 30)).collect();
        want.sort();
        assert_eq!(rs.rational_roots, want);
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_rational_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_rational_between(&rat(-1, 2), &rat(3, 1)), int(0));
        assert_eq!(simplest_rational_between(&rat(-7, 2), &rat(-3, 1)), rat(-10, 3));
        assert_eq!(simplest_rational_between(&int(2), &rat(5, 2)), rat(7, 3));
    }

    proptest! {
        #[test]
        fn planted_roots_are_found(
            roots in prop::collection::vec((-12i64..12, 1i64..9), 0..5),
            extra in prop::collection::vec(-5i64..5, 0..3),
        ) {
            let mut q: Poly = roots.iter().map(|&(n, d)| p(&[-n, d])).product();
            if !extra.is_empty() {
                let mut e = extra.clone();
                e.push(1);
                q = &q * &p(&e);
            }
            let rs = rational_roots(&q);
            prop_assert!(reassembles(&q, &rs));
            for &(n, d) in &roots {
                prop_assert!(rs.rational_roots.contains(&rat(n, d)));
            }
            for x in &rs.numeric_residual_roots {
                let v = rs.residual_factor.eval_f64(*x);
                let scale: f64 = rs.residual_factor.coeffs().iter()
                    .enumerate()
                    .map(|(i, c)| rational_to_f64(c).abs() * x.abs().powi(i as i32))
                    .sum();
                prop_assert!(v.abs() <= 1e-9 * scale.max(1.0));
            }
        }

        #[test]
        fn simplest_lies_inside(a in -50i64..50, b in 1i64..20, c in 1i64..50, d in 1i64..20) {
            let lo = rat(a, b);
            let hi = &lo + rat(c, d);
            let s = simplest_rational_between(&lo, &hi);
            prop_assert!(lo < s && s < hi);
        }
    }
}
