use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::MathError;

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Always `p/q`, with `q > 0` and the fraction reduced.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, MathError> {
    let bad = || MathError::BadRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Very large numerators/denominators: scale down by bit length first.
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
    n / d
}

/// `binom(n, k)` for integers, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * int(n - j) / int(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_is_canonical() {
        assert_eq!(fmt_rational(&rat(6, -4)), "-3/2");
        assert_eq!(fmt_rational(&int(0)), "0/1");
        assert_eq!(fmt_rational(&int(7)), "7/1");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 12 ").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399));
        assert!((rational_to_f64(&big) - 10.0).abs() < 1e-9);
    }
}
