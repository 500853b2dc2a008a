use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, int, Integer, Rational};
use super::MathError;

/// Univariate polynomial with exact rational coefficients, ascending degree.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list and structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational_to_f64(c))
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `p(a*x + b)`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Poly {
        let lin = Poly::linear(a.clone(), b.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &lin) + &Poly::constant(c.clone()))
    }

    /// `p(x - 1)`.
    pub fn shift_down(&self) -> Poly {
        self.compose_linear(&Rational::one(), &-Rational::one())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), MathError> {
        let dd = divisor.degree().ok_or(MathError::DivisionByZero)?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// `self / divisor` when the division is exact.
    pub fn divide_exact(&self, divisor: &Poly) -> Result<Poly, MathError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(MathError::NonZeroRemainder)
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic gcd by Euclid's algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            // keep sizes in check
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den = Integer::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = Integer::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        Poly::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        )
    }

    /// Coefficients as `"p/q"` strings, ascending degree.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly, MathError> {
        items
            .iter()
            .map(|s| super::parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if a.is_one() && i > 0 {
                out.push_str(&mono);
            } else if i == 0 {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("m"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("m"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}
