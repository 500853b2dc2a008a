use std::fmt;

use num_traits::{One, Zero};

use super::{MathError, Poly, Rational};

/// Quotient of two polynomials, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let num = num.divide_exact(&g)?;
        let den = den.divide_exact(&g)?;
        let s = Rational::one() / den.leading();
        Ok(RationalFunction {
            num: num.scale(&s),
            den: den.scale(&s),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value of a constant rational function.
    pub fn constant_value(&self) -> Result<Rational, MathError> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Ok(n / d),
            _ => Err(MathError::NotConstant),
        }
    }

    /// `None` when `x` is a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::new(num, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        let num = &(&self.num * &o.den) - &(&o.num * &self.den);
        Self::new(num, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn div(&self, o: &Self) -> Result<Self, MathError> {
        if o.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RationalFunction {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        RationalFunction::add(&self, &o)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn constant_after_reduction() {
        let r = RationalFunction::new(p(&[4, 2]), p(&[2, 1])).unwrap();
        assert_eq!(r.constant_value().unwrap(), int(2));
    }

    #[test]
    fn non_constant() {
        let r = RationalFunction::new(p(&[1, 0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(r.constant_value(), Err(MathError::NotConstant));
    }

    #[test]
    fn denominator_is_monic_and_reduced() {
        let r = RationalFunction::new(p(&[3, 6]), p(&[-3, 0, 12])).unwrap();
        // 3(1+2m) / (3(2m-1)(2m+1)) = 1/(2(m - 1/2)) = (1/2) / (m - 1/2)
        assert_eq!(r.denominator(), &Poly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(r.numerator(), &Poly::constant(rat(1, 2)));
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap();
        let b = RationalFunction::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(a.add(&b).constant_value().unwrap(), int(1));
        let q = a.div(&b).unwrap();
        assert_eq!(q.eval(&int(2)).unwrap(), rat(1, 2));
        assert!(a.div(&RationalFunction::zero()).is_err());
        assert!(RationalFunction::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn rank3_linear_solution_is_constant() {
        // h * (12 - a) m = 2a m  for a = 9  -> h = 6
        let a = 9;
        let lhs = RationalFunction::from_poly(p(&[0, 2 * a]));
        let rhs = RationalFunction::from_poly(p(&[0, 12 - a]));
        assert_eq!(lhs.div(&rhs).unwrap().constant_value().unwrap(), int(6));
    }
}
