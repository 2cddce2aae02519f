use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, SparsePoly};
use crate::error::{Error, Result};
use crate::rational::{rational_content, Rational};

/// A quotient of two polynomials, kept in a lightly reduced form: rational
/// content and common monomial factors are cancelled and the leading
/// denominator coefficient is positive. No polynomial gcd is taken; use
/// [`RationalFunction::to_polynomial`] when the quotient is known to be exact.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: SparsePoly,
    den: SparsePoly,
}

impl RationalFunction {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(RationalFunction { num, den }.reduced())
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RationalFunction {
            num: p,
            den: SparsePoly::one(),
        }
        .reduced()
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denominator(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduced(self) -> Self {
        let (num, den) = self.num.aligned(&self.den);
        if num.is_zero() {
            return RationalFunction {
                num,
                den: SparsePoly::one(),
            };
        }
        let cd = rational_content(den.coefficients());
        let mut sign = Rational::one();
        if den.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            sign = -sign;
        }
        let num = num.scale(&(sign.clone() / &cd));
        let den = den.scale(&(sign / &cd));
        // Cancel the common monomial factor.
        let nv = num.vars.len();
        let mut common: Vec<u32> = vec![u32::MAX; nv];
        for m in num.terms.keys().chain(den.terms.keys()) {
            for (c, e) in common.iter_mut().zip(&m.0) {
                *c = (*c).min(*e);
            }
        }
        if common.iter().any(|&e| e > 0) {
            let g = Monomial(common);
            let shift = |p: &SparsePoly| SparsePoly {
                vars: p.vars.clone(),
                terms: p.terms.iter().map(|(m, c)| (m.div(&g).unwrap(), c.clone())).collect(),
            };
            return RationalFunction {
                num: shift(&num),
                den: shift(&den),
            };
        }
        RationalFunction { num, den }
    }

    /// The polynomial quotient, or a divisibility error if the denominator does not divide.
    pub fn to_polynomial(&self) -> Result<SparsePoly> {
        self.num.exact_divide(&self.den)
    }

    pub fn substitute(&self, name: &str, value: &SparsePoly) -> Result<RationalFunction> {
        RationalFunction::new(self.num.substitute(name, value), self.den.substitute(name, value))
    }

    pub fn evaluate(&self, assignment: &[(&str, Rational)]) -> Result<Rational> {
        let d = self.den.evaluate(assignment)?;
        if d.is_zero() {
            return Err(Error::Domain("denominator vanishes at the evaluation point".into()));
        }
        Ok(self.num.evaluate(assignment)? / d)
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .reduced();
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let neg = RationalFunction {
            num: -&rhs.num,
            den: rhs.den.clone(),
        };
        self + &neg
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by the zero rational function".into()));
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}
