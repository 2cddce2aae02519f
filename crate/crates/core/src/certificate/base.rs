use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::j_poly;
use crate::error::{Error, Result};
use crate::poly::parse_poly;
use crate::poly::SparsePoly;
use crate::rational::Rational;

/// Integer coefficients of `10368 · P` on `x1^6, x1^5 x2, …, x2^6`.
pub const J2_QUOTIENT_COEFFS: [i64; 7] = [47, 120, 177, 176, 177, 120, 47];
pub const J2_QUOTIENT_SCALE: i64 = 10368;

#[derive(Debug, Clone)]
pub struct J2Factorization {
    /// `J_2` expanded in `x1, x2`.
    pub j2: SparsePoly,
    /// `P = J_2 / (x1 - x2)^2`.
    pub quotient: SparsePoly,
    /// Least common denominator of the coefficients of `P`.
    pub scale: BigInt,
    /// Coefficients of `scale · P` on `x1^(6-j) x2^j`, `j = 0..=6`.
    pub quotient_coeffs: Vec<BigInt>,
}

impl J2Factorization {
    pub fn is_palindromic(&self) -> bool {
        self.quotient_coeffs.iter().eq(self.quotient_coeffs.iter().rev())
    }
}

/// Expands `J_2`, divides out `(x1 - x2)^2` and checks the scaled quotient.
pub fn expand_j2() -> Result<J2Factorization> {
    let j2 = j_poly(2)?;
    let square = parse_poly("(x1 - x2)^2")?;
    let quotient = j2.exact_divide(&square)?;
    let scale = quotient.coefficients().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = quotient.scale(&Rational::from_integer(scale.clone()));
    let quotient_coeffs: Vec<BigInt> = (0..=6u32)
        .map(|j| scaled.coefficient(&[("x1", 6 - j), ("x2", j)]).to_integer())
        .collect();
    let expected: Vec<BigInt> = J2_QUOTIENT_COEFFS.iter().map(|&c| BigInt::from(c)).collect();
    if scale != BigInt::from(J2_QUOTIENT_SCALE) || quotient_coeffs != expected {
        return Err(Error::Certificate {
            step: "base_case".into(),
            detail: format!(
                "scaled quotient is {scale} * P with coefficients {quotient_coeffs:?}, expected {J2_QUOTIENT_SCALE} and {J2_QUOTIENT_COEFFS:?}"
            ),
        });
    }
    Ok(J2Factorization {
        j2,
        quotient,
        scale,
        quotient_coeffs,
    })
}

/// `J_1 = x^8 - x^8 = 0`.
pub fn j1_vanishes() -> Result<bool> {
    Ok(j_poly(1)?.is_zero())
}
