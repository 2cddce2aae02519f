use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::poly::{parse_poly, RationalFunction};
use crate::rational::{binomial, format_rational, Rational};

/// `T(n) = C(n+2,3) n^5 / C(n+1,2)^4`, the ratio of the two normalization constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TRatio {
    pub n: u64,
    #[serde(with = "crate::rational::serde_rational")]
    pub value: Rational,
}

/// Computes `T(n)` from the binomial definition and from `(8/3)(n^3 + 2n^2)/(n+1)^3`;
/// the two must agree.
pub fn t_ratio(n: i64) -> Result<TRatio> {
    if n <= 0 {
        return domain(format!("T(n) is defined for n >= 1, got {n}"));
    }
    let nu = n as u64;
    let nb = BigInt::from(n);
    let by_binomials = Rational::new(
        binomial(nu + 2, 3) * num_traits::pow(nb.clone(), 5),
        num_traits::pow(binomial(nu + 1, 2), 4),
    );
    let closed = Rational::new(
        BigInt::from(8) * (num_traits::pow(nb.clone(), 3) + BigInt::from(2) * &nb * &nb),
        BigInt::from(3) * num_traits::pow(nb + 1, 3),
    );
    if by_binomials != closed {
        return Err(Error::Certificate {
            step: "boundary".into(),
            detail: format!(
                "closed forms of T({n}) disagree: {} vs {}",
                format_rational(&by_binomials),
                format_rational(&closed)
            ),
        });
    }
    Ok(TRatio { n: nu, value: closed })
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryRecord {
    pub t_values_checked: (u64, u64),
    pub closed_forms_agree: bool,
    pub monotone: bool,
    /// `T'(n) = (8/3) n (n+4) / (n+1)^4` as rational functions.
    pub derivative_matches: bool,
    #[serde(with = "crate::rational::serde_rational")]
    pub min_increment: Rational,
}

/// Checks `T(n) - T(n-1) > 0` exactly for every `n` in `lo..=hi` (`lo >= 2`).
pub fn check_t_monotone(lo: u64, hi: u64) -> Result<BoundaryRecord> {
    if lo < 2 || hi < lo {
        return domain(format!("monotonicity range must satisfy 2 <= lo <= hi, got {lo}..{hi}"));
    }
    let mut prev = t_ratio(lo as i64 - 1)?.value;
    let mut min_increment: Option<Rational> = None;
    for n in lo..=hi {
        let cur = t_ratio(n as i64)?.value;
        let inc = &cur - &prev;
        if !inc.is_positive() {
            return Err(Error::Certificate {
                step: "boundary".into(),
                detail: format!("T({n}) - T({}) = {} is not positive", n - 1, format_rational(&inc)),
            });
        }
        if min_increment.as_ref().is_none_or(|m| &inc < m) {
            min_increment = Some(inc);
        }
        prev = cur;
    }
    Ok(BoundaryRecord {
        t_values_checked: (lo, hi),
        closed_forms_agree: true,
        monotone: true,
        derivative_matches: t_derivative_matches()?,
        min_increment: min_increment.unwrap_or_else(Rational::zero),
    })
}

/// Differentiates `T` as a rational function of `n` and compares with `(8/3) n (n+4)/(n+1)^4`.
pub fn t_derivative_matches() -> Result<bool> {
    let t = RationalFunction::new(
        parse_poly("(n + 2) (n + 1) n / 6 * n^5")?,
        parse_poly("((n + 1) n / 2)^4")?,
    )?;
    let (f, g) = (t.numerator(), t.denominator());
    let derivative = RationalFunction::new(&(&f.differentiate("n")? * g) - &(f * &g.differentiate("n")?), g.pow(2))?;
    let expected = RationalFunction::new(parse_poly("8 n (n + 4)")?, parse_poly("3 (n + 1)^4")?)?;
    Ok(derivative == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn values() {
        assert_eq!(t_ratio(3).unwrap().value, ratio(15, 8));
        assert_eq!(t_ratio(1).unwrap().value, int(1));
        assert_eq!(t_ratio(2).unwrap().value, ratio(128, 81));
        assert!(t_ratio(0).is_err());
        assert!(t_ratio(-4).is_err());
    }

    #[test]
    fn monotone_range() {
        let r = check_t_monotone(3, 200).unwrap();
        assert!(r.monotone && r.closed_forms_agree && r.derivative_matches);
        assert!(r.min_increment.is_positive());
        assert!(check_t_monotone(1, 5).is_err());
    }
}
