use num_bigint::BigInt;

use super::j_poly;
use crate::error::{domain, Result};
use crate::rational::{binomial, pow, Rational};
use crate::symmetric::{complete_h_table, EvalPoint};

/// `(a, b, c)` such that `∂J_n/∂x_i (x) = a x_i^2 + b x_i + c` for every `i`, computed from
/// `h_{n,1..3}(x)` alone (the multiplier term of the stationarity condition is left out).
pub fn lagrange_quadratic_coeffs(x: &EvalPoint) -> (Rational, Rational, Rational) {
    let n = x.n() as u64;
    let h = complete_h_table(x, 3);
    let (h1, h2, h3) = (&h[1], &h[2], &h[3]);
    let k1 = Rational::from_integer(num_traits::pow(binomial(n + 1, 2), 4));
    let k2 = Rational::from_integer(binomial(n + 2, 3) * num_traits::pow(BigInt::from(n), 5));
    let four = Rational::from_integer(4.into());
    let five = Rational::from_integer(5.into());
    let h2_cubed = pow(h2, 3);
    let a = -pow(h1, 5) / &k2;
    let b = &four * &h2_cubed / &k1 - pow(h1, 6) / &k2;
    let c = &four * &h2_cubed * h1 / &k1 - (h2 * pow(h1, 5) + five * h3 * pow(h1, 4)) / &k2;
    (a, b, c)
}

/// Compares the symbolic gradient of `J_n` at `x` with the quadratic `a x_i^2 + b x_i + c`.
/// Arbitrary-sign points are allowed: this is an algebraic identity.
pub fn lagrange_consistency(x: &EvalPoint) -> Result<bool> {
    let n = x.n();
    if n > 4 {
        return domain(format!(
            "gradient consistency is expanded symbolically for n <= 4, got {n}"
        ));
    }
    let j = j_poly(n)?;
    let values: Vec<Rational> = x.coords().to_vec();
    let (a, b, c) = lagrange_quadratic_coeffs(x);
    for (i, xi) in values.iter().enumerate() {
        let grad = j.differentiate(&format!("x{}", i + 1))?.evaluate_at(&values)?;
        if grad != &a * xi * xi + &b * xi + &c {
            return Ok(false);
        }
    }
    Ok(true)
}
