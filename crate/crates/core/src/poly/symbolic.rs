//! Symbolic symmetric functions in `x1, …, xn` for small `n`.

use num_traits::One;

use super::{Monomial, SparsePoly};
use crate::error::{domain, Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;

pub const MAX_SYMBOLIC_N: usize = 6;
pub const MAX_SYMBOLIC_K: u32 = 8;

/// `["x1", …, "xn"]`.
pub fn x_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn check_limits(n: usize, k: u32) -> Result<()> {
    if n == 0 {
        return domain("symbolic functions need n >= 1");
    }
    if n > MAX_SYMBOLIC_N || k > MAX_SYMBOLIC_K {
        return Err(Error::Resource(format!(
            "symbolic expansion limited to n <= {MAX_SYMBOLIC_N}, k <= {MAX_SYMBOLIC_K} (got n = {n}, k = {k})"
        )));
    }
    Ok(())
}

fn weak_compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        weak_compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Full expansion of `h_{n,k}`: every monomial of degree `k` with coefficient one.
pub fn symbolic_h(n: usize, k: u32) -> Result<SparsePoly> {
    check_limits(n, k)?;
    let mut exps = Vec::new();
    weak_compositions(k, n, &mut Vec::with_capacity(n), &mut exps);
    let vars = x_vars(n);
    Ok(SparsePoly {
        vars,
        terms: exps.into_iter().map(|e| (Monomial(e), Rational::one())).collect(),
    })
}

/// `p_{n,k} = Σ x_i^k`.
pub fn symbolic_power_sum(n: usize, k: u32) -> Result<SparsePoly> {
    check_limits(n, k)?;
    let vars = x_vars(n);
    let terms = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = k;
            (Monomial(e), Rational::one())
        })
        .collect();
    Ok(SparsePoly { vars, terms })
}

/// `h_{n,λ} = Π_j h_{n,λ_j}`.
pub fn symbolic_h_lambda(n: usize, lambda: &Partition) -> Result<SparsePoly> {
    let mut acc = SparsePoly::one().with_vars(&x_vars(n))?;
    for &part in lambda.parts() {
        acc = &acc * &symbolic_h(n, part)?;
    }
    Ok(acc)
}

/// Checks `∂h_{n,k}/∂x_i = Σ_{j=0}^{k-1} h_{n,j} x_i^{k-1-j}` by full expansion (`i` is 1-based).
pub fn verify_dh_identity(n: usize, k: u32, i: usize) -> Result<bool> {
    if i == 0 || i > n {
        return domain(format!("index i = {i} outside 1..={n}"));
    }
    if k == 0 {
        return domain("the derivative identity is stated for k >= 1");
    }
    let var = format!("x{i}");
    let lhs = symbolic_h(n, k)?.differentiate(&var)?;
    let xi = SparsePoly::var(&var);
    let mut rhs = SparsePoly::zero();
    for j in 0..k {
        rhs = &rhs + &(&symbolic_h(n, j)? * &xi.pow(k - 1 - j));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rational::binomial;
    use num_bigint::BigInt;

    #[test]
    fn examples() {
        assert_eq!(symbolic_h(2, 2).unwrap(), parse_poly("x1^2 + x1 x2 + x2^2").unwrap());
        assert_eq!(symbolic_h(3, 1).unwrap(), parse_poly("x1 + x2 + x3").unwrap());
        assert_eq!(symbolic_h(1, 5).unwrap(), parse_poly("x1^5").unwrap());
        assert_eq!(symbolic_h(3, 0).unwrap(), SparsePoly::one());
    }

    #[test]
    fn term_counts_are_binomial() {
        for n in 1..=MAX_SYMBOLIC_N {
            for k in 0..=MAX_SYMBOLIC_K {
                let c = symbolic_h(n, k).unwrap().num_terms();
                assert_eq!(BigInt::from(c), binomial((n as u64) + k as u64 - 1, k as u64));
            }
        }
    }

    #[test]
    fn limits_enforced() {
        assert!(matches!(symbolic_h(7, 2), Err(Error::Resource(_))));
        assert!(matches!(symbolic_h(2, 9), Err(Error::Resource(_))));
        assert!(symbolic_h(0, 2).is_err());
    }

    #[test]
    fn derivative_identity_examples() {
        for k in 1..=8 {
            assert!(verify_dh_identity(1, k, 1).unwrap());
        }
        assert!(verify_dh_identity(2, 2, 1).unwrap());
        assert!(verify_dh_identity(3, 3, 2).unwrap());
        assert!(verify_dh_identity(2, 2, 3).is_err());
    }
}
