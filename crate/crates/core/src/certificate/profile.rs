use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{parse_poly, RationalFunction, SparsePoly};
use crate::rational::{factorial, Rational};

/// `h_k` written in the power sums `p1, …, pk` through `j h_j = Σ_{i=1}^{j} h_{j-i} p_i`.
pub fn h_in_power_sums(k: u32) -> SparsePoly {
    let mut h = vec![SparsePoly::one()];
    for j in 1..=k as usize {
        let mut acc = SparsePoly::zero();
        for i in 1..=j {
            acc = &acc + &(&h[j - i] * &SparsePoly::var(&format!("p{i}")));
        }
        h.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(j))));
    }
    h.pop().unwrap()
}

/// `C(top, k)` as a polynomial in whatever variables `top` uses.
fn binomial_poly(top: &SparsePoly, k: u32) -> SparsePoly {
    let mut acc = SparsePoly::one();
    for i in 0..k {
        acc = &acc * &(top - &SparsePoly::constant(Rational::from_integer(i.into())));
    }
    acc.scale(&(Rational::one() / Rational::from_integer(factorial(k as u64))))
}

/// `J_n` as a rational function of the abstract variables `p1, p2, p3, n`:
/// `h_2^4 / C(n+1,2)^4 - h_3 h_1^5 / (C(n+2,3) n^5)` with `h_k` in power sums.
pub fn jn_in_power_sums() -> RationalFunction {
    let n = SparsePoly::var("n");
    let one = SparsePoly::one();
    let h1 = h_in_power_sums(1);
    let h2 = h_in_power_sums(2);
    let h3 = h_in_power_sums(3);
    let first = RationalFunction::new(h2.pow(4), binomial_poly(&(&n + &one), 2).pow(4)).expect("nonzero denominator");
    let second = RationalFunction::new(&h3 * &h1.pow(5), &binomial_poly(&(&n + &(&one + &one)), 3) * &n.pow(5))
        .expect("nonzero denominator");
    &first - &second
}

/// `J_n(t^u, 1^v)` as a rational function of `t, u, v`, using `p_i = u t^i + v`, `n = u + v`.
pub fn profile_j() -> Result<RationalFunction> {
    let mut j = jn_in_power_sums();
    for i in 1..=3 {
        j = j.substitute(&format!("p{i}"), &parse_poly(&format!("u t^{i} + v"))?)?;
    }
    j.substitute("n", &parse_poly("u + v")?)
}

/// `u v (t-1)^2 / ((u+v+2) (u+v+1)^4 (u+v)^6)`, nonnegative for `t, u, v >= 0`.
pub fn j_hat() -> RationalFunction {
    RationalFunction::new(
        parse_poly("u v (t - 1)^2").unwrap(),
        parse_poly("(u + v + 2) (u + v + 1)^4 (u + v)^6").unwrap(),
    )
    .unwrap()
}

#[derive(Debug, Clone)]
pub struct BreveSplit {
    /// `J_n(t^u, 1^v)` in `t, u, v`.
    pub profile: RationalFunction,
    /// The explicit nonnegative factor.
    pub hat: RationalFunction,
    /// The residual polynomial in `t, u, v`.
    pub breve_uv: SparsePoly,
    /// The residual after `u = k + 1`, `v = l + 1`, in `t, k, l`.
    pub breve: SparsePoly,
}

/// Splits `J_n(t^u, 1^v) = Ĵ · J̆` with exact division, then shifts to `k, l >= 0`.
pub fn breve_j() -> Result<BreveSplit> {
    let profile = profile_j()?;
    let hat = j_hat();
    let quotient = (&profile / &hat)?;
    let breve_uv = quotient.to_polynomial().map_err(|e| Error::Certificate {
        step: "interior".into(),
        detail: format!("the nonnegative factor does not divide the profile difference: {e}"),
    })?;
    let breve = breve_uv
        .substitute("u", &parse_poly("k + 1")?)
        .substitute("v", &parse_poly("l + 1")?);
    let breve = breve.with_vars(&["t".into(), "k".into(), "l".into()])?;
    Ok(BreveSplit {
        profile,
        hat,
        breve_uv,
        breve,
    })
}
