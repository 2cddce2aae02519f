//! Exact evaluation of monomial, power-sum and complete homogeneous symmetric
//! functions, and of their term-normalizations `F(x) = f(x) / f(1,…,1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::partition::Partition;
use crate::rational::{binomial, factorial, format_rational, parse_rational, pow, Rational};

/// A point `x` with exact rational coordinates, `n = coords.len() >= 1`.
///
/// Inequality verdicts only ever use nonnegative points (see
/// [`EvalPoint::nonnegative`]); plain [`EvalPoint::new`] admits arbitrary
/// signs and is meant for algebraic identity checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    coords: Vec<Rational>,
}

impl EvalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return domain("an evaluation point needs at least one coordinate");
        }
        Ok(EvalPoint { coords })
    }

    /// Like [`EvalPoint::new`] but rejects negative coordinates.
    pub fn nonnegative(coords: Vec<Rational>) -> Result<Self> {
        let p = EvalPoint::new(coords)?;
        p.require_nonnegative()?;
        Ok(p)
    }

    pub fn ones(n: usize) -> Self {
        EvalPoint {
            coords: vec![Rational::one(); n.max(1)],
        }
    }

    pub fn from_integers(xs: &[i64]) -> Result<Self> {
        EvalPoint::new(xs.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn require_nonnegative(&self) -> Result<()> {
        if self.is_nonnegative() {
            Ok(())
        } else {
            domain(format!("inequality checks need a nonnegative point, got {self}"))
        }
    }

    pub fn scaled(&self, c: &Rational) -> EvalPoint {
        EvalPoint {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Drops the last coordinate.
    pub fn truncated(&self) -> Result<EvalPoint> {
        EvalPoint::new(self.coords[..self.coords.len() - 1].to_vec())
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for EvalPoint {
    type Err = Error;

    /// Comma-separated rationals, optionally parenthesized: `1/2, 3, 0`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = body.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        EvalPoint::new(coords)
    }
}

impl Serialize for EvalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_rational::vec::serialize(&self.coords, s)
    }
}

impl<'de> Deserialize<'de> for EvalPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = crate::rational::serde_rational::vec::deserialize(d)?;
        EvalPoint::new(coords).map_err(serde::de::Error::custom)
    }
}

/// The symmetric-function families with a term-normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Monomial,
    PowerSum,
    CompleteH,
}

impl FamilyTag {
    pub fn short(self) -> &'static str {
        match self {
            FamilyTag::Monomial => "m",
            FamilyTag::PowerSum => "p",
            FamilyTag::CompleteH => "h",
        }
    }

    /// Capital letter of the normalized family (`M`, `P`, `H`).
    pub fn normalized_symbol(self) -> &'static str {
        match self {
            FamilyTag::Monomial => "M",
            FamilyTag::PowerSum => "P",
            FamilyTag::CompleteH => "H",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::Monomial => "monomial",
            FamilyTag::PowerSum => "power_sum",
            FamilyTag::CompleteH => "complete_h",
        })
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" | "monomial" => Ok(FamilyTag::Monomial),
            "p" | "power_sum" | "power-sum" => Ok(FamilyTag::PowerSum),
            "h" | "complete_h" | "complete-h" => Ok(FamilyTag::CompleteH),
            other => Err(Error::Parse(format!("unknown family `{other}` (expected h, m or p)"))),
        }
    }
}

/// `p_k(x) = Σ x_i^k` for `k >= 1`.
pub fn power_sum(x: &EvalPoint, k: u32) -> Result<Rational> {
    if k == 0 {
        return domain("power sums are defined here for k >= 1");
    }
    Ok(x.coords.iter().map(|c| pow(c, k)).sum())
}

/// Complete homogeneous values `[h_0, h_1, …, h_kmax]` from power sums
/// `[p_1, …, p_kmax]` via `k h_k = Σ_{i=1..k} h_{k-i} p_i`.
pub fn complete_h_from_power_sums(power_sums: &[Rational], kmax: usize) -> Vec<Rational> {
    assert!(power_sums.len() >= kmax, "need p_1..p_kmax");
    let mut h = Vec::with_capacity(kmax + 1);
    h.push(Rational::one());
    for k in 1..=kmax {
        let s: Rational = (1..=k).map(|i| &h[k - i] * &power_sums[i - 1]).sum();
        h.push(s / Rational::from_integer(BigInt::from(k)));
    }
    h
}

/// `[h_{n,0}(x), …, h_{n,kmax}(x)]`.
pub fn complete_h_table(x: &EvalPoint, kmax: u32) -> Vec<Rational> {
    let mut ps = Vec::with_capacity(kmax as usize);
    let mut powers: Vec<Rational> = x.coords.clone();
    for k in 1..=kmax {
        if k > 1 {
            for (p, c) in powers.iter_mut().zip(&x.coords) {
                *p *= c;
            }
        }
        ps.push(powers.iter().sum());
    }
    complete_h_from_power_sums(&ps, kmax as usize)
}

/// `h_{n,k}(x)` by the power-sum recurrence.
pub fn complete_h(x: &EvalPoint, k: u32) -> Rational {
    complete_h_table(x, k).pop().expect("table has k+1 entries")
}

/// `h_{n,λ}(x) = Π_j h_{n,λ_j}(x)`.
pub fn h_lambda(x: &EvalPoint, lambda: &Partition) -> Rational {
    let table = complete_h_table(x, lambda.largest_part());
    product_over_parts(&table, lambda)
}

pub(crate) fn product_over_parts(table: &[Rational], lambda: &Partition) -> Rational {
    lambda
        .parts()
        .iter()
        .fold(Rational::one(), |acc, &p| acc * &table[p as usize])
}

/// `m_{n,λ}(x)`: sum over the distinct rearrangements of the exponent vector.
pub fn monomial_m(x: &EvalPoint, lambda: &Partition) -> Result<Rational> {
    let n = x.n();
    if lambda.len() > n {
        return domain(format!(
            "m_{{n,λ}} needs at most n = {n} nonzero parts, λ = {lambda} has {}",
            lambda.len()
        ));
    }
    let mut exps = lambda.padded(n);
    exps.sort_unstable();
    let mut total = Rational::zero();
    loop {
        let term = exps.iter().zip(&x.coords).fold(
            Rational::one(),
            |acc, (&e, c)| if e == 0 { acc } else { acc * pow(c, e) },
        );
        total += term;
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(total)
}

/// Lexicographic successor of a multiset arrangement; false when wrapped around.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `f_{n,λ}(1,…,1)` for the given family.
pub fn normalization_constant(family: FamilyTag, n: usize, lambda: &Partition) -> Result<Rational> {
    if n == 0 {
        return domain("n must be positive");
    }
    let value = match family {
        FamilyTag::CompleteH => lambda
            .parts()
            .iter()
            .map(|&p| binomial(n as u64 + p as u64 - 1, p as u64))
            .product::<BigInt>(),
        FamilyTag::PowerSum => num_traits::pow(BigInt::from(n), lambda.len()),
        FamilyTag::Monomial => {
            if lambda.len() > n {
                return domain(format!("monomial family: λ = {lambda} is longer than n = {n}"));
            }
            let mults: BigInt = lambda.blocks().iter().map(|&(_, m)| factorial(m as u64)).product();
            factorial(n as u64) / (factorial((n - lambda.len()) as u64) * mults)
        }
    };
    Ok(Rational::from_integer(value))
}

/// Unnormalized `f_{n,λ}(x)`.
pub fn eval_raw(family: FamilyTag, lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    match family {
        FamilyTag::CompleteH => Ok(h_lambda(x, lambda)),
        FamilyTag::Monomial => monomial_m(x, lambda),
        FamilyTag::PowerSum => lambda
            .parts()
            .iter()
            .map(|&k| power_sum(x, k))
            .product::<Result<Rational>>(),
    }
}

/// Term-normalized `F_{n,λ}(x)`.
pub fn eval_normalized(family: FamilyTag, n: usize, lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    if x.n() != n {
        return domain(format!("point has {} coordinates, expected n = {n}", x.n()));
    }
    let c = normalization_constant(family, n, lambda)?;
    Ok(eval_raw(family, lambda, x)? / c)
}

/// Evaluates `F_{n,μ}(x)` and `F_{n,λ}(x)` together, sharing the
/// power-sum/complete-h tables for the complete-h family.
pub fn eval_normalized_pair(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    x: &EvalPoint,
) -> Result<(Rational, Rational)> {
    let n = x.n();
    match family {
        FamilyTag::CompleteH => {
            let kmax = mu.largest_part().max(lambda.largest_part());
            let table = complete_h_table(x, kmax);
            let a = product_over_parts(&table, mu) / normalization_constant(family, n, mu)?;
            let b = product_over_parts(&table, lambda) / normalization_constant(family, n, lambda)?;
            Ok((a, b))
        }
        _ => Ok((
            eval_normalized(family, n, mu, x)?,
            eval_normalized(family, n, lambda, x)?,
        )),
    }
}
