//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are identified by name. Binary operations align their operands
//! on the union of both variable lists, so polynomials in `(t, k, l)` and in
//! `(x1, …, xn)` can be mixed freely.

mod parse;
mod ratfun;
mod symbolic;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::rational::{format_rational, Rational};

pub use parse::parse_poly;
pub use ratfun::RationalFunction;
pub use symbolic::{
    symbolic_h, symbolic_h_lambda, symbolic_power_sum, verify_dh_identity, x_vars, MAX_SYMBOLIC_K, MAX_SYMBOLIC_N,
};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = SparsePoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(0), c);
        }
        p
    }

    pub fn one() -> Self {
        SparsePoly::constant(Rational::one())
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        SparsePoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds from `(exponents, coefficient)` pairs over `vars`; zero coefficients are dropped
    /// and repeated exponent vectors are summed.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = SparsePoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            if e.len() != vars.len() {
                return domain(format!("exponent vector {e:?} does not match {} variables", vars.len()));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Rational> {
        self.terms.values()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs; absent variables
    /// have exponent zero.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for &(name, exp) in monomial {
            match self.var_index(name) {
                Some(i) => e[i] = exp,
                None if exp == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Re-expresses over `vars`, which must contain every variable that occurs.
    pub fn with_vars(&self, vars: &[String]) -> Result<SparsePoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.terms.keys().all(|m| m.0[i] == 0) => map.push(None),
                None => return domain(format!("variable `{v}` missing from target list")),
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (i, &exp) in m.0.iter().enumerate() {
                    if let Some(j) = map[i] {
                        e[j] = exp;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(SparsePoly {
            vars: vars.to_vec(),
            terms,
        })
    }

    /// Removes variables that do not occur in any term.
    pub fn trimmed(&self) -> SparsePoly {
        let used: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect();
        self.with_vars(&used).expect("only unused variables dropped")
    }

    fn union_vars(&self, other: &SparsePoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &SparsePoly) -> (SparsePoly, SparsePoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (
            self.with_vars(&vars).expect("union contains all variables"),
            other.with_vars(&vars).expect("union contains all variables"),
        )
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> SparsePoly {
        let mut result = SparsePoly::one().with_vars(&self.vars).unwrap();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents are a domain error.
    pub fn pow_i(&self, exp: i64) -> Result<SparsePoly> {
        if exp < 0 {
            return domain(format!("negative polynomial exponent {exp}"));
        }
        let exp = u32::try_from(exp).map_err(|_| Error::Resource(format!("exponent {exp}")))?;
        Ok(self.pow(exp))
    }

    /// Partial derivative with respect to `name`.
    pub fn differentiate(&self, name: &str) -> Result<SparsePoly> {
        let Some(i) = self.var_index(name) else {
            return domain(format!("unknown variable `{name}`"));
        };
        let mut out = SparsePoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// `[g_0, …, g_deg]` with `self = Σ g_j · name^j`; each `g_j` is free of `name`.
    pub fn collect_coefficients(&self, name: &str) -> Vec<SparsePoly> {
        let Some(i) = self.var_index(name) else {
            return vec![self.clone()];
        };
        let rest: Vec<String> = self.vars.iter().filter(|v| *v != name).cloned().collect();
        let deg = self.degree_in(name) as usize;
        let mut out: Vec<SparsePoly> = (0..=deg)
            .map(|_| SparsePoly {
                vars: rest.clone(),
                terms: BTreeMap::new(),
            })
            .collect();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let j = e.remove(i) as usize;
            out[j].add_term(Monomial(e), c.clone());
        }
        out
    }

    /// `Σ coeffs[j] · name^j`.
    pub fn from_coefficients(coeffs: &[SparsePoly], name: &str) -> SparsePoly {
        let x = SparsePoly::var(name);
        let mut acc = SparsePoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }

    /// Replaces `name` by `value` and expands.
    pub fn substitute(&self, name: &str, value: &SparsePoly) -> SparsePoly {
        if self.var_index(name).is_none() {
            return self.clone();
        }
        let coeffs = self.collect_coefficients(name);
        let mut acc = SparsePoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn substitute_value(&self, name: &str, value: &Rational) -> SparsePoly {
        self.substitute(name, &SparsePoly::constant(value.clone()))
    }

    /// Full evaluation; every occurring variable must be assigned.
    pub fn evaluate(&self, assignment: &[(&str, Rational)]) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match assignment.iter().find(|(name, _)| name == v) {
                Some((_, r)) => values.push(Some(r)),
                None if self.terms.keys().all(|m| m.0[i] == 0) => values.push(None),
                None => return domain(format!("no value given for variable `{v}`")),
            }
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (e, v) in m.0.iter().zip(&values) {
                if *e > 0 {
                    term *= crate::rational::pow(v.unwrap(), *e);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates with variable `vars()[i]` bound to `values[i]`.
    pub fn evaluate_at(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.vars.len() {
            return domain(format!("expected {} values, got {}", self.vars.len(), values.len()));
        }
        let assignment: Vec<(&str, Rational)> = self
            .vars
            .iter()
            .map(String::as_str)
            .zip(values.iter().cloned())
            .collect();
        self.evaluate(&assignment)
    }

    /// Renames variables; `pairs` are applied simultaneously, so swaps are allowed.
    pub fn rename(&self, pairs: &[(&str, &str)]) -> Result<SparsePoly> {
        let vars: Vec<String> = self
            .vars
            .iter()
            .map(|v| match pairs.iter().find(|(from, _)| from == v) {
                Some((_, to)) => to.to_string(),
                None => v.clone(),
            })
            .collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return domain(format!("renaming produces duplicate variable `{v}`"));
            }
        }
        Ok(SparsePoly {
            vars,
            terms: self.terms.clone(),
        })
    }

    /// Quotient `q` with `self = q · divisor`, or a divisibility error.
    pub fn exact_divide(&self, divisor: &SparsePoly) -> Result<SparsePoly> {
        if divisor.is_zero() {
            return Err(Error::Divisibility("division by the zero polynomial".into()));
        }
        let (mut rem, g) = self.aligned(divisor);
        let (lm, lc) = {
            let (m, c) = g.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        let mut quotient = SparsePoly {
            vars: rem.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(&lm) else {
                return Err(Error::Divisibility(format!(
                    "leading term {} is not divisible by {}",
                    format_term(&rem.vars, m, c),
                    format_term(&g.vars, &lm, &lc)
                )));
            };
            let qc = c / &lc;
            for (gm, gc) in &g.terms {
                rem.add_term(gm.mul(&qm), -(gc * &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Whether every coefficient is strictly positive; returns the first offending term otherwise.
    pub fn first_nonpositive_term(&self) -> Option<(Monomial, Rational)> {
        self.terms()
            .find(|(_, c)| !c.is_positive())
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(&self.vars, m)
    }
}

fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(&m.0)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn format_term(vars: &[String], m: &Monomial, c: &Rational) -> String {
    if m.is_constant() {
        format_rational(c)
    } else {
        format!("{} * {}", format_rational(c), format_monomial(vars, m))
    }
}

impl fmt::Display for SparsePoly {
    /// `c * v1^e1 v2^e2 + …` in descending graded-lex order; unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_constant() {
                f.write_str(&format_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&format_monomial(&self.vars, m))?;
            } else {
                write!(f, "{} * {}", format_rational(&a), format_monomial(&self.vars, m))?;
            }
        }
        Ok(())
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for SparsePoly {}

impl From<Rational> for SparsePoly {
    fn from(c: Rational) -> Self {
        SparsePoly::constant(c)
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let (mut a, b) = self.aligned(rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let (mut a, b) = self.aligned(rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let (a, b) = self.aligned(rhs);
        let mut out = SparsePoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: &SparsePoly) -> SparsePoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl std::iter::Sum for SparsePoly {
    fn sum<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        iter.fold(SparsePoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for SparsePoly {
    fn product<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        iter.fold(SparsePoly::one(), |a, b| a * b)
    }
}
