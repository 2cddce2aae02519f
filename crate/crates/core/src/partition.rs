//! Integer partitions and the dominance (majorization) order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// A partition of a positive integer, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return domain(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return domain("a partition must have positive degree");
        }
        Ok(Partition { parts })
    }

    /// `blocks` is a list of `(part, multiplicity)` in decreasing part order.
    pub fn from_blocks(blocks: &[(u32, usize)]) -> Result<Self> {
        let parts: Vec<u32> = blocks.iter().flat_map(|&(p, m)| std::iter::repeat_n(p, m)).collect();
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts[0]
    }

    /// Parts padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Run-length blocks `(part, multiplicity)` in decreasing part order.
    pub fn blocks(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Compact caret notation, e.g. `3,1^5`.
    pub fn to_block_string(&self) -> String {
        self.blocks()
            .iter()
            .map(|&(p, m)| if m > 1 { format!("{p}^{m}") } else { p.to_string() })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1`, `3,1^2`, `(3, 1^2)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = cleaned.trim_start_matches('(').trim_end_matches(')');
        if body.is_empty() {
            return Err(Error::Parse(format!("empty partition `{s}`")));
        }
        let bad = |tok: &str| Error::Parse(format!("bad partition token `{tok}` in `{s}`"));
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let (part, mult) = match tok.split_once('^') {
                Some((p, m)) => (
                    p.parse::<u32>().map_err(|_| bad(tok))?,
                    m.parse::<usize>().map_err(|_| bad(tok))?,
                ),
                None => (tok.parse::<u32>().map_err(|_| bad(tok))?, 1),
            };
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Partition::new(parts).map_err(|e| match e {
            Error::Domain(m) => Error::Parse(format!("`{s}`: {m}")),
            other => other,
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_block_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d` in reverse-lexicographic order, starting from `(d)`.
pub fn enumerate_partitions(d: u32) -> Result<Vec<Partition>> {
    if d == 0 {
        return domain("partitions are enumerated for d >= 1");
    }
    let mut out = Vec::new();
    let mut current = vec![d];
    loop {
        out.push(Partition { parts: current.clone() });
        // Find the rightmost part > 1, decrement it, and refill greedily.
        let Some(pos) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = (current.len() - pos - 1) as u32;
        let new_part = current[pos] - 1;
        current.truncate(pos);
        current.push(new_part);
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(new_part);
            current.push(take);
            rest -= take;
        }
    }
    Ok(out)
}

/// Whether `mu` majorizes `lambda`: every prefix sum of `mu` dominates that of `lambda`.
pub fn majorizes(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.degree() != lambda.degree() {
        return domain(format!(
            "majorization compares partitions of equal degree, got {} and {}",
            mu.degree(),
            lambda.degree()
        ));
    }
    let len = mu.len().max(lambda.len());
    let (a, b) = (mu.padded(len), lambda.padded(len));
    let (mut sa, mut sb) = (0u32, 0u32);
    for (x, y) in a.iter().zip(&b) {
        sa += x;
        sb += y;
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Neither partition majorizes the other.
pub fn incomparable(mu: &Partition, lambda: &Partition) -> Result<bool> {
    Ok(!majorizes(mu, lambda)? && !majorizes(lambda, mu)?)
}

/// The pair `((2^⌊d/2⌋, 1^(d mod 2)), (3, 1^(d-3)))` for `d >= 8`.
pub fn counterexample_pair(d: u32) -> Result<(Partition, Partition)> {
    if d < 8 {
        return domain(format!("the counterexample pair is defined for d >= 8, got {d}"));
    }
    let half = (d / 2) as usize;
    let mu = Partition::from_blocks(&[(2, half), (1, (d % 2) as usize)])?;
    let lambda = Partition::from_blocks(&[(3, 1), (1, (d - 3) as usize)])?;
    debug_assert!(!majorizes(&mu, &lambda).unwrap());
    Ok((mu, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent oracle: every weakly decreasing sequence with parts <= max summing to d.
    fn brute_force(d: u32, max: u32) -> Vec<Vec<u32>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(d)).rev() {
            for mut tail in brute_force(d - first, first) {
                tail.insert(0, first);
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn enumeration_small() {
        let ps = enumerate_partitions(3).unwrap();
        assert_eq!(ps, vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("1")]);
        assert!(enumerate_partitions(0).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let counts = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for d in 1..=12u32 {
            let got: Vec<Vec<u32>> = enumerate_partitions(d).unwrap().into_iter().map(|q| q.parts).collect();
            assert_eq!(got, brute_force(d, d), "d = {d}");
            assert_eq!(got.len(), counts[d as usize - 1]);
        }
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
    }

    #[test]
    fn parsing_notations() {
        assert_eq!(p("2^4"), p("2,2,2,2"));
        assert_eq!(p(" 3 , 1^5 "), Partition::new(vec![3, 1, 1, 1, 1, 1]).unwrap());
        assert_eq!(p("(2,1,0)"), p("2,1"));
        assert_eq!(p("3,1^5").to_block_string(), "3,1^5");
        assert_eq!(p("2,2,1").to_string(), "(2,2,1)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("0,0".parse::<Partition>().is_err());
        assert!("2^x".parse::<Partition>().is_err());
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&p("3,0,0"), &p("2,1,0")).unwrap());
        assert!(!majorizes(&p("1,1,1"), &p("2,1,0")).unwrap());
        assert!(!majorizes(&p("4,4"), &p("5,2,1")).unwrap());
        assert!(!majorizes(&p("2^4"), &p("3,1^5")).unwrap());
        assert!(majorizes(&p("2,1"), &p("2,1")).unwrap());
        assert!(majorizes(&p("3,1"), &p("2,2")).unwrap());
        assert!(majorizes(&p("3"), &p("2")).is_err());
        assert!(incomparable(&p("3,3"), &p("4,1,1")).unwrap());
    }

    #[test]
    fn counterexample_pairs() {
        assert_eq!(counterexample_pair(8).unwrap(), (p("2^4"), p("3,1^5")));
        assert_eq!(counterexample_pair(9).unwrap(), (p("2^4,1"), p("3,1^6")));
        assert_eq!(counterexample_pair(10).unwrap(), (p("2^5"), p("3,1^7")));
        assert!(counterexample_pair(7).is_err());
        for d in 8..40 {
            let (mu, lambda) = counterexample_pair(d).unwrap();
            assert_eq!(mu.degree(), d);
            assert_eq!(lambda.degree(), d);
            assert!(!majorizes(&mu, &lambda).unwrap());
        }
    }

    #[test]
    fn order_properties_exhaustive() {
        for d in 1..=9 {
            let ps = enumerate_partitions(d).unwrap();
            let top = &ps[0];
            let bottom = ps.last().unwrap();
            for a in &ps {
                assert!(majorizes(a, a).unwrap());
                assert!(majorizes(top, a).unwrap());
                assert!(majorizes(a, bottom).unwrap());
                for b in &ps {
                    let ab = majorizes(a, b).unwrap();
                    if ab && majorizes(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if ab && majorizes(b, c).unwrap() {
                            assert!(majorizes(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }
}
