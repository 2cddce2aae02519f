//! Exhaustive checks over incomparable pairs of a fixed degree.

use rayon::prelude::*;
use serde::Serialize;

use super::config::SearchConfig;
use super::search::{check_pair, InequalityVerdict};
use crate::error::{domain, Result};
use crate::partition::{enumerate_partitions, majorizes, Partition};
use crate::symmetric::FamilyTag;

#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub d: u32,
    pub family: FamilyTag,
    pub pairs: usize,
    /// Pairs with no violation found: candidate inequalities beyond majorization.
    pub unfalsified: Vec<(Partition, Partition)>,
    pub verdicts: Vec<InequalityVerdict>,
}

/// Ordered pairs `(μ, λ)` of partitions of `d` with `μ` not majorizing `λ` and
/// `λ` not majorizing `μ`, in enumeration order.
pub fn incomparable_pairs(d: u32) -> Result<Vec<(Partition, Partition)>> {
    let parts = enumerate_partitions(d)?;
    let mut out = Vec::new();
    for mu in &parts {
        for lambda in &parts {
            if !majorizes(mu, lambda)? && !majorizes(lambda, mu)? {
                out.push((mu.clone(), lambda.clone()));
            }
        }
    }
    Ok(out)
}

/// Runs [`check_pair`] on every incomparable pair of degree `d`, optionally
/// restricted to a single pair.
pub fn scan_incomparable(
    d: u32,
    family: FamilyTag,
    config: &SearchConfig,
    only: Option<(&Partition, &Partition)>,
) -> Result<ScanResult> {
    if d < 2 {
        return domain(format!("scans need d >= 2, got {d}"));
    }
    let mut pairs = incomparable_pairs(d)?;
    if let Some((mu, lambda)) = only {
        if mu.degree() != d || lambda.degree() != d {
            return domain(format!("pair {mu}, {lambda} is not of degree {d}"));
        }
        if majorizes(mu, lambda)? || majorizes(lambda, mu)? {
            return domain(format!("{mu} and {lambda} are comparable"));
        }
        pairs.retain(|(a, b)| a == mu && b == lambda);
    }
    let verdicts = pairs
        .par_iter()
        .map(|(mu, lambda)| check_pair(family, mu, lambda, config))
        .collect::<Result<Vec<_>>>()?;
    let unfalsified = verdicts
        .iter()
        .filter(|v| v.holds())
        .map(|v| (v.mu.clone(), v.lambda.clone()))
        .collect();
    Ok(ScanResult {
        d,
        family,
        pairs: pairs.len(),
        unfalsified,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::NRange;

    fn cfg(lo: usize, hi: usize) -> SearchConfig {
        SearchConfig {
            n_range: NRange::new(lo, hi).unwrap(),
            samples: 200,
            ..Default::default()
        }
    }

    #[test]
    fn chains_have_no_incomparable_pairs() {
        for d in 1..=5 {
            assert!(incomparable_pairs(d).unwrap().is_empty(), "d = {d}");
        }
        assert_eq!(
            scan_incomparable(2, FamilyTag::CompleteH, &cfg(1, 3), None)
                .unwrap()
                .pairs,
            0
        );
    }

    #[test]
    fn first_incomparable_pairs_appear_at_six() {
        let pairs = incomparable_pairs(6).unwrap();
        let s: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}{b}")).collect();
        assert!(s.contains(&"(2,2,2)(3,1,1,1)".to_string()));
        assert!(s.contains(&"(3,1,1,1)(2,2,2)".to_string()));
        assert!(s.contains(&"(3,3)(4,1,1)".to_string()));
        assert_eq!(pairs.len(), 4);
    }

    #[test]
    fn degree_six_all_falsified() {
        let r = scan_incomparable(6, FamilyTag::CompleteH, &cfg(2, 4), None).unwrap();
        assert_eq!(r.pairs, 4);
        assert!(r.unfalsified.is_empty());
        assert!(r
            .verdicts
            .iter()
            .all(|v| v.witness.as_ref().is_some_and(|w| w.mu_value < w.lambda_value)));
    }

    #[test]
    fn pair_filter() {
        let (a, b): (Partition, Partition) = ("4,4".parse().unwrap(), "5,2,1".parse().unwrap());
        let r = scan_incomparable(8, FamilyTag::CompleteH, &cfg(3, 3), Some((&a, &b))).unwrap();
        assert_eq!(r.pairs, 1);
        assert_eq!(r.unfalsified, vec![(a.clone(), b.clone())]);
        let c: Partition = "8".parse().unwrap();
        assert!(scan_incomparable(8, FamilyTag::CompleteH, &cfg(3, 3), Some((&c, &b))).is_err());
        assert!(scan_incomparable(1, FamilyTag::CompleteH, &cfg(3, 3), None).is_err());
    }
}
