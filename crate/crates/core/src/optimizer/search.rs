//! Seeded falsification of `F_{n,μ} >= F_{n,λ}` and the verdict types it produces.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::config::{NRange, SearchConfig};
use super::profile::{profile_scan, refined_profile_scan, scan_violates, ProfileScan};
use crate::error::{domain, Result};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::sampling::RationalSampler;
use crate::symmetric::{eval_normalized_pair, EvalPoint, FamilyTag};

/// Bisection steps used when `SearchConfig::refine` is set.
pub const REFINE_ITERATIONS: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    HoldsOnEvidence,
    CounterexampleFound,
    Inconclusive,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::HoldsOnEvidence => "holds_on_evidence",
            VerdictStatus::CounterexampleFound => "counterexample_found",
            VerdictStatus::Inconclusive => "inconclusive",
        }
    }
}

/// A point where `F_μ < F_λ`, with both values exact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub point: EvalPoint,
    #[serde(with = "crate::rational::serde_rational")]
    pub mu_value: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub lambda_value: Rational,
    /// Which check produced it, e.g. `probe 2`, `sample 17`, `profile`.
    pub source: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Evidence {
    /// Points `(1^k, 0^{n-k})`, `k = 1..=n`.
    Probes {
        n: usize,
        points: u64,
    },
    Samples {
        n: usize,
        points: u64,
        seed: u64,
        numerator_bound: u32,
    },
    ProfileGrid {
        n: usize,
        t_values: usize,
        scan: ProfileScan,
    },
    Skipped {
        n: usize,
        reason: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct NStatus {
    pub n: usize,
    pub status: VerdictStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityVerdict {
    pub family: FamilyTag,
    pub mu: Partition,
    pub lambda: Partition,
    pub n_range: NRange,
    pub status: VerdictStatus,
    /// First witness in `n` order.
    pub witness: Option<Witness>,
    pub per_n: Vec<NStatus>,
    pub evidence: Vec<Evidence>,
}

impl InequalityVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::HoldsOnEvidence
    }

    pub fn violated(&self) -> bool {
        self.status == VerdictStatus::CounterexampleFound
    }

    /// Samples drawn across all `n`.
    pub fn samples_drawn(&self) -> u64 {
        self.evidence
            .iter()
            .map(|e| match e {
                Evidence::Samples { points, .. } => *points,
                _ => 0,
            })
            .sum()
    }
}

fn check_degrees(mu: &Partition, lambda: &Partition) -> Result<()> {
    if mu.degree() != lambda.degree() {
        return domain(format!(
            "partitions {mu} and {lambda} have different degrees {} and {}",
            mu.degree(),
            lambda.degree()
        ));
    }
    Ok(())
}

/// Why `n` cannot be checked for this family, if it cannot.
fn skip_reason(family: FamilyTag, mu: &Partition, lambda: &Partition, n: usize) -> Option<String> {
    if family == FamilyTag::Monomial && (mu.len() > n || lambda.len() > n) {
        return Some(format!(
            "monomial normalization undefined: a partition has more than {n} parts"
        ));
    }
    None
}

/// `Some(witness)` if `F_μ(x) < F_λ(x)`.
pub fn violation_at(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    x: &EvalPoint,
    source: impl FnOnce() -> String,
) -> Result<Option<Witness>> {
    let (a, b) = eval_normalized_pair(family, mu, lambda, x)?;
    Ok((a < b).then(|| Witness {
        n: x.n(),
        point: x.clone(),
        mu_value: a,
        lambda_value: b,
        source: source(),
    }))
}

fn probe_point(n: usize, k: usize) -> EvalPoint {
    let coords = (0..n)
        .map(|i| Rational::from_integer(((i < k) as i64).into()))
        .collect();
    EvalPoint::nonnegative(coords).expect("0/1 coordinates")
}

/// Checks the points `(1^k, 0^{n-k})` in order of `k`.
fn probe(family: FamilyTag, mu: &Partition, lambda: &Partition, n: usize) -> Result<(Option<Witness>, Evidence)> {
    for k in 1..=n {
        if let Some(w) = violation_at(family, mu, lambda, &probe_point(n, k), || format!("probe {k}"))? {
            return Ok((Some(w), Evidence::Probes { n, points: k as u64 }));
        }
    }
    Ok((None, Evidence::Probes { n, points: n as u64 }))
}

/// Draws `samples` seeded points; returns the lowest-index violation.
fn falsify(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    n: usize,
    samples: u64,
    seed: u64,
    bound: u32,
) -> Result<(Option<Witness>, Evidence)> {
    let sampler = RationalSampler::new(seed, bound);
    let found = (0..samples)
        .into_par_iter()
        .map(|i| {
            let x = sampler.scheduled_point(i, samples, n);
            violation_at(family, mu, lambda, &x, || format!("sample {i}")).map(|w| w.map(|w| (i, w)))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    let (witness, drawn) = match found {
        None => (None, samples),
        Some(r) => {
            let (i, w) = r?.expect("filtered to violations");
            (Some(w), i + 1)
        }
    };
    Ok((
        witness,
        Evidence::Samples {
            n,
            points: drawn,
            seed,
            numerator_bound: bound,
        },
    ))
}

/// Seeded falsifier at a single `n`.
pub fn sample_check(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    n: usize,
    samples: u64,
    seed: u64,
    numerator_bound: u32,
) -> Result<InequalityVerdict> {
    check_degrees(mu, lambda)?;
    if n == 0 || samples == 0 {
        return domain(format!(
            "sample_check needs n >= 1 and samples >= 1 (got n = {n}, samples = {samples})"
        ));
    }
    let n_range = NRange::single(n)?;
    let cfg = SearchConfig {
        samples,
        seed,
        n_range,
        numerator_bound,
        t_grid: Vec::new(),
        ..Default::default()
    };
    check_pair(family, mu, lambda, &cfg)
}

/// For every `n` in the configured range: the 0/1 probes, the profile scan
/// (for `n >= 2`, when the grid is nonempty) and the seeded falsifier, each
/// skipped once a violation is found at that `n`.
pub fn check_pair(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    config: &SearchConfig,
) -> Result<InequalityVerdict> {
    check_degrees(mu, lambda)?;
    config.validate()?;
    let mut evidence = Vec::new();
    let mut per_n = Vec::new();
    let mut witness: Option<Witness> = None;
    for n in config.n_range.iter() {
        if let Some(reason) = skip_reason(family, mu, lambda, n) {
            evidence.push(Evidence::Skipped { n, reason });
            per_n.push(NStatus {
                n,
                status: VerdictStatus::Inconclusive,
            });
            continue;
        }
        let (mut found, ev) = probe(family, mu, lambda, n)?;
        evidence.push(ev);
        if found.is_none() && n >= 2 && !config.t_grid.is_empty() {
            let scan = if config.refine {
                refined_profile_scan(family, mu, lambda, n, &config.t_grid, REFINE_ITERATIONS)?
            } else {
                profile_scan(family, mu, lambda, n, &config.t_grid)?
            };
            if scan_violates(&scan) {
                found = violation_at(family, mu, lambda, &scan.argmin.to_eval_point(), || {
                    format!("profile u={} v={} t={}", scan.argmin.u, scan.argmin.v, scan.argmin.t)
                })?;
                debug_assert!(found.is_some());
            }
            evidence.push(Evidence::ProfileGrid {
                n,
                t_values: config.t_grid.len(),
                scan,
            });
        }
        if found.is_none() && config.samples > 0 {
            let (w, ev) = falsify(
                family,
                mu,
                lambda,
                n,
                config.samples,
                config.seed,
                config.numerator_bound,
            )?;
            found = w;
            evidence.push(ev);
        }
        let status = if found.is_some() {
            VerdictStatus::CounterexampleFound
        } else {
            VerdictStatus::HoldsOnEvidence
        };
        per_n.push(NStatus { n, status });
        if witness.is_none() {
            witness = found;
        }
    }
    let status = if witness.is_some() {
        VerdictStatus::CounterexampleFound
    } else if per_n.iter().any(|s| s.status == VerdictStatus::HoldsOnEvidence) {
        VerdictStatus::HoldsOnEvidence
    } else {
        VerdictStatus::Inconclusive
    };
    Ok(InequalityVerdict {
        family,
        mu: mu.clone(),
        lambda: lambda.clone(),
        n_range: config.n_range,
        status,
        witness,
        per_n,
        evidence,
    })
}

/// Sign of `F_μ - F_λ` at `x`; used to check invariance under scaling.
pub fn gap_sign(family: FamilyTag, mu: &Partition, lambda: &Partition, x: &EvalPoint) -> Result<std::cmp::Ordering> {
    let (a, b) = eval_normalized_pair(family, mu, lambda, x)?;
    Ok((a - b).cmp(&Rational::zero()))
}
