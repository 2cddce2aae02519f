//! Evidence that `H_{n,μ} >= H_{n,λ}` holds for the non-majorizing pair of each degree `d >= 8`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::config::SearchConfig;
use super::search::{check_pair, InequalityVerdict, VerdictStatus};
use crate::certificate::{
    cached_d8_certificate, odd_reduction_identity, ratio_step_identity, t_ratio, CertificateDocument, IdentityMode,
    IdentityReport,
};
use crate::error::{domain, Error, Result};
use crate::partition::{counterexample_pair, majorizes, Partition};
use crate::rational::{binomial, int, Rational};
use crate::sampling::{PointKind, RationalSampler};
use crate::symmetric::{complete_h_table, product_over_parts, EvalPoint, FamilyTag};

/// `k1 J_n(p) - k2 J_{n-1}(p') = (T(n) - T(n-1)) h_{(2^4)}(p)` where `p'` drops the
/// trailing zero of `p`, `k1 = C(n+2,3) n^5` and `k2 = C(n+1,3) (n-1)^5`.
pub fn boundary_identity_check(n: usize, p: &EvalPoint) -> Result<bool> {
    if n < 3 {
        return domain(format!("boundary identity needs n >= 3, got {n}"));
    }
    if p.n() != n {
        return domain(format!("point has {} coordinates, expected {n}", p.n()));
    }
    if !p.coords()[n - 1].is_zero() {
        return domain(format!("last coordinate of {p} must be 0"));
    }
    let q = p.truncated()?;
    let twos = Partition::from_blocks(&[(2, 4)])?;
    let three = Partition::from_blocks(&[(3, 1), (1, 5)])?;
    // J_m(x) = h_(2^4)(x) / C(m+1,2)^4 - h_(3,1^5)(x) / (C(m+2,3) m^5)
    let j = |x: &EvalPoint| -> Rational {
        let m = x.n() as u64;
        let table = complete_h_table(x, 4);
        let c1 = Rational::from_integer(num_traits::pow(binomial(m + 1, 2), 4));
        let c2 = Rational::from_integer(binomial(m + 2, 3) * num_traits::pow(BigInt::from(m), 5));
        product_over_parts(&table, &twos) / c1 - product_over_parts(&table, &three) / c2
    };
    let nu = n as u64;
    let k1 = Rational::from_integer(binomial(nu + 2, 3) * num_traits::pow(BigInt::from(nu), 5));
    let k2 = Rational::from_integer(binomial(nu + 1, 3) * num_traits::pow(BigInt::from(nu - 1), 5));
    let lhs = k1 * j(p) - k2 * j(&q);
    let h_twos = product_over_parts(&complete_h_table(p, 2), &twos);
    let rhs = (t_ratio(n as i64)?.value - t_ratio(n as i64 - 1)?.value) * h_twos;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainLink {
    pub identity: String,
    pub n: usize,
    pub m: u32,
    pub holds: bool,
    pub report: Option<IdentityReport>,
    pub failure: Option<String>,
}

fn link(kind: &str, n: usize, m: u32, r: Result<IdentityReport>) -> Result<ChainLink> {
    match r {
        Ok(report) => Ok(ChainLink {
            identity: report.identity.clone(),
            n,
            m,
            holds: report.identity_holds,
            report: Some(report),
            failure: None,
        }),
        Err(Error::Certificate { detail, .. }) => Ok(ChainLink {
            identity: kind.into(),
            n,
            m,
            holds: false,
            report: None,
            failure: Some(detail),
        }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryIdentityEvidence {
    pub n: usize,
    pub points: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremEvidence {
    pub d: u32,
    pub mu: Partition,
    pub lambda: Partition,
    pub mu_majorizes_lambda: bool,
    pub verdict: InequalityVerdict,
    /// Degree-8 base case.
    pub certificate: CertificateDocument,
    /// Odd `d`: the cancellation of the extra part `1`.
    pub odd_reduction: Vec<ChainLink>,
    /// Ratio steps from `m = ⌊d/2⌋` down to `5`.
    pub ratio_chain: Vec<ChainLink>,
    /// Boundary recursion of the degree-8 step, at sampled points with a zero coordinate.
    pub boundary_identity: Vec<BoundaryIdentityEvidence>,
    /// Every check supports the inequality.
    pub supported: bool,
    /// Human-readable descriptions of anything that contradicts it.
    pub negative_evidence: Vec<String>,
}

/// Points per `n` for the boundary recursion.
pub const BOUNDARY_IDENTITY_POINTS: u64 = 50;

/// Runs every check for `counterexample_pair(d)` over `config.n_range`.
///
/// Any negative evidence is collected in `negative_evidence` and clears
/// `supported`; it indicates a defect, since each check is backed by an identity.
pub fn verify_counterexample(d: u32, config: &SearchConfig) -> Result<TheoremEvidence> {
    if d < 8 {
        return domain(format!("the construction needs d >= 8, got {d}"));
    }
    config.validate()?;
    let (mu, lambda) = counterexample_pair(d)?;
    let mu_majorizes_lambda = majorizes(&mu, &lambda)?;
    let verdict = check_pair(FamilyTag::CompleteH, &mu, &lambda, config)?;
    let certificate = cached_d8_certificate().clone();

    let m = d / 2;
    let mode = IdentityMode::Sampled {
        points: config.identity_points.max(1),
        seed: config.seed,
    };
    let ns: Vec<usize> = config.n_range.iter().collect();
    let odd_reduction = if d % 2 == 1 {
        ns.par_iter()
            .map(|&n| link("odd reduction", n, m, odd_reduction_identity(n, m, mode)))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let steps: Vec<(usize, u32)> = (5..=m).rev().flat_map(|mm| ns.iter().map(move |&n| (n, mm))).collect();
    let ratio_chain = steps
        .par_iter()
        .map(|&(n, mm)| link("ratio step", n, mm, ratio_step_identity(n, mm, mode)))
        .collect::<Result<Vec<_>>>()?;

    let sampler = RationalSampler::new(config.seed, config.numerator_bound);
    let boundary_identity = ns
        .par_iter()
        .filter(|&&n| n >= 3)
        .map(|&n| -> Result<BoundaryIdentityEvidence> {
            let mut holds = true;
            for i in 0..BOUNDARY_IDENTITY_POINTS {
                let mut c = sampler.point(i, n, PointKind::Interior).coords().to_vec();
                c[n - 1] = int(0);
                holds &= boundary_identity_check(n, &EvalPoint::nonnegative(c)?)?;
            }
            Ok(BoundaryIdentityEvidence {
                n,
                points: BOUNDARY_IDENTITY_POINTS,
                holds,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut negative = Vec::new();
    if mu_majorizes_lambda {
        negative.push(format!("{mu} majorizes {lambda}"));
    }
    match verdict.status {
        VerdictStatus::CounterexampleFound => {
            let w = verdict.witness.as_ref().expect("witness");
            negative.push(format!(
                "H_{{{},{mu}}} < H_{{{},{lambda}}} at {} ({} < {}, {})",
                w.n, w.n, w.point, w.mu_value, w.lambda_value, w.source
            ));
        }
        VerdictStatus::Inconclusive => negative.push("no checks were performed".into()),
        VerdictStatus::HoldsOnEvidence => {}
    }
    if !certificate.valid {
        let (step, detail) = certificate.first_failure().unwrap_or(("assembly", String::new()));
        negative.push(format!("degree-8 certificate failed at {step}: {detail}"));
    }
    for l in odd_reduction.iter().chain(&ratio_chain).filter(|l| !l.holds) {
        negative.push(format!(
            "{} fails for n = {}, m = {}: {}",
            l.identity,
            l.n,
            l.m,
            l.failure.as_deref().unwrap_or("")
        ));
    }
    for b in boundary_identity.iter().filter(|b| !b.holds) {
        negative.push(format!("boundary identity fails for n = {}", b.n));
    }
    Ok(TheoremEvidence {
        d,
        mu,
        lambda,
        mu_majorizes_lambda,
        verdict,
        certificate,
        odd_reduction,
        ratio_chain,
        boundary_identity,
        supported: negative.is_empty(),
        negative_evidence: negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::NRange;
    use crate::rational::ratio;

    #[test]
    fn boundary_identity_examples() {
        let p = EvalPoint::nonnegative(vec![ratio(1, 2), ratio(1, 2), int(0)]).unwrap();
        assert!(boundary_identity_check(3, &p).unwrap());
        let p = EvalPoint::nonnegative(vec![ratio(1, 4), ratio(1, 4), ratio(1, 2), int(0)]).unwrap();
        assert!(boundary_identity_check(4, &p).unwrap());
        assert!(boundary_identity_check(4, &EvalPoint::from_integers(&[0, 0, 0, 0]).unwrap()).unwrap());
    }

    #[test]
    fn boundary_identity_needs_trailing_zero() {
        let p = EvalPoint::from_integers(&[1, 2, 3]).unwrap();
        assert!(matches!(boundary_identity_check(3, &p), Err(Error::Domain(_))));
        assert!(boundary_identity_check(2, &EvalPoint::from_integers(&[1, 0]).unwrap()).is_err());
    }

    #[test]
    fn d7_rejected() {
        assert!(matches!(
            verify_counterexample(7, &SearchConfig::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn d9_small_range_supported() {
        let cfg = SearchConfig {
            n_range: NRange::new(1, 3).unwrap(),
            samples: 100,
            identity_points: 10,
            ..Default::default()
        };
        let ev = verify_counterexample(9, &cfg).unwrap();
        assert!(ev.supported, "{:?}", ev.negative_evidence);
        assert_eq!(ev.odd_reduction.len(), 3);
        assert!(ev.ratio_chain.is_empty());
        assert_eq!(ev.mu.to_string(), "(2,2,2,2,1)");
    }
}
