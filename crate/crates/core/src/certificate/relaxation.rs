//! Identities behind the degree extension: `F_{n,m} = H_{n,(2^m)} / H_{n,(3,1^{2m-3})}`
//! satisfies `F_{n,m} / F_{n,m-1} = H_{n,(2)} / H_{n,(1,1)}`, and appending a part `1` to
//! both partitions leaves the ratio unchanged. Both are checked in product form so no
//! division by a possibly vanishing value occurs.

use num_traits::One;
use serde::Serialize;

use super::normalized_h_poly;
use crate::error::{domain, Error, Result};
use crate::partition::Partition;
use crate::poly::SparsePoly;
use crate::rational::Rational;
use crate::sampling::{RationalSampler, DEFAULT_NUMERATOR_BOUND};
use crate::symmetric::{complete_h_table, normalization_constant, product_over_parts, FamilyTag};

/// Largest `n` for which identities are expanded symbolically.
pub const MAX_SYMBOLIC_IDENTITY_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum IdentityMode {
    /// Full polynomial expansion (`n <= 4`).
    Symbolic,
    /// Exact evaluation at `points` seeded nonnegative rational points.
    Sampled { points: u64, seed: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub n: usize,
    pub m: u32,
    pub mode: IdentityMode,
    /// Points at which the identity was evaluated (zero in symbolic mode).
    pub points_checked: u64,
    pub identity_holds: bool,
    /// `H_{n,(2)} >= H_{n,(1,1)}` at every sampled point.
    pub cgs_instance_holds: Option<bool>,
}

fn blocks(shape: &[(u32, usize)]) -> Partition {
    Partition::from_blocks(shape).expect("nonempty partition")
}

/// Checks `Π_{left} H = Π_{right} H` either symbolically or at sampled points.
fn product_identity(name: &str, n: usize, left: &[Partition], right: &[Partition], mode: IdentityMode) -> Result<u64> {
    let fail = |detail: String| Error::Certificate {
        step: "relaxation".into(),
        detail,
    };
    match mode {
        IdentityMode::Symbolic => {
            if n > MAX_SYMBOLIC_IDENTITY_N {
                return Err(Error::Resource(format!(
                    "symbolic identity checks are limited to n <= {MAX_SYMBOLIC_IDENTITY_N}, got {n}"
                )));
            }
            let side = |parts: &[Partition]| -> Result<SparsePoly> {
                parts
                    .iter()
                    .map(|p| normalized_h_poly(n, p))
                    .collect::<Result<Vec<_>>>()
                    .map(|v| v.into_iter().product())
            };
            if side(left)? != side(right)? {
                return Err(fail(format!("{name} fails symbolically for n = {n}")));
            }
            Ok(0)
        }
        IdentityMode::Sampled { points, seed } => {
            let sampler = RationalSampler::new(seed, DEFAULT_NUMERATOR_BOUND);
            let kmax = left.iter().chain(right).map(Partition::largest_part).max().unwrap_or(1);
            let consts = |parts: &[Partition]| -> Result<Rational> {
                parts
                    .iter()
                    .map(|p| normalization_constant(FamilyTag::CompleteH, n, p))
                    .product()
            };
            let (cl, cr) = (consts(left)?, consts(right)?);
            for i in 0..points {
                let x = sampler.scheduled_point(i, points, n);
                let table = complete_h_table(&x, kmax);
                let side = |parts: &[Partition], c: &Rational| -> Rational {
                    parts
                        .iter()
                        .fold(Rational::one(), |acc, p| acc * product_over_parts(&table, p))
                        / c
                };
                if side(left, &cl) != side(right, &cr) {
                    return Err(fail(format!("{name} fails for n = {n} at {x}")));
                }
            }
            Ok(points)
        }
    }
}

/// Checks `H_{n,(2)}(x) >= H_{n,(1,1)}(x)` at seeded points.
fn cgs_instance(n: usize, points: u64, seed: u64) -> Result<bool> {
    let sampler = RationalSampler::new(seed, DEFAULT_NUMERATOR_BOUND);
    let two = blocks(&[(2, 1)]);
    let ones = blocks(&[(1, 2)]);
    for i in 0..points {
        let x = sampler.scheduled_point(i, points, n);
        let (a, b) = crate::symmetric::eval_normalized_pair(FamilyTag::CompleteH, &two, &ones, &x)?;
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

const CGS_POINTS: u64 = 100;

/// `H_{(2^m)} H_{(3,1^{2m-5})} H_{(1,1)} = H_{(2^{m-1})} H_{(3,1^{2m-3})} H_{(2)}` for `m >= 5`.
pub fn ratio_step_identity(n: usize, m: u32, mode: IdentityMode) -> Result<IdentityReport> {
    if m < 5 {
        return domain(format!("the ratio step relates m to m - 1 for m >= 5, got m = {m}"));
    }
    if n == 0 {
        return domain("n must be positive");
    }
    let m_us = m as usize;
    let left = [
        blocks(&[(2, m_us)]),
        blocks(&[(3, 1), (1, 2 * m_us - 5)]),
        blocks(&[(1, 2)]),
    ];
    let right = [
        blocks(&[(2, m_us - 1)]),
        blocks(&[(3, 1), (1, 2 * m_us - 3)]),
        blocks(&[(2, 1)]),
    ];
    let checked = product_identity("ratio step identity", n, &left, &right, mode)?;
    let seed = match mode {
        IdentityMode::Sampled { seed, .. } => seed,
        IdentityMode::Symbolic => 0,
    };
    let cgs = cgs_instance(n, CGS_POINTS, seed)?;
    if !cgs {
        return Err(Error::Certificate {
            step: "relaxation".into(),
            detail: format!("H_(2) < H_(1,1) at a sampled point for n = {n}"),
        });
    }
    Ok(IdentityReport {
        identity: format!("F_{{n,{m}}} / F_{{n,{}}} = H_(2) / H_(1,1)", m - 1),
        n,
        m,
        mode,
        points_checked: checked,
        identity_holds: true,
        cgs_instance_holds: Some(cgs),
    })
}

/// `H_{(2^m,1)} H_{(3,1^{2m-3})} = H_{(2^m)} H_{(3,1^{2m-2})}` for `m >= 4`.
pub fn odd_reduction_identity(n: usize, m: u32, mode: IdentityMode) -> Result<IdentityReport> {
    if m < 4 {
        return domain(format!("the odd reduction is used for m >= 4, got m = {m}"));
    }
    if n == 0 {
        return domain("n must be positive");
    }
    let m_us = m as usize;
    let left = [blocks(&[(2, m_us), (1, 1)]), blocks(&[(3, 1), (1, 2 * m_us - 3)])];
    let right = [blocks(&[(2, m_us)]), blocks(&[(3, 1), (1, 2 * m_us - 2)])];
    let checked = product_identity("odd reduction identity", n, &left, &right, mode)?;
    Ok(IdentityReport {
        identity: format!("H_(2^{m},1) / H_(3,1^{}) = F_{{n,{m}}}", 2 * m - 2),
        n,
        m,
        mode,
        points_checked: checked,
        identity_holds: true,
        cgs_instance_holds: None,
    })
}
