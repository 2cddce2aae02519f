//! Machine-checked evidence that `H_{n,(2^4)} >= H_{n,(3,1^5)}` for all `n`,
//! and the identities that extend the pair to every degree `d >= 8`.
//!
//! The d = 8 certificate has three parts:
//!
//! * base case: `J_2 = (x1 - x2)^2 P` with `P` having positive coefficients;
//! * interior: on two-value profiles `(t^u, 1^v)` the difference splits as a
//!   manifestly nonnegative factor times a degree-6 polynomial in `t` whose
//!   coefficients are polynomials in `k = u - 1`, `l = v - 1` with strictly
//!   positive coefficients;
//! * boundary: the ratio `T(n)` of normalization constants is increasing,
//!   which carries the inequality from `n - 1` to points on the boundary of
//!   the simplex in dimension `n`.

mod base;
mod boundary;
mod coeffs;
mod d8;
mod lagrange;
mod profile;
mod relaxation;

pub use base::{expand_j2, j1_vanishes, J2Factorization, J2_QUOTIENT_COEFFS, J2_QUOTIENT_SCALE};
pub use boundary::{check_t_monotone, t_derivative_matches, t_ratio, BoundaryRecord, TRatio};
pub use coeffs::{verify_interior_coeffs, CoefficientTable, InteriorRecord, DEFAULT_COEFFICIENTS};
pub use d8::{
    build_d8_certificate, cached_d8_certificate, run_d8_certificate, CertificateDocument, CertificateStep,
    D8Certificate, D8Options, StepStatus,
};
pub use lagrange::{lagrange_consistency, lagrange_quadratic_coeffs};
pub use profile::{breve_j, h_in_power_sums, j_hat, jn_in_power_sums, profile_j, BreveSplit};
pub use relaxation::{odd_reduction_identity, ratio_step_identity, IdentityMode, IdentityReport};

use crate::error::Result;
use crate::partition::Partition;
use crate::poly::{symbolic_h_lambda, SparsePoly};
use crate::symmetric::{normalization_constant, FamilyTag};

pub(crate) fn p(s: &str) -> Partition {
    s.parse().expect("static partition literal")
}

/// Symbolic `H_{n,λ} = h_{n,λ} / h_{n,λ}(1^n)`.
pub fn normalized_h_poly(n: usize, lambda: &Partition) -> Result<SparsePoly> {
    let c = normalization_constant(FamilyTag::CompleteH, n, lambda)?;
    Ok(symbolic_h_lambda(n, lambda)?.scale(&(<crate::Rational as num_traits::One>::one() / c)))
}

/// Symbolic `J_n = H_{n,(2^4)} - H_{n,(3,1^5)}` in `x1, …, xn`.
pub fn j_poly(n: usize) -> Result<SparsePoly> {
    Ok(&normalized_h_poly(n, &p("2^4"))? - &normalized_h_poly(n, &p("3,1^5"))?)
}
