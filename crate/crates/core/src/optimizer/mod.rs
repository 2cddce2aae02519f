//! Numerical-exact search for violations of `F_{n,μ} >= F_{n,λ}`: two-value
//! profile scans, seeded sampling, and the evidence bundle for the
//! non-majorizing pairs of degree `d >= 8`.

mod config;
mod profile;
mod scan;
mod search;
mod theorem;

pub use config::{default_t_grid, NRange, SearchConfig};
pub use profile::{
    profile_polynomial, profile_scan, refine_minimum, refined_profile_scan, scan_violates, ProfilePoint, ProfileScan,
};
pub use scan::{incomparable_pairs, scan_incomparable, ScanResult};
pub use search::{
    check_pair, gap_sign, sample_check, violation_at, Evidence, InequalityVerdict, NStatus, VerdictStatus, Witness,
    REFINE_ITERATIONS,
};
pub use theorem::{
    boundary_identity_check, verify_counterexample, BoundaryIdentityEvidence, ChainLink, TheoremEvidence,
    BOUNDARY_IDENTITY_POINTS,
};
