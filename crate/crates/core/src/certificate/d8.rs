use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use super::base::{expand_j2, j1_vanishes};
use super::boundary::{check_t_monotone, BoundaryRecord};
use super::coeffs::{verify_interior_coeffs, CoefficientTable, InteriorRecord, DEFAULT_COEFFICIENTS};
use super::profile::{breve_j, j_hat};
use crate::error::{Error, Result};

pub const D8_CLAIM: &str = "H_{n,(2^4)} >= H_{n,(3,1^5)} on [0,inf)^n for every n >= 1";

#[derive(Debug, Clone)]
pub struct D8Options {
    /// Text of the reference coefficient table (`cI = …` lines).
    pub coefficients: String,
    /// Inclusive range of `n` over which `T(n) > T(n-1)` is checked.
    pub t_range: (u64, u64),
}

impl Default for D8Options {
    fn default() -> Self {
        D8Options {
            coefficients: DEFAULT_COEFFICIENTS.to_string(),
            t_range: (3, 200),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BaseCaseRecord {
    #[serde(serialize_with = "ser_bigints")]
    pub quotient_coeffs: Vec<BigInt>,
    #[serde(serialize_with = "ser_bigint")]
    pub scale: BigInt,
    pub palindromic: bool,
    pub one_variable_vanishes: bool,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone)]
pub struct D8Certificate {
    pub base_case: BaseCaseRecord,
    pub interior: InteriorRecord,
    pub boundary: BoundaryRecord,
}

impl D8Certificate {
    pub fn is_valid(&self) -> bool {
        let b = &self.base_case;
        let i = &self.interior;
        let t = &self.boundary;
        b.scale == BigInt::from(super::J2_QUOTIENT_SCALE)
            && b.palindromic
            && b.one_variable_vanishes
            && i.c_polys.len() == 7
            && i.all_monomials_positive
            && i.table_match
            && t.closed_forms_agree
            && t.monotone
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateStep {
    pub name: String,
    pub status: StepStatus,
    pub evidence: Value,
}

/// Serializable certificate: `{claim, steps, valid, toolkit_version}`.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateDocument {
    pub claim: String,
    pub steps: Vec<CertificateStep>,
    pub valid: bool,
    pub toolkit_version: String,
    #[serde(skip)]
    pub certificate: Option<D8Certificate>,
}

impl CertificateDocument {
    /// Name and error text of the first failing step.
    pub fn first_failure(&self) -> Option<(&str, String)> {
        self.steps.iter().find(|s| s.status == StepStatus::Fail).map(|s| {
            let detail = s.evidence.get("error").and_then(Value::as_str).unwrap_or("");
            (s.name.as_str(), detail.to_string())
        })
    }
}

fn run_base() -> Result<BaseCaseRecord> {
    let f = expand_j2()?;
    let palindromic = f.is_palindromic();
    Ok(BaseCaseRecord {
        quotient_coeffs: f.quotient_coeffs,
        scale: f.scale,
        palindromic,
        one_variable_vanishes: j1_vanishes()?,
    })
}

fn run_interior(table_text: &str) -> Result<InteriorRecord> {
    let table = CoefficientTable::parse(table_text).map_err(|e| Error::Certificate {
        step: "interior".into(),
        detail: e.to_string(),
    })?;
    let split = breve_j()?;
    verify_interior_coeffs(&split.breve, &table)
}

fn base_evidence(r: &BaseCaseRecord) -> Value {
    let monomials: Vec<String> = (0..=6u32)
        .map(|j| match (6 - j, j) {
            (a, 0) => format!("x1^{a}"),
            (0, b) => format!("x2^{b}"),
            (1, b) => format!("x1 x2^{b}"),
            (a, 1) => format!("x1^{a} x2"),
            (a, b) => format!("x1^{a} x2^{b}"),
        })
        .collect();
    json!({
        "one_variable": "J_1 = x^8 - x^8 = 0",
        "one_variable_vanishes": r.one_variable_vanishes,
        "factorization": "J_2 = (x1 - x2)^2 * P",
        "scale": r.scale.to_string(),
        "quotient_coeffs": r.quotient_coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "quotient_monomials": monomials,
        "palindromic": r.palindromic,
    })
}

fn interior_evidence(r: &InteriorRecord) -> Value {
    let c: serde_json::Map<String, Value> = r
        .c_polys
        .iter()
        .enumerate()
        .map(|(i, p)| (format!("c{i}"), Value::String(p.to_string())))
        .collect();
    json!({
        "profile": "(t^(k+1), 1^(l+1))",
        "nonnegative_factor": j_hat().to_string(),
        "coefficients": c,
        "table_match": r.table_match,
        "all_monomials_positive": r.all_monomials_positive,
        "reflection_symmetric": r.reflection_symmetric,
    })
}

fn boundary_evidence(r: &BoundaryRecord) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    v["t_closed_form"] = json!("T(n) = (8/3) (n^3 + 2 n^2) / (n + 1)^3");
    v["t_derivative"] = json!("T'(n) = (8/3) n (n + 4) / (n + 1)^4");
    v
}

fn step<T>(name: &str, r: &Result<T>, evidence: impl Fn(&T) -> Value) -> CertificateStep {
    match r {
        Ok(rec) => CertificateStep {
            name: name.into(),
            status: StepStatus::Pass,
            evidence: evidence(rec),
        },
        Err(e) => CertificateStep {
            name: name.into(),
            status: StepStatus::Fail,
            evidence: json!({ "error": e.to_string() }),
        },
    }
}

/// Runs all three steps (independently, in parallel) and assembles the document.
pub fn run_d8_certificate(opts: &D8Options) -> CertificateDocument {
    let (base, (interior, boundary)) = rayon::join(run_base, || {
        rayon::join(
            || run_interior(&opts.coefficients),
            || check_t_monotone(opts.t_range.0, opts.t_range.1),
        )
    });
    let steps = vec![
        step("base_case", &base, base_evidence),
        step("interior", &interior, interior_evidence),
        step("boundary", &boundary, boundary_evidence),
    ];
    let certificate = match (base, interior, boundary) {
        (Ok(base_case), Ok(interior), Ok(boundary)) => Some(D8Certificate {
            base_case,
            interior,
            boundary,
        }),
        _ => None,
    };
    let valid = certificate.as_ref().is_some_and(D8Certificate::is_valid);
    CertificateDocument {
        claim: D8_CLAIM.into(),
        steps,
        valid,
        toolkit_version: crate::VERSION.into(),
        certificate,
    }
}

/// Builds the certificate or returns the first failed step as an error.
pub fn build_d8_certificate(opts: &D8Options) -> Result<D8Certificate> {
    let doc = run_d8_certificate(opts);
    match (doc.certificate, doc.valid) {
        (Some(c), true) => Ok(c),
        _ => {
            let (step, detail) = doc
                .steps
                .iter()
                .find(|s| s.status == StepStatus::Fail)
                .map(|s| (s.name.clone(), s.evidence["error"].as_str().unwrap_or("").to_string()))
                .unwrap_or_else(|| ("assembly".into(), "certificate flags not all set".into()));
            Err(Error::Certificate { step, detail })
        }
    }
}

/// The default certificate, computed once per process.
pub fn cached_d8_certificate() -> &'static CertificateDocument {
    static CELL: OnceLock<CertificateDocument> = OnceLock::new();
    CELL.get_or_init(|| run_d8_certificate(&D8Options::default()))
}
