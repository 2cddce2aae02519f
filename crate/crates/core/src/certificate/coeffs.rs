use crate::error::{Error, Result};
use crate::poly::{parse_poly, SparsePoly};

/// Reference expressions for `c_0, …, c_6` as polynomials in `k, l`.
pub const DEFAULT_COEFFICIENTS: &str = include_str!("../../data/c_coefficients.txt");

const STEP: &str = "interior";

/// Parsed reference expressions, indexed by the power of `t`.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    entries: Vec<(usize, String, SparsePoly)>,
}

impl CoefficientTable {
    /// Parses `cI = <expr>` entries. `#` starts a comment line; other lines that do not
    /// start a new entry continue the previous expression.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw: Vec<(usize, String)> = Vec::new();
        for line in text.lines() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let header = trimmed.split_once('=').and_then(|(lhs, rhs)| {
                let idx = lhs.trim().strip_prefix('c')?.trim_start_matches('_');
                Some((idx.parse::<usize>().ok()?, rhs))
            });
            match (header, raw.last_mut()) {
                (Some((i, rhs)), _) => raw.push((i, rhs.trim().to_string())),
                (None, Some((_, expr))) => {
                    expr.push(' ');
                    expr.push_str(trimmed);
                }
                (None, None) => return Err(Error::Parse(format!("coefficient table: stray line `{trimmed}`"))),
            }
        }
        let mut entries = Vec::with_capacity(raw.len());
        for (i, expr) in raw {
            let poly = parse_poly(&expr).map_err(|e| Error::Parse(format!("coefficient table entry c{i}: {e}")))?;
            if entries.iter().any(|(j, _, _)| *j == i) {
                return Err(Error::Parse(format!("coefficient table: c{i} given twice")));
            }
            entries.push((i, expr, poly));
        }
        entries.sort_by_key(|(i, _, _)| *i);
        Ok(CoefficientTable { entries })
    }

    pub fn reference() -> Self {
        CoefficientTable::parse(DEFAULT_COEFFICIENTS).expect("bundled coefficient table parses")
    }

    pub fn get(&self, i: usize) -> Option<&SparsePoly> {
        self.entries.iter().find(|(j, _, _)| *j == i).map(|(_, _, p)| p)
    }

    pub fn source(&self, i: usize) -> Option<&str> {
        self.entries
            .iter()
            .find(|(j, _, _)| *j == i)
            .map(|(_, s, _)| s.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct InteriorRecord {
    /// `c_0, …, c_6` extracted from `J̆` as polynomials in `k, l`.
    pub c_polys: Vec<SparsePoly>,
    pub all_monomials_positive: bool,
    pub table_match: bool,
    /// `c_i(k, l) = c_{6-i}(l, k)` for every `i`.
    pub reflection_symmetric: bool,
}

fn fail(detail: String) -> Error {
    Error::Certificate {
        step: STEP.into(),
        detail,
    }
}

/// Extracts the coefficients of `t` in `jbreve`, compares each with the reference table and
/// checks that every monomial coefficient is strictly positive.
pub fn verify_interior_coeffs(jbreve: &SparsePoly, table: &CoefficientTable) -> Result<InteriorRecord> {
    let kl: Vec<String> = vec!["k".into(), "l".into()];
    let c_polys = jbreve
        .collect_coefficients("t")
        .into_iter()
        .map(|c| c.with_vars(&kl))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| fail(format!("coefficients involve variables other than k, l: {e}")))?;
    if c_polys.len() != 7 {
        return Err(fail(format!(
            "expected degree 6 in t, got {}",
            c_polys.len() as i64 - 1
        )));
    }
    for (i, c) in c_polys.iter().enumerate() {
        let reference = table
            .get(i)
            .ok_or_else(|| fail(format!("reference table has no entry for c{i}")))?;
        if c != reference {
            let diff = (c - reference).to_string();
            return Err(fail(format!(
                "c{i} does not match its reference expression; difference {diff}"
            )));
        }
        if c.is_zero() {
            return Err(fail(format!("c{i} is identically zero")));
        }
        if let Some((m, coeff)) = c.first_nonpositive_term() {
            return Err(fail(format!(
                "c{i} has nonpositive coefficient {} on monomial {}",
                crate::rational::format_rational(&coeff),
                c.format_monomial(&m)
            )));
        }
    }
    let reflection_symmetric = (0..7).all(|i| {
        c_polys[6 - i]
            .rename(&[("k", "l"), ("l", "k")])
            .map(|swapped| swapped == c_polys[i])
            .unwrap_or(false)
    });
    Ok(InteriorRecord {
        c_polys,
        all_monomials_positive: true,
        table_match: true,
        reflection_symmetric,
    })
}
