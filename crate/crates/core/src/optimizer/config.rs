use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::rational::{int, ratio, Rational};
use crate::sampling::DEFAULT_NUMERATOR_BOUND;

/// `{j/16 : 0 <= j <= 64} ∪ {1/3, 2/3} ∪ {2, 3, 5, 10, 100}`, sorted: 70 distinct values.
pub fn default_t_grid() -> Vec<Rational> {
    let mut grid: Vec<Rational> = (0..=64).map(|j| ratio(j, 16)).collect();
    grid.extend([ratio(1, 3), ratio(2, 3)]);
    grid.extend([2, 3, 5, 10, 100].map(int));
    grid.sort();
    grid.dedup();
    grid
}

/// Inclusive range of variable counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || hi < lo {
            return domain(format!("invalid n range {lo}..{hi} (need 1 <= lo <= hi)"));
        }
        Ok(NRange { lo, hi })
    }

    pub fn single(n: usize) -> Result<Self> {
        NRange::new(n, n)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    /// Parses `3`, `2..5` or `2-5`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid n range `{s}` (expected N or LO..HI)"));
        let (lo, hi) = match s.split_once("..").or_else(|| s.split_once('-')) {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().trim_start_matches('=').parse().map_err(|_| bad())?,
            ),
            None => {
                let n = s.parse().map_err(|_| bad())?;
                (n, n)
            }
        };
        NRange::new(lo, hi).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl std::fmt::Display for NRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Search parameters shared by the verification pipelines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchConfig {
    /// Random points per `n`.
    pub samples: u64,
    pub seed: u64,
    #[serde(with = "crate::rational::serde_rational::vec")]
    pub t_grid: Vec<Rational>,
    pub n_range: NRange,
    /// Bound on numerators and denominators of sampled coordinates.
    pub numerator_bound: u32,
    /// Points per identity check in the degree-extension chain.
    pub identity_points: u64,
    /// Bisect on derivative sign changes between grid points of each profile.
    pub refine: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            samples: 1000,
            seed: 0,
            t_grid: default_t_grid(),
            n_range: NRange { lo: 1, hi: 6 },
            numerator_bound: DEFAULT_NUMERATOR_BOUND,
            identity_points: 100,
            refine: false,
        }
    }
}

impl SearchConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SearchConfig = serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        NRange::new(self.n_range.lo, self.n_range.hi)?;
        if self.t_grid.iter().any(|t| t < &Rational::from_integer(0.into())) {
            return domain("t grid entries must be nonnegative");
        }
        if self.numerator_bound == 0 {
            return domain("numerator_bound must be positive");
        }
        Ok(())
    }

    /// Applies a single `key=value` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::Parse(format!("invalid value `{value}` for {what}"));
        match key.trim() {
            "samples" => self.samples = value.parse().map_err(|_| bad("samples"))?,
            "seed" => self.seed = value.parse().map_err(|_| bad("seed"))?,
            "numerator_bound" => self.numerator_bound = value.parse().map_err(|_| bad("numerator_bound"))?,
            "identity_points" => self.identity_points = value.parse().map_err(|_| bad("identity_points"))?,
            "refine" => self.refine = value.parse().map_err(|_| bad("refine"))?,
            "n_range" | "n" => self.n_range = NRange::parse(value)?,
            "t_grid" => {
                self.t_grid = value
                    .split(',')
                    .map(crate::rational::parse_rational)
                    .collect::<Result<Vec<_>>>()?;
            }
            other => return Err(Error::Parse(format!("unknown config key `{other}`"))),
        }
        self.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_size() {
        let g = default_t_grid();
        assert_eq!(g.len(), 70);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ranges() {
        assert_eq!(NRange::parse("2..5").unwrap(), NRange { lo: 2, hi: 5 });
        assert_eq!(NRange::parse("3").unwrap(), NRange { lo: 3, hi: 3 });
        assert_eq!(NRange::parse("1..=4").unwrap(), NRange { lo: 1, hi: 4 });
        assert!(NRange::parse("5..2").is_err());
        assert!(NRange::parse("0").is_err());
    }

    #[test]
    fn json_and_overrides() {
        let c = SearchConfig::from_json(r#"{"samples": 5, "t_grid": ["1/2", "3"], "n_range": {"lo": 2, "hi": 3}}"#)
            .unwrap();
        assert_eq!(c.samples, 5);
        assert_eq!(c.t_grid, vec![ratio(1, 2), int(3)]);
        assert_eq!(c.seed, 0);
        assert!(SearchConfig::from_json(r#"{"bogus": 1}"#).is_err());
        assert!(SearchConfig::from_json(r#"{"t_grid": ["-1"]}"#).is_err());
        let mut c = SearchConfig::default();
        c.set("seed", "9").unwrap();
        c.set("n", "2..4").unwrap();
        assert_eq!((c.seed, c.n_range.hi), (9, 4));
        assert!(c.set("nope", "1").is_err());
    }
}
