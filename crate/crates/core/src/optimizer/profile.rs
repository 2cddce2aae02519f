//! Two-value profiles `(t^u, 1^v)` and exact scans over them.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::partition::Partition;
use crate::poly::SparsePoly;
use crate::rational::{int, Rational};
use crate::symmetric::{
    complete_h_from_power_sums, eval_normalized_pair, normalization_constant, product_over_parts, EvalPoint, FamilyTag,
};

/// The point with `u` coordinates equal to `t` and `v` equal to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfilePoint {
    #[serde(with = "crate::rational::serde_rational")]
    pub t: Rational,
    pub u: usize,
    pub v: usize,
}

impl ProfilePoint {
    pub fn new(t: Rational, u: usize, v: usize) -> Result<Self> {
        if u + v == 0 {
            return domain("profile needs at least one coordinate");
        }
        if t.is_negative() {
            return domain(format!("profile value t = {t} is negative"));
        }
        Ok(ProfilePoint { t, u, v })
    }

    pub fn n(&self) -> usize {
        self.u + self.v
    }

    /// `p_k = u t^k + v` for `k = 1..=kmax`.
    pub fn power_sums(&self, kmax: u32) -> Vec<Rational> {
        let (u, v) = (int(self.u as i64), int(self.v as i64));
        let mut tk = Rational::one();
        (1..=kmax)
            .map(|_| {
                tk = &tk * &self.t;
                &u * &tk + &v
            })
            .collect()
    }

    pub fn to_eval_point(&self) -> EvalPoint {
        let mut coords = vec![self.t.clone(); self.u];
        coords.extend(std::iter::repeat_n(Rational::one(), self.v));
        EvalPoint::nonnegative(coords).expect("t >= 0")
    }

    /// The same ray scaled onto the simplex `Σ x_i = 1`.
    pub fn on_simplex(&self) -> EvalPoint {
        let x = self.to_eval_point();
        let s: Rational = x.coords().iter().sum();
        x.scaled(&s.recip())
    }

    /// `F_μ - F_λ` at this profile.
    pub fn gap(&self, family: FamilyTag, mu: &Partition, lambda: &Partition) -> Result<Rational> {
        match family {
            FamilyTag::CompleteH => {
                let kmax = mu.largest_part().max(lambda.largest_part());
                let h = complete_h_from_power_sums(&self.power_sums(kmax), kmax as usize);
                let n = self.n();
                Ok(product_over_parts(&h, mu) / normalization_constant(family, n, mu)?
                    - product_over_parts(&h, lambda) / normalization_constant(family, n, lambda)?)
            }
            _ => {
                let (a, b) = eval_normalized_pair(family, mu, lambda, &self.to_eval_point())?;
                Ok(a - b)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileScan {
    pub n: usize,
    /// Number of `(u, t)` combinations evaluated.
    pub evaluations: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub min_gap: Rational,
    pub argmin: ProfilePoint,
    /// Extra candidates found by bisecting the derivative, if refinement ran.
    pub refined_candidates: usize,
}

fn check_grid(t_grid: &[Rational]) -> Result<()> {
    if t_grid.is_empty() {
        return domain("t grid is empty");
    }
    if t_grid.iter().any(|t| t.is_negative()) {
        return domain("t grid entries must be nonnegative");
    }
    Ok(())
}

/// Exact minimum of `F_μ - F_λ` over `u = 1..=n`, `v = n - u`, `t ∈ t_grid`.
///
/// Ties keep the first candidate in `(u, grid)` order, so the result does not
/// depend on thread scheduling.
pub fn profile_scan(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    n: usize,
    t_grid: &[Rational],
) -> Result<ProfileScan> {
    if n < 2 {
        return domain(format!("profile scans need n >= 2, got {n}"));
    }
    check_grid(t_grid)?;
    let candidates: Vec<ProfilePoint> = (1..=n)
        .flat_map(|u| {
            t_grid.iter().map(move |t| ProfilePoint {
                t: t.clone(),
                u,
                v: n - u,
            })
        })
        .collect();
    let gaps = candidates
        .par_iter()
        .map(|c| c.gap(family, mu, lambda))
        .collect::<Result<Vec<_>>>()?;
    let best = argmin(&gaps);
    Ok(ProfileScan {
        n,
        evaluations: candidates.len(),
        min_gap: gaps[best].clone(),
        argmin: candidates[best].clone(),
        refined_candidates: 0,
    })
}

fn argmin(values: &[Rational]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if v < &values[best] {
            best = i;
        }
    }
    best
}

/// `F_μ - F_λ` at `(t^u, 1^v)` as a polynomial in `t` (complete-h and power-sum families).
pub fn profile_polynomial(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    u: usize,
    v: usize,
) -> Result<SparsePoly> {
    let n = u + v;
    let kmax = mu.largest_part().max(lambda.largest_part());
    let t = SparsePoly::var("t");
    let (uc, vc) = (SparsePoly::constant(int(u as i64)), SparsePoly::constant(int(v as i64)));
    let p: Vec<SparsePoly> = (1..=kmax).map(|k| &(&uc * &t.pow(k)) + &vc).collect();
    let table: Vec<SparsePoly> = match family {
        FamilyTag::PowerSum => std::iter::once(SparsePoly::one()).chain(p).collect(),
        FamilyTag::CompleteH => {
            let mut h = vec![SparsePoly::one()];
            for k in 1..=kmax as usize {
                let s: SparsePoly = (1..=k).map(|i| &h[k - i] * &p[i - 1]).sum();
                h.push(s.scale(&int(k as i64).recip()));
            }
            h
        }
        FamilyTag::Monomial => {
            return domain("profile polynomials are built for the h and p families only");
        }
    };
    let side = |lam: &Partition| -> Result<SparsePoly> {
        let prod: SparsePoly = lam.parts().iter().map(|&k| table[k as usize].clone()).product();
        Ok(prod.scale(&normalization_constant(family, n, lam)?.recip()))
    };
    Ok(&side(mu)? - &side(lambda)?)
}

/// Bisects sign changes of the derivative of `g` between consecutive grid
/// points and returns the interior local-minimum candidates found.
pub fn refine_minimum(g: &SparsePoly, t_grid: &[Rational], iterations: u32) -> Result<Vec<Rational>> {
    let g = g.with_vars(&["t".to_string()])?;
    let dg = g.differentiate("t")?;
    let at = |p: &SparsePoly, t: &Rational| p.evaluate(&[("t", t.clone())]);
    let mut out = Vec::new();
    for w in t_grid.windows(2) {
        let (mut lo, mut hi) = (w[0].clone(), w[1].clone());
        if lo >= hi {
            continue;
        }
        let (dlo, dhi) = (at(&dg, &lo)?, at(&dg, &hi)?);
        // A minimum lies where g' goes from negative to positive.
        if !(dlo.is_negative() && dhi.is_positive()) {
            continue;
        }
        let two = int(2);
        for _ in 0..iterations {
            let mid = (&lo + &hi) / &two;
            if at(&dg, &mid)?.is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push((lo + hi) / two);
    }
    Ok(out)
}

/// [`profile_scan`] followed by derivative bisection on every `u` split.
pub fn refined_profile_scan(
    family: FamilyTag,
    mu: &Partition,
    lambda: &Partition,
    n: usize,
    t_grid: &[Rational],
    iterations: u32,
) -> Result<ProfileScan> {
    let mut scan = profile_scan(family, mu, lambda, n, t_grid)?;
    if family == FamilyTag::Monomial {
        return Ok(scan);
    }
    let mut grid = t_grid.to_vec();
    grid.sort();
    grid.dedup();
    let extra = (1..=n)
        .into_par_iter()
        .map(|u| -> Result<Vec<ProfilePoint>> {
            let g = profile_polynomial(family, mu, lambda, u, n - u)?;
            if g.is_zero() {
                return Ok(Vec::new());
            }
            Ok(refine_minimum(&g, &grid, iterations)?
                .into_iter()
                .map(|t| ProfilePoint { t, u, v: n - u })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;
    for c in extra.into_iter().flatten() {
        scan.refined_candidates += 1;
        let gap = c.gap(family, mu, lambda)?;
        if gap < scan.min_gap {
            scan.min_gap = gap;
            scan.argmin = c;
        }
    }
    Ok(scan)
}

/// Whether a scan found a strictly negative gap.
pub fn scan_violates(scan: &ProfileScan) -> bool {
    scan.min_gap < Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::default_t_grid;
    use crate::rational::ratio;
    use crate::symmetric::eval_normalized;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn power_sum_shortcut_matches_direct_evaluation() {
        let (mu, lambda) = (p("4,4"), p("5,2,1"));
        for (t, u, v) in [(ratio(3, 7), 1, 2), (int(5), 2, 2), (int(0), 3, 1), (ratio(1, 2), 4, 0)] {
            let pp = ProfilePoint::new(t, u, v).unwrap();
            let x = pp.to_eval_point();
            let direct = eval_normalized(FamilyTag::CompleteH, x.n(), &mu, &x).unwrap()
                - eval_normalized(FamilyTag::CompleteH, x.n(), &lambda, &x).unwrap();
            assert_eq!(pp.gap(FamilyTag::CompleteH, &mu, &lambda).unwrap(), direct);
        }
    }

    #[test]
    fn profile_polynomial_agrees_with_gap() {
        for family in [FamilyTag::CompleteH, FamilyTag::PowerSum] {
            let g = profile_polynomial(family, &p("4,4"), &p("5,2,1"), 2, 1).unwrap();
            for t in [int(0), ratio(2, 3), int(4)] {
                let pp = ProfilePoint::new(t.clone(), 2, 1).unwrap();
                assert_eq!(
                    g.evaluate(&[("t", t)]).unwrap(),
                    pp.gap(family, &p("4,4"), &p("5,2,1")).unwrap()
                );
            }
        }
    }

    #[test]
    fn scan_finds_negative_gap_for_six_two_pair() {
        let grid = [int(0), int(1), int(2)];
        let s = profile_scan(FamilyTag::CompleteH, &p("2,2,2"), &p("3,1,1,1"), 3, &grid).unwrap();
        assert!(scan_violates(&s));
        assert_eq!(s.evaluations, 9);
    }

    #[test]
    fn scan_nonnegative_for_eight_pairs_at_n3() {
        let grid = default_t_grid();
        for (mu, lambda) in [("2,2,2,2", "3,1,1,1,1,1"), ("4,4", "5,2,1")] {
            let s = profile_scan(FamilyTag::CompleteH, &p(mu), &p(lambda), 3, &grid).unwrap();
            assert!(!scan_violates(&s), "{mu} {lambda} {}", s.min_gap);
        }
    }

    #[test]
    fn scan_nonnegative_for_majorizing_pair() {
        let s = profile_scan(FamilyTag::CompleteH, &p("3"), &p("2,1"), 3, &default_t_grid()).unwrap();
        assert!(!scan_violates(&s));
        assert!(s.min_gap.is_zero()); // equality at t = 1
    }

    #[test]
    fn refinement_never_worsens() {
        let grid = default_t_grid();
        let a = profile_scan(FamilyTag::CompleteH, &p("4,4"), &p("5,2,1"), 3, &grid).unwrap();
        let b = refined_profile_scan(FamilyTag::CompleteH, &p("4,4"), &p("5,2,1"), 3, &grid, 30).unwrap();
        assert!(b.min_gap <= a.min_gap);
    }

    #[test]
    fn gradient_is_quadratic_at_refined_profile_points() {
        let (mu, lambda) = (p("2,2,2,2"), p("3,1,1,1,1,1"));
        let grid = default_t_grid();
        for u in 1..3 {
            let g = profile_polynomial(FamilyTag::CompleteH, &mu, &lambda, u, 3 - u).unwrap();
            for t in refine_minimum(&g, &grid, 20).unwrap() {
                let x = ProfilePoint::new(t, u, 3 - u).unwrap().on_simplex();
                assert!(crate::certificate::lagrange_consistency(&x).unwrap());
            }
        }
        let s = refined_profile_scan(FamilyTag::CompleteH, &mu, &lambda, 3, &grid, 20).unwrap();
        assert!(crate::certificate::lagrange_consistency(&s.argmin.on_simplex()).unwrap());
        assert!(!scan_violates(&s));
    }

    #[test]
    fn bisection_locates_quadratic_minimum() {
        let g: SparsePoly = crate::poly::parse_poly("t^2 - t").unwrap();
        let r = refine_minimum(&g, &[int(0), int(1)], 40).unwrap();
        assert_eq!(r.len(), 1);
        assert!((&r[0] - ratio(1, 2)).abs() < ratio(1, 1 << 30));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(profile_scan(FamilyTag::CompleteH, &p("2"), &p("1,1"), 1, &default_t_grid()).is_err());
        assert!(profile_scan(FamilyTag::CompleteH, &p("2"), &p("1,1"), 2, &[]).is_err());
        assert!(ProfilePoint::new(int(-1), 1, 1).is_err());
    }
}
