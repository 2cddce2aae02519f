//! Seeded generation of nonnegative rational evaluation points.
//!
//! Every point is a pure function of `(seed, index)`: point `i` is drawn from
//! a ChaCha stream selected by `i`, so batches can be generated in any order
//! or in parallel and still agree.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;
use crate::symmetric::EvalPoint;

pub const DEFAULT_NUMERATOR_BOUND: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// At least one coordinate is zero (when `n >= 2`).
    Boundary,
    /// All coordinates strictly positive.
    Interior,
}

#[derive(Debug, Clone)]
pub struct RationalSampler {
    seed: u64,
    bound: u32,
}

impl RationalSampler {
    /// `bound` caps both numerators and denominators.
    pub fn new(seed: u64, bound: u32) -> Self {
        RationalSampler {
            seed,
            bound: bound.max(1),
        }
    }

    fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    fn coord(&self, rng: &mut ChaCha8Rng, positive: bool) -> Rational {
        let lo = if positive { 1 } else { 0 };
        let num = rng.gen_range(lo..=self.bound);
        let den = rng.gen_range(1..=self.bound);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    /// The `index`-th point of the stream for dimension `n`.
    pub fn point(&self, index: u64, n: usize, kind: PointKind) -> EvalPoint {
        let mut rng = self.rng(index);
        let mut coords: Vec<Rational> = (0..n).map(|_| self.coord(&mut rng, true)).collect();
        if kind == PointKind::Boundary && n >= 2 {
            let zeros = rng.gen_range(1..n);
            for _ in 0..zeros {
                let i = rng.gen_range(0..n);
                coords[i] = Rational::from_integer(0.into());
            }
        }
        EvalPoint::new(coords).expect("n >= 1")
    }

    /// Boundary-heavy schedule: the first third of indices are boundary points.
    pub fn scheduled_point(&self, index: u64, total: u64, n: usize) -> EvalPoint {
        let kind = if index < total.div_ceil(3) {
            PointKind::Boundary
        } else {
            PointKind::Interior
        };
        self.point(index, n, kind)
    }

    /// `count` scheduled points, in index order.
    pub fn points(&self, count: u64, n: usize) -> Vec<EvalPoint> {
        (0..count).map(|i| self.scheduled_point(i, count, n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn deterministic_and_bounded() {
        let s = RationalSampler::new(7, 10);
        let a = s.points(50, 4);
        let b = s.points(50, 4);
        assert_eq!(a, b);
        for p in &a {
            assert_eq!(p.n(), 4);
            for c in p.coords() {
                assert!(!c.is_negative());
                assert!(c.numer() <= &BigInt::from(10));
                assert!(c.denom() <= &BigInt::from(10));
            }
        }
        assert_ne!(RationalSampler::new(8, 10).points(50, 4), a);
    }

    #[test]
    fn kinds() {
        let s = RationalSampler::new(1, 100);
        for i in 0..100 {
            let b = s.point(i, 3, PointKind::Boundary);
            assert!(b.coords().iter().any(Zero::is_zero));
            let p = s.point(i, 3, PointKind::Interior);
            assert!(p.coords().iter().all(|c| c.is_positive()));
        }
        // n = 1 never zeroes its only coordinate
        assert!(s.point(0, 1, PointKind::Boundary).coords()[0].is_positive());
    }
}
