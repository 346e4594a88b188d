//! Seeded sampling of small rationals and points in general position.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{ratio, ProjectivePoint, Rational};
use crate::Error;

pub const DEFAULT_BOUND: i64 = 20;
pub const DEFAULT_RETRIES: usize = 1000;

/// Reproducible source of small random rationals `p/q` with `|p| <= bound`
/// and `1 <= q <= bound`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
    retries: usize,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bound(seed, DEFAULT_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        assert!(bound >= 1, "coefficient bound must be positive");
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
            retries: DEFAULT_RETRIES,
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn integer(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn index(&mut self, below: usize) -> usize {
        self.rng.gen_range(0..below)
    }

    pub fn rational(&mut self) -> Rational {
        let den = self.rng.gen_range(1..=self.bound);
        ratio(self.integer(), den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    /// Random point with `len` homogeneous coordinates.
    pub fn point(&mut self, len: usize) -> ProjectivePoint {
        loop {
            if let Ok(p) = ProjectivePoint::new(self.vector(len)) {
                return p;
            }
        }
    }

    /// Draws until `accept` holds, giving up after the retry budget.
    pub fn until<T>(
        &mut self,
        mut draw: impl FnMut(&mut Self) -> T,
        mut accept: impl FnMut(&T) -> bool,
    ) -> Result<T, Error> {
        for _ in 0..self.retries {
            let candidate = draw(self);
            if accept(&candidate) {
                return Ok(candidate);
            }
        }
        Err(Error::SamplingExhausted(self.retries))
    }

    /// Random point whose coordinates are nonzero and pairwise distinct.
    pub fn distinct_coordinate_point(&mut self, len: usize) -> Result<ProjectivePoint, Error> {
        self.until(|s| s.vector(len), |v| distinct_nonzero(v))
            .map(|v| ProjectivePoint::new(v).expect("nonzero coordinates"))
    }

    /// Random `k`-subset of `0..n`, sorted.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = self.rng.gen_range(i..n);
            all.swap(i, j);
        }
        let mut s = all[..k].to_vec();
        s.sort_unstable();
        s
    }

    /// Uniform random permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.rng.gen_range(0..=i);
            all.swap(i, j);
        }
        all
    }
}

/// All entries nonzero and pairwise distinct.
pub fn distinct_nonzero(v: &[Rational]) -> bool {
    use num_traits::Zero;
    v.iter().all(|x| !x.is_zero())
        && v.iter()
            .enumerate()
            .all(|(i, a)| v[i + 1..].iter().all(|b| a != b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_seed() {
        let a: Vec<_> = (0..10).map({
            let mut s = Sampler::new(7);
            move |_| s.rational()
        }).collect();
        let b: Vec<_> = (0..10).map({
            let mut s = Sampler::new(7);
            move |_| s.rational()
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn respects_bound() {
        let mut s = Sampler::with_bound(1, 3);
        for _ in 0..200 {
            let r = s.rational();
            assert!(r.numer().magnitude() <= &3u32.into());
            assert!(r.denom() <= &3.into());
        }
    }

    #[test]
    fn subsets_and_permutations() {
        let mut s = Sampler::new(3);
        let sub = s.subset(7, 3);
        assert_eq!(sub.len(), 3);
        assert!(sub.windows(2).all(|w| w[0] < w[1]));
        let mut p = s.permutation(6);
        p.sort_unstable();
        assert_eq!(p, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn exhausted_retries_is_an_error() {
        let mut s = Sampler::new(0);
        assert_eq!(
            s.until(|s| s.integer(), |&v| v > 100).unwrap_err(),
            Error::SamplingExhausted(DEFAULT_RETRIES)
        );
    }
}
