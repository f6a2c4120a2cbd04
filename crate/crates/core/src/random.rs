//! Seeded random graphical sequences with prescribed extreme terms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::degseq::{is_graphical_sorted, DegreeSequence};
use crate::error::{Error, Result};

pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    pub p_low: f64,
    pub p_high: f64,
    pub count: usize,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(n: usize, p_low: f64, p_high: f64, count: usize, seed: u64) -> Result<Self> {
        let spec = Self { n, p_low, p_high, count, seed };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.n < 3 {
            return bad(format!("n = {} is below 3", self.n));
        }
        if !(0.0 < self.p_low && self.p_low < self.p_high && self.p_high <= 1.0) {
            return bad(format!("need 0 < p_l < p_h <= 1, got {} and {}", self.p_low, self.p_high));
        }
        Ok(())
    }

    /// Smallest and largest term every generated sequence contains.
    pub fn bounds(&self) -> (u32, u32) {
        let n = self.n as f64;
        let hi = ((self.p_high * n).round() as u32).min(self.n as u32 - 1).max(2);
        let lo = ((self.p_low * n).round() as u32).max(2).min(hi);
        (lo, hi)
    }
}

/// One draw: uniform terms in `[lo, hi]` with both ends pinned, made even
/// by lowering a term that stays at least 2.
fn draw(rng: &mut ChaCha8Rng, n: usize, lo: u32, hi: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    d[a] = hi;
    d[b] = lo;
    let sum: u64 = d.iter().map(|&v| v as u64).sum();
    if sum % 2 == 1 {
        // prefer an unpinned term so both extremes survive
        let free: Vec<usize> = (0..n).filter(|&i| i != a && i != b && d[i] > lo.max(2)).collect();
        let any: Vec<usize> = (0..n).filter(|&i| d[i] > 2).collect();
        match free.choose(rng).or_else(|| any.choose(rng)) {
            Some(&i) => d[i] -= 1,
            None => d[a] += 1,
        }
    }
    d.sort_unstable_by(|x, y| y.cmp(x));
    d
}

/// Deterministic sampler; each spec seed gives the same stream.
pub struct Generator {
    rng: ChaCha8Rng,
    n: usize,
    lo: u32,
    hi: u32,
}

impl Generator {
    pub fn new(spec: &RandomSpec) -> Result<Self> {
        spec.validate()?;
        let (lo, hi) = spec.bounds();
        Ok(Self { rng: ChaCha8Rng::seed_from_u64(spec.seed), n: spec.n, lo, hi })
    }

    pub fn sample(&mut self) -> Result<DegreeSequence> {
        for _ in 0..MAX_ATTEMPTS {
            let d = draw(&mut self.rng, self.n, self.lo, self.hi);
            if (d[0] as usize) < self.n && is_graphical_sorted(&d) {
                return Ok(DegreeSequence::from_sorted_unchecked(d));
            }
        }
        Err(Error::GenerationFailure(MAX_ATTEMPTS))
    }
}

pub fn generate(spec: &RandomSpec) -> Result<Vec<DegreeSequence>> {
    let mut g = Generator::new(spec)?;
    (0..spec.count).map(|_| g.sample()).collect()
}

fn steps(from: u32, to: u32, step: u32, scale: f64) -> impl Iterator<Item = f64> {
    (from..=to).step_by(step as usize).map(move |k| k as f64 / scale)
}

/// The (p_l, p_h) pairs of the standard experiment grid.
pub fn experiment_grid() -> Vec<(f64, f64)> {
    let mut rows: Vec<(f64, Vec<f64>)> = Vec::new();
    let tenths = |from: u32, to: u32| steps(from, to, 1, 10.0);
    let hundredths = |v: &[u32]| v.iter().map(|&k| k as f64 / 100.0).collect::<Vec<_>>();

    let mut r: Vec<f64> = steps(2, 10, 1, 100.0).chain(tenths(2, 7)).collect();
    r.extend(hundredths(&[80, 90, 95, 97, 99]));
    rows.push((0.01, r));

    let mut r: Vec<f64> = steps(4, 10, 1, 100.0).chain(tenths(2, 7)).collect();
    r.extend(hundredths(&[72, 73, 74, 75, 80, 85, 90, 94, 96, 99]));
    rows.push((0.03, r));

    let mut r = hundredths(&[8, 10]);
    r.extend(tenths(2, 7));
    r.extend(hundredths(&[71, 73, 77, 80, 85, 88, 89, 95, 99]));
    rows.push((0.06, r));

    rows.push((0.1, hundredths(&[15, 25, 35, 45, 55, 65, 68, 70, 75, 80, 82, 85, 90])));
    rows.push((0.2, hundredths(&[30, 40, 50, 60, 62, 65, 68, 70, 80, 90])));
    rows.push((0.3, hundredths(&[35, 45, 55, 56, 58, 60, 62, 70, 80, 90])));
    rows.push((0.4, hundredths(&[44, 48, 52, 53, 54, 55, 56, 60, 70, 80, 90])));

    let mut r: Vec<f64> = steps(491, 502, 1, 1000.0).collect();
    r.extend(steps(504, 508, 2, 1000.0));
    r.extend(steps(51, 60, 1, 100.0));
    r.extend(tenths(7, 9));
    rows.push((0.49, r));

    rows.into_iter().flat_map(|(lo, his)| his.into_iter().map(move |hi| (lo, hi))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::is_graphical;
    use proptest::prelude::*;

    #[test]
    fn example_spec() {
        let spec = RandomSpec::new(20, 0.2, 0.8, 5, 1).unwrap();
        let out = generate(&spec).unwrap();
        assert_eq!(out.len(), 5);
        for d in &out {
            assert_eq!((d.min_term(), d.max_term()), (4, 16));
            assert!(is_graphical(d));
        }
    }

    #[test]
    fn deterministic() {
        let spec = RandomSpec::new(50, 0.1, 0.6, 4, 9).unwrap();
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn invalid_specs() {
        assert!(RandomSpec::new(10, 0.5, 0.4, 1, 0).is_err());
        assert!(RandomSpec::new(2, 0.1, 0.4, 1, 0).is_err());
    }

    #[test]
    fn grid_shape() {
        let grid = experiment_grid();
        assert!(grid.iter().all(|&(lo, hi)| lo < hi && hi < 1.0));
        assert!(grid.contains(&(0.49, 0.495)));
        assert!(grid.contains(&(0.03, 0.74)));
        assert_eq!(grid.iter().filter(|p| p.0 == 0.49).count(), 28);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn output_contract(n in 5usize..80, a in 0.0f64..0.45, w in 0.05f64..0.5, seed: u64) {
            let spec = RandomSpec::new(n, a.max(0.002), (a + w).min(0.99), 3, seed).unwrap();
            for d in generate(&spec).unwrap() {
                prop_assert!(is_graphical(&d));
                prop_assert!(d.min_term() >= 2);
                prop_assert!((d.max_term() as usize) < n);
                prop_assert_eq!(d.len(), n);
            }
        }
    }
}
