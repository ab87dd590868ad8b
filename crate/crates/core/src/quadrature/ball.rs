//! Quasi-Monte Carlo for `dv_α` on the unit ball of `C^n`.
//!
//! Owen-scrambled Sobol points fill the cube `[−1, 1]^{2n}`; points outside the
//! ball are dropped and the survivors carry the density of `dv_α` times the
//! cube-to-ball volume factor `4^n n!/π^n`. The sampler serves at most
//! [`SOBOL_BLOCK`] indices per seed, so longer scans are split into blocks,
//! each an independently scrambled sequence.

use num_complex::Complex64;
use rayon::prelude::*;
use statrs::function::gamma::ln_gamma;

use crate::geometry::{BallPoint, MAX_BALL_DIM};
use crate::numerics::pairwise_sum;
use crate::{Error, Result};

pub const DEFAULT_BALL_POINTS: usize = 1 << 20;
pub const SOBOL_BLOCK: u32 = 1 << 16;

/// Coordinate `dimension` of sample `index`, blocked as described above.
pub(crate) fn sobol(index: u32, dimension: u32, seed: u32) -> f64 {
    let block = index / SOBOL_BLOCK;
    let seed = seed.wrapping_add(block.wrapping_mul(0x9e37_79b9));
    sobol_burley::sample(index % SOBOL_BLOCK, dimension, seed) as f64
}

#[derive(Debug, Clone)]
pub struct BallGrid {
    dim: usize,
    alpha: f64,
    points: Vec<BallPoint>,
    weights: Vec<f64>,
}

/// `c_α = Γ(n+α+1) / (n! Γ(α+1))`, making `dv_α` a probability measure.
pub fn ball_weight_constant(dim: usize, alpha: f64) -> f64 {
    let n = dim as f64;
    (ln_gamma(n + alpha + 1.0) - ln_gamma(n + 1.0) - ln_gamma(alpha + 1.0)).exp()
}

impl BallGrid {
    /// Scans `n_samples` cube points (sample indices `0..n_samples`).
    pub fn new(dim: usize, alpha: f64, n_samples: usize, seed: u32) -> Result<Self> {
        if !(2..=MAX_BALL_DIM).contains(&dim) {
            return Err(Error::Parameter(format!("ball dimension {dim} not in {{2, 3}}")));
        }
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::Parameter(format!("weight α = {alpha} must exceed −1")));
        }
        if n_samples == 0 || n_samples > u32::MAX as usize {
            return Err(Error::Parameter("sample count out of range".into()));
        }
        let n = dim as f64;
        let log_fact: f64 = ln_gamma(n + 1.0);
        let volume = (n * 4f64.ln() + log_fact - n * std::f64::consts::PI.ln()).exp();
        let scale = ball_weight_constant(dim, alpha) * volume / n_samples as f64;
        let found: Vec<Option<(BallPoint, f64)>> = (0..n_samples as u32)
            .into_par_iter()
            .map(|i| {
                let mut c = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
                let mut r2 = 0.0;
                for (k, ck) in c.iter_mut().take(dim).enumerate() {
                    let re = 2.0 * sobol(i, 2 * k as u32, seed) - 1.0;
                    let im = 2.0 * sobol(i, 2 * k as u32 + 1, seed) - 1.0;
                    *ck = Complex64::new(re, im);
                    r2 += re * re + im * im;
                }
                (r2 < 1.0).then(|| (BallPoint::raw(c, dim), scale * (1.0 - r2).powf(alpha)))
            })
            .collect();
        let (points, weights) = found.into_iter().flatten().unzip();
        Ok(Self { dim, alpha, points, weights })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[BallPoint] {
        &self.points
    }

    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(&BallPoint) -> f64 + Sync,
    {
        let vals: Vec<f64> = self
            .points
            .par_iter()
            .zip(&self.weights)
            .map(|(z, w)| w * f(z))
            .collect();
        pairwise_sum(&vals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_radial_moment() {
        for &alpha in &[0.0, 1.0] {
            let g = BallGrid::new(2, alpha, 1 << 16, 3).unwrap();
            assert!((g.integrate(|_| 1.0) - 1.0).abs() < 1e-2);
        }
        // ∫|z_1|² dv_0 = 1/(n+1)
        let g = BallGrid::new(2, 0.0, 1 << 16, 3).unwrap();
        let v = g.integrate(|z| z.coords()[0].norm_sqr());
        assert!((v / (1.0 / 3.0) - 1.0).abs() < 1e-2, "{v}");
    }

    #[test]
    fn blocks_beyond_the_sampler_limit() {
        let g = BallGrid::new(3, 0.0, 1 << 18, 5).unwrap();
        assert!((g.integrate(|_| 1.0) - 1.0).abs() < 2e-3);
        assert_ne!(sobol(1, 0, 5), sobol(1 + SOBOL_BLOCK, 0, 5));
    }

    #[test]
    fn constant_matches_gamma() {
        assert!((ball_weight_constant(2, 0.0) - 1.0).abs() < 1e-14);
        assert!((ball_weight_constant(2, 1.0) - 3.0).abs() < 1e-12);
    }
}
