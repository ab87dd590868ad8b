//! Witnesses on the ball: `g = |f|/r + C·sup{|∇̃f(u)| : u ∈ D(z, r)}` with the
//! sup over `φ_z` of a fixed quasi-random sample of the Euclidean ball of
//! radius `r`, and `C` calibrated on a small family of polynomials.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ViolationReport;
use crate::functions::BallPoly;
use crate::geometry::{ball_rho_raw, BallAutomorphism, BallPoint, MAX_BALL_DIM};
use crate::numerics::abs_pow_from_sq;
use crate::quadrature::BallGrid;
use crate::sampling::{ball_pair, is_near_index};
use crate::{Error, Result};

pub const BALL_SUP_POINTS: usize = 1024;
pub const CALIBRATION_SEED: u64 = 0x5eed_ba11;
/// Near pairs per calibration function.
pub const CALIBRATION_PAIRS: usize = 512;
/// Factor applied to the smallest constant passing calibration.
pub const CALIBRATION_MARGIN: f64 = 2.0;

/// `BALL_SUP_POINTS` Sobol points of the Euclidean ball of radius `r` in `C^n`.
pub fn ball_sup_sample(dim: usize, r: f64, seed: u32) -> Result<Vec<BallPoint>> {
    if !(2..=MAX_BALL_DIM).contains(&dim) {
        return Err(Error::Parameter(format!("ball dimension {dim} not in {{2, 3}}")));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Parameter(format!("radius r = {r} not in (0, 1)")));
    }
    let mut out = Vec::with_capacity(BALL_SUP_POINTS);
    let mut i = 0u32;
    while out.len() < BALL_SUP_POINTS {
        let mut c = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
        let mut n2 = 0.0;
        for (k, ck) in c.iter_mut().take(dim).enumerate() {
            let re = 2.0 * sobol_burley::sample(i, 2 * k as u32, seed) as f64 - 1.0;
            let im = 2.0 * sobol_burley::sample(i, 2 * k as u32 + 1, seed) as f64 - 1.0;
            *ck = Complex64::new(re, im);
            n2 += re * re + im * im;
        }
        if n2 < 1.0 {
            out.push(BallPoint::raw(c.map(|x| x * r), dim));
        }
        i += 1;
    }
    Ok(out)
}

/// `max |∇̃f(φ_z(v))|` over the sample.
fn sup_invariant_gradient(f: &BallPoly, z: &BallPoint, sample: &[BallPoint]) -> f64 {
    let phi = BallAutomorphism::new(*z);
    sample
        .iter()
        .map(|v| f.invariant_gradient_raw(&BallAutomorphism::new(phi.apply(v))))
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallCalibration {
    pub r: f64,
    pub dim: usize,
    pub seed: u64,
    pub pairs_per_function: usize,
    /// Smallest `C` passing every calibration pair.
    pub raw_constant: f64,
    pub constant: f64,
}

/// `z_1`, `z_1 z_2`, `z_1² + z_2²` (extra coordinates unused for `n = 3`).
pub fn calibration_family(dim: usize) -> Result<Vec<BallPoly>> {
    let e = |a: u32, b: u32| -> Vec<u32> {
        let mut v = vec![0; dim];
        v[0] = a;
        v[1] = b;
        v
    };
    Ok(vec![
        BallPoly::from_terms(dim, &[(1.0, &e(1, 0))])?,
        BallPoly::from_terms(dim, &[(1.0, &e(1, 1))])?,
        BallPoly::from_terms(dim, &[(1.0, &e(2, 0)), (1.0, &e(0, 2))])?,
    ])
}

/// Smallest `C` with `|f(z)−f(w)| ≤ ρ·C·(S(z)+S(w))` on near calibration
/// pairs, `S` the sampled sup of `|∇̃f|`, times [`CALIBRATION_MARGIN`].
///
/// The `|f|/r` term is left out on purpose: on typical pairs it covers the
/// difference by itself and the full inequality would calibrate to `C = 0`.
/// Far pairs never need `h`.
pub fn calibrate_ball_constant(family: &[BallPoly], r: f64, pairs_per_function: usize, seed: u64) -> Result<BallCalibration> {
    let dim = family.first().map(|f| f.dim()).ok_or_else(|| Error::Parameter("empty calibration family".into()))?;
    if family.iter().any(|f| f.dim() != dim) {
        return Err(Error::Type("calibration family mixes dimensions".into()));
    }
    let sample = ball_sup_sample(dim, r, seed as u32)?;
    let pairs: Vec<(BallPoint, BallPoint)> = (0..pairs_per_function as u64)
        .map(|i| ball_pair(seed, 2 * i, r, dim))
        .collect();
    let mut raw = 0.0f64;
    for f in family {
        let q: Vec<f64> = pairs
            .par_iter()
            .map(|(z, w)| {
                let fz = f.eval_raw(z);
                let fw = f.eval_raw(w);
                let rho = ball_rho_raw(z, w);
                let num = (fz - fw).norm();
                let den = rho * (sup_invariant_gradient(f, z, &sample) + sup_invariant_gradient(f, w, &sample));
                if den > 0.0 { num / den } else { 0.0 }
            })
            .collect();
        raw = q.into_iter().fold(raw, f64::max);
    }
    Ok(BallCalibration {
        r,
        dim,
        seed,
        pairs_per_function,
        raw_constant: raw,
        constant: CALIBRATION_MARGIN * raw,
    })
}

#[derive(Debug, Clone)]
pub struct BallWitness {
    f: BallPoly,
    r: f64,
    constant: f64,
    sample: Vec<BallPoint>,
}

impl BallWitness {
    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn h(&self, z: &BallPoint) -> f64 {
        self.constant * sup_invariant_gradient(&self.f, z, &self.sample)
    }

    pub fn g(&self, z: &BallPoint) -> f64 {
        self.f.eval_raw(z).norm() / self.r + self.h(z)
    }
}

pub fn build_witness_ball_with(f: &BallPoly, cal: &BallCalibration) -> Result<BallWitness> {
    if f.dim() != cal.dim {
        return Err(Error::Type("calibration and polynomial differ in dimension".into()));
    }
    Ok(BallWitness {
        f: f.clone(),
        r: cal.r,
        constant: cal.constant,
        sample: ball_sup_sample(f.dim(), cal.r, cal.seed as u32)?,
    })
}

/// Calibrates on [`calibration_family`] and builds the witness.
pub fn build_witness_ball(f: &BallPoly, r: f64) -> Result<BallWitness> {
    let cal = calibrate_ball_constant(&calibration_family(f.dim())?, r, CALIBRATION_PAIRS, CALIBRATION_SEED)?;
    build_witness_ball_with(f, &cal)
}

/// `|f(z)−f(w)| ≤ ρ(z,w)(g(z)+g(w))` on stratified ball pairs.
pub fn verify_lipschitz_ball<G>(f: &BallPoly, g: G, r: f64, n_pairs: usize, seed: u64) -> Result<ViolationReport>
where
    G: Fn(&BallPoint) -> f64 + Sync,
{
    if n_pairs == 0 {
        return Err(Error::Parameter("need at least one pair".into()));
    }
    let dim = f.dim();
    let pairs: Vec<(BallPoint, BallPoint)> = (0..n_pairs as u64).map(|i| ball_pair(seed, i, r, dim)).collect();
    let viol: Vec<f64> = pairs
        .par_iter()
        .map(|(z, w)| (f.eval_raw(z) - f.eval_raw(w)).norm() - ball_rho_raw(z, w) * (g(z) + g(w)))
        .collect();
    let i = super::argmax(&viol);
    let near = (0..n_pairs as u64).filter(|&k| is_near_index(k)).count();
    let (z, w) = &pairs[i];
    Ok(ViolationReport {
        metric: "ball-rho".into(),
        seed,
        r,
        pairs: n_pairs,
        near_pairs: near,
        far_pairs: n_pairs - near,
        max_violation: viol[i],
        argmax: z.coords().iter().chain(w.coords()).map(|c| [c.re, c.im]).collect(),
    })
}

/// The four quantities whose finiteness is equivalent on the ball:
/// `∫|f|^p`, and `|f(0)|^p` plus `∫|(1−|z|²)Rf|^p`, `∫((1−|z|²)|∇f|)^p`, `∫|∇̃f|^p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivativeIntegrals {
    pub norm: f64,
    pub radial: f64,
    pub gradient: f64,
    pub invariant: f64,
}

impl DerivativeIntegrals {
    pub fn ratios(&self) -> [f64; 3] {
        [self.radial / self.norm, self.gradient / self.norm, self.invariant / self.norm]
    }
}

pub fn derivative_integrals(f: &BallPoly, p: f64, grid: &BallGrid) -> Result<DerivativeIntegrals> {
    if f.dim() != grid.dim() {
        return Err(Error::Type("polynomial and ball grid differ in dimension".into()));
    }
    let f0 = f.eval_raw(&BallPoint::origin(f.dim())?).norm().powf(p);
    let pw = |x: f64| abs_pow_from_sq(x * x, p);
    Ok(DerivativeIntegrals {
        norm: grid.integrate(|z| pw(f.eval_raw(z).norm())),
        radial: f0 + grid.integrate(|z| pw((1.0 - z.norm_sqr()) * f.radial_raw(z).norm())),
        gradient: f0 + grid.integrate(|z| pw((1.0 - z.norm_sqr()) * f.gradient_norm_raw(z))),
        invariant: f0 + grid.integrate(|z| pw(f.invariant_gradient_raw(&BallAutomorphism::new(*z)))),
    })
}
