//! Lipschitz witnesses: a continuous `g ≥ 0` with
//! `|f(z) − f(w)| ≤ d(z, w)(g(z) + g(w))`, built from `f` and checked on
//! seeded pair samples.
//!
//! For `ρ` and `β` the witness is `g = |f|/r + h` with
//! `h(z) = s·C(r)·sup{(1−|u|²)|f′(u)| : u ∈ D(z, r)}`, the sup taken over a
//! polar sample of the Euclidean image of `D(z, r)` and `s` a small safety
//! factor. For the Euclidean distance the same `g` is divided by `1 − |z|`.

mod ball;

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

pub use ball::{
    ball_sup_sample, build_witness_ball, build_witness_ball_with, calibrate_ball_constant,
    calibration_family, derivative_integrals, verify_lipschitz_ball, BallCalibration, BallWitness,
    DerivativeIntegrals, BALL_SUP_POINTS, CALIBRATION_SEED,
};

use crate::functions::{DiskFunction, TaylorPoly};
use crate::geometry::{metric_c, pseudo_disk_c, Metric};
use crate::quadrature::{AngularRule, DiskGrid, GridSpec, NormResult};
use crate::sampling::{disk_pair, is_near_index};
use crate::{Error, Result};

/// Radii and angles of the polar sample of `D(z, r)`.
pub const SUP_GRID: usize = 32;
/// Multiplier on `h` covering the gap between the sampled and the true sup.
pub const SUP_SAFETY: f64 = 1.05;

/// `C(r) = (1+r)/(1−r)²`.
pub fn disk_constant(r: f64) -> f64 {
    (1.0 + r) / ((1.0 - r) * (1.0 - r))
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Parameter(format!("radius r = {r} not in (0, 1)")));
    }
    Ok(())
}

/// Evaluates `max (1−|u|²)|f′(u)|` over the polar sample of a Euclidean disk.
#[derive(Clone)]
struct SupSampler {
    derivative: Option<TaylorPoly>,
    fft: Arc<dyn Fft<f64>>,
    roots: [Complex64; SUP_GRID],
}

fn roots_of_unity() -> [Complex64; SUP_GRID] {
    std::array::from_fn(|k| Complex64::from_polar(1.0, TAU * k as f64 / SUP_GRID as f64))
}

impl std::fmt::Debug for SupSampler {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SupSampler").field("derivative", &self.derivative).finish()
    }
}

impl SupSampler {
    fn new(f: &DiskFunction) -> Self {
        let fft = FftPlanner::new().plan_fft_inverse(SUP_GRID);
        Self { derivative: f.as_poly().map(|p| p.derivative_poly()), fft, roots: roots_of_unity() }
    }

    fn radius(j: usize, big_r: f64) -> f64 {
        big_r * j as f64 / (SUP_GRID - 1) as f64
    }

    fn direct(f: &DiskFunction, center: Complex64, big_r: f64) -> f64 {
        let roots = roots_of_unity();
        let mut best = 0.0f64;
        for j in 0..SUP_GRID {
            let t = Self::radius(j, big_r);
            for w in &roots {
                let u = center + w * t;
                best = best.max((1.0 - u.norm_sqr()) * f.derivative(u).norm());
            }
        }
        best
    }

    /// Taylor-shifts `f′` to the center, folds each ring's coefficients mod
    /// [`SUP_GRID`] and evaluates the ring with one inverse FFT.
    fn fast(&self, dp: &TaylorPoly, center: Complex64, big_r: f64) -> f64 {
        let b = dp.shifted(center);
        let mut buf = vec![Complex64::new(0.0, 0.0); SUP_GRID];
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.fft.get_inplace_scratch_len()];
        // squared until the end
        let mut best = 0.0f64;
        for j in 0..SUP_GRID {
            let t = Self::radius(j, big_r);
            buf.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
            let mut tp = 1.0;
            for (m, bm) in b.iter().enumerate() {
                buf[m % SUP_GRID] += bm * tp;
                tp *= t;
            }
            self.fft.process_with_scratch(&mut buf, &mut scratch);
            for (v, w) in buf.iter().zip(&self.roots) {
                let m = 1.0 - (center + w * t).norm_sqr();
                best = best.max(m * m * v.norm_sqr());
            }
        }
        best.sqrt()
    }

    fn sup(&self, f: &DiskFunction, center: Complex64, big_r: f64) -> f64 {
        match &self.derivative {
            Some(dp) => self.fast(dp, center, big_r),
            None => Self::direct(f, center, big_r),
        }
    }
}

/// `C(r)·max (1−|u|²)|f′(u)|` over a 32×32 polar sample of `D(z, r)`.
pub fn local_sup_h(f: &DiskFunction, z: Complex64, r: f64) -> Result<f64> {
    check_radius(r)?;
    if z.norm_sqr() >= 1.0 {
        return Err(Error::Domain("point outside the unit disk".into()));
    }
    let d = pseudo_disk_c(z, r);
    Ok(disk_constant(r) * SupSampler::direct(f, d.center, d.radius))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessMeta {
    pub metric: Metric,
    pub r: f64,
    /// `C(r)` in `h`.
    pub constant: f64,
    pub safety: f64,
    pub sup_sample: String,
}

#[derive(Debug, Clone)]
pub struct Witness {
    f: DiskFunction,
    metric: Metric,
    r: f64,
    constant: f64,
    sampler: SupSampler,
}

pub fn build_witness(f: &DiskFunction, metric: Metric, r: f64) -> Result<Witness> {
    check_radius(r)?;
    Ok(Witness {
        f: f.clone(),
        metric,
        r,
        constant: disk_constant(r),
        sampler: SupSampler::new(f),
    })
}

impl Witness {
    pub fn function(&self) -> &DiskFunction {
        &self.f
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn with_metric(&self, metric: Metric) -> Self {
        Self { metric, ..self.clone() }
    }

    pub fn meta(&self) -> WitnessMeta {
        WitnessMeta {
            metric: self.metric,
            r: self.r,
            constant: self.constant,
            safety: SUP_SAFETY,
            sup_sample: format!("{SUP_GRID}x{SUP_GRID} polar"),
        }
    }

    pub fn h(&self, z: Complex64) -> f64 {
        let d = pseudo_disk_c(z, self.r);
        SUP_SAFETY * self.constant * self.sampler.sup(&self.f, d.center, d.radius)
    }

    /// The `ρ`/`β` witness, whatever the metric of `self`.
    pub fn g_rho(&self, z: Complex64) -> f64 {
        self.f.eval(z).norm() / self.r + self.h(z)
    }

    pub fn g(&self, z: Complex64) -> f64 {
        let g = self.g_rho(z);
        match self.metric {
            Metric::Euclid => g / (1.0 - z.norm()),
            _ => g,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub metric: String,
    pub seed: u64,
    pub r: f64,
    pub pairs: usize,
    pub near_pairs: usize,
    pub far_pairs: usize,
    /// `max |f(z)−f(w)| − d(z,w)(g(z)+g(w))`
    pub max_violation: f64,
    /// `[[Re z, Im z], [Re w, Im w]]` at the max.
    pub argmax: Vec<[f64; 2]>,
}

impl ViolationReport {
    pub fn passed(&self) -> bool {
        self.max_violation <= 0.0
    }
}

fn argmax(vals: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in vals.iter().enumerate() {
        if *v > vals[best] || vals[best].is_nan() {
            best = i;
        }
    }
    best
}

fn assemble(
    metric: &str,
    seed: u64,
    r: f64,
    viol: &[f64],
    pairs: &[(Complex64, Complex64)],
    near: usize,
) -> ViolationReport {
    let i = argmax(viol);
    ViolationReport {
        metric: metric.into(),
        seed,
        r,
        pairs: viol.len(),
        near_pairs: near,
        far_pairs: viol.len() - near,
        max_violation: viol[i],
        argmax: vec![[pairs[i].0.re, pairs[i].0.im], [pairs[i].1.re, pairs[i].1.im]],
    }
}

/// Checks `|f(z)−f(w)| ≤ d(z,w)(g(z)+g(w))` on `n_pairs` stratified pairs
/// (half with `ρ < r`, half with `ρ ≥ r`).
pub fn verify_lipschitz<G>(
    f: &DiskFunction,
    g: G,
    metric: Metric,
    r: f64,
    n_pairs: usize,
    seed: u64,
) -> Result<ViolationReport>
where
    G: Fn(Complex64) -> f64 + Sync,
{
    check_radius(r)?;
    if n_pairs == 0 {
        return Err(Error::Parameter("need at least one pair".into()));
    }
    let pairs: Vec<(Complex64, Complex64)> = (0..n_pairs as u64).map(|i| disk_pair(seed, i, r)).collect();
    let viol: Vec<f64> = pairs
        .par_iter()
        .map(|&(z, w)| (f.eval(z) - f.eval(w)).norm() - metric_c(metric, z, w) * (g(z) + g(w)))
        .collect();
    let near = (0..n_pairs as u64).filter(|&i| is_near_index(i)).count();
    Ok(assemble(metric.name(), seed, r, &viol, &pairs, near))
}

/// Runs the `ρ`, `β` and Euclidean checks for one witness, evaluating `g_ρ`
/// once per point.
pub fn verify_witness_all_metrics(w: &Witness, n_pairs: usize, seed: u64) -> Result<Vec<ViolationReport>> {
    if n_pairs == 0 {
        return Err(Error::Parameter("need at least one pair".into()));
    }
    let r = w.r;
    let f = &w.f;
    let pairs: Vec<(Complex64, Complex64)> = (0..n_pairs as u64).map(|i| disk_pair(seed, i, r)).collect();
    let rows: Vec<[f64; 3]> = pairs
        .par_iter()
        .map(|&(z, v)| {
            let df = (f.eval(z) - f.eval(v)).norm();
            let gz = w.g_rho(z);
            let gv = w.g_rho(v);
            let ez = gz / (1.0 - z.norm());
            let ev = gv / (1.0 - v.norm());
            [
                df - metric_c(Metric::Rho, z, v) * (gz + gv),
                df - metric_c(Metric::Beta, z, v) * (gz + gv),
                df - metric_c(Metric::Euclid, z, v) * (ez + ev),
            ]
        })
        .collect();
    let near = (0..n_pairs as u64).filter(|&i| is_near_index(i)).count();
    Ok([Metric::Rho, Metric::Beta, Metric::Euclid]
        .iter()
        .enumerate()
        .map(|(m, metric)| {
            let viol: Vec<f64> = rows.iter().map(|row| row[m]).collect();
            assemble(metric.name(), seed, r, &viol, &pairs, near)
        })
        .collect())
}

/// Grid for integrating `g^p`: lighter than the norm grids since `g` is only
/// needed to settle convergence.
pub fn integrability_spec(f: &DiskFunction) -> GridSpec {
    let angular = match f {
        DiskFunction::TaylorPoly(p) => AngularRule::Uniform { m: 2 * p.degree() + 16 },
        _ => AngularRule::Graded { focus: 1.0, nodes_per_panel: 8 },
    };
    GridSpec { radial_nodes: 12, tail_nodes: 12, levels: 8, angular }
}

/// `∫ g^p dA_α` for `ρ`/`β` witnesses, `∫ g^p dA_{p+α}` for the Euclidean one.
pub fn witness_integrability(w: &Witness, p: f64, alpha: f64) -> Result<NormResult> {
    let weight = match w.metric {
        Metric::Euclid => p + alpha,
        _ => alpha,
    };
    let grid = DiskGrid::new(weight, integrability_spec(&w.f))?;
    Ok(grid.integrate(|z| w.g(z).powf(p)))
}

/// 1000 points: 10 circles at `|z| = 0, 0.1, …, 0.9` and 15 circles
/// approaching `|z| = 0.999`, 40 angles each.
pub fn bound_check_points() -> Vec<Complex64> {
    let mut radii: Vec<f64> = (0..10).map(|i| 0.1 * i as f64).collect();
    radii.extend((1..=15).map(|k| 1.0 - 0.1 * 10f64.powf(-2.0 * k as f64 / 15.0)));
    let mut out = Vec::with_capacity(radii.len() * 40);
    for r in radii {
        for k in 0..40 {
            out.push(Complex64::from_polar(r, TAU * (k as f64 + 0.5) / 40.0));
        }
    }
    out
}

/// `max (1−|z|²)|f′(z)| − 2g(z)` (`ρ`, `β`) or `max |f′(z)| − 2g(z)` (Euclidean)
/// over [`bound_check_points`].
pub fn derivative_bound_check<G>(f: &DiskFunction, g: G, metric: Metric) -> f64
where
    G: Fn(Complex64) -> f64 + Sync,
{
    bound_check_points()
        .par_iter()
        .map(|&z| {
            let d = f.derivative(z).norm();
            let lhs = match metric {
                Metric::Euclid => d,
                _ => (1.0 - z.norm_sqr()) * d,
            };
            lhs - 2.0 * g(z)
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::TaylorPoly;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn local_sup_examples() {
        let k = DiskFunction::poly(&[2.0]).unwrap();
        assert_eq!(local_sup_h(&k, c(0.3, 0.1), 0.5).unwrap(), 0.0);
        let z = DiskFunction::poly(&[0.0, 1.0]).unwrap();
        assert!((local_sup_h(&z, c(0.0, 0.0), 0.5).unwrap() - 6.0).abs() < 1e-14);
        // z² at 0.5: Euclidean disk center 0.4, radius 0.4; sup of 2t(1−t²) over t ∈ [0, 0.8]
        let z2 = DiskFunction::poly(&[0.0, 0.0, 1.0]).unwrap();
        let t = 1.0 / 3f64.sqrt();
        let exact = 6.0 * 2.0 * t * (1.0 - t * t);
        let v = local_sup_h(&z2, c(0.5, 0.0), 0.5).unwrap();
        assert!(v <= exact + 1e-12 && v > 0.995 * exact, "{v} vs {exact}");
        assert!(local_sup_h(&z2, c(0.5, 0.0), 1.0).is_err());
    }

    #[test]
    fn fft_sup_matches_direct() {
        let f = DiskFunction::TaylorPoly(TaylorPoly::power_section(0.4, 50));
        let s = SupSampler::new(&f);
        for z in [c(0.0, 0.0), c(0.5, 0.3), c(-0.95, 0.1), c(0.999, 0.0)] {
            let d = pseudo_disk_c(z, 0.5);
            let a = s.sup(&f, d.center, d.radius);
            let b = SupSampler::direct(&f, d.center, d.radius);
            assert!((a - b).abs() <= 1e-10 * b.max(1.0), "{a} vs {b}");
        }
    }

    #[test]
    fn identity_witness_passes() {
        let f = DiskFunction::poly(&[0.0, 1.0]).unwrap();
        let rep = verify_lipschitz(&f, |_| 1.0, Metric::Rho, 0.5, 2000, 1).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.near_pairs, 1000);
        let w = build_witness(&f, Metric::Rho, 0.5).unwrap();
        for rep in verify_witness_all_metrics(&w, 2000, 2).unwrap() {
            assert!(rep.passed(), "{rep:?}");
        }
        assert!((w.g(c(0.3, 0.0)) - (0.6 + w.h(c(0.3, 0.0)))).abs() < 1e-15);
    }

    #[test]
    fn zero_function_has_zero_witness() {
        let f = DiskFunction::poly(&[0.0]).unwrap();
        let w = build_witness(&f, Metric::Euclid, 0.5).unwrap();
        assert_eq!(w.g(c(0.4, -0.2)), 0.0);
        let rep = verify_lipschitz(&f, |z| w.g(z), Metric::Euclid, 0.5, 100, 0).unwrap();
        assert!(rep.max_violation <= 0.0);
    }

    #[test]
    fn scale_covariance() {
        let f = TaylorPoly::power_section(0.6, 30);
        let w1 = build_witness(&DiskFunction::TaylorPoly(f.clone()), Metric::Rho, 0.5).unwrap();
        let w3 = build_witness(&DiskFunction::TaylorPoly(f.scaled(c(3.0, 0.0))), Metric::Rho, 0.5).unwrap();
        for z in bound_check_points().into_iter().step_by(37) {
            let a = 3.0 * w1.g(z);
            assert!((w3.g(z) - a).abs() <= 1e-12 * a.max(1.0));
        }
    }

    #[test]
    fn witness_is_continuous_on_a_grid() {
        let f = DiskFunction::TaylorPoly(TaylorPoly::power_section(0.4, 50));
        let w = build_witness(&f, Metric::Rho, 0.5).unwrap();
        for z in bound_check_points().into_iter().step_by(23) {
            let g0 = w.g(z);
            let g1 = w.g(z * (1.0 - 1e-7));
            assert!((g1 - g0).abs() <= 1e-3 * g0.max(1.0), "{z}: {g0} {g1}");
        }
    }

    #[test]
    fn derivative_bounds() {
        let k = DiskFunction::poly(&[5.0]).unwrap();
        let wk = build_witness(&k, Metric::Rho, 0.5).unwrap();
        assert!(derivative_bound_check(&k, |z| wk.g(z), Metric::Rho) < 0.0);
        let z = DiskFunction::poly(&[0.0, 1.0]).unwrap();
        let w = build_witness(&z, Metric::Rho, 0.5).unwrap();
        assert!(derivative_bound_check(&z, |p| w.g(p), Metric::Rho) <= 0.0);
        let z3 = DiskFunction::poly(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        let we = build_witness(&z3, Metric::Euclid, 0.5).unwrap();
        assert!(derivative_bound_check(&z3, |p| we.g(p), Metric::Euclid) <= 0.0);
        assert!(derivative_bound_check(&z, |_| 1.0, Metric::Rho) <= 0.0);
        assert_eq!(bound_check_points().len(), 1000);
    }

    #[test]
    fn integrability_of_polynomial_witness() {
        let f = DiskFunction::poly(&[1.0, 0.5, -0.25]).unwrap();
        for metric in [Metric::Rho, Metric::Euclid] {
            let w = build_witness(&f, metric, 0.5).unwrap();
            let r = witness_integrability(&w, 2.0, 0.0).unwrap();
            assert!(r.converged, "{metric:?}: {r:?}");
        }
    }
}
