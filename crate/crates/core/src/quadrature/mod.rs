//! Integration against `dA_α` on the disk and bidisk and `dv_α` on the ball,
//! with the truncation protocol that turns partial integrals into a
//! membership verdict.

mod ball;
mod bidisk;
mod disk;
mod result;
pub mod rules;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use ball::{ball_weight_constant, BallGrid, DEFAULT_BALL_POINTS};
pub use bidisk::BidiskGrid;
pub use disk::{AngularRule, DiskGrid, GridNode, GridSpec, BASE_EPS_EXP};
pub use result::{
    classify, Membership, NormResult, DEFAULT_RTOL, MEMBER_RATIO, NON_MEMBER_RATIO, WINDOW,
};

use crate::functions::{DiskFunction, HoloFunction};
use crate::geometry::{pseudo_disk_c, DiskPoint};
use crate::numerics::{abs_pow_from_sq, linear_fit};
use crate::{Error, Result};

/// Nodes per angular panel for the graded rule.
pub const GRADED_NODES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightParams {
    pub p: f64,
    pub alpha: f64,
}

impl WeightParams {
    pub fn new(p: f64, alpha: f64) -> Result<Self> {
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::Parameter(format!("exponent p = {p} must be positive")));
        }
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::Parameter(format!("weight α = {alpha} must exceed −1")));
        }
        Ok(Self { p, alpha })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Disk,
    Bidisk,
    Ball { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Resolution {
    pub radial_nodes: usize,
    pub tail_nodes: usize,
    pub angular: AngularRule,
    /// Cube samples scanned on the ball.
    pub ball_samples: usize,
    pub seed: u32,
}

impl Default for Resolution {
    fn default() -> Self {
        let s = GridSpec::default();
        Self {
            radial_nodes: s.radial_nodes,
            tail_nodes: s.tail_nodes,
            angular: s.angular,
            ball_samples: DEFAULT_BALL_POINTS,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub enum WeightedGrid {
    Disk(DiskGrid),
    Bidisk(BidiskGrid),
    Ball(BallGrid),
}

impl WeightedGrid {
    pub fn alpha(&self) -> f64 {
        match self {
            WeightedGrid::Disk(g) => g.alpha(),
            WeightedGrid::Bidisk(g) => g.alpha(),
            WeightedGrid::Ball(g) => g.alpha(),
        }
    }
}

/// `eps` is rounded down to the next `2^{-(4+K)}`. Ball samples are not
/// truncated, so `eps` only needs to be in range there.
pub fn build_grid(domain: Domain, alpha: f64, eps: f64, res: Resolution) -> Result<WeightedGrid> {
    let levels = GridSpec::levels_for_eps(eps)?;
    let spec = GridSpec {
        radial_nodes: res.radial_nodes,
        tail_nodes: res.tail_nodes,
        levels,
        angular: res.angular,
    };
    Ok(match domain {
        Domain::Disk => WeightedGrid::Disk(DiskGrid::new(alpha, spec)?),
        Domain::Bidisk => WeightedGrid::Bidisk(BidiskGrid::new(alpha, spec)?),
        Domain::Ball { n } => WeightedGrid::Ball(BallGrid::new(n, alpha, res.ball_samples, res.seed)?),
    })
}

/// Grid suited to `f`: uniform angles exact for `|f|²` on polynomials, graded
/// angles around `z = 1` for the closed forms.
pub fn default_spec(f: &DiskFunction) -> GridSpec {
    let angular = match f {
        DiskFunction::TaylorPoly(p) => AngularRule::Uniform { m: 4 * p.degree() + 16 },
        _ => AngularRule::Graded { focus: 1.0, nodes_per_panel: GRADED_NODES },
    };
    GridSpec { angular, ..GridSpec::default() }
}

pub fn default_disk_grid(f: &DiskFunction, alpha: f64) -> Result<DiskGrid> {
    DiskGrid::new(alpha, default_spec(f))
}

fn check_alpha(wp: &WeightParams, grid_alpha: f64) -> Result<()> {
    if (wp.alpha - grid_alpha).abs() > 1e-15 {
        return Err(Error::Parameter(format!(
            "grid built for α = {grid_alpha}, integral asked for α = {}",
            wp.alpha
        )));
    }
    Ok(())
}

/// `∫|f|^p dA_α` (the p-th power, no root).
pub fn norm_p(f: &HoloFunction, wp: WeightParams, grid: &WeightedGrid) -> Result<NormResult> {
    check_alpha(&wp, grid.alpha())?;
    match (f, grid) {
        (HoloFunction::Disk(f), WeightedGrid::Disk(g)) => Ok(disk_norm_p(f, wp.p, g)),
        (HoloFunction::Ball(f), WeightedGrid::Ball(g)) => {
            if f.dim() != g.dim() {
                return Err(Error::Type("polynomial and ball grid differ in dimension".into()));
            }
            Ok(NormResult::single(g.integrate(|z| abs_pow_from_sq(f.eval_raw(z).norm_sqr(), wp.p))))
        }
        _ => Err(Error::Type("function and grid live on different domains".into())),
    }
}

pub fn disk_norm_p(f: &DiskFunction, p: f64, grid: &DiskGrid) -> NormResult {
    grid.integrate(|z| abs_pow_from_sq(f.eval(z).norm_sqr(), p))
}

/// `∫|z^k|² dA_α = Π_{j=1}^k j/(j+α+1)`.
pub fn monomial_norm_exact(k: usize, alpha: f64) -> f64 {
    (1..=k).map(|j| j as f64 / (j as f64 + alpha + 1.0)).product()
}

/// Verdict on `f ∈ A^p_α` from the truncation sequence of a default grid.
pub fn membership(f: &DiskFunction, wp: WeightParams) -> Result<(Membership, NormResult)> {
    let grid = default_disk_grid(f, wp.alpha)?;
    let r = disk_norm_p(f, wp.p, &grid);
    Ok((r.verdict, r))
}

/// `|f(0)|^p + ∫|(1−|z|²) f′(z)|^p dA_α`.
pub fn lemma5_seminorm(f: &DiskFunction, wp: WeightParams, grid: &DiskGrid) -> Result<NormResult> {
    check_alpha(&wp, grid.alpha())?;
    let f0 = f.eval(Complex64::new(0.0, 0.0)).norm().powf(wp.p);
    let r = grid.integrate(|z| {
        let g = (1.0 - z.norm_sqr()) * f.derivative(z).norm();
        abs_pow_from_sq(g * g, wp.p)
    });
    Ok(r.shifted(f0))
}

/// `I(z) = ∫ (1−|w|²)^s |1−z̄w|^{−(2+s+t)} dA(w)`.
///
/// Rotated so that `z = |z|`, integrated against `dA_s` (then divided by `s+1`)
/// on a grid graded towards `w = 1` and refined until the finest truncation
/// is well inside `1 − |z|`.
pub fn lemma10_integral(z: DiskPoint, s: f64, t: f64) -> Result<NormResult> {
    if !(s > -1.0 && s.is_finite()) {
        return Err(Error::Parameter(format!("s = {s} must exceed −1")));
    }
    let x = z.z().norm();
    let levels = {
        let need = ((64.0 / (1.0 - x)).log2().ceil() as i32 - BASE_EPS_EXP).max(8);
        need as usize
    };
    let spec = GridSpec {
        radial_nodes: 20,
        tail_nodes: 20,
        levels,
        angular: AngularRule::Graded { focus: x, nodes_per_panel: GRADED_NODES },
    };
    let grid = DiskGrid::new(s, spec)?;
    let e = 2.0 + s + t;
    let r = grid.integrate(|w| (Complex64::new(1.0, 0.0) - w * x).norm_sqr().powf(-0.5 * e));
    Ok(scale_result(r, 1.0 / (s + 1.0)))
}

fn scale_result(mut r: NormResult, c: f64) -> NormResult {
    r.value *= c;
    r.estimated_error *= c;
    r.partials.iter_mut().for_each(|p| *p *= c);
    r
}

/// Least-squares slope of `log I` against `−log(1−|z|²)` over the samples
/// with `|z| ≥ 0.9`.
pub fn fit_growth_exponent(samples: &[(f64, f64)]) -> Result<f64> {
    let used: Vec<&(f64, f64)> = samples.iter().filter(|(r, _)| *r >= 0.9 && *r < 1.0).collect();
    if used.len() < 4 {
        return Err(Error::Parameter(format!(
            "growth fit needs at least 4 samples with |z| ≥ 0.9, got {}",
            used.len()
        )));
    }
    if used.iter().any(|(_, v)| !(*v > 0.0)) {
        return Err(Error::Parameter("growth fit needs positive values".into()));
    }
    let x: Vec<f64> = used.iter().map(|(r, _)| -(1.0 - r * r).ln()).collect();
    let y: Vec<f64> = used.iter().map(|(_, v)| v.ln()).collect();
    Ok(linear_fit(&x, &y).0)
}

/// `∫_{D(z,r)} |f|^p dA` with `dA` the normalized area measure, by a polar rule
/// (16 Gauss nodes in the squared radius, 32 angles) on the Euclidean image disk.
pub fn local_integral(f: &DiskFunction, z: Complex64, r: f64, p: f64) -> Result<f64> {
    let disk = pseudo_disk_c(z, r);
    let gl = rules::gauss_legendre(16)?;
    let m = 32;
    let r2 = disk.radius * disk.radius;
    let mut acc = 0.0;
    for (v, w) in gl.mapped(0.0, r2) {
        let rho = v.sqrt();
        let mut ring = 0.0;
        for j in 0..m {
            let u = disk.center + Complex64::from_polar(rho, std::f64::consts::TAU * j as f64 / m as f64);
            ring += abs_pow_from_sq(f.eval(u).norm_sqr(), p);
        }
        acc += w * ring / m as f64;
    }
    Ok(acc)
}
