//! `dA_α` on the disk in the variable `u = |z|²`.
//!
//! The radial range is cut into panels: a base panel `u ≤ (1−ε_0)²` with
//! `ε_0 = 2^{-4}`, then one annulus per halving `ε_k = 2^{-(4+k)}`, then a
//! Gauss–Jacobi tail on `[(1−ε_K)², 1]` carrying the `(1−u)^α` factor.
//! Partial integrals over `|z| ≤ 1−ε_k` drive the convergence decision.

use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rules::{gauss_jacobi, gauss_legendre, Rule};
use super::result::NormResult;
use crate::numerics::pairwise_sum;
use crate::{Error, Result};

pub const BASE_EPS_EXP: i32 = 4;
/// Breakpoints of the base panel in `1−u`.
const BASE_BREAKS: [f64; 2] = [0.5, 0.25];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AngularRule {
    /// `m` equally spaced angles; exact for trigonometric polynomials of degree `< m`.
    Uniform { m: usize },
    /// Geometric panels `[0, δ], [δ, 2δ], [2δ, 4δ], … , π` mirrored to `[−π, 0]`,
    /// with `δ = 1 − focus·|z|`. Resolves integrands peaked at `θ = 0`.
    Graded { focus: f64, nodes_per_panel: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Gauss–Legendre nodes per radial panel.
    pub radial_nodes: usize,
    /// Gauss–Jacobi nodes in the boundary tail.
    pub tail_nodes: usize,
    /// Number of halvings `K`; the finest truncation is `2^{-(4+K)}`.
    pub levels: usize,
    pub angular: AngularRule,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            radial_nodes: 20,
            tail_nodes: 20,
            levels: 8,
            angular: AngularRule::Uniform { m: 64 },
        }
    }
}

impl GridSpec {
    /// Levels so that the finest truncation is at most `eps`.
    pub fn levels_for_eps(eps: f64) -> Result<usize> {
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Error::Parameter(format!("truncation ε = {eps} not in (0, 0.5)")));
        }
        let k = (-eps.log2()).ceil() as i32 - BASE_EPS_EXP;
        Ok(k.max(0) as usize)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct AngleNode {
    pub unit: Complex64,
    pub weight: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct Ring {
    pub radius: f64,
    pub weight: f64,
    pub panel: usize,
    pub angles: Arc<[AngleNode]>,
}

/// One quadrature node of a flattened grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridNode {
    pub z: Complex64,
    pub weight: f64,
    pub panel: usize,
}

#[derive(Debug, Clone)]
pub struct DiskGrid {
    alpha: f64,
    spec: GridSpec,
    epsilons: Vec<f64>,
    pub(crate) rings: Vec<Ring>,
}

fn uniform_angles(m: usize) -> Arc<[AngleNode]> {
    let w = 1.0 / m as f64;
    (0..m)
        .map(|j| AngleNode {
            unit: Complex64::from_polar(1.0, TAU * j as f64 / m as f64),
            weight: w,
        })
        .collect()
}

fn graded_angles(delta: f64, rule: &Rule) -> Arc<[AngleNode]> {
    let delta = delta.max(1e-14);
    let mut breaks = vec![0.0];
    let mut b = delta;
    while b < PI {
        breaks.push(b);
        b *= 2.0;
    }
    breaks.push(PI);
    let mut out = Vec::with_capacity(2 * rule.len() * (breaks.len() - 1));
    for win in breaks.windows(2) {
        for (t, w) in rule.mapped(win[0], win[1]) {
            let w = w / TAU;
            out.push(AngleNode { unit: Complex64::from_polar(1.0, t), weight: w });
            out.push(AngleNode { unit: Complex64::from_polar(1.0, -t), weight: w });
        }
    }
    out.into()
}

impl DiskGrid {
    pub fn new(alpha: f64, spec: GridSpec) -> Result<Self> {
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::Parameter(format!("weight α = {alpha} must exceed −1")));
        }
        if spec.radial_nodes == 0 {
            return Err(Error::Parameter("radial_nodes must be positive".into()));
        }
        let gl = gauss_legendre(spec.radial_nodes)?;
        let gj = gauss_jacobi(spec.tail_nodes, alpha, 0.0)?;
        let k = spec.levels;
        let epsilons: Vec<f64> = (0..=k).map(|j| 2f64.powi(-(BASE_EPS_EXP + j as i32))).collect();
        let u_of = |e: f64| (1.0 - e) * (1.0 - e);

        // (panel, u_lo, u_hi) for Gauss–Legendre pieces
        let mut pieces = vec![];
        let mut lo = 0.0;
        for &g in &BASE_BREAKS {
            pieces.push((0, lo, 1.0 - g));
            lo = 1.0 - g;
        }
        pieces.push((0, lo, u_of(epsilons[0])));
        for j in 1..=k {
            pieces.push((j, u_of(epsilons[j - 1]), u_of(epsilons[j])));
        }

        let a1 = alpha + 1.0;
        let mut radial: Vec<(f64, f64, usize)> = vec![];
        for &(panel, a, b) in &pieces {
            for (u, w) in gl.mapped(a, b) {
                radial.push((u, w * a1 * (1.0 - u).powf(alpha), panel));
            }
        }
        let u_k = u_of(epsilons[k]);
        let half = 0.5 * (1.0 - u_k);
        let scale = half.powf(a1);
        for (x, w) in gj.nodes.iter().zip(&gj.weights) {
            // 1−u = half·(1−x)
            let u = 1.0 - half * (1.0 - x);
            radial.push((u, a1 * scale * w, k + 1));
        }

        let rings = match spec.angular {
            AngularRule::Uniform { m } => {
                if m == 0 {
                    return Err(Error::Parameter("angular rule needs m ≥ 1".into()));
                }
                let ang = uniform_angles(m);
                radial
                    .iter()
                    .map(|&(u, w, panel)| Ring { radius: u.sqrt(), weight: w, panel, angles: ang.clone() })
                    .collect()
            }
            AngularRule::Graded { focus, nodes_per_panel } => {
                if !(0.0..=1.0).contains(&focus) {
                    return Err(Error::Parameter("graded focus must lie in [0, 1]".into()));
                }
                let rule = gauss_legendre(nodes_per_panel)?;
                radial
                    .iter()
                    .map(|&(u, w, panel)| {
                        let r = u.sqrt();
                        Ring { radius: r, weight: w, panel, angles: graded_angles(1.0 - focus * r, &rule) }
                    })
                    .collect()
            }
        };
        Ok(Self { alpha, spec, epsilons, rings })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    /// `ε_0, …, ε_K`.
    pub fn epsilons(&self) -> &[f64] {
        &self.epsilons
    }

    pub fn levels(&self) -> usize {
        self.spec.levels
    }

    /// Panels including the tail: `K + 2`.
    pub fn panel_count(&self) -> usize {
        self.spec.levels + 2
    }

    pub fn node_count(&self) -> usize {
        self.rings.iter().map(|r| r.angles.len()).sum()
    }

    pub fn nodes(&self) -> Vec<GridNode> {
        let mut out = Vec::with_capacity(self.node_count());
        for ring in &self.rings {
            for a in ring.angles.iter() {
                out.push(GridNode { z: a.unit * ring.radius, weight: ring.weight * a.weight, panel: ring.panel });
            }
        }
        out
    }

    /// Integral of `f` over each panel.
    pub fn panel_sums<F>(&self, f: F) -> Vec<f64>
    where
        F: Fn(Complex64) -> f64 + Sync,
    {
        let ring_vals: Vec<f64> = self
            .rings
            .par_iter()
            .map(|ring| {
                let vals: Vec<f64> = ring.angles.iter().map(|a| a.weight * f(a.unit * ring.radius)).collect();
                ring.weight * pairwise_sum(&vals)
            })
            .collect();
        let mut by_panel = vec![Vec::new(); self.panel_count()];
        for (ring, v) in self.rings.iter().zip(ring_vals) {
            by_panel[ring.panel].push(v);
        }
        by_panel.iter().map(|v| pairwise_sum(v)).collect()
    }

    /// `∫ f dA_α` with the ε-protocol; `f` must be nonnegative for the verdict to mean anything.
    pub fn integrate<F>(&self, f: F) -> NormResult
    where
        F: Fn(Complex64) -> f64 + Sync,
    {
        NormResult::from_panels(&self.panel_sums(f), &self.epsilons)
    }
}
