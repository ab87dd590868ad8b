//! Truncated partial integrals and the convergence verdict built from them.

use serde::{Deserialize, Serialize};

use crate::numerics::pairwise_sum;

/// Increments of successive partials must shrink by at least this factor.
pub const MEMBER_RATIO: f64 = 0.9;
/// Increments that shrink by less than this factor count as stagnating.
pub const NON_MEMBER_RATIO: f64 = 0.95;
/// Number of trailing increment ratios inspected.
pub const WINDOW: usize = 4;
/// Relative size of the last increment separating "settled" from "still moving".
pub const DEFAULT_RTOL: f64 = 0.05;
/// Increments below this fraction of the partial are treated as zero.
pub const NEGLIGIBLE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NonMember,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormResult {
    /// Last partial plus the boundary tail.
    pub value: f64,
    pub converged: bool,
    pub verdict: Membership,
    pub epsilons: Vec<f64>,
    /// Integral over `|z| ≤ 1−ε_k` (joint truncation on the bidisk).
    pub partials: Vec<f64>,
    /// Disagreement between the quadrature tail and a geometric extrapolation
    /// of the last increments.
    pub estimated_error: f64,
}

impl NormResult {
    /// Builds from per-panel integrals `[base, annulus_1, …, annulus_K, tail]`.
    pub fn from_panels(panels: &[f64], epsilons: &[f64]) -> Self {
        let k = panels.len() - 2;
        let mut partials = Vec::with_capacity(k + 1);
        let mut acc = 0.0;
        for &p in &panels[..=k] {
            acc += p;
            partials.push(acc);
        }
        Self::from_partials(partials, panels[k + 1], epsilons.to_vec())
    }

    pub fn from_partials(partials: Vec<f64>, tail: f64, epsilons: Vec<f64>) -> Self {
        let last = *partials.last().unwrap_or(&0.0);
        let verdict = classify(&partials, DEFAULT_RTOL);
        let inc = increments(&partials);
        let estimated_error = match inc.len() {
            0 | 1 => tail.abs(),
            n => {
                let q = inc[n - 1] / inc[n - 2];
                if inc[n - 1] == 0.0 {
                    tail.abs()
                } else if q.is_finite() && (0.0..1.0).contains(&q) {
                    (tail - inc[n - 1] * q / (1.0 - q)).abs()
                } else {
                    f64::INFINITY
                }
            }
        };
        Self {
            value: last + tail,
            converged: verdict == Membership::Member,
            verdict,
            epsilons,
            partials,
            estimated_error,
        }
    }

    /// A single-number estimate with no truncation sequence (Monte Carlo).
    pub fn single(value: f64) -> Self {
        let ok = value.is_finite();
        Self {
            value,
            converged: ok,
            verdict: if ok { Membership::Member } else { Membership::Undecided },
            epsilons: vec![],
            partials: vec![value],
            estimated_error: 0.0,
        }
    }

    /// Adds a constant to every partial and the value.
    pub fn shifted(mut self, c: f64) -> Self {
        self.value += c;
        for p in &mut self.partials {
            *p += c;
        }
        self
    }
}

fn increments(partials: &[f64]) -> Vec<f64> {
    partials.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Member when the last [`WINDOW`] increment ratios are below [`MEMBER_RATIO`]
/// and the last increment is below `rtol` of the partial (or all increments
/// are negligible; a negligible increment ends the decay and counts as ratio 0);
/// non-member when the ratios stay at or above
/// [`NON_MEMBER_RATIO`] and the last increment is above `rtol`.
pub fn classify(partials: &[f64], rtol: f64) -> Membership {
    let inc = increments(partials);
    if inc.len() < WINDOW + 1 {
        return Membership::Undecided;
    }
    let last = *partials.last().unwrap();
    let tail = &inc[inc.len() - WINDOW - 1..];
    let scale = last.abs();
    if tail.iter().all(|d| d.abs() <= NEGLIGIBLE * scale) {
        return Membership::Member;
    }
    let tiny = |d: f64| d.abs() <= NEGLIGIBLE * scale;
    let ratios: Vec<f64> = tail.windows(2).map(|w| if tiny(w[1]) { 0.0 } else { w[1] / w[0] }).collect();
    let d_last = inc[inc.len() - 1];
    let settled = d_last <= rtol * scale;
    if ratios.iter().all(|q| q.is_finite() && *q < MEMBER_RATIO) && settled {
        Membership::Member
    } else if ratios.iter().all(|q| *q >= NON_MEMBER_RATIO) && !settled {
        Membership::NonMember
    } else {
        Membership::Undecided
    }
}

/// Sum of a panel-pair matrix over `max(a, b) ≤ j` for each `j`, plus the tail
/// (everything touching the last index).
pub(crate) fn joint_partials(m: &[Vec<f64>]) -> (Vec<f64>, f64) {
    let p = m.len();
    let mut partials = Vec::with_capacity(p - 1);
    let mut acc = 0.0;
    for j in 0..p {
        let mut shell = vec![m[j][j]];
        for i in 0..j {
            shell.push(m[i][j]);
            shell.push(m[j][i]);
        }
        let s = pairwise_sum(&shell);
        if j < p - 1 {
            acc += s;
            partials.push(acc);
        } else {
            return (partials, s);
        }
    }
    unreachable!()
}
