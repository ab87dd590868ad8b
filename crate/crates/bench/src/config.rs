//! Suite names and the JSON run configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Geometry,
    Lemma4,
    Quadrature,
    Lemma5,
    Thm6,
    Thm7,
    Thm8,
    Lemma10,
    Lifting,
    Thm11,
    Thm12,
    A2Diverge,
    BallThm13,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Geometry,
        Suite::Lemma4,
        Suite::Quadrature,
        Suite::Lemma5,
        Suite::Thm6,
        Suite::Thm7,
        Suite::Thm8,
        Suite::Lemma10,
        Suite::Lifting,
        Suite::Thm11,
        Suite::Thm12,
        Suite::A2Diverge,
        Suite::BallThm13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Geometry => "geometry",
            Suite::Lemma4 => "lemma4",
            Suite::Quadrature => "quadrature",
            Suite::Lemma5 => "lemma5",
            Suite::Thm6 => "thm6",
            Suite::Thm7 => "thm7",
            Suite::Thm8 => "thm8",
            Suite::Lemma10 => "lemma10",
            Suite::Lifting => "lifting",
            Suite::Thm11 => "thm11",
            Suite::Thm12 => "thm12",
            Suite::A2Diverge => "a2-diverge",
            Suite::BallThm13 => "ball-thm13",
        }
    }

    /// One line on what the suite checks, for `list`.
    pub fn about(self) -> &'static str {
        match self {
            Suite::Geometry => "metric axioms, radius conversion, pseudo-hyperbolic disks, ball automorphisms",
            Suite::Lemma4 => "difference quotients of rho and beta against 1/(1-|z|^2), disk and ball",
            Suite::Quadrature => "monomial norms, orthogonality, bidisk tensor values, normalization, membership",
            Suite::Lemma5 => "derivative seminorm vs norm: one constant across the family, stable in degree",
            Suite::Thm6 => "rho witness: pair verification, integrability in dA_alpha, derivative bound",
            Suite::Thm7 => "the rho witness verified under beta",
            Suite::Thm8 => "euclidean witness g_rho/(1-|z|): verification, integrability in dA_{p+alpha}",
            Suite::Lemma10 => "growth exponent of the kernel integral I(z) as |z| -> 1",
            Suite::Lifting => "lifted series vs bidisk quadrature, diagonal of the lift, orthogonality, linearity",
            Suite::Thm11 => "lifting scan p=1, alpha=0 into the same weight on the bidisk",
            Suite::Thm12 => "lifting scan p=4, alpha=0 into the rescaled weight beta=1",
            Suite::A2Diverge => "A^2 partial sums vs lifted-series partial sums, log-weight asymptotic",
            Suite::BallThm13 => "ball witness calibration and verification, derivative integral ratios",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| BenchError::Usage(format!("unknown suite `{s}` (see `bergman-bench list`)")))
    }
}

/// Everything besides the suite name that determines a run. Echoed in the
/// report; feeding the echo back reproduces the numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    /// Pair count for Lipschitz verification; suite default when absent.
    pub pairs: Option<usize>,
    /// Quasi-random points for ball integrals; suite default when absent.
    pub ball_points: Option<usize>,
    /// Threshold overrides keyed by check name.
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, pairs: None, ball_points: None, tolerances: BTreeMap::new() }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let usage = |e: serde_json::Error| BenchError::Usage(format!("config: {e}"));
        let value: serde_json::Value = serde_json::from_str(text).map_err(usage)?;
        // derived struct impls also accept arrays
        if !value.is_object() {
            return Err(BenchError::Usage("config: expected a JSON object".into()));
        }
        let cfg: RunConfig = serde_json::from_value(value).map_err(usage)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            BenchError::Usage(m) => BenchError::Usage(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.pairs == Some(0) {
            return Err(BenchError::Usage("pairs must be positive".into()));
        }
        if self.ball_points.is_some_and(|n| n < 1024) {
            return Err(BenchError::Usage("ball_points must be at least 1024".into()));
        }
        if let Some((k, v)) = self.tolerances.iter().find(|(_, v)| !v.is_finite()) {
            return Err(BenchError::Usage(format!("tolerance `{k}` = {v} is not finite")));
        }
        Ok(())
    }
}
