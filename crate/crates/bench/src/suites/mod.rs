//! One function per suite. Each records checks into a [`Ctx`].

mod ball;
mod geometry;
mod lemma10;
mod lemma4;
mod lemma5;
mod lifting;
mod quadrature;
mod witness;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::config::{RunConfig, Suite};
use crate::error::{BenchError, Result};
use crate::report::{Check, ExperimentReport, Relation, Series};

pub struct Ctx<'a> {
    cfg: &'a RunConfig,
    checks: Vec<Check>,
    info: BTreeMap<String, Value>,
    series: Vec<Series>,
    overridden: BTreeSet<String>,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a RunConfig) -> Self {
        Self { cfg, checks: Vec::new(), info: BTreeMap::new(), series: Vec::new(), overridden: BTreeSet::new() }
    }

    pub fn seed(&self) -> u64 {
        self.cfg.seed
    }

    pub fn pairs(&self, default: usize) -> usize {
        self.cfg.pairs.unwrap_or(default)
    }

    pub fn ball_points(&self, default: usize) -> usize {
        self.cfg.ball_points.unwrap_or(default)
    }

    /// Records a check; the threshold may be overridden from the config.
    pub fn check(&mut self, name: impl Into<String>, value: f64, relation: Relation, threshold: f64) -> bool {
        let name = name.into();
        let threshold = match self.cfg.tolerances.get(&name) {
            Some(&t) => {
                self.overridden.insert(name.clone());
                t
            }
            None => threshold,
        };
        let c = Check::new(name, value, relation, threshold);
        let pass = c.pass;
        self.checks.push(c);
        pass
    }

    /// Values spanning `[min, max]` lie in `[lo, hi]`, as two checks.
    pub fn check_range(&mut self, name: &str, min: f64, max: f64, lo: f64, hi: f64) -> bool {
        let a = self.check(format!("{name} min"), min, Relation::Ge, lo);
        let b = self.check(format!("{name} max"), max, Relation::Le, hi);
        a && b
    }

    pub fn info(&mut self, key: impl Into<String>, value: impl Serialize) -> Result<()> {
        self.info.insert(key.into(), serde_json::to_value(value)?);
        Ok(())
    }

    pub fn series(&mut self, s: Series) {
        self.series.push(s);
    }
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut ctx = Ctx::new(cfg);
    match suite {
        Suite::Geometry => geometry::run(&mut ctx)?,
        Suite::Lemma4 => lemma4::run(&mut ctx)?,
        Suite::Quadrature => quadrature::run(&mut ctx)?,
        Suite::Lemma5 => lemma5::run(&mut ctx)?,
        Suite::Thm6 => witness::run_thm6(&mut ctx)?,
        Suite::Thm7 => witness::run_thm7(&mut ctx)?,
        Suite::Thm8 => witness::run_thm8(&mut ctx)?,
        Suite::Lemma10 => lemma10::run(&mut ctx)?,
        Suite::Lifting => lifting::run_lifting(&mut ctx)?,
        Suite::Thm11 => lifting::run_thm11(&mut ctx)?,
        Suite::Thm12 => lifting::run_thm12(&mut ctx)?,
        Suite::A2Diverge => lifting::run_a2_diverge(&mut ctx)?,
        Suite::BallThm13 => ball::run(&mut ctx)?,
    }
    let unknown: Vec<&String> = cfg.tolerances.keys().filter(|k| !ctx.overridden.contains(*k)).collect();
    if !unknown.is_empty() {
        return Err(BenchError::Usage(format!("suite {suite} has no checks named {unknown:?}")));
    }
    let passed = ctx.checks.iter().all(|c| c.pass);
    Ok(ExperimentReport {
        suite,
        version: env!("CARGO_PKG_VERSION").into(),
        config: cfg.clone(),
        checks: ctx.checks,
        info: ctx.info,
        series: ctx.series,
        wall_time_s: start.elapsed().as_secs_f64(),
        passed,
    })
}
