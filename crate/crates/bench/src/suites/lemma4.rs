use bergman_core::functions::{radial_difference_limit, Point};
use bergman_core::geometry::{BallMetric, DiskPoint};
use bergman_core::sampling::{ball_point_with_norm, indexed_rng};
use bergman_core::Complex64;
use rand::Rng;

use super::Ctx;
use crate::error::Result;
use crate::report::{Relation::Le, Series};

const POINTS: u64 = 100;
const STEP: f64 = 1e-5;
/// The one-sided quotient is off by about `h|z|/(1−|z|²)`; 0.99 keeps that under 1e-3.
const MAX_NORM: f64 = 0.99;
const BALL_DIM: usize = 2;

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let mut curve = Series::new("ratios", &["domain", "norm", "rho_ratio", "beta_ratio"]);
    for (domain, tag) in [("disk", 0u64), ("ball", 1)] {
        let mut worst = [0.0f64; 2];
        for i in 0..POINTS {
            let mut rng = indexed_rng(ctx.seed() ^ (tag << 60), i);
            let m = MAX_NORM * rng.random::<f64>().max(0.01);
            let at = if tag == 0 {
                Point::Disk(DiskPoint::from_complex(Complex64::from_polar(m, rng.random_range(0.0..std::f64::consts::TAU)))?)
            } else {
                Point::Ball(ball_point_with_norm(&mut rng, BALL_DIM, m))
            };
            let mut row = vec![tag as f64, m];
            for (k, metric) in [BallMetric::Rho, BallMetric::Beta].into_iter().enumerate() {
                let ratio = radial_difference_limit(at, metric, STEP)? * (1.0 - m * m);
                worst[k] = worst[k].max((ratio - 1.0).abs());
                row.push(ratio);
            }
            curve.push(row);
        }
        ctx.check(format!("{domain} rho quotient relative error"), worst[0], Le, 1e-3);
        ctx.check(format!("{domain} beta quotient relative error"), worst[1], Le, 1e-3);
    }
    ctx.info("step", STEP)?;
    ctx.info("max norm", MAX_NORM)?;
    ctx.series(curve);
    Ok(())
}
