use bergman_core::functions::BallPoly;
use bergman_core::quadrature::{BallGrid, DEFAULT_BALL_POINTS};
use bergman_core::witness::{
    build_witness_ball_with, calibrate_ball_constant, calibration_family, derivative_integrals, verify_lipschitz_ball,
    BallCalibration, CALIBRATION_SEED,
};

use super::Ctx;
use crate::error::Result;
use crate::report::Relation::Le;
use crate::report::Series;

const DIM: usize = 2;
const RADIUS: f64 = 0.5;
const CALIBRATION_PAIRS: usize = 512;
const DEFAULT_PAIRS: usize = 10_000;
const P: f64 = 2.0;
/// Relative tolerance on every quasi-Monte Carlo quantity.
const MC_RTOL: f64 = 1e-2;

fn held_out() -> Result<Vec<(String, BallPoly)>> {
    Ok(vec![
        ("z1*z2 + z1^2".into(), BallPoly::from_terms(DIM, &[(1.0, &[1, 1]), (1.0, &[2, 0])])?),
        ("z2^3 - z1/2".into(), BallPoly::from_terms(DIM, &[(1.0, &[0, 3]), (-0.5, &[1, 0])])?),
    ])
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let calibration = calibration_family(DIM)?;
    let cal = calibrate_ball_constant(&calibration, RADIUS, CALIBRATION_PAIRS, CALIBRATION_SEED)?;
    ctx.info("calibration", &cal)?;
    let mut family: Vec<(String, BallPoly)> =
        ["z1", "z1*z2", "z1^2 + z2^2"].iter().map(|s| s.to_string()).zip(calibration).collect();
    let n_cal = family.len();
    family.extend(held_out()?);

    verify(ctx, &family, &cal)?;
    integrals(ctx, &family, n_cal)
}

fn verify(ctx: &mut Ctx, family: &[(String, BallPoly)], cal: &BallCalibration) -> Result<()> {
    let n = ctx.pairs(DEFAULT_PAIRS);
    for (i, (name, f)) in family.iter().enumerate() {
        let w = build_witness_ball_with(f, cal)?;
        let rep = verify_lipschitz_ball(f, |z| w.g(z), RADIUS, n, ctx.seed().wrapping_add(i as u64))?;
        ctx.check(format!("{name} max violation"), rep.max_violation, Le, 0.0);
        ctx.info(format!("report {name}"), rep)?;
    }
    let c = BallPoly::from_terms(DIM, &[(0.75, &[0, 0])])?;
    let w = build_witness_ball_with(&c, cal)?;
    let rep = verify_lipschitz_ball(&c, |z| w.g(z), RADIUS, 1000, ctx.seed())?;
    ctx.check("constant max violation", rep.max_violation, Le, 0.0);
    Ok(())
}

/// The three derivative integrals over the norm integral, each family
/// member, at two independent quasi-random seeds.
fn integrals(ctx: &mut Ctx, family: &[(String, BallPoly)], n_cal: usize) -> Result<()> {
    let n = ctx.ball_points(DEFAULT_BALL_POINTS);
    let seeds = [ctx.seed() as u32, (ctx.seed() as u32) ^ 0x9e37_79b9];
    let grids = [BallGrid::new(DIM, 0.0, n, seeds[0])?, BallGrid::new(DIM, 0.0, n, seeds[1])?];
    let mut table = Series::new("ratios", &["member", "radial", "gradient", "invariant"]);
    let mut spread = 0.0f64;
    let mut ratios = Vec::new();
    for (i, (name, f)) in family.iter().enumerate() {
        let a = derivative_integrals(f, P, &grids[0])?;
        let b = derivative_integrals(f, P, &grids[1])?;
        let (ra, rb) = (a.ratios(), b.ratios());
        for k in 0..3 {
            spread = spread.max((ra[k] / rb[k] - 1.0).abs());
        }
        ctx.info(format!("integrals {name}"), a)?;
        table.push(vec![i as f64, ra[0], ra[1], ra[2]]);
        ratios.push(ra);
    }
    ctx.check("ratio change between quasi-random seeds", spread, Le, MC_RTOL);
    // One constant from the calibration members must hold the others.
    let k_of = |rs: &[[f64; 3]]| rs.iter().flatten().fold(1.0f64, |k, &q| k.max(q).max(1.0 / q));
    let k_cal = k_of(&ratios[..n_cal]);
    ctx.info("ratio constant, calibration members", k_cal)?;
    ctx.check("held-out ratio constant over calibration constant", k_of(&ratios[n_cal..]) / k_cal, Le, 1.0 + MC_RTOL);
    ctx.series(table);
    Ok(())
}
