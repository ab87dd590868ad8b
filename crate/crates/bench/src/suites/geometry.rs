use bergman_core::geometry::{
    ball_identity_residual, ball_metric, ball_phi, beta_c, comparability, disk_phi, double_radius, pseudo_disk,
    radius_convert, rho_c, BallMetric, BallPoint, DiskPoint, RadiusInput,
};
use bergman_core::sampling::{ball_point, disk_point, indexed_rng};
use bergman_core::Complex64;
use rand::Rng;

use super::Ctx;
use crate::error::Result;
use crate::report::Relation::{Ge, Le, Lt};

const TRIPLES: u64 = 100_000;
const BALL_PAIRS: u64 = 10_000;
const RADIUS: f64 = 0.5;

/// Separate sample streams per check so adding one never shifts another.
fn stream(seed: u64, tag: u64) -> u64 {
    seed ^ (tag << 56)
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    disk_metrics(ctx)?;
    radii(ctx)?;
    ball(ctx)?;
    Ok(())
}

fn disk_metrics(ctx: &mut Ctx) -> Result<()> {
    let seed = stream(ctx.seed(), 1);
    let (mut sym, mut ident, mut tri) = ([0.0f64; 2], [0.0f64; 2], [f64::NEG_INFINITY; 2]);
    for i in 0..TRIPLES {
        let mut rng = indexed_rng(seed, i);
        let (x, y, z) = (disk_point(&mut rng), disk_point(&mut rng), disk_point(&mut rng));
        for (k, d) in [rho_c as fn(Complex64, Complex64) -> f64, beta_c].into_iter().enumerate() {
            sym[k] = sym[k].max((d(x, y) - d(y, x)).abs());
            ident[k] = ident[k].max(d(x, x));
            tri[k] = tri[k].max(d(x, z) - d(x, y) - d(y, z));
        }
    }
    for (k, m) in ["rho", "beta"].into_iter().enumerate() {
        ctx.check(format!("{m} symmetry"), sym[k], Le, 1e-12);
        ctx.check(format!("{m} identity"), ident[k], Le, 1e-12);
        ctx.check(format!("{m} triangle excess"), tri[k], Le, 1e-12);
    }
    ctx.info("triples", TRIPLES)?;

    // Comparability with explicit constants on rho(z, w) <= r.
    let seed = stream(ctx.seed(), 2);
    let c = comparability(RADIUS)?;
    let mut margin = f64::INFINITY;
    for i in 0..TRIPLES {
        let mut rng = indexed_rng(seed, i);
        let z = disk_point(&mut rng);
        let v = Complex64::from_polar(RADIUS * rng.random::<f64>(), rng.random_range(0.0..std::f64::consts::TAU));
        let w = disk_phi(z, v);
        let m = 1.0 - z.norm_sqr();
        let k = m / (Complex64::new(1.0, 0.0) - z.conj() * w).norm();
        let q = m / (1.0 - w.norm_sqr());
        margin = margin
            .min(k / c.kernel_lower - 1.0)
            .min(1.0 - k / c.kernel_upper)
            .min(q / c.ratio_lower - 1.0)
            .min(1.0 - q / c.ratio_upper);
    }
    ctx.check("comparability relative margin", margin, Ge, -1e-12);
    ctx.info("comparability", c)?;
    Ok(())
}

fn radii(ctx: &mut Ctx) -> Result<()> {
    let seed = stream(ctx.seed(), 3);
    let mut round = 0.0f64;
    for i in 0..10_000 {
        let r = 0.9999 * indexed_rng(seed, i).random::<f64>() + 1e-6;
        let big = radius_convert(r, RadiusInput::Pseudo)?.big_r;
        round = round.max((radius_convert(big, RadiusInput::Hyperbolic)?.r - r).abs());
    }
    ctx.check("radius round trip", round, Le, 1e-14);

    let seed = stream(ctx.seed(), 4);
    let mut resid = 0.0f64;
    for i in 0..1000 {
        let mut rng = indexed_rng(seed, i);
        let z = DiskPoint::from_complex(disk_point(&mut rng))?;
        let r = rng.random_range(0.05..0.95);
        let d = pseudo_disk(z, r)?;
        for k in 0..64 {
            let u = d.center + Complex64::from_polar(d.radius, std::f64::consts::TAU * k as f64 / 64.0);
            resid = resid.max((rho_c(u, z.z()) - r).abs());
        }
    }
    ctx.check("pseudo-disk boundary residual", resid, Lt, 1e-11);

    let seed = stream(ctx.seed(), 5);
    let mut outside = 0usize;
    for i in 0..1000 {
        let mut rng = indexed_rng(seed, i);
        let z = disk_point(&mut rng);
        let r = rng.random_range(0.05..0.95);
        let u = step(z, r, &mut rng);
        let v = step(u, r, &mut rng);
        if rho_c(z, v) >= double_radius(r)? {
            outside += 1;
        }
    }
    ctx.check("doubling containment failures", outside as f64, Le, 0.0);
    Ok(())
}

/// A point at pseudo-hyperbolic distance below `r` from `a`.
fn step<R: Rng>(a: Complex64, r: f64, rng: &mut R) -> Complex64 {
    disk_phi(a, Complex64::from_polar(r * rng.random::<f64>(), rng.random_range(0.0..std::f64::consts::TAU)))
}

fn ball(ctx: &mut Ctx) -> Result<()> {
    let seed = stream(ctx.seed(), 6);
    let (mut ident, mut invol, mut fixed, mut rho_minus_d) = (0.0f64, 0.0f64, 0.0f64, f64::NEG_INFINITY);
    let (mut d_tri, mut d_tri_fail) = (f64::NEG_INFINITY, 0usize);
    for dim in [2usize, 3] {
        let origin = BallPoint::origin(dim)?;
        for i in 0..BALL_PAIRS {
            let mut rng = indexed_rng(seed + dim as u64, i);
            let (z, w, x) = (ball_point(&mut rng, dim), ball_point(&mut rng, dim), ball_point(&mut rng, dim));
            ident = ident.max(ball_identity_residual(&z, &w)?);
            invol = invol.max(ball_phi(&z, &ball_phi(&z, &w)?)?.sub(&w).norm());
            fixed = fixed.max(ball_phi(&z, &origin)?.sub(&z).norm()).max(ball_phi(&z, &z)?.norm());
            rho_minus_d = rho_minus_d.max(ball_metric(&z, &w, BallMetric::Rho)? - ball_metric(&z, &w, BallMetric::D)?);
            let ex = ball_metric(&z, &x, BallMetric::D)?
                - ball_metric(&z, &w, BallMetric::D)?
                - ball_metric(&w, &x, BallMetric::D)?;
            d_tri = d_tri.max(ex);
            if ex > 1e-12 {
                d_tri_fail += 1;
            }
        }
    }
    ctx.check("ball identity residual", ident, Lt, 1e-12);
    ctx.check("ball phi involution", invol, Le, 1e-10);
    ctx.check("ball phi fixes: phi_a(0)=a, phi_a(a)=0", fixed, Le, 1e-12);
    ctx.check("ball rho minus d", rho_minus_d, Le, 1e-15);
    // Whether d is a metric is open; the triangle test is only reported.
    ctx.info("d triangle max excess", d_tri)?;
    ctx.info("d triangle violations", d_tri_fail)?;
    Ok(())
}
