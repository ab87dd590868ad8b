use bergman_core::geometry::DiskPoint;
use bergman_core::quadrature::{fit_growth_exponent, lemma10_integral};
use statrs::function::gamma::gamma;

use super::Ctx;
use crate::error::Result;
use crate::report::Relation::{Ge, Le, Lt};
use crate::report::Series;

const S_VALUES: [f64; 2] = [0.0, 0.5];
const T_GROWTH: [f64; 3] = [0.5, 1.0, 2.0];
/// Fitting radii. Closer to the circle the fit sees less of the
/// lower-order terms of `I`.
const FIT_RADII: [f64; 4] = [0.998, 0.999, 0.9995, 0.9998];
const BOUNDED_RADII: [f64; 3] = [0.9, 0.99, 0.999];
const SLOPE_TOL: f64 = 0.05;

/// `I` at `|z| = 1` for `t < 0`: `Γ(s+1)Γ(−t) / Γ(1+(s−t)/2)²`.
fn boundary_value(s: f64, t: f64) -> f64 {
    gamma(s + 1.0) * gamma(-t) / gamma(1.0 + (s - t) / 2.0).powi(2)
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let mut curve = Series::new("growth", &["s", "t", "abs_z", "minus_log_1_minus_abs_z_sq", "log_I"]);
    let mut converged = true;
    let mut eval = |s: f64, t: f64, x: f64, curve: &mut Series| -> Result<f64> {
        let r = lemma10_integral(DiskPoint::new(x, 0.0)?, s, t)?;
        converged &= r.converged;
        curve.push(vec![s, t, x, -(1.0 - x * x).ln(), r.value.ln()]);
        Ok(r.value)
    };
    for s in S_VALUES {
        let i0 = eval(s, 1.0, 0.0, &mut curve)?;
        ctx.check(format!("I(0) s={s} relative error vs 1/(s+1)"), (i0 * (s + 1.0) - 1.0).abs(), Le, 1e-10);
        for t in T_GROWTH {
            let samples: Vec<(f64, f64)> =
                FIT_RADII.iter().map(|&x| Ok((x, eval(s, t, x, &mut curve)?))).collect::<Result<_>>()?;
            let slope = fit_growth_exponent(&samples)?;
            ctx.info(format!("slope s={s} t={t}"), slope)?;
            ctx.check(format!("slope s={s} t={t} error"), (slope - t).abs(), Le, SLOPE_TOL);
        }
        // t = 0 is the logarithmic case: reported only.
        let samples: Vec<(f64, f64)> =
            FIT_RADII.iter().map(|&x| Ok((x, eval(s, 0.0, x, &mut curve)?))).collect::<Result<_>>()?;
        ctx.info(format!("slope s={s} t=0"), fit_growth_exponent(&samples)?)?;

        let t = -0.5;
        let vals: Vec<f64> = BOUNDED_RADII.iter().map(|&x| eval(s, t, x, &mut curve)).collect::<Result<_>>()?;
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        ctx.check(format!("t=-0.5 s={s} variation over |z| in {{0.9,0.99,0.999}}"), (hi - lo) / hi, Lt, 0.05);
        let limit = boundary_value(s, t);
        ctx.info(format!("t=-0.5 s={s} boundary value"), limit)?;
        ctx.check(format!("t=-0.5 s={s} max I over boundary value"), hi / limit, Le, 1.0);
    }
    ctx.check("all integrals converged", converged as u8 as f64, Ge, 1.0);
    ctx.series(curve);
    Ok(())
}
