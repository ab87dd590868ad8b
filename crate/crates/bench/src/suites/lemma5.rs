use bergman_core::functions::{DiskFunction, TaylorPoly};
use bergman_core::quadrature::{default_disk_grid, disk_norm_p, lemma5_seminorm, WeightParams};
use bergman_core::sampling::indexed_rng;
use bergman_core::Complex64;
use rand::Rng;

use super::Ctx;
use crate::error::Result;
use crate::report::Relation::{Ge, Le};
use crate::report::Series;

const WEIGHTS: [(f64, f64); 4] = [(2.0, 0.0), (1.0, 0.0), (0.5, 1.0), (4.0, 2.5)];
const POLY_DEGREES: [usize; 3] = [5, 10, 20];
const SECTION_DEGREES: [usize; 2] = [10, 20];
const SECTION_S: [f64; 3] = [0.2, 0.4, 0.6];
/// Allowed relative change of `K` when every degree doubles.
const STABILITY: f64 = 0.1;

fn random_poly(seed: u64, slot: usize, degree: usize) -> Result<DiskFunction> {
    let mut rng = indexed_rng(seed, slot as u64);
    let c = (0..=degree).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    Ok(DiskFunction::TaylorPoly(TaylorPoly::new(c)?))
}

/// The test family with every degree multiplied by `scale`.
fn family(seed: u64, scale: usize) -> Result<Vec<(String, DiskFunction)>> {
    let mut out = Vec::new();
    for (slot, d) in POLY_DEGREES.into_iter().enumerate() {
        out.push((format!("poly{slot} deg {}", d * scale), random_poly(seed, slot, d * scale)?));
    }
    for s in SECTION_S {
        for d in SECTION_DEGREES {
            let f = DiskFunction::TaylorPoly(TaylorPoly::power_section(s, d * scale));
            out.push((format!("section s={s} deg {}", d * scale), f));
        }
    }
    Ok(out)
}

fn ratio(f: &DiskFunction, p: f64, alpha: f64) -> Result<(f64, bool)> {
    let g = default_disk_grid(f, alpha)?;
    let semi = lemma5_seminorm(f, WeightParams::new(p, alpha)?, &g)?;
    let norm = disk_norm_p(f, p, &g);
    Ok((semi.value / norm.value, semi.converged && norm.converged))
}

/// Smallest `K` with every ratio in `[1/K, K]`.
fn spread(ratios: &[f64]) -> f64 {
    ratios.iter().fold(1.0f64, |k, &q| k.max(q).max(1.0 / q))
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let mut table = Series::new("ratios", &["scale", "p", "alpha", "member", "ratio", "converged"]);
    let mut ks = Vec::new();
    let mut all = Vec::new();
    let mut converged = true;
    for scale in [1usize, 2] {
        let fam = family(ctx.seed(), scale)?;
        let mut qs = Vec::new();
        for (p, alpha) in WEIGHTS {
            for (i, (_, f)) in fam.iter().enumerate() {
                let (q, ok) = ratio(f, p, alpha)?;
                converged &= ok;
                qs.push(q);
                table.push(vec![scale as f64, p, alpha, i as f64, q, ok as u8 as f64]);
            }
        }
        ks.push(spread(&qs));
        all.extend(qs);
        ctx.info(format!("family scale {scale}"), fam.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>())?;
    }
    ctx.info("K degree", ks[0])?;
    ctx.info("K doubled degree", ks[1])?;
    ctx.check("K relative change on doubling", (ks[1] / ks[0] - 1.0).abs(), Le, STABILITY);
    ctx.check("single K over both families", spread(&all), Le, (1.0 + STABILITY) * ks[0]);
    ctx.check("all integrals converged", converged as u8 as f64, Ge, 1.0);
    ctx.series(table);

    let wp = WeightParams::new(2.0, 0.0)?;
    let z = DiskFunction::poly(&[0.0, 1.0])?;
    let v = lemma5_seminorm(&z, wp, &default_disk_grid(&z, 0.0)?)?.value;
    ctx.check("seminorm of z, p=2, alpha=0, error vs 1/3", (v - 1.0 / 3.0).abs(), Le, 1e-12);
    let c = DiskFunction::poly(&[1.5])?;
    let v = lemma5_seminorm(&c, WeightParams::new(3.0, 1.0)?, &default_disk_grid(&c, 1.0)?)?.value;
    ctx.check("seminorm of constant 1.5, p=3, error vs 1.5^3", (v - 1.5f64.powi(3)).abs(), Le, 1e-12);

    let f = DiskFunction::power(0.4)?;
    let (q, ok) = ratio(&f, 2.0, 0.0)?;
    ctx.info("(1-z)^-0.4 ratio, p=2, alpha=0", q)?;
    ctx.check("(1-z)^-0.4 integrals converged", ok as u8 as f64, Ge, 1.0);
    ctx.check("(1-z)^-0.4 ratio inside the family band", spread(&[q]), Le, (1.0 + STABILITY) * ks[0]);
    Ok(())
}
