use bergman_core::functions::{DiskFunction, HoloFunction, TaylorPoly};
use bergman_core::quadrature::{
    build_grid, default_disk_grid, disk_norm_p, local_integral, membership, monomial_norm_exact, norm_p, AngularRule,
    BidiskGrid, DiskGrid, Domain, GridSpec, Membership, Resolution, WeightParams, WeightedGrid, DEFAULT_BALL_POINTS,
};
use bergman_core::sampling::{disk_point, indexed_rng};
use bergman_core::Complex64;
use rand::Rng;

use super::Ctx;
use crate::error::Result;
use crate::report::Relation::{Ge, Le};
use crate::report::Series;

const ALPHAS: [f64; 4] = [-0.5, 0.0, 1.0, 2.5];
const MAX_K: usize = 30;

pub fn run(ctx: &mut Ctx) -> Result<()> {
    monomials(ctx)?;
    bidisk(ctx)?;
    ball(ctx)?;
    verdicts(ctx)?;
    local_mean_bound(ctx)?;
    Ok(())
}

fn monomials(ctx: &mut Ctx) -> Result<()> {
    let mut curve = Series::new("monomials", &["alpha", "k", "quadrature", "exact"]);
    let (mut rel, mut norm1, mut ortho) = (0.0f64, 0.0f64, 0.0f64);
    let mut monotone = true;
    for alpha in ALPHAS {
        for k in 0..=MAX_K {
            let f = DiskFunction::TaylorPoly(TaylorPoly::monomial(k));
            let r = disk_norm_p(&f, 2.0, &default_disk_grid(&f, alpha)?);
            let exact = monomial_norm_exact(k, alpha);
            rel = rel.max((r.value / exact - 1.0).abs());
            monotone &= r.partials.windows(2).all(|w| w[1] >= w[0]);
            if k == 0 {
                norm1 = norm1.max((r.value - 1.0).abs());
            }
            curve.push(vec![alpha, k as f64, r.value, exact]);
        }
        let g = DiskGrid::new(alpha, GridSpec { angular: AngularRule::Uniform { m: 64 }, ..GridSpec::default() })?;
        for k in 0..=10 {
            for m in (0..=10).filter(|&m| m != k) {
                let re = g.integrate(|z| (z.powu(k as u32) * z.conj().powu(m as u32)).re).value;
                let im = g.integrate(|z| (z.powu(k as u32) * z.conj().powu(m as u32)).im).value;
                ortho = ortho.max(re.hypot(im));
            }
        }
    }
    ctx.check("monomial norm relative error", rel, Le, 1e-8);
    ctx.check("disk normalization error", norm1, Le, 1e-8);
    ctx.check("orthogonality", ortho, Le, 1e-10);
    ctx.check("partials nondecreasing", monotone as u8 as f64, Ge, 1.0);
    ctx.series(curve);

    // The generic entry point agrees with the direct one.
    let f = HoloFunction::Disk(DiskFunction::TaylorPoly(TaylorPoly::monomial(3)));
    let grid = build_grid(Domain::Disk, 1.0, 1.0 / 4096.0, Resolution::default())?;
    let v = norm_p(&f, WeightParams::new(2.0, 1.0)?, &grid)?.value;
    ctx.check("norm_p z^3, p=2, alpha=1 relative error", (v / monomial_norm_exact(3, 1.0) - 1.0).abs(), Le, 1e-8);
    Ok(())
}

fn bidisk(ctx: &mut Ctx) -> Result<()> {
    let spec = GridSpec { radial_nodes: 12, tail_nodes: 12, levels: 8, angular: AngularRule::Uniform { m: 24 } };
    let g = BidiskGrid::new(0.0, spec)?;
    let mut rel = 0.0f64;
    for i in 0..=5 {
        for j in 0..=5 {
            let r = g.integrate(|z, w| z.norm_sqr().powi(i) * w.norm_sqr().powi(j));
            rel = rel.max((r.value * ((i + 1) * (j + 1)) as f64 - 1.0).abs());
        }
    }
    ctx.check("bidisk tensor relative error", rel, Le, 1e-8);
    Ok(())
}

fn ball(ctx: &mut Ctx) -> Result<()> {
    let res = Resolution {
        ball_samples: ctx.ball_points(DEFAULT_BALL_POINTS),
        seed: ctx.seed() as u32,
        ..Resolution::default()
    };
    for n in [2usize, 3] {
        let WeightedGrid::Ball(g) = build_grid(Domain::Ball { n }, 0.0, 0.25, res)? else {
            unreachable!("ball domain builds a ball grid");
        };
        ctx.check(format!("ball n={n} normalization error"), (g.integrate(|_| 1.0) - 1.0).abs(), Le, 1e-3);
    }
    Ok(())
}

fn verdicts(ctx: &mut Ctx) -> Result<()> {
    let wp = WeightParams::new(2.0, 0.0)?;
    let cases = [
        ("(1-z)^-0.9 member", DiskFunction::power(0.9)?, Membership::Member),
        ("(1-z)^-1.1 non-member", DiskFunction::power(1.1)?, Membership::NonMember),
        ("z^7 - z member", DiskFunction::poly(&[0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0])?, Membership::Member),
    ];
    for (name, f, want) in cases {
        let (got, r) = membership(&f, wp)?;
        ctx.check(format!("verdict {name}"), (got == want) as u8 as f64, Ge, 1.0);
        ctx.info(format!("norm {name}"), r)?;
    }
    Ok(())
}

/// `|f(z)|^p (1−|z|²)² ≤ C ∫_{D(z,r)} |f|^p dA`. The sub-mean-value property
/// on the largest disk about `z` inside `D(z,r)` gives `C = (1+r)²/r²`.
fn local_mean_bound(ctx: &mut Ctx) -> Result<()> {
    let r = 0.5;
    let mut worst = 0.0f64;
    for deg in [1usize, 4, 10] {
        let mut rng = indexed_rng(ctx.seed() ^ 0x1e3, deg as u64);
        let coeffs: Vec<Complex64> = (0..=deg).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let f = DiskFunction::TaylorPoly(TaylorPoly::new(coeffs)?);
        for i in 0..100 {
            let z = disk_point(&mut indexed_rng(ctx.seed() ^ 0x1e3_0000, i));
            for p in [1.0, 2.0] {
                let lhs = f.eval(z).norm().powf(p) * (1.0 - z.norm_sqr()).powi(2);
                worst = worst.max(lhs / local_integral(&f, z, r, p)?);
            }
        }
    }
    ctx.check("subharmonic local constant", worst, Le, (1.0 + r) * (1.0 + r) / (r * r));
    Ok(())
}
