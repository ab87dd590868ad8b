use bergman_core::functions::{DiskFunction, TaylorPoly};
use bergman_core::lifting::{
    bidisk_norm, default_bidisk_spec, diagonal, divergence_demo, divergence_demo_with, divergence_sequence, diagonal_restriction_ratio, lift_eval, lift_norm_series_a2,
    lifting_scan, log_weighted_norm, BidiskFunction, LiftTarget, LiftingScanResult,
};
use bergman_core::numerics::harmonic;
use bergman_core::quadrature::{default_spec, AngularRule, BidiskGrid, DiskGrid, GridSpec};
use bergman_core::sampling::indexed_rng;
use bergman_core::witness::bound_check_points;
use bergman_core::Complex64;
use rand::Rng;

use super::Ctx;
use crate::error::Result;
use crate::report::Relation::{Ge, Le, Lt};
use crate::report::Series;

const SERIES_POLYS: u64 = 50;
const MAX_DEGREE: usize = 20;

fn random_coeffs(seed: u64, index: u64, max_degree: usize) -> Vec<Complex64> {
    let mut rng = indexed_rng(seed, index);
    let d = rng.random_range(1..=max_degree);
    (0..=d).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
}

fn poly(c: Vec<Complex64>) -> Result<DiskFunction> {
    Ok(DiskFunction::TaylorPoly(TaylorPoly::new(c)?))
}

pub fn run_lifting(ctx: &mut Ctx) -> Result<()> {
    let seed = ctx.seed() ^ 0x11f7;
    let mut table = Series::new("series_vs_quadrature", &["degree", "series", "quadrature"]);
    let (mut rel, mut diag) = (0.0f64, 0.0f64);
    let points = bound_check_points();
    for i in 0..SERIES_POLYS {
        let c = random_coeffs(seed, i, MAX_DEGREE);
        let series = lift_norm_series_a2(&c);
        let f = poly(c)?;
        let lf = BidiskFunction::Lifted(f.clone());
        // Polynomial integrands are exact on every annulus; only the value is compared.
        let spec = GridSpec { levels: 3, ..default_bidisk_spec(&lf) };
        let quad = bidisk_norm(&lf, 2.0, &BidiskGrid::new(0.0, spec)?)?.value;
        rel = rel.max((quad / series - 1.0).abs());
        table.push(vec![(f.as_poly().map_or(0, |p| p.degree())) as f64, series, quad]);
        for &z in &points {
            let d = f.derivative(z);
            diag = diag.max((diagonal(&lf, z) - d).norm() / (1.0 + d.norm()));
        }
    }
    ctx.check("series vs quadrature relative error", rel, Le, 1e-6);
    ctx.check("diagonal of lift minus derivative", diag, Le, 1e-13);
    ctx.series(table);

    for (k, want) in [(1usize, 1.0), (2, 1.0)] {
        let lf = BidiskFunction::Lifted(DiskFunction::TaylorPoly(TaylorPoly::monomial(k)));
        let v = bidisk_norm(&lf, 2.0, &BidiskGrid::new(0.0, default_bidisk_spec(&lf))?)?.value;
        ctx.check(format!("norm of L(z^{k}) error"), (v - want).abs(), Le, 1e-12);
    }

    orthogonality(ctx)?;
    linearity(ctx, seed)?;
    diagonal_restriction(ctx, seed)?;
    Ok(())
}

/// `L(z^k) = Σ_{i+j=k−1} z^i w^j` for `k ≤ 10` are pairwise orthogonal.
fn orthogonality(ctx: &mut Ctx) -> Result<()> {
    const K: usize = 10;
    let spec = GridSpec { radial_nodes: 8, tail_nodes: 8, levels: 4, angular: AngularRule::Uniform { m: 24 } };
    let grid = BidiskGrid::new(0.0, spec)?;
    let nodes = grid.nodes();
    // vals[k][i][j] would be large; keep powers per node instead
    let pw: Vec<Vec<Complex64>> = nodes.iter().map(|n| (0..K).map(|e| n.z.powu(e as u32)).collect()).collect();
    let hom = |k: usize, i: usize, j: usize| -> Complex64 { (0..k).map(|a| pw[i][a] * pw[j][k - 1 - a]).sum() };
    let mut worst = 0.0f64;
    for k in 1..=K {
        for m in (k + 1)..=K {
            let re = grid.integrate_indexed(|i, j| (hom(k, i, j) * hom(m, i, j).conj()).re).value;
            let im = grid.integrate_indexed(|i, j| (hom(k, i, j) * hom(m, i, j).conj()).im).value;
            worst = worst.max(re.hypot(im));
        }
    }
    ctx.check("homogeneous orthogonality", worst, Le, 1e-10);
    Ok(())
}

fn linearity(ctx: &mut Ctx, seed: u64) -> Result<()> {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let a = random_coeffs(seed ^ 0x11ea, 2 * i, MAX_DEGREE);
        let b = random_coeffs(seed ^ 0x11ea, 2 * i + 1, MAX_DEGREE);
        let (x, y) = (0.7, -1.3);
        let n = a.len().max(b.len());
        let get = |c: &[Complex64], k: usize| c.get(k).copied().unwrap_or_default();
        let sum: Vec<Complex64> = (0..n).map(|k| get(&a, k) * x + get(&b, k) * y).collect();
        let (fa, fb, fs) = (poly(a)?, poly(b)?, poly(sum)?);
        let mut rng = indexed_rng(seed ^ 0x11eb, i);
        for _ in 0..50 {
            let z = Complex64::from_polar(rng.random::<f64>().sqrt() * 0.999, rng.random_range(0.0..6.3));
            let w = Complex64::from_polar(rng.random::<f64>().sqrt() * 0.999, rng.random_range(0.0..6.3));
            let rhs = lift_eval(&fa, z, w) * x + lift_eval(&fb, z, w) * y;
            worst = worst.max((lift_eval(&fs, z, w) - rhs).norm() / (1.0 + rhs.norm()));
        }
    }
    ctx.check("lift linearity residual", worst, Le, 1e-12);
    Ok(())
}

/// Restriction to the diagonal into the weight `2(α+1)`. For `p = 2`,
/// `α = 0` Cauchy–Schwarz on each homogeneous part bounds the ratio by 1,
/// attained by `L(z) ≡ 1`.
fn diagonal_restriction(ctx: &mut Ctx, seed: u64) -> Result<()> {
    let mut family = Vec::new();
    for i in 0..10 {
        family.push(BidiskFunction::Lifted(poly(random_coeffs(seed ^ 0x19, i, MAX_DEGREE))?));
        let mut rng = indexed_rng(seed ^ 0x1a, i);
        let n = rng.random_range(1..=6);
        let c = (0..n)
            .map(|_| (0..n).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect())
            .collect();
        family.push(BidiskFunction::TensorPoly(c));
    }
    for p in [2.0, 1.0] {
        let k = family.iter().map(|f| diagonal_restriction_ratio(f, p, 0.0)).collect::<bergman_core::Result<Vec<f64>>>()?;
        let k = k.into_iter().fold(0.0f64, f64::max);
        ctx.info(format!("diagonal restriction constant p={p}"), k)?;
        if p == 2.0 {
            ctx.check("diagonal restriction ratio p=2", k, Le, 1.0 + 1e-9);
        } else {
            ctx.check(format!("diagonal restriction ratio p={p} finite"), k.is_finite() as u8 as f64, Ge, 1.0);
        }
    }
    Ok(())
}

fn scan_series(r: &LiftingScanResult) -> Series {
    let mut s = Series::new("scan", &["s", "norm_f", "norm_Lf", "ratio", "converged"]);
    for row in &r.rows {
        s.push(vec![row.s, row.norm_f, row.norm_lf, row.ratio, row.converged() as u8 as f64]);
    }
    s
}

fn scan(ctx: &mut Ctx, s_values: &[f64], p: f64, target: LiftTarget) -> Result<LiftingScanResult> {
    let r = lifting_scan(s_values, p, 0.0, target)?;
    for row in &r.rows {
        ctx.check(format!("s={} norm of f converged", row.s), row.converged_f as u8 as f64, Ge, 1.0);
        ctx.check(format!("s={} norm of Lf converged", row.s), row.converged_lf as u8 as f64, Ge, 1.0);
    }
    ctx.check("rows scanned", r.rows.len() as f64, Ge, s_values.len() as f64);
    ctx.series(scan_series(&r));
    ctx.info("scan", &r)?;
    Ok(r)
}

pub fn run_thm11(ctx: &mut Ctx) -> Result<()> {
    scan(ctx, &[0.5, 1.0, 1.5], 1.0, LiftTarget::SameWeight)?;
    Ok(())
}

pub fn run_thm12(ctx: &mut Ctx) -> Result<()> {
    let r = scan(ctx, &[0.1, 0.3, 0.45], 4.0, LiftTarget::Rescaled)?;
    // Neighbouring target weights at the largest s: trend only, nothing asserted.
    let lf = BidiskFunction::Lifted(DiskFunction::power(0.45)?);
    let mut trend = Series::new("beta_trend", &["beta", "norm_Lf", "converged"]);
    let at_scan = r.rows.iter().find(|row| row.s == 0.45);
    for beta in [0.5, r.beta, 1.5] {
        let (value, ok) = match at_scan.filter(|_| beta == r.beta) {
            Some(row) => (row.norm_lf, row.converged_lf),
            None => {
                let n = bidisk_norm(&lf, 4.0, &BidiskGrid::new(beta, default_bidisk_spec(&lf))?)?;
                (n.value, n.converged)
            }
        };
        trend.push(vec![beta, value, ok as u8 as f64]);
    }
    ctx.series(trend);
    Ok(())
}

/// `|z^k|²` peaks at `1−|z|² ≈ 1/k`; 12 levels put `k ≤ 100` well inside
/// the truncation sequence.
fn log_grid(f: &DiskFunction) -> Result<DiskGrid> {
    Ok(DiskGrid::new(0.0, GridSpec { levels: 12, ..default_spec(f) })?)
}

pub fn run_a2_diverge(ctx: &mut Ctx) -> Result<()> {
    let ns = [10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10_000];
    let rows = divergence_demo(&ns)?;
    let at = |n: usize| rows.iter().find(|r| r.n == n).expect("n in list");
    let mut partials = Series::new("partials", &["N", "a2_partial", "lift_partial"]);
    for r in &rows {
        partials.push(vec![r.n as f64, r.a2_partial, r.lift_partial]);
    }
    ctx.series(partials);
    let (a3, a4) = (at(1000).a2_partial, at(10_000).a2_partial);
    ctx.check("A2 partial increment 1e3 to 1e4, relative", (a4 - a3) / a3, Lt, 0.02);
    ctx.check("lift partial growth factor 1e2 to 1e4", at(10_000).lift_partial / at(100).lift_partial, Ge, 1.5);
    // Same factor when |a_k|²/(k+1) itself is 1/((k+2) log²(k+2)).
    let alt = divergence_demo_with(&[100, 10_000], |k| (k + 1) as f64 * divergence_sequence(k))?;
    ctx.info("lift growth factor, b_k = 1/((k+2) log^2(k+2))", alt[1].lift_partial / alt[0].lift_partial)?;

    // Term-wise: lifted series term 2H_k/(k+1) and the log-weighted integral
    // of z^k, each against log(k+1)/(k+1).
    let mut terms = Series::new("terms", &["k", "lift_term_ratio", "log_weighted_ratio", "log_weighted_exact"]);
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    let (mut qlo, mut qhi, mut qerr, mut conv) = (f64::INFINITY, 0.0f64, 0.0f64, true);
    for k in 10..=100usize {
        let scale = ((k + 1) as f64).ln() / (k + 1) as f64;
        let lift_term = 2.0 * harmonic(k) / (k + 1) as f64;
        let f = DiskFunction::TaylorPoly(TaylorPoly::monomial(k));
        let q = log_weighted_norm(&f, &log_grid(&f)?)?;
        let exact = harmonic(k + 1) / (k + 1) as f64;
        qerr = qerr.max((q.value / exact - 1.0).abs());
        conv &= q.converged;
        let (r, rq) = (lift_term / scale, q.value / scale);
        lo = lo.min(r);
        hi = hi.max(r);
        qlo = qlo.min(rq);
        qhi = qhi.max(rq);
        terms.push(vec![k as f64, r, rq, exact]);
    }
    ctx.check_range("lift term ratio k in [10,100]", lo, hi, 0.5, 2.0);
    ctx.check_range("log-weighted ratio k in [10,100]", qlo, qhi, 0.5, 2.0);
    ctx.check("log-weighted quadrature relative error vs H_{k+1}/(k+1)", qerr, Le, 1e-4);
    ctx.check("log-weighted integrals converged", conv as u8 as f64, Ge, 1.0);
    let one = DiskFunction::poly(&[1.0])?;
    let v = log_weighted_norm(&one, &log_grid(&one)?)?.value;
    ctx.check("log-weighted integral of 1, error", (v - 1.0).abs(), Le, 1e-5);
    ctx.series(terms);
    Ok(())
}
