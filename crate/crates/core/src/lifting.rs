//! The symmetric lifting `L f(z, w) = (f(z) − f(w))/(z − w)` to the bidisk,
//! the diagonal restriction `Δ F(z) = F(z, z)`, and the norm computations
//! around them.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::functions::{DiskFunction, TaylorPoly};
use crate::numerics::{abs_pow_from_sq, harmonic, pairwise_sum};
use crate::quadrature::{
    default_disk_grid, disk_norm_p, AngularRule, BidiskGrid, DiskGrid, GridSpec, NormResult,
};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Below this separation the closed-form quotient is replaced by `f′` at the midpoint.
pub const DIAGONAL_SWITCH: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub enum BidiskFunction {
    Lifted(DiskFunction),
    /// `Σ c[i][j] z^i w^j`
    TensorPoly(Vec<Vec<Complex64>>),
}

/// Coefficients `c_0..c_{d−1}` of `z ↦ L f(z, w)` for a polynomial `f`
/// (synthetic division of `f` by `z − w`).
fn quotient_coeffs(a: &[Complex64], w: Complex64, out: &mut Vec<Complex64>) {
    out.clear();
    let d = a.len() - 1;
    if d == 0 {
        return;
    }
    out.resize(d, ZERO);
    out[d - 1] = a[d];
    for m in (1..d).rev() {
        out[m - 1] = a[m] + w * out[m];
    }
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(ZERO, |acc, &x| acc * z + x)
}

/// `Σ_k a_k Σ_{i+j=k−1} z^i w^j`, evaluated as synthetic division in `w`
/// followed by Horner in `z`; exact on the diagonal.
pub fn lift_poly_eval(p: &TaylorPoly, z: Complex64, w: Complex64) -> Complex64 {
    let a = p.coeffs();
    let d = a.len() - 1;
    if d == 0 {
        return ZERO;
    }
    let mut c = a[d];
    let mut acc = c;
    for m in (1..d).rev() {
        c = a[m] + w * c;
        acc = acc * z + c;
    }
    acc
}

pub fn lift_eval(f: &DiskFunction, z: Complex64, w: Complex64) -> Complex64 {
    match f {
        DiskFunction::TaylorPoly(p) => lift_poly_eval(p, z, w),
        _ => {
            if (z - w).norm() < DIAGONAL_SWITCH {
                f.derivative((z + w) * 0.5)
            } else {
                (f.eval(z) - f.eval(w)) / (z - w)
            }
        }
    }
}

impl BidiskFunction {
    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        match self {
            BidiskFunction::Lifted(f) => lift_eval(f, z, w),
            BidiskFunction::TensorPoly(c) => {
                let rows: Vec<Complex64> = c.iter().map(|row| horner(row, w)).collect();
                horner(&rows, z)
            }
        }
    }
}

pub fn diagonal(f: &BidiskFunction, z: Complex64) -> Complex64 {
    f.eval(z, z)
}

/// Bidisk grid matched to `F`: exact for `|L f|²` when `f` is a polynomial,
/// graded towards `(1, 1)` otherwise.
pub fn default_bidisk_spec(f: &BidiskFunction) -> GridSpec {
    let deg = match f {
        BidiskFunction::Lifted(DiskFunction::TaylorPoly(p)) => Some(p.degree().max(1) - 1),
        BidiskFunction::TensorPoly(c) => Some(c.len().max(c.iter().map(|r| r.len()).max().unwrap_or(0)).max(1) - 1),
        _ => None,
    };
    match deg {
        Some(d) => GridSpec {
            radial_nodes: d / 2 + 2,
            tail_nodes: (d / 2 + 2).max(4),
            levels: 8,
            angular: AngularRule::Uniform { m: 2 * d + 2 },
        },
        None => GridSpec {
            radial_nodes: 8,
            tail_nodes: 8,
            levels: 12,
            angular: AngularRule::Graded { focus: 1.0, nodes_per_panel: 6 },
        },
    }
}

/// `∫∫ |F|^p dA_β dA_β`, `β` being the grid weight.
pub fn bidisk_norm(f: &BidiskFunction, p: f64, grid: &BidiskGrid) -> Result<NormResult> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::Parameter(format!("exponent p = {p} must be positive")));
    }
    let nodes = grid.nodes();
    Ok(match f {
        BidiskFunction::Lifted(DiskFunction::TaylorPoly(poly)) => {
            // L f(z, w) = Σ_i z^i v_i(w): quotient coefficients per w node
            let mut tmp = Vec::new();
            let per_w: Vec<Vec<Complex64>> = nodes
                .iter()
                .map(|n| {
                    quotient_coeffs(poly.coeffs(), n.z, &mut tmp);
                    tmp.clone()
                })
                .collect();
            grid.integrate_indexed(|i, j| abs_pow_from_sq(horner(&per_w[j], nodes[i].z).norm_sqr(), p))
        }
        BidiskFunction::Lifted(df) => {
            let vals: Vec<Complex64> = nodes.iter().map(|n| df.eval(n.z)).collect();
            let ders: Vec<Complex64> = nodes.iter().map(|n| df.derivative(n.z)).collect();
            grid.integrate_indexed(|i, j| {
                let (z, w) = (nodes[i].z, nodes[j].z);
                let v = if i == j {
                    ders[i]
                } else if (z - w).norm() < DIAGONAL_SWITCH {
                    df.derivative((z + w) * 0.5)
                } else {
                    (vals[i] - vals[j]) / (z - w)
                };
                abs_pow_from_sq(v.norm_sqr(), p)
            })
        }
        BidiskFunction::TensorPoly(_) => grid.integrate(|z, w| abs_pow_from_sq(f.eval(z, w).norm_sqr(), p)),
    })
}

/// `2 Σ_{k≥1} |a_k|² H_k/(k+1)`: the exact `∫∫|L f|² dA dA`.
pub fn lift_norm_series_a2(coeffs: &[Complex64]) -> f64 {
    let terms: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, a)| 2.0 * a.norm_sqr() * harmonic(k) / (k as f64 + 1.0))
        .collect();
    pairwise_sum(&terms)
}

/// `∫ |f|² log(1/(1−|z|²)) dA` on an unweighted grid.
///
/// The boundary tail rule does not resolve the logarithm at `|z| = 1`; the
/// resulting absolute error is about `1e-6·sup|f|²` on the default grid.
pub fn log_weighted_norm(f: &DiskFunction, grid: &DiskGrid) -> Result<NormResult> {
    if grid.alpha() != 0.0 {
        return Err(Error::Parameter("log-weighted norm needs an unweighted (α = 0) grid".into()));
    }
    Ok(grid.integrate(|z| {
        let u = z.norm_sqr();
        f.eval(z).norm_sqr() * -(-u).ln_1p()
    }))
}

/// `|a_k|² = 1/((k+2) log²(k+2))`.
pub fn divergence_sequence(k: usize) -> f64 {
    let x = k as f64 + 2.0;
    1.0 / (x * x.ln().powi(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DivergenceRow {
    pub n: usize,
    /// `Σ_{k≤N} |a_k|²/(k+1)`
    pub a2_partial: f64,
    /// `2 Σ_{1≤k≤N} |a_k|² H_k/(k+1)`
    pub lift_partial: f64,
}

/// Partial sums of the `A²` norm and of the lifted norm at each truncation in
/// `n_list` for the coefficient moduli `|a_k|² = sq_coeff(k)`.
pub fn divergence_demo_with<F: Fn(usize) -> f64>(n_list: &[usize], sq_coeff: F) -> Result<Vec<DivergenceRow>> {
    if n_list.is_empty() || n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Parameter("truncation degrees must be nonempty and increasing".into()));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    let (mut a2, mut lift, mut h) = (0.0, 0.0, 0.0);
    let mut next = 0;
    for k in 0..=*n_list.last().unwrap() {
        let b = sq_coeff(k) / (k as f64 + 1.0);
        a2 += b;
        if k >= 1 {
            h += 1.0 / k as f64;
            lift += 2.0 * b * h;
        }
        if k == n_list[next] {
            rows.push(DivergenceRow { n: k, a2_partial: a2, lift_partial: lift });
            next += 1;
        }
    }
    Ok(rows)
}

pub fn divergence_demo(n_list: &[usize]) -> Result<Vec<DivergenceRow>> {
    divergence_demo_with(n_list, divergence_sequence)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftTarget {
    /// Same space on the bidisk; needs `p < α + 2`.
    SameWeight,
    /// Weight `β = (p+α)/2 − 1`; needs `p > α + 2`.
    Rescaled,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub s: f64,
    pub norm_f: f64,
    pub norm_lf: f64,
    pub ratio: f64,
    pub converged_f: bool,
    pub converged_lf: bool,
}

impl ScanRow {
    pub fn converged(&self) -> bool {
        self.converged_f && self.converged_lf
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftingScanResult {
    pub target: LiftTarget,
    pub p: f64,
    pub alpha: f64,
    pub beta: f64,
    pub rows: Vec<ScanRow>,
    /// Parameters skipped because `p·s ≥ 2+α`.
    pub skipped: Vec<f64>,
}

impl LiftingScanResult {
    pub fn all_converged(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(ScanRow::converged)
    }

    /// Columns `s, norm_f, norm_Lf, ratio, converged`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Parameter(format!("csv: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["s", "norm_f", "norm_Lf", "ratio", "converged"]).map_err(io)?;
        for r in &self.rows {
            w.write_record([
                r.s.to_string(),
                r.norm_f.to_string(),
                r.norm_lf.to_string(),
                r.ratio.to_string(),
                r.converged().to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Parameter(format!("csv: {e}")))?;
        Ok(())
    }
}

/// For each `s` with `p·s < 2+α`: `‖(1−z)^{−s}‖^p` in `A^p_α` and `‖L f‖^p`
/// in the target space on the bidisk.
pub fn lifting_scan(s_values: &[f64], p: f64, alpha: f64, target: LiftTarget) -> Result<LiftingScanResult> {
    let beta = match target {
        LiftTarget::SameWeight if p < alpha + 2.0 => alpha,
        LiftTarget::Rescaled if p > alpha + 2.0 => (p + alpha) / 2.0 - 1.0,
        LiftTarget::SameWeight => {
            return Err(Error::Parameter(format!("same-weight lifting needs p < α+2, got p={p}, α={alpha}")))
        }
        LiftTarget::Rescaled => {
            return Err(Error::Parameter(format!("rescaled lifting needs p > α+2, got p={p}, α={alpha}")))
        }
    };
    let mut rows = vec![];
    let mut skipped = vec![];
    let mut grid: Option<BidiskGrid> = None;
    for &s in s_values {
        if p * s >= 2.0 + alpha {
            skipped.push(s);
            continue;
        }
        let f = DiskFunction::power(s)?;
        let nf = disk_norm_p(&f, p, &default_disk_grid(&f, alpha)?);
        let lf = BidiskFunction::Lifted(f);
        if grid.is_none() {
            grid = Some(BidiskGrid::new(beta, default_bidisk_spec(&lf))?);
        }
        let nl = bidisk_norm(&lf, p, grid.as_ref().unwrap())?;
        rows.push(ScanRow {
            s,
            norm_f: nf.value,
            norm_lf: nl.value,
            ratio: nl.value / nf.value,
            converged_f: nf.converged,
            converged_lf: nl.converged,
        });
    }
    Ok(LiftingScanResult { target, p, alpha, beta, rows, skipped })
}

/// `∫|F(z,z)|^p dA_{2(α+1)} / ∫∫|F|^p dA_α dA_α`.
pub fn diagonal_restriction_ratio(f: &BidiskFunction, p: f64, alpha: f64) -> Result<f64> {
    let spec = default_bidisk_spec(f);
    let diag = DiskGrid::new(2.0 * (alpha + 1.0), spec)?;
    let num = diag.integrate(|z| abs_pow_from_sq(diagonal(f, z).norm_sqr(), p)).value;
    let den = bidisk_norm(f, p, &BidiskGrid::new(alpha, spec)?)?.value;
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn mono(k: usize) -> DiskFunction {
        DiskFunction::TaylorPoly(TaylorPoly::monomial(k))
    }

    #[test]
    fn lift_examples() {
        let z = Complex64::new(0.3, 0.2);
        let w = Complex64::new(-0.1, 0.5);
        assert!((lift_eval(&mono(1), z, w) - 1.0).norm() < 1e-15);
        assert!((lift_eval(&mono(2), z, w) - (z + w)).norm() < 1e-15);
        assert!((lift_eval(&mono(3), c(0.5), c(0.5)) - 0.75).norm() < 1e-15);
        assert_eq!(lift_eval(&mono(0), z, w), ZERO);
    }

    #[test]
    fn diagonal_examples() {
        assert!((diagonal(&BidiskFunction::Lifted(mono(2)), c(0.3)) - 0.6).norm() < 1e-15);
        assert!((diagonal(&BidiskFunction::Lifted(mono(4)), c(0.5)) - 0.5).norm() < 1e-15);
        let t = BidiskFunction::TensorPoly(vec![vec![c(1.0)]]);
        assert_eq!(diagonal(&t, Complex64::new(0.2, 0.7)), c(1.0));
    }

    #[test]
    fn diagonal_of_lift_is_derivative() {
        let p = TaylorPoly::power_section(0.7, 25);
        let f = DiskFunction::TaylorPoly(p.clone());
        let lf = BidiskFunction::Lifted(f.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let z = Complex64::from_polar(rng.random_range(0.0..0.999), rng.random_range(0.0..6.3));
            let d = f.derivative(z);
            assert!((diagonal(&lf, z) - d).norm() <= 1e-12 * d.norm().max(1.0));
        }
    }

    #[test]
    fn closed_form_lift_matches_section() {
        let f = DiskFunction::power(0.5).unwrap();
        let p = DiskFunction::TaylorPoly(TaylorPoly::power_section(0.5, 400));
        let z = Complex64::new(0.3, 0.1);
        for w in [Complex64::new(-0.2, 0.4), z + 1e-8, z] {
            assert!((lift_eval(&f, z, w) - lift_eval(&p, z, w)).norm() < 1e-6);
        }
    }

    #[test]
    fn linearity() {
        let a = TaylorPoly::from_real(&[1.0, 2.0, -1.0, 0.5]).unwrap();
        let b = TaylorPoly::from_real(&[0.0, -1.0, 3.0]).unwrap();
        let mut sum = vec![ZERO; 4];
        for (i, x) in a.coeffs().iter().enumerate() {
            sum[i] += x * 2.0;
        }
        for (i, x) in b.coeffs().iter().enumerate() {
            sum[i] += x * -3.0;
        }
        let s = TaylorPoly::new(sum).unwrap();
        let z = Complex64::new(0.4, -0.3);
        let w = Complex64::new(0.1, 0.6);
        let lhs = lift_poly_eval(&s, z, w);
        let rhs = lift_poly_eval(&a, z, w) * 2.0 - lift_poly_eval(&b, z, w) * 3.0;
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn series_examples() {
        assert!((lift_norm_series_a2(&[c(0.0), c(1.0)]) - 1.0).abs() < 1e-15);
        assert!((lift_norm_series_a2(&[c(0.0), c(0.0), c(1.0)]) - 1.0).abs() < 1e-15);
        assert_eq!(lift_norm_series_a2(&[c(0.0)]), 0.0);
    }

    #[test]
    fn bidisk_norm_examples() {
        for k in [1usize, 2, 5] {
            let f = BidiskFunction::Lifted(mono(k));
            let g = BidiskGrid::new(0.0, default_bidisk_spec(&f)).unwrap();
            let r = bidisk_norm(&f, 2.0, &g).unwrap();
            let series = lift_norm_series_a2(TaylorPoly::monomial(k).coeffs());
            assert!((r.value / series - 1.0).abs() < 1e-12, "k={k}: {} vs {series}", r.value);
            assert!(r.converged);
        }
    }

    #[test]
    fn log_weighted_examples() {
        let g = DiskGrid::new(0.0, GridSpec::default()).unwrap();
        let one = DiskFunction::poly(&[1.0]).unwrap();
        assert!((log_weighted_norm(&one, &g).unwrap().value - 1.0).abs() < 1e-5);
        assert_eq!(log_weighted_norm(&DiskFunction::poly(&[0.0]).unwrap(), &g).unwrap().value, 0.0);
        // ∫ t^k log(1/(1−t)) dt = H_{k+1}/(k+1)
        for k in [10usize, 40, 100] {
            let v = log_weighted_norm(&mono(k), &g).unwrap().value;
            let exact = harmonic(k + 1) / (k as f64 + 1.0);
            assert!((v / exact - 1.0).abs() < 1e-4, "{k}: {v} vs {exact}");
        }
        let w = DiskGrid::new(1.0, GridSpec::default()).unwrap();
        assert!(log_weighted_norm(&one, &w).is_err());
    }

    #[test]
    fn divergence_rows() {
        let rows = divergence_demo(&[2, 100, 1000]).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.windows(2).all(|w| w[1].a2_partial > w[0].a2_partial));
        // the k = 2 lifted term alone is |a_2|²
        let one = divergence_demo_with(&[2], |k| if k == 2 { 1.0 } else { 0.0 }).unwrap();
        assert!((one[0].lift_partial - 1.0).abs() < 1e-15);
        assert!(divergence_demo(&[10, 5]).is_err());
    }

    #[test]
    fn scan_preconditions() {
        assert!(lifting_scan(&[0.5], 3.0, 0.0, LiftTarget::SameWeight).is_err());
        assert!(lifting_scan(&[0.5], 1.0, 0.0, LiftTarget::Rescaled).is_err());
    }

    #[test]
    fn scan_csv_columns() {
        let r = LiftingScanResult {
            target: LiftTarget::SameWeight,
            p: 1.0,
            alpha: 0.0,
            beta: 0.0,
            rows: vec![ScanRow { s: 0.5, norm_f: 1.0, norm_lf: 2.0, ratio: 2.0, converged_f: true, converged_lf: true }],
            skipped: vec![],
        };
        let mut buf = vec![];
        r.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("s,norm_f,norm_Lf,ratio,converged\n0.5,1,2,2,true"));
    }
}
