//! Metrics on the unit disk and the unit ball of `C^n` (`n = 2, 3`).
//!
//! The hot-path functions (`rho_c`, `beta_c`, ...) take raw complex numbers and
//! assume the caller already knows the points are inside the domain. The typed
//! wrappers validate once at construction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    pub re: f64,
    pub im: f64,
}

impl DiskPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        let m = re * re + im * im;
        if !m.is_finite() || m >= 1.0 {
            return Err(Error::Domain(format!("|z|^2 = {m} is not < 1")));
        }
        Ok(Self { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

pub const MAX_BALL_DIM: usize = 3;

/// A point of the open unit ball in `C^n`, `n ∈ {2, 3}`.
///
/// Stored inline; coordinates beyond `dim` are zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallPoint {
    coords: [Complex64; MAX_BALL_DIM],
    dim: usize,
}

impl BallPoint {
    pub fn new(coords: &[Complex64]) -> Result<Self> {
        let p = Self::from_slice_unchecked(coords)?;
        let m = p.norm_sqr();
        if !m.is_finite() || m >= 1.0 {
            return Err(Error::Domain(format!("|z|^2 = {m} is not < 1")));
        }
        Ok(p)
    }

    fn from_slice_unchecked(coords: &[Complex64]) -> Result<Self> {
        if !(2..=MAX_BALL_DIM).contains(&coords.len()) {
            return Err(Error::Parameter(format!(
                "ball dimension {} not in {{2, 3}}",
                coords.len()
            )));
        }
        let mut c = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Self {
            coords: c,
            dim: coords.len(),
        })
    }

    /// Builds a point without the `|z| < 1` check. Used for intermediate
    /// vectors (differences, tangent steps).
    pub(crate) fn raw(coords: [Complex64; MAX_BALL_DIM], dim: usize) -> Self {
        Self { coords, dim }
    }

    pub fn origin(dim: usize) -> Result<Self> {
        Self::new(&vec![Complex64::new(0.0, 0.0); dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords[..self.dim]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords().iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, t: f64) -> Self {
        let mut c = self.coords;
        for x in c.iter_mut().take(self.dim) {
            *x *= t;
        }
        Self::raw(c, self.dim)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut c = self.coords;
        for (x, y) in c.iter_mut().zip(other.coords.iter()).take(self.dim) {
            *x -= *y;
        }
        Self::raw(c, self.dim)
    }
}

impl Serialize for BallPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coords().iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BallPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[f64; 2]> = Vec::deserialize(d)?;
        let coords: Vec<Complex64> = pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        BallPoint::new(&coords).map_err(serde::de::Error::custom)
    }
}

/// Pseudo-hyperbolic radius `r ∈ (0,1)` together with the hyperbolic radius
/// `R = ½ log((1+r)/(1−r))` describing the same disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusPair {
    pub r: f64,
    #[serde(rename = "R")]
    pub big_r: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusInput {
    Pseudo,
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EuclideanDisk {
    pub center: Complex64,
    pub radius: f64,
}

impl EuclideanDisk {
    pub fn contains(&self, u: Complex64) -> bool {
        (u - self.center).norm() < self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Rho,
    Beta,
    Euclid,
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Rho => "rho",
            Metric::Beta => "beta",
            Metric::Euclid => "euclid",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BallMetric {
    Rho,
    Beta,
    /// `|z−w| / |1−⟨z,w⟩|`
    D,
}

// ---------------------------------------------------------------------------
// Disk
// ---------------------------------------------------------------------------

#[inline]
pub fn rho_c(z: Complex64, w: Complex64) -> f64 {
    (z - w).norm() / (Complex64::new(1.0, 0.0) - z.conj() * w).norm()
}

/// `1 − ρ(z,w)²` through the identity `(1−|z|²)(1−|w|²)/|1−z̄w|²`, exact in
/// relative terms even when `ρ` is close to 1.
#[inline]
pub fn one_minus_rho_sq_c(z: Complex64, w: Complex64) -> f64 {
    let k = (Complex64::new(1.0, 0.0) - z.conj() * w).norm_sqr();
    (1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr()) / k
}

#[inline]
pub fn beta_from_rho(rho: f64, one_minus_rho_sq: f64) -> f64 {
    let one_minus_rho = one_minus_rho_sq / (1.0 + rho);
    0.5 * ((1.0 + rho).ln() - one_minus_rho.ln())
}

#[inline]
pub fn beta_c(z: Complex64, w: Complex64) -> f64 {
    let r = rho_c(z, w);
    if r < 0.5 {
        r.atanh()
    } else {
        beta_from_rho(r, one_minus_rho_sq_c(z, w))
    }
}

/// `ρ(z,w) = |(z−w)/(1−z̄w)|`.
pub fn rho(z: DiskPoint, w: DiskPoint) -> f64 {
    rho_c(z.z(), w.z())
}

/// `β(z,w) = ½ log((1+ρ)/(1−ρ))`.
pub fn beta(z: DiskPoint, w: DiskPoint) -> f64 {
    beta_c(z.z(), w.z())
}

pub fn metric_c(metric: Metric, z: Complex64, w: Complex64) -> f64 {
    match metric {
        Metric::Rho => rho_c(z, w),
        Metric::Beta => beta_c(z, w),
        Metric::Euclid => (z - w).norm(),
    }
}

/// Disk automorphism `φ_a(z) = (a − z)/(1 − āz)`; an involution exchanging 0 and `a`.
#[inline]
pub fn disk_phi(a: Complex64, z: Complex64) -> Complex64 {
    (a - z) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

fn check_pseudo_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Parameter(format!("radius r = {r} not in (0,1)")));
    }
    Ok(())
}

/// The pseudo-hyperbolic disk `D(z,r)` as a Euclidean disk.
pub fn pseudo_disk(z: DiskPoint, r: f64) -> Result<EuclideanDisk> {
    check_pseudo_radius(r)?;
    Ok(pseudo_disk_c(z.z(), r))
}

#[inline]
pub(crate) fn pseudo_disk_c(z: Complex64, r: f64) -> EuclideanDisk {
    let m = z.norm_sqr();
    let den = 1.0 - r * r * m;
    EuclideanDisk {
        center: z * ((1.0 - r * r) / den),
        radius: r * (1.0 - m) / den,
    }
}

pub fn radius_convert(value: f64, input: RadiusInput) -> Result<RadiusPair> {
    match input {
        RadiusInput::Pseudo => {
            check_pseudo_radius(value)?;
            Ok(RadiusPair {
                r: value,
                big_r: value.atanh(),
            })
        }
        RadiusInput::Hyperbolic => {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::Parameter(format!(
                    "hyperbolic radius R = {value} must be positive"
                )));
            }
            Ok(RadiusPair {
                r: value.tanh(),
                big_r: value,
            })
        }
    }
}

/// `r′` with `D(z,r′) = E(z,2R)`, i.e. `tanh(2 artanh r) = 2r/(1+r²)`.
pub fn double_radius(r: f64) -> Result<f64> {
    check_pseudo_radius(r)?;
    Ok(2.0 * r / (1.0 + r * r))
}

/// Explicit comparability constants on `ρ(z,w) ≤ r`:
/// `(1−r)/(1+r) ≤ (1−|z|²)/|1−z̄w| ≤ 2` and
/// `(1−r)/(1+r) ≤ (1−|z|²)/(1−|w|²) ≤ (1+r)/(1−r)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Comparability {
    pub kernel_lower: f64,
    pub kernel_upper: f64,
    pub ratio_lower: f64,
    pub ratio_upper: f64,
}

pub fn comparability(r: f64) -> Result<Comparability> {
    check_pseudo_radius(r)?;
    Ok(Comparability {
        kernel_lower: (1.0 - r) / (1.0 + r),
        kernel_upper: 2.0,
        ratio_lower: (1.0 - r) / (1.0 + r),
        ratio_upper: (1.0 + r) / (1.0 - r),
    })
}

// ---------------------------------------------------------------------------
// Ball
// ---------------------------------------------------------------------------

/// `⟨z,w⟩ = Σ z_k w̄_k`
#[inline]
pub fn inner(z: &BallPoint, w: &BallPoint) -> Complex64 {
    z.coords()
        .iter()
        .zip(w.coords())
        .map(|(a, b)| a * b.conj())
        .sum()
}

fn same_dim(a: &BallPoint, b: &BallPoint) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::Type(format!(
            "ball points of dimension {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(())
}

/// Precomputed data for evaluating `φ_a` many times.
///
/// `φ_a(z) = (a − P_a z − s_a Q_a z)/(1 − ⟨z,a⟩)` with `P_a` the orthogonal
/// projection onto `C·a`, `Q_a = I − P_a`, `s_a = √(1−|a|²)`.
#[derive(Debug, Clone, Copy)]
pub struct BallAutomorphism {
    a: BallPoint,
    a_norm_sqr: f64,
    s: f64,
}

impl BallAutomorphism {
    pub fn new(a: BallPoint) -> Self {
        let m = a.norm_sqr();
        Self {
            a,
            a_norm_sqr: m,
            s: (1.0 - m).sqrt(),
        }
    }

    pub fn center(&self) -> &BallPoint {
        &self.a
    }

    /// Applies `φ_a`. The result is only guaranteed inside the ball when `z` is.
    pub fn apply(&self, z: &BallPoint) -> BallPoint {
        let n = self.a.dim();
        let za = inner(z, &self.a);
        let den = Complex64::new(1.0, 0.0) - za;
        let mut out = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
        if self.a_norm_sqr == 0.0 {
            for k in 0..n {
                out[k] = -z.coords[k];
            }
            return BallPoint::raw(out, n);
        }
        let t = za / self.a_norm_sqr;
        for k in 0..n {
            let p = self.a.coords[k] * t;
            let q = z.coords[k] - p;
            out[k] = (self.a.coords[k] - p - q * self.s) / den;
        }
        BallPoint::raw(out, n)
    }

    /// `φ_a(t·e_k)` for a real step `t`, with the linear part precomputed by
    /// the caller through [`Self::axis_images`].
    #[inline]
    pub(crate) fn apply_axis(&self, images: &[Complex64; MAX_BALL_DIM], ak_conj: Complex64, t: f64) -> BallPoint {
        let n = self.a.dim();
        let den = Complex64::new(1.0, 0.0) - ak_conj * t;
        let mut out = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
        for j in 0..n {
            out[j] = (self.a.coords[j] - images[j] * t) / den;
        }
        BallPoint::raw(out, n)
    }

    /// `P_a e_k + s_a Q_a e_k` for each axis `k`, so that
    /// `φ_a(t e_k) = (a − t·image_k)/(1 − t·ā_k)`.
    pub(crate) fn axis_images(&self) -> Vec<[Complex64; MAX_BALL_DIM]> {
        let n = self.a.dim();
        (0..n)
            .map(|k| {
                let mut img = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
                if self.a_norm_sqr == 0.0 {
                    img[k] = Complex64::new(1.0, 0.0);
                    return img;
                }
                // ⟨e_k, a⟩ = ā_k
                let t = self.a.coords[k].conj() / self.a_norm_sqr;
                for j in 0..n {
                    let p = self.a.coords[j] * t;
                    let e = if j == k { 1.0 } else { 0.0 };
                    img[j] = p + (Complex64::new(e, 0.0) - p) * self.s;
                }
                img
            })
            .collect()
    }
}

pub fn ball_phi(a: &BallPoint, z: &BallPoint) -> Result<BallPoint> {
    same_dim(a, z)?;
    Ok(BallAutomorphism::new(*a).apply(z))
}

#[inline]
pub(crate) fn ball_rho_raw(z: &BallPoint, w: &BallPoint) -> f64 {
    BallAutomorphism::new(*z).apply(w).norm()
}

pub fn ball_metric(z: &BallPoint, w: &BallPoint, kind: BallMetric) -> Result<f64> {
    same_dim(z, w)?;
    Ok(match kind {
        BallMetric::Rho => ball_rho_raw(z, w),
        BallMetric::Beta => {
            let r = ball_rho_raw(z, w);
            if r < 0.5 {
                r.atanh()
            } else {
                let k = (Complex64::new(1.0, 0.0) - inner(z, w)).norm_sqr();
                beta_from_rho(r, (1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr()) / k)
            }
        }
        BallMetric::D => z.sub(w).norm() / (Complex64::new(1.0, 0.0) - inner(z, w)).norm(),
    })
}

/// Residual of `1−|φ_z(w)|² = (1−|z|²)(1−|w|²)/|1−⟨z,w⟩|²`, in the
/// multiplied-out form `(1−|φ_z(w)|²)|1−⟨z,w⟩|² − (1−|z|²)(1−|w|²)`.
pub fn ball_identity_residual(z: &BallPoint, w: &BallPoint) -> Result<f64> {
    let phi = ball_phi(z, w)?;
    let k = (Complex64::new(1.0, 0.0) - inner(z, w)).norm_sqr();
    Ok(((1.0 - phi.norm_sqr()) * k - (1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr())).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(re, im).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn disk_point_rejects_boundary() {
        assert!(matches!(DiskPoint::new(1.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(DiskPoint::new(0.8, 0.7), Err(Error::Domain(_))));
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn rho_examples() {
        let w = dp(0.3, -0.4);
        assert_relative_eq!(rho(dp(0.0, 0.0), w), 0.5, epsilon = 1e-15);
        assert_eq!(rho(dp(0.5, 0.0), dp(0.5, 0.0)), 0.0);
        // |0.5 - (-0.5)| / |1 + 0.25|
        assert_relative_eq!(rho(dp(0.5, 0.0), dp(-0.5, 0.0)), 0.8, epsilon = 1e-15);
    }

    #[test]
    fn beta_examples() {
        assert_relative_eq!(beta(dp(0.0, 0.0), dp(0.5, 0.0)), 0.5 * 3f64.ln(), epsilon = 1e-15);
        assert_eq!(beta(dp(0.2, 0.1), dp(0.2, 0.1)), 0.0);
        assert_relative_eq!(
            beta(dp(0.0, 0.0), dp(0.99, 0.0)),
            0.5 * (1.99f64 / 0.01).ln(),
            epsilon = 1e-13
        );
        assert_relative_eq!(0.5 * (1.99f64 / 0.01).ln(), 2.64665, epsilon = 1e-5);
    }

    #[test]
    fn pseudo_disk_examples() {
        let d = pseudo_disk(dp(0.0, 0.0), 0.3).unwrap();
        assert_eq!(d.center, c(0.0, 0.0));
        assert_relative_eq!(d.radius, 0.3);
        let d = pseudo_disk(dp(0.5, 0.0), 0.5).unwrap();
        assert_relative_eq!(d.center.re, 0.4, epsilon = 1e-15);
        assert_relative_eq!(d.radius, 0.4, epsilon = 1e-15);
        let d = pseudo_disk(dp(0.9, 0.0), 0.5).unwrap();
        assert_relative_eq!(d.center.re, 0.75 * 0.9 / 0.7975, epsilon = 1e-15);
        assert_relative_eq!(d.radius, 0.5 * 0.19 / 0.7975, epsilon = 1e-15);
        assert!(matches!(pseudo_disk(dp(0.0, 0.0), 1.0), Err(Error::Parameter(_))));
        assert!(pseudo_disk(dp(0.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn pseudo_disk_boundary_has_constant_rho() {
        for z in [c(0.0, 0.0), c(0.5, 0.2), c(-0.97, 0.1), c(0.0, 0.999)] {
            for r in [0.1, 0.5, 0.9] {
                let d = pseudo_disk_c(z, r);
                for k in 0..64 {
                    let u = d.center + Complex64::from_polar(d.radius, k as f64 * std::f64::consts::TAU / 64.0);
                    assert!((rho_c(u, z) - r).abs() < 1e-11, "z={z} r={r}");
                }
            }
        }
    }

    #[test]
    fn radius_conversion() {
        let p = radius_convert(0.5, RadiusInput::Pseudo).unwrap();
        assert_relative_eq!(p.big_r, 0.549306, epsilon = 1e-6);
        let q = radius_convert(1.0, RadiusInput::Hyperbolic).unwrap();
        assert_relative_eq!(q.r, 0.761594, epsilon = 1e-6);
        let tiny = radius_convert(1e-9, RadiusInput::Hyperbolic).unwrap();
        assert!(tiny.r < 2e-9);
        assert!(radius_convert(1.2, RadiusInput::Pseudo).is_err());
        assert!(radius_convert(-1.0, RadiusInput::Hyperbolic).is_err());
    }

    #[test]
    fn doubling() {
        assert_relative_eq!(double_radius(0.5).unwrap(), 0.8, epsilon = 1e-15);
        assert_relative_eq!(double_radius(0.9).unwrap(), 1.8 / 1.81, epsilon = 1e-15);
        assert_relative_eq!(double_radius(1e-6).unwrap(), 2e-6, max_relative = 1e-11);
        let rp = radius_convert(0.37, RadiusInput::Pseudo).unwrap();
        let doubled = radius_convert(2.0 * rp.big_r, RadiusInput::Hyperbolic).unwrap();
        assert_relative_eq!(doubled.r, double_radius(0.37).unwrap(), epsilon = 1e-15);
    }

    fn bp(v: &[(f64, f64)]) -> BallPoint {
        BallPoint::new(&v.iter().map(|&(a, b)| c(a, b)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ball_point_validation() {
        assert!(matches!(BallPoint::new(&[c(0.8, 0.0), c(0.0, 0.7)]), Err(Error::Domain(_))));
        assert!(matches!(BallPoint::new(&[c(0.1, 0.0)]), Err(Error::Parameter(_))));
        assert!(BallPoint::new(&[c(0.1, 0.0); 4]).is_err());
    }

    #[test]
    fn ball_phi_examples() {
        let a = bp(&[(0.5, 0.1), (-0.2, 0.3)]);
        let o = BallPoint::origin(2).unwrap();
        let at0 = ball_phi(&a, &o).unwrap();
        for (x, y) in at0.coords().iter().zip(a.coords()) {
            assert!((x - y).norm() < 1e-15);
        }
        assert!(ball_phi(&a, &a).unwrap().norm() < 1e-15);
        let a = bp(&[(0.5, 0.0), (0.0, 0.0)]);
        let z = bp(&[(0.0, 0.0), (0.5, 0.0)]);
        assert!(ball_identity_residual(&a, &z).unwrap() < 1e-12);
        // a = 0 gives -z
        let m = ball_phi(&o, &z).unwrap();
        assert_eq!(m.coords()[1], c(-0.5, 0.0));
    }

    #[test]
    fn ball_metric_examples() {
        let o = BallPoint::origin(2).unwrap();
        let w = bp(&[(0.3, 0.1), (0.0, -0.4)]);
        assert_relative_eq!(ball_metric(&o, &w, BallMetric::Rho).unwrap(), w.norm(), epsilon = 1e-15);
        let z = bp(&[(0.3, 0.0), (0.0, 0.0)]);
        let w = bp(&[(0.0, 0.0), (0.4, 0.0)]);
        assert_relative_eq!(ball_metric(&z, &w, BallMetric::D).unwrap(), 0.5, epsilon = 1e-15);
        let z3 = bp(&[(0.1, 0.0), (0.0, 0.0), (0.2, 0.0)]);
        assert!(matches!(ball_metric(&z, &z3, BallMetric::Rho), Err(Error::Type(_))));
    }

    #[test]
    fn axis_images_match_full_automorphism() {
        let a = bp(&[(0.4, -0.2), (0.1, 0.5), (0.0, 0.2)]);
        let phi = BallAutomorphism::new(a);
        let imgs = phi.axis_images();
        for (k, img) in imgs.iter().enumerate() {
            for t in [1e-5, -0.3] {
                let mut e = [c(0.0, 0.0); 3];
                e[k] = c(t, 0.0);
                let direct = phi.apply(&BallPoint::raw(e, 3));
                let fast = phi.apply_axis(img, a.coords()[k].conj(), t);
                assert!(direct.sub(&fast).norm() < 1e-15);
            }
        }
    }

    fn disk_pt() -> impl Strategy<Value = Complex64> {
        (0.0f64..0.999, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
    }

    proptest! {
        #[test]
        fn rho_symmetric_and_rotation_invariant(z in disk_pt(), w in disk_pt(), th in 0.0f64..6.3) {
            let e = Complex64::from_polar(1.0, th);
            prop_assert!((rho_c(z, w) - rho_c(w, z)).abs() < 1e-14);
            prop_assert!((rho_c(z, w) - rho_c(e * z, e * w)).abs() < 1e-13);
            prop_assert!(rho_c(z, w) < 1.0);
        }

        #[test]
        fn beta_dominates_rho(z in disk_pt(), w in disk_pt()) {
            prop_assert!(beta_c(z, w) >= rho_c(z, w) - 1e-15);
        }

        #[test]
        fn radius_round_trip(r in 1e-6f64..0.999) {
            let p = radius_convert(r, RadiusInput::Pseudo).unwrap();
            let q = radius_convert(p.big_r, RadiusInput::Hyperbolic).unwrap();
            prop_assert!((q.r - r).abs() < 1e-14);
        }

        #[test]
        fn disk_phi_is_involution(a in disk_pt(), z in disk_pt()) {
            prop_assert!((disk_phi(a, disk_phi(a, z)) - z).norm() < 1e-9);
            prop_assert!((disk_phi(a, z).norm() - rho_c(a, z)).abs() < 1e-12);
        }
    }
}
