//! Analytic test functions on the disk and holomorphic polynomials on the ball.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::{BallAutomorphism, BallMetric, BallPoint, DiskPoint, MAX_BALL_DIM};
use crate::{Error, Result};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Step for the central differences of `f∘φ_z` at the origin.
pub const INVARIANT_GRADIENT_STEP: f64 = 1e-5;

/// A finite Taylor polynomial `Σ a_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorPoly {
    coeffs: Vec<Complex64>,
}

impl TaylorPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parameter("Taylor polynomial needs at least a_0".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Parameter("non-finite Taylor coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `z^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![ZERO; k + 1];
        c[k] = ONE;
        Self { coeffs: c }
    }

    /// Degree-`n` Taylor section of `(1−z)^{−s}`:
    /// `a_0 = 1`, `a_k = a_{k−1}(k−1+s)/k`.
    pub fn power_section(s: f64, n: usize) -> Self {
        let mut c = Vec::with_capacity(n + 1);
        let mut a = 1.0;
        c.push(ONE);
        for k in 1..=n {
            a *= (k as f64 - 1.0 + s) / k as f64;
            c.push(Complex64::new(a, 0.0));
        }
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    #[inline]
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &a| acc * z + a)
    }

    /// `f′` by shift-and-scale of the coefficients.
    pub fn derivative_poly(&self) -> TaylorPoly {
        if self.coeffs.len() == 1 {
            return TaylorPoly { coeffs: vec![ZERO] };
        }
        TaylorPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| a * k as f64)
                .collect(),
        }
    }

    #[inline]
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let n = self.coeffs.len();
        let mut acc = ZERO;
        for k in (1..n).rev() {
            acc = acc * z + self.coeffs[k] * k as f64;
        }
        acc
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Coefficients `b_m` of `f(c + v) = Σ b_m v^m` (repeated synthetic division).
    pub fn shifted(&self, c: Complex64) -> Vec<Complex64> {
        let mut b = self.coeffs.clone();
        let n = b.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = b[j + 1] * c;
                b[j] += t;
            }
        }
        b
    }
}

/// Functions analytic on the open disk.
#[derive(Debug, Clone, PartialEq)]
pub enum DiskFunction {
    TaylorPoly(TaylorPoly),
    /// `(1−z)^{−s}`, `s > 0`, principal branch.
    PowerSingularity { s: f64 },
    /// `log 1/(1−z)`
    LogKernel,
}

impl DiskFunction {
    pub fn power(s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::Parameter(format!("power singularity needs s > 0, got {s}")));
        }
        Ok(DiskFunction::PowerSingularity { s })
    }

    pub fn poly(coeffs: &[f64]) -> Result<Self> {
        Ok(DiskFunction::TaylorPoly(TaylorPoly::from_real(coeffs)?))
    }

    #[inline]
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            DiskFunction::TaylorPoly(p) => p.eval(z),
            DiskFunction::PowerSingularity { s } => ((ONE - z).ln() * (-s)).exp(),
            DiskFunction::LogKernel => -(ONE - z).ln(),
        }
    }

    #[inline]
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        match self {
            DiskFunction::TaylorPoly(p) => p.derivative(z),
            DiskFunction::PowerSingularity { s } => ((ONE - z).ln() * (-s - 1.0)).exp() * *s,
            DiskFunction::LogKernel => (ONE - z).inv(),
        }
    }

    /// True when the function is bounded on the closed disk.
    pub fn is_polynomial(&self) -> bool {
        matches!(self, DiskFunction::TaylorPoly(_))
    }

    pub fn as_poly(&self) -> Option<&TaylorPoly> {
        match self {
            DiskFunction::TaylorPoly(p) => Some(p),
            _ => None,
        }
    }

    /// Multiplies by a constant. Closed forms are first turned into nothing
    /// else than themselves, so only polynomials support scaling.
    pub fn scaled(&self, c: Complex64) -> Result<Self> {
        match self {
            DiskFunction::TaylorPoly(p) => Ok(DiskFunction::TaylorPoly(p.scaled(c))),
            _ => Err(Error::Type("only Taylor polynomials can be rescaled".into())),
        }
    }
}

/// One monomial `c · z_1^{e_1} ⋯ z_n^{e_n}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub exponents: [u32; MAX_BALL_DIM],
    #[serde(with = "complex_pair")]
    pub coeff: Complex64,
}

/// A holomorphic polynomial on the ball of `C^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoly {
    dim: usize,
    terms: Vec<Monomial>,
}

impl BallPoly {
    pub fn new(dim: usize, terms: Vec<Monomial>) -> Result<Self> {
        if !(2..=MAX_BALL_DIM).contains(&dim) {
            return Err(Error::Parameter(format!("ball dimension {dim} not in {{2, 3}}")));
        }
        if terms.iter().any(|t| t.exponents[dim..].iter().any(|&e| e != 0)) {
            return Err(Error::Parameter("monomial uses a coordinate beyond the dimension".into()));
        }
        Ok(Self { dim, terms })
    }

    /// Builds from `(coefficient, exponents)` pairs with real coefficients.
    pub fn from_terms(dim: usize, terms: &[(f64, &[u32])]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            if e.len() != dim {
                return Err(Error::Parameter("exponent vector length != dimension".into()));
            }
            let mut ex = [0; MAX_BALL_DIM];
            ex[..dim].copy_from_slice(e);
            out.push(Monomial {
                exponents: ex,
                coeff: Complex64::new(*c, 0.0),
            });
        }
        Self::new(dim, out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    fn check(&self, z: &BallPoint) -> Result<()> {
        if z.dim() != self.dim {
            return Err(Error::Type(format!(
                "polynomial on C^{} evaluated at a point of C^{}",
                self.dim,
                z.dim()
            )));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn eval_raw(&self, z: &BallPoint) -> Complex64 {
        let c = z.coords();
        self.terms
            .iter()
            .map(|t| {
                let mut v = t.coeff;
                for (k, &e) in t.exponents[..self.dim].iter().enumerate() {
                    if e > 0 {
                        v *= c[k].powu(e);
                    }
                }
                v
            })
            .sum()
    }

    pub fn eval(&self, z: &BallPoint) -> Result<Complex64> {
        self.check(z)?;
        Ok(self.eval_raw(z))
    }

    /// `∂f/∂z_k` for every `k`, exactly.
    pub(crate) fn partials_raw(&self, z: &BallPoint) -> [Complex64; MAX_BALL_DIM] {
        let c = z.coords();
        let mut out = [ZERO; MAX_BALL_DIM];
        for t in &self.terms {
            for k in 0..self.dim {
                let ek = t.exponents[k];
                if ek == 0 {
                    continue;
                }
                let mut v = t.coeff * ek as f64;
                for (j, &e) in t.exponents[..self.dim].iter().enumerate() {
                    let e = if j == k { e - 1 } else { e };
                    if e > 0 {
                        v *= c[j].powu(e);
                    }
                }
                out[k] += v;
            }
        }
        out
    }

    pub(crate) fn radial_raw(&self, z: &BallPoint) -> Complex64 {
        let d = self.partials_raw(z);
        z.coords().iter().zip(d.iter()).map(|(a, b)| a * b).sum()
    }

    pub(crate) fn gradient_norm_raw(&self, z: &BallPoint) -> f64 {
        self.partials_raw(z)[..self.dim]
            .iter()
            .map(|d| d.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `|∇(f∘φ_z)(0)|` by central differences with step
    /// [`INVARIANT_GRADIENT_STEP`] along each complex axis.
    pub(crate) fn invariant_gradient_raw(&self, phi: &BallAutomorphism) -> f64 {
        let h = INVARIANT_GRADIENT_STEP;
        let a = phi.center();
        let images = phi.axis_images();
        let mut sum = 0.0;
        for (k, img) in images.iter().enumerate() {
            let ak = a.coords()[k].conj();
            let fp = self.eval_raw(&phi.apply_axis(img, ak, h));
            let fm = self.eval_raw(&phi.apply_axis(img, ak, -h));
            sum += ((fp - fm) / (2.0 * h)).norm_sqr();
        }
        sum.sqrt()
    }
}

/// Any of the supported test functions.
#[derive(Debug, Clone, PartialEq)]
pub enum HoloFunction {
    Disk(DiskFunction),
    Ball(BallPoly),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Disk(DiskPoint),
    Ball(BallPoint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeKind {
    /// `f′` (disk only)
    Complex,
    /// `Rf = Σ z_k ∂f/∂z_k`
    Radial,
    /// `|∇f|`
    Gradient,
    /// `|∇̃f(z)| = |∇(f∘φ_z)(0)|`
    InvariantGradient,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivativeValue {
    Complex(Complex64),
    Real(f64),
}

impl DerivativeValue {
    pub fn abs(&self) -> f64 {
        match self {
            DerivativeValue::Complex(c) => c.norm(),
            DerivativeValue::Real(r) => r.abs(),
        }
    }
}

impl HoloFunction {
    pub fn eval(&self, at: Point) -> Result<Complex64> {
        match (self, at) {
            (HoloFunction::Disk(f), Point::Disk(z)) => Ok(f.eval(z.z())),
            (HoloFunction::Ball(f), Point::Ball(z)) => f.eval(&z),
            _ => Err(Error::Type("function and point live on different domains".into())),
        }
    }

    pub fn derivative(&self, at: Point, kind: DerivativeKind) -> Result<DerivativeValue> {
        match (self, at, kind) {
            (HoloFunction::Disk(f), Point::Disk(z), DerivativeKind::Complex) => {
                Ok(DerivativeValue::Complex(f.derivative(z.z())))
            }
            (HoloFunction::Disk(_), Point::Disk(_), k) => Err(Error::Type(format!(
                "derivative kind {k:?} is not defined for disk functions"
            ))),
            (HoloFunction::Ball(f), Point::Ball(z), k) => {
                f.check(&z)?;
                match k {
                    DerivativeKind::Complex => Err(Error::Type(
                        "the complex derivative is only defined on the disk".into(),
                    )),
                    DerivativeKind::Radial => Ok(DerivativeValue::Complex(f.radial_raw(&z))),
                    DerivativeKind::Gradient => Ok(DerivativeValue::Real(f.gradient_norm_raw(&z))),
                    DerivativeKind::InvariantGradient => Ok(DerivativeValue::Real(
                        f.invariant_gradient_raw(&BallAutomorphism::new(z)),
                    )),
                }
            }
            _ => Err(Error::Type("function and point live on different domains".into())),
        }
    }
}

/// `ρ(z,w)/|z−w|` or `β(z,w)/|z−w|` at `w = (1 − h/|z|)·z` (radially inward,
/// `|z−w| = h`). For `z = 0` on the disk, `w = h`. The limit as `h → 0` is
/// `1/(1−|z|²)`.
pub fn radial_difference_limit(at: Point, metric: BallMetric, h: f64) -> Result<f64> {
    if metric == BallMetric::D {
        return Err(Error::Parameter("use rho or beta for the difference quotient".into()));
    }
    match at {
        Point::Disk(z) => {
            let zc = z.z();
            let m = zc.norm();
            if !(h > 0.0 && h < 1.0 - m) {
                return Err(Error::Parameter(format!("step h = {h} not in (0, 1−|z|)")));
            }
            let w = if m == 0.0 {
                Complex64::new(h, 0.0)
            } else {
                zc * (1.0 - h / m)
            };
            let d = match metric {
                BallMetric::Rho => crate::geometry::rho_c(zc, w),
                _ => crate::geometry::beta_c(zc, w),
            };
            Ok(d / (zc - w).norm())
        }
        Point::Ball(z) => {
            let m = z.norm();
            if m == 0.0 {
                return Err(Error::Parameter("radial direction undefined at the origin".into()));
            }
            if !(h > 0.0 && h < 1.0 - m && h < m) {
                return Err(Error::Parameter(format!("step h = {h} too large for |z| = {m}")));
            }
            let w = z.scale(1.0 - h / m);
            let w = BallPoint::new(w.coords())?;
            Ok(crate::geometry::ball_metric(&z, &w, metric)? / z.sub(&w).norm())
        }
    }
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

pub(crate) mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [c.re, c.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
enum HoloRepr {
    Taylor { coeffs: Vec<[f64; 2]> },
    Power { s: f64 },
    Log,
    Ball { n: usize, terms: Vec<Monomial> },
}

impl Serialize for HoloFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            HoloFunction::Disk(DiskFunction::TaylorPoly(p)) => HoloRepr::Taylor {
                coeffs: p.coeffs().iter().map(|c| [c.re, c.im]).collect(),
            },
            HoloFunction::Disk(DiskFunction::PowerSingularity { s }) => HoloRepr::Power { s: *s },
            HoloFunction::Disk(DiskFunction::LogKernel) => HoloRepr::Log,
            HoloFunction::Ball(b) => HoloRepr::Ball {
                n: b.dim,
                terms: b.terms.clone(),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HoloFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let f = match HoloRepr::deserialize(d)? {
            HoloRepr::Taylor { coeffs } => HoloFunction::Disk(DiskFunction::TaylorPoly(
                TaylorPoly::new(coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect())
                    .map_err(D::Error::custom)?,
            )),
            HoloRepr::Power { s } => {
                HoloFunction::Disk(DiskFunction::power(s).map_err(D::Error::custom)?)
            }
            HoloRepr::Log => HoloFunction::Disk(DiskFunction::LogKernel),
            HoloRepr::Ball { n, terms } => {
                HoloFunction::Ball(BallPoly::new(n, terms).map_err(D::Error::custom)?)
            }
        };
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bp(v: &[Complex64]) -> BallPoint {
        BallPoint::new(v).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = DiskFunction::poly(&[0.0, 1.0]).unwrap();
        assert_eq!(f.eval(c(0.3, 0.0)), c(0.3, 0.0));
        let p = DiskFunction::power(1.0).unwrap();
        assert_relative_eq!(p.eval(c(0.5, 0.0)).re, 2.0, epsilon = 1e-15);
        assert_eq!(DiskFunction::LogKernel.eval(c(0.0, 0.0)).norm(), 0.0);
        assert!(DiskFunction::power(0.0).is_err());
        assert!(TaylorPoly::new(vec![]).is_err());
    }

    #[test]
    fn derivative_examples() {
        let f = HoloFunction::Disk(DiskFunction::poly(&[0.0, 0.0, 1.0]).unwrap());
        let d = f
            .derivative(Point::Disk(DiskPoint::new(0.5, 0.0).unwrap()), DerivativeKind::Complex)
            .unwrap();
        assert_eq!(d, DerivativeValue::Complex(c(1.0, 0.0)));

        let z1 = HoloFunction::Ball(BallPoly::from_terms(2, &[(1.0, &[1, 0])]).unwrap());
        let at = Point::Ball(bp(&[c(0.3, 0.0), c(0.0, 0.4)]));
        let r = z1.derivative(at, DerivativeKind::Radial).unwrap();
        assert!((r.abs() - 0.3).abs() < 1e-15);
        let g = z1.derivative(at, DerivativeKind::Gradient).unwrap();
        assert_eq!(g, DerivativeValue::Real(1.0));
    }

    #[test]
    fn kind_mismatches_are_type_errors() {
        let f = HoloFunction::Disk(DiskFunction::LogKernel);
        let z = Point::Disk(DiskPoint::new(0.1, 0.0).unwrap());
        assert!(matches!(f.derivative(z, DerivativeKind::Radial), Err(Error::Type(_))));
        let b = HoloFunction::Ball(BallPoly::from_terms(2, &[(1.0, &[1, 0])]).unwrap());
        assert!(matches!(b.eval(z), Err(Error::Type(_))));
        let bz = Point::Ball(bp(&[c(0.1, 0.0), c(0.0, 0.0)]));
        assert!(matches!(b.derivative(bz, DerivativeKind::Complex), Err(Error::Type(_))));
        assert!(matches!(f.eval(bz), Err(Error::Type(_))));
        let b3 = Point::Ball(bp(&[c(0.1, 0.0), c(0.0, 0.0), c(0.0, 0.0)]));
        assert!(matches!(b.eval(b3), Err(Error::Type(_))));
    }

    #[test]
    fn taylor_derivative_matches_central_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let coeffs: Vec<Complex64> = (0..15).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let f = TaylorPoly::new(coeffs).unwrap();
        let h = 1e-6;
        for _ in 0..100 {
            let z = Complex64::from_polar(rng.random_range(0.0..0.9), rng.random_range(0.0..6.3));
            let fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
            let ex = f.derivative(z);
            assert!((fd - ex).norm() <= 1e-7 * ex.norm().max(1.0), "{fd} vs {ex}");
            assert!((f.derivative_poly().eval(z) - ex).norm() < 1e-12 * ex.norm().max(1.0));
        }
    }

    #[test]
    fn closed_form_derivatives() {
        let h = 1e-6;
        for f in [DiskFunction::power(0.7).unwrap(), DiskFunction::LogKernel] {
            for z in [c(0.3, 0.2), c(-0.8, 0.1), c(0.9, -0.3)] {
                let fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
                assert!((fd - f.derivative(z)).norm() < 1e-7 * f.derivative(z).norm());
            }
        }
    }

    #[test]
    fn power_section_matches_closed_form_inside() {
        let p = TaylorPoly::power_section(0.4, 400);
        let f = DiskFunction::power(0.4).unwrap();
        let z = c(0.5, 0.3);
        assert!((p.eval(z) - f.eval(z)).norm() < 1e-12);
    }

    #[test]
    fn shift_reproduces_values() {
        let p = TaylorPoly::power_section(0.6, 50);
        let center = c(-0.7, 0.5);
        let b = TaylorPoly::new(p.shifted(center)).unwrap();
        for v in [c(0.01, 0.02), c(-0.1, 0.0)] {
            assert!((b.eval(v) - p.eval(center + v)).norm() < 1e-11);
        }
    }

    #[test]
    fn invariant_gradient_identity() {
        // |∇̃f|² = (1−|z|²)(|∇f|² − |Rf|²)
        let f = BallPoly::from_terms(2, &[(1.0, &[1, 1]), (1.0, &[2, 0]), (-0.5, &[0, 3])]).unwrap();
        for z in [
            bp(&[c(0.0, 0.0), c(0.0, 0.0)]),
            bp(&[c(0.3, 0.1), c(-0.2, 0.4)]),
            bp(&[c(0.7, 0.0), c(0.0, 0.6)]),
        ] {
            let lhs = f.invariant_gradient_raw(&BallAutomorphism::new(z));
            let g = f.gradient_norm_raw(&z);
            let r = f.radial_raw(&z).norm();
            let rhs = ((1.0 - z.norm_sqr()) * (g * g - r * r)).sqrt();
            assert!((lhs - rhs).abs() < 1e-8 * rhs.max(1.0), "{lhs} vs {rhs}");
        }
        // f = z_1 at 0: φ_0 = −id keeps the gradient magnitude
        let z1 = HoloFunction::Ball(BallPoly::from_terms(2, &[(1.0, &[1, 0])]).unwrap());
        let v = z1
            .derivative(Point::Ball(BallPoint::origin(2).unwrap()), DerivativeKind::InvariantGradient)
            .unwrap();
        assert!((v.abs() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn difference_limits() {
        let z = Point::Disk(DiskPoint::new(0.5, 0.0).unwrap());
        let v = radial_difference_limit(z, BallMetric::Rho, 1e-5).unwrap();
        assert!((v / (4.0 / 3.0) - 1.0).abs() < 1e-3);
        let o = Point::Disk(DiskPoint::new(0.0, 0.0).unwrap());
        for m in [BallMetric::Rho, BallMetric::Beta] {
            assert!((radial_difference_limit(o, m, 1e-5).unwrap() - 1.0).abs() < 1e-6);
        }
        let b = Point::Ball(bp(&[c(0.6, 0.0), c(0.0, 0.0)]));
        let v = radial_difference_limit(b, BallMetric::Rho, 1e-5).unwrap();
        assert!((v / 1.5625 - 1.0).abs() < 1e-3);
        assert!(radial_difference_limit(z, BallMetric::Rho, 0.6).is_err());
        let bo = Point::Ball(BallPoint::origin(2).unwrap());
        assert!(radial_difference_limit(bo, BallMetric::Rho, 1e-5).is_err());
    }

    #[test]
    fn json_round_trip() {
        let fs = vec![
            HoloFunction::Disk(DiskFunction::poly(&[1.0, -2.0, 0.5]).unwrap()),
            HoloFunction::Disk(DiskFunction::power(0.9).unwrap()),
            HoloFunction::Disk(DiskFunction::LogKernel),
            HoloFunction::Ball(BallPoly::from_terms(2, &[(1.0, &[1, 1]), (2.0, &[0, 2])]).unwrap()),
        ];
        for f in fs {
            let s = serde_json::to_string(&f).unwrap();
            let back: HoloFunction = serde_json::from_str(&s).unwrap();
            assert_eq!(back, f);
        }
        let p: HoloFunction = serde_json::from_str(r#"{"variant":"power","s":0.9}"#).unwrap();
        assert_eq!(p, HoloFunction::Disk(DiskFunction::PowerSingularity { s: 0.9 }));
        let t: HoloFunction = serde_json::from_str(r#"{"variant":"taylor","coeffs":[[0,0],[1,0]]}"#).unwrap();
        assert!(matches!(t, HoloFunction::Disk(DiskFunction::TaylorPoly(_))));
        assert!(serde_json::from_str::<HoloFunction>(r#"{"variant":"power","s":-1}"#).is_err());
    }
}
