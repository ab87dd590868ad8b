//! Seeded point and pair samplers.
//!
//! Every sample is a pure function of `(seed, index)`: the generator for
//! index `i` is ChaCha8 seeded with `seed` on stream `i`, so parallel
//! evaluation order never changes the draws.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::geometry::{disk_phi, BallAutomorphism, BallPoint, MAX_BALL_DIM};

/// Largest pseudo-hyperbolic distance drawn for far pairs.
pub const FAR_RHO_MAX: f64 = 0.999;

pub fn indexed_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Radius `1 − 10^{−3U}`: log-uniform distance to the boundary between 1e-3 and 1.
fn boundary_biased_radius<R: Rng>(rng: &mut R) -> f64 {
    1.0 - 10f64.powf(-3.0 * rng.random::<f64>())
}

/// Point of the disk with log-uniform distance to the circle.
pub fn disk_point<R: Rng>(rng: &mut R) -> Complex64 {
    let t = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(boundary_biased_radius(rng), t)
}

/// Pseudo-hyperbolic distance for the pair with this index: even indices are
/// near (`ρ < r`, area-uniform in the ρ-disk), odd ones are far (`ρ ≥ r`,
/// log-spaced towards [`FAR_RHO_MAX`]).
fn pair_distance<R: Rng>(rng: &mut R, index: u64, r: f64) -> f64 {
    let u: f64 = rng.random();
    if index % 2 == 0 {
        r * u.sqrt()
    } else {
        let gap = 1.0 - r;
        1.0 - gap * ((1.0 - FAR_RHO_MAX) / gap).powf(u)
    }
}

pub fn is_near_index(index: u64) -> bool {
    index % 2 == 0
}

/// Stratified disk pair `(z, w)` with `w = φ_z(v)`, so `ρ(z, w) = |v|`.
pub fn disk_pair(seed: u64, index: u64, r: f64) -> (Complex64, Complex64) {
    let mut rng = indexed_rng(seed, index);
    let z = disk_point(&mut rng);
    let d = pair_distance(&mut rng, index, r);
    let v = Complex64::from_polar(d, rng.random_range(0.0..std::f64::consts::TAU));
    (z, disk_phi(z, v))
}

fn sphere_direction<R: Rng>(rng: &mut R, dim: usize) -> [Complex64; MAX_BALL_DIM] {
    loop {
        let mut c = [Complex64::new(0.0, 0.0); MAX_BALL_DIM];
        let mut n2 = 0.0;
        for x in c.iter_mut().take(dim) {
            *x = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            n2 += x.norm_sqr();
        }
        if n2 > 1e-300 {
            let s = n2.sqrt().recip();
            return c.map(|x| x * s);
        }
    }
}

/// Ball point with uniform direction and log-uniform distance to the sphere.
pub fn ball_point<R: Rng>(rng: &mut R, dim: usize) -> BallPoint {
    let d = sphere_direction(rng, dim);
    let t = boundary_biased_radius(rng);
    BallPoint::raw(d.map(|x| x * t), dim)
}

/// Ball point with the given norm and a uniform direction.
pub fn ball_point_with_norm<R: Rng>(rng: &mut R, dim: usize, norm: f64) -> BallPoint {
    BallPoint::raw(sphere_direction(rng, dim).map(|x| x * norm), dim)
}

/// Stratified ball pair with `ρ(z, w) = |v|`, same strata as [`disk_pair`].
pub fn ball_pair(seed: u64, index: u64, r: f64, dim: usize) -> (BallPoint, BallPoint) {
    let mut rng = indexed_rng(seed, index);
    let z = ball_point(&mut rng, dim);
    let d = pair_distance(&mut rng, index, r);
    let v = ball_point_with_norm(&mut rng, dim, d);
    (z, BallAutomorphism::new(z).apply(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ball_rho_raw, rho_c};

    #[test]
    fn pairs_are_deterministic_and_stratified() {
        let r = 0.5;
        let mut near = 0;
        for i in 0..2000u64 {
            let (z, w) = disk_pair(42, i, r);
            assert_eq!((z, w), disk_pair(42, i, r));
            assert!(z.norm() < 1.0 && w.norm() < 1.0);
            let d = rho_c(z, w);
            if is_near_index(i) {
                assert!(d < r + 1e-12);
                near += 1;
            } else {
                assert!(d >= r - 1e-9 && d <= FAR_RHO_MAX + 1e-9);
            }
        }
        assert_eq!(near, 1000);
        assert_ne!(disk_pair(42, 0, r), disk_pair(43, 0, r));
    }

    #[test]
    fn ball_pairs_have_requested_distance() {
        for i in 0..500u64 {
            let (z, w) = ball_pair(7, i, 0.5, 3);
            assert!(w.norm() < 1.0);
            let d = ball_rho_raw(&z, &w);
            if is_near_index(i) {
                assert!(d < 0.5 + 1e-9);
            } else {
                assert!(d >= 0.5 - 1e-9);
            }
        }
    }
}
