//! One-dimensional Gauss rules on `[-1, 1]`.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use statrs::function::gamma::ln_gamma;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    /// Nodes and weights for `∫_a^b`, weights including the Jacobian.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let h = 0.5 * (b - a);
        let m = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (m + h * x, h * w))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

pub fn gauss_legendre(n: usize) -> Result<Rule> {
    let n = NonZeroUsize::new(n).ok_or_else(|| Error::Parameter("rule needs at least one node".into()))?;
    let gl = GaussLegendre::new(n);
    let (nodes, weights) = gl.as_node_weight_pairs().iter().copied().unzip();
    Ok(Rule { nodes, weights })
}

/// Gauss–Jacobi rule for the weight `(1−x)^a (1+x)^b` by Newton iteration on
/// the three-term recurrence, started from the usual asymptotic guesses.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<Rule> {
    if n < 4 {
        return Err(Error::Parameter(format!("Gauss–Jacobi needs n ≥ 4, got {n}")));
    }
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::Parameter("Jacobi exponents must exceed −1".into()));
    }
    let nf = n as f64;
    let ab = a + b;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0;
    for i in 0..n {
        z = match i {
            0 => {
                let an = a / nf;
                let bn = b / nf;
                let r1 = (1.0 + a) * (2.78 / (4.0 + nf * nf) + 0.768 * an / nf);
                let r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
                1.0 - r1 / r2
            }
            1 => {
                let r1 = (4.1 + a) / ((1.0 + a) * (1.0 + 0.156 * a));
                let r2 = 1.0 + 0.06 * (nf - 8.0) * (1.0 + 0.12 * a) / nf;
                let r3 = 1.0 + 0.012 * b * (1.0 + 0.25 * a.abs()) / nf;
                z - (1.0 - z) * r1 * r2 * r3
            }
            2 => {
                let r1 = (1.67 + 0.28 * a) / (1.0 + 0.37 * a);
                let r2 = 1.0 + 0.22 * (nf - 8.0) / nf;
                let r3 = 1.0 + 8.0 * b / ((6.28 + b) * nf * nf);
                z - (x[0] - z) * r1 * r2 * r3
            }
            _ if i == n - 2 => {
                let r1 = (1.0 + 0.235 * b) / (0.766 + 0.119 * b);
                let r2 = 1.0 / (1.0 + 0.639 * (nf - 4.0) / (1.0 + 0.71 * (nf - 4.0)));
                let r3 = 1.0 / (1.0 + 20.0 * a / ((7.5 + a) * nf * nf));
                z + (z - x[n - 4]) * r1 * r2 * r3
            }
            _ if i == n - 1 => {
                let r1 = (1.0 + 0.37 * b) / (1.67 + 0.28 * b);
                let r2 = 1.0 / (1.0 + 0.22 * (nf - 8.0) / nf);
                let r3 = 1.0 / (1.0 + 8.0 * a / ((6.28 + a) * nf * nf));
                z + (z - x[n - 3]) * r1 * r2 * r3
            }
            _ => 3.0 * x[i - 1] - 3.0 * x[i - 2] + x[i - 3],
        };
        let mut pp = 0.0;
        let mut p2 = 0.0;
        let mut converged = false;
        for _ in 0..100 {
            let mut temp = 2.0 + ab;
            let mut p1 = (a - b + temp * z) / 2.0;
            p2 = 1.0;
            for j in 2..=n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                temp = 2.0 * jf + ab;
                let aa = 2.0 * jf * (jf + ab) * (temp - 2.0);
                let bb = (temp - 1.0) * (a * a - b * b + temp * (temp - 2.0) * z);
                let cc = 2.0 * (jf - 1.0 + a) * (jf - 1.0 + b) * temp;
                p1 = (bb * p2 - cc * p3) / aa;
            }
            pp = (nf * (a - b - temp * z) * p1 + 2.0 * (nf + a) * (nf + b) * p2) / (temp * (1.0 - z * z));
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Parameter(format!("Gauss–Jacobi root {i} did not converge")));
        }
        let temp = 2.0 * nf + ab;
        x[i] = z;
        w[i] = (ln_gamma(a + nf) + ln_gamma(b + nf) - ln_gamma(nf + 1.0) - ln_gamma(nf + ab + 1.0)).exp()
            * temp
            * 2f64.powf(ab)
            / (pp * p2);
    }
    Ok(Rule { nodes: x, weights: w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gauss_quad::{GaussJacobi, FiniteAboveNegOneF64};

    #[test]
    fn legendre_integrates_polynomials() {
        let r = gauss_legendre(10).unwrap();
        let s: f64 = r.mapped(0.0, 1.0).map(|(x, w)| w * x.powi(19)).sum();
        assert!((s - 1.0 / 20.0).abs() < 1e-15);
    }

    #[test]
    fn jacobi_matches_moments() {
        // ∫_{-1}^1 (1−x)^a (1+x)^k dx = 2^{a+k+1} Γ(a+1)Γ(k+1)/Γ(a+k+2)
        for &a in &[-0.5, 0.0, 1.0, 2.5] {
            let r = gauss_jacobi(20, a, 0.0).unwrap();
            for k in 0..30 {
                let s: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * (1.0 + x).powi(k)).sum();
                let kf = k as f64;
                let exact = ((a + kf + 1.0) * 2f64.ln() + ln_gamma(a + 1.0) + ln_gamma(kf + 1.0)
                    - ln_gamma(a + kf + 2.0))
                .exp();
                assert!((s / exact - 1.0).abs() < 1e-12, "a={a} k={k}: {s} vs {exact}");
            }
        }
    }

    #[test]
    fn jacobi_agrees_with_crate_at_even_degree() {
        for &(a, b) in &[(-0.5, 0.0), (1.0, 0.0), (2.5, 0.0), (0.3, 0.7)] {
            let ours = gauss_jacobi(12, a, b).unwrap();
            let gq = GaussJacobi::new(
                12.try_into().unwrap(),
                FiniteAboveNegOneF64::try_from(a).unwrap(),
                FiniteAboveNegOneF64::try_from(b).unwrap(),
            );
            let mut theirs: Vec<(f64, f64)> = gq.as_node_weight_pairs().to_vec();
            theirs.sort_by(|p, q| q.0.total_cmp(&p.0));
            for (i, (x, w)) in theirs.iter().enumerate() {
                assert!((ours.nodes[i] - x).abs() < 1e-12);
                assert!((ours.weights[i] - w).abs() < 1e-10 * w.abs().max(1.0));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(gauss_legendre(0).is_err());
        assert!(gauss_jacobi(3, 0.0, 0.0).is_err());
        assert!(gauss_jacobi(8, -1.0, 0.0).is_err());
    }
}
