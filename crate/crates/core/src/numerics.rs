//! Small numeric helpers shared across modules.

/// Pairwise (cascade) summation. Deterministic for a fixed slice order.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BLOCK: usize = 64;
    if values.len() <= BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// `H_k = 1 + 1/2 + ... + 1/k`, with `H_0 = 0`.
pub fn harmonic(k: usize) -> f64 {
    let terms: Vec<f64> = (1..=k).map(|j| 1.0 / j as f64).collect();
    pairwise_sum(&terms)
}

/// `|x|^p` from `|x|^2`, avoiding `powf` for the common exponents.
#[inline]
pub fn abs_pow_from_sq(norm_sq: f64, p: f64) -> f64 {
    if p == 2.0 {
        norm_sq
    } else if p == 1.0 {
        norm_sq.sqrt()
    } else if p == 4.0 {
        norm_sq * norm_sq
    } else {
        norm_sq.powf(0.5 * p)
    }
}

/// Ordinary least-squares slope and intercept of `y` against `x`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}
