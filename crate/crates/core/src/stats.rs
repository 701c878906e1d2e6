//! Estimate containers and the small statistical toolbox the verifiers use:
//! normal quantiles, z-scores, one- and two-sample Kolmogorov-Smirnov.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

/// A Monte Carlo estimate. Every stochastic result in the crate carries one;
/// deterministic values are encoded with `stderr = 0` and `n_paths = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub n_paths: u64,
    pub ci_level: f64,
}

impl McEstimate {
    pub fn from_sums(sum: f64, sum_sq: f64, n: u64, ci_level: f64) -> Self {
        let nf = n as f64;
        let mean = sum / nf;
        let var = ((sum_sq / nf) - mean * mean).max(0.0);
        // population-variance denominator is fine at MC path counts
        let stderr = (var / nf).sqrt();
        McEstimate {
            mean,
            stderr,
            n_paths: n,
            ci_level,
        }
    }

    pub fn deterministic(value: f64) -> Self {
        McEstimate {
            mean: value,
            stderr: 0.0,
            n_paths: 0,
            ci_level: 1.0,
        }
    }

    /// Half-width of the two-sided confidence interval at `ci_level`.
    pub fn ci_halfwidth(&self) -> f64 {
        normal_quantile((1.0 + self.ci_level) / 2.0) * self.stderr
    }

    /// z-score of the estimate against a known target value.
    pub fn z_against(&self, target: f64) -> f64 {
        if self.stderr == 0.0 {
            if self.mean == target {
                0.0
            } else {
                f64::INFINITY * (self.mean - target).signum()
            }
        } else {
            (self.mean - target) / self.stderr
        }
    }

    /// CI-aware comparison: is `self.mean <= other.mean` up to combined noise?
    pub fn leq_within_ci(&self, other: &McEstimate) -> bool {
        let combined = (self.stderr.powi(2) + other.stderr.powi(2)).sqrt();
        let z = normal_quantile((1.0 + self.ci_level.max(other.ci_level)) / 2.0);
        self.mean <= other.mean + z * combined
    }
}

/// Standard normal quantile Φ⁻¹(p).
pub fn normal_quantile(p: f64) -> f64 {
    Normal::standard().inverse_cdf(p)
}

/// One-sample Kolmogorov-Smirnov distance between `data` and the continuous
/// CDF `cdf`. `data` need not be sorted.
pub fn ks_statistic_one_sample(data: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut xs = data.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let f = cdf(x);
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        d = d.max((f - lo).abs()).max((hi - f).abs());
    }
    d
}

/// Two-sample Kolmogorov-Smirnov distance.
pub fn ks_statistic_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_by(|p, q| p.partial_cmp(q).unwrap());
    ys.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let (n, m) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n && j < m {
        let x = xs[i];
        let y = ys[j];
        if x <= y {
            i += 1;
        }
        if y <= x {
            j += 1;
        }
        let diff = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        d = d.max(diff);
    }
    d
}

/// Two-sample KS critical value at significance `level` (asymptotic form).
pub fn ks_two_sample_critical(n: usize, m: usize, level: f64) -> f64 {
    let c = (-(level / 2.0).ln() / 2.0).sqrt();
    c * ((n + m) as f64 / (n as f64 * m as f64)).sqrt()
}

/// Ordinary least-squares line fit, returning (slope, intercept, r²).
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::argument("linear_fit needs >= 2 paired points"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::argument("linear_fit: degenerate abscissae"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok((slope, intercept, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quantile_matches_tabulated_values() {
        assert_relative_eq!(normal_quantile(0.975), 1.959964, epsilon = 1e-5);
        assert_relative_eq!(normal_quantile(0.995), 2.575829, epsilon = 1e-5);
    }

    #[test]
    fn ks_one_sample_detects_uniform() {
        // deterministic stratified "sample" from U(0,1)
        let data: Vec<f64> = (0..1000).map(|i| (i as f64 + 0.5) / 1000.0).collect();
        let d = ks_statistic_one_sample(&data, |x| x.clamp(0.0, 1.0));
        assert!(d < 1e-3, "d = {d}");
    }

    #[test]
    fn ks_two_sample_separates_shifted_samples() {
        let a: Vec<f64> = (0..500).map(|i| i as f64 / 500.0).collect();
        let b: Vec<f64> = (0..500).map(|i| i as f64 / 500.0 + 0.3).collect();
        let d = ks_statistic_two_sample(&a, &b);
        assert!(d > 0.25);
    }

    #[test]
    fn fit_recovers_line() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys = [1.0, 3.0, 5.0, 7.0];
        let (s, b, r2) = linear_fit(&xs, &ys).unwrap();
        assert_relative_eq!(s, 2.0);
        assert_relative_eq!(b, 1.0);
        assert_relative_eq!(r2, 1.0);
    }
}
