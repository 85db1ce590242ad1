//! Binomial coefficients with real upper argument.

use statrs::function::gamma::ln_gamma;

/// Below this size binomial ratios are formed by direct products.
pub const DIRECT_PRODUCT_LIMIT: usize = 30;

/// `binom(x, k) = Γ(x+1) / (Γ(k+1) Γ(x−k+1))` for real `x >= k - 1 > -1`.
pub fn binomial(x: f64, k: usize) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if k < DIRECT_PRODUCT_LIMIT {
        return (0..k).fold(1.0, |acc, i| acc * (x - i as f64) / (i + 1) as f64);
    }
    let kf = k as f64;
    (ln_gamma(x + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(x - kf + 1.0)).exp()
}

/// `binom(n, k) / binom(n + α, k)` for `0 <= k <= n`, `α >= 0`.
pub fn binomial_ratio(n: usize, k: usize, alpha: f64) -> f64 {
    if k == 0 || alpha == 0.0 {
        return 1.0;
    }
    if n < DIRECT_PRODUCT_LIMIT {
        return (0..k).fold(1.0, |acc, i| {
            acc * (n - i) as f64 / (n as f64 + alpha - i as f64)
        });
    }
    // = Γ(n+1) Γ(n−k+α+1) / (Γ(n−k+1) Γ(n+α+1))
    let n = n as f64;
    let k = k as f64;
    (ln_gamma(n + 1.0) + ln_gamma(n - k + alpha + 1.0)
        - ln_gamma(n - k + 1.0)
        - ln_gamma(n + alpha + 1.0))
    .exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn integer_binomials() {
        assert_eq!(binomial(5.0, 2), 10.0);
        assert_relative_eq!(binomial(60.0, 30), 1.1826458156486142e17, max_relative = 1e-12);
        assert_relative_eq!(binomial(2.5, 1), 2.5);
    }

    #[test]
    fn ratio_small_and_large_paths_agree() {
        for &alpha in &[0.5, 1.0, 2.0, 3.7] {
            for n in [30usize, 45, 100] {
                for k in [1usize, 7, n / 2, n] {
                    let direct = (0..k).fold(1.0, |acc, i| {
                        acc * (n - i) as f64 / (n as f64 + alpha - i as f64)
                    });
                    assert_relative_eq!(binomial_ratio(n, k, alpha), direct, max_relative = 1e-11);
                }
            }
        }
    }
}
