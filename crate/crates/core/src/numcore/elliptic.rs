use crate::error::{Error, Result};

const MAX_AGM_ITERATIONS: usize = 40;

/// Complete elliptic integral of the first kind, modulus convention:
///
/// ```text
/// K(k) = Integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),   0 <= k < 1
/// ```
///
/// Evaluated through the arithmetic-geometric mean, `K(k) = pi / (2 AGM(1, k'))`
/// with `k' = sqrt(1 - k^2)`; the iteration converges quadratically, so the
/// 40-step cap is never reached for any admissible modulus.
///
/// # Errors
/// `Error::Domain` for `k < 0` or `k >= 1` (the integral diverges at `k = 1`).
pub fn elliptic_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::domain(format!(
            "elliptic_k: modulus must satisfy 0 <= k < 1, got {k}"
        )));
    }
    // (1-k)(1+k) instead of 1 - k*k: keeps k' accurate as k -> 1.
    let mut a = 1.0f64;
    let mut b = ((1.0 - k) * (1.0 + k)).sqrt();
    for _ in 0..MAX_AGM_ITERATIONS {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            return Ok(std::f64::consts::PI / (2.0 * a));
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Err(Error::no_convergence(format!(
        "elliptic_k: AGM did not settle for k = {k}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Direct series K(k) = (pi/2) sum_n [ (1/2)_n / n! ]^2 k^{2n}; slow but
    /// independent of the AGM path.
    fn elliptic_k_series(k: f64) -> f64 {
        let k2 = k * k;
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        for n in 0..4000u32 {
            let nf = n as f64;
            let half_ratio = (nf + 0.5) / (nf + 1.0);
            term *= half_ratio * half_ratio * k2;
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
        }
        std::f64::consts::FRAC_PI_2 * sum
    }

    #[test]
    fn k_zero_is_pi_over_two() {
        assert_eq!(elliptic_k(0.0).unwrap(), std::f64::consts::FRAC_PI_2);
    }

    #[test]
    fn lemniscatic_point() {
        // K(1/sqrt(2)) = Gamma(1/4)^2 / (4 sqrt(pi))
        assert_relative_eq!(
            elliptic_k(std::f64::consts::FRAC_1_SQRT_2).unwrap(),
            1.8540746773013719,
            max_relative = 1e-14
        );
    }

    #[test]
    fn agrees_with_series_up_to_point_nine() {
        let mut k = 0.0;
        while k <= 0.9 {
            assert_relative_eq!(
                elliptic_k(k).unwrap(),
                elliptic_k_series(k),
                max_relative = 1e-12,
            );
            k += 0.05;
        }
    }

    #[test]
    fn near_unit_modulus_is_finite_and_large() {
        let k = 0.999999;
        let v = elliptic_k(k).unwrap();
        assert!(v.is_finite());
        assert!(v > 7.0, "K({k}) = {v} should exceed 7");
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(elliptic_k(1.0), Err(Error::Domain(_))));
        assert!(matches!(elliptic_k(1.5), Err(Error::Domain(_))));
        assert!(matches!(elliptic_k(-0.1), Err(Error::Domain(_))));
    }
}
