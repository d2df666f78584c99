//! Left-hand sides of the registered expansions.
//!
//! Each function evaluates the closed-form side of one identity at a point
//! of its validity box, routing through the Legendre/Ferrers evaluators or
//! the Gauss hypergeometric function.  The series side is produced
//! independently from the coefficient generators in [`super::coeffs`], which
//! is what makes the comparison in the verification harness meaningful.

use crate::error::Result;
use crate::expansions::{geometry, Branch, SzegoPoint};
use crate::hyp2f1::hyp2f1;
use crate::legfun::{assoc_legendre_p, ferrers_p, DegreeOrder};
use crate::numcore::gamma;
use crate::orthopoly::{chebyshev_t, chebyshev_u, gegenbauer_c, legendre_poly};

/// `(1+x)^{-beta/2} R^{-(alpha+m+1)} P^{-beta}_{alpha+m}(zeta_+)`.
pub fn lhs_theorem(m: u32, alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(alpha + f64::from(m), -beta)?;
    let p = assoc_legendre_p(&d, g.zeta_plus)?;
    Ok((1.0 + x).powf(-0.5 * beta) * g.big_r.powf(-(alpha + f64::from(m) + 1.0)) * p)
}

/// The same left-hand side as [`lhs_theorem`] in pure Gauss form:
/// `(rho/2)^{beta/2} / (Gamma(beta+1) (1+rho)^{s+m+1})
///  * 2F1((s+m+1)/2, (s+m+2)/2; beta+1; 2 rho (1+x) / (1+rho)^2)`,
/// `s = alpha + beta`.  Narrower numerical range (the argument must stay
/// within reach of the direct series) but free of Legendre machinery.
pub fn lhs_theorem_gauss(m: u32, alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    geometry(rho, x)?;
    let s = alpha + beta;
    let mf = f64::from(m);
    let arg = 2.0 * rho * (1.0 + x) / ((1.0 + rho) * (1.0 + rho));
    let f = hyp2f1(0.5 * (s + mf + 1.0), 0.5 * (s + mf + 2.0), beta + 1.0, arg)?;
    Ok((0.5 * rho).powf(0.5 * beta) / (gamma(beta + 1.0)? * (1.0 + rho).powf(s + mf + 1.0)) * f)
}

/// `(1-x)^{-alpha/2} R^{-(beta+m+1)} F^{-alpha}_{beta+m}(zeta_-)` with `F`
/// the Ferrers function of the first kind.
pub fn lhs_corollary(m: u32, alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(beta + f64::from(m), -alpha)?;
    let p = ferrers_p(&d, g.zeta_minus)?;
    Ok((1.0 - x).powf(-0.5 * alpha) * g.big_r.powf(-(beta + f64::from(m) + 1.0)) * p)
}

/// Gauss form of [`lhs_corollary`]:
/// `(rho/2)^{alpha/2} / (Gamma(alpha+1) (1-rho)^{s+m+1})
///  * 2F1((s+m+1)/2, (s+m+2)/2; alpha+1; -2 rho (1-x) / (1-rho)^2)`.
pub fn lhs_corollary_gauss(m: u32, alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    geometry(rho, x)?;
    let s = alpha + beta;
    let mf = f64::from(m);
    let arg = -2.0 * rho * (1.0 - x) / ((1.0 - rho) * (1.0 - rho));
    let f = hyp2f1(0.5 * (s + mf + 1.0), 0.5 * (s + mf + 2.0), alpha + 1.0, arg)?;
    Ok((0.5 * rho).powf(0.5 * alpha) / (gamma(alpha + 1.0)? * (1.0 - rho).powf(s + mf + 1.0)) * f)
}

/// Szego-variable form of the theorem left-hand side:
/// `(1+x)^{-beta/2} (z-x)^{-(alpha+m+1)/2}
///  P^{-beta}_{alpha+m}((1 + rho_e) / sqrt(2 rho_e (z - x)))`
/// with `rho_e = z - sqrt(z^2-1)`.
pub fn lhs_szego(m: u32, alpha: f64, beta: f64, z: f64, x: f64) -> Result<f64> {
    let p = SzegoPoint::new(z)?;
    let rho = p.rho_equiv;
    geometry(rho, x)?;
    let arg = (1.0 + rho) / (2.0 * rho * (z - x)).sqrt();
    let d = DegreeOrder::new(alpha + f64::from(m), -beta)?;
    let leg = assoc_legendre_p(&d, arg)?;
    Ok((1.0 + x).powf(-0.5 * beta) * (z - x).powf(-0.5 * (alpha + f64::from(m) + 1.0)) * leg)
}

/// `R^{-(2 mu + m)} C_m^{mu}(zeta)` on the chosen branch.
pub fn lhs_gegenbauer(m: u32, mu: f64, rho: f64, x: f64, branch: Branch) -> Result<f64> {
    let g = geometry(rho, x)?;
    let zeta = match branch {
        Branch::Plus => g.zeta_plus,
        Branch::Minus => g.zeta_minus,
    };
    Ok(g.big_r.powf(-(2.0 * mu + f64::from(m))) * gegenbauer_c(m, mu, zeta)?)
}

/// `R^{-(m+2)} U_m(zeta)`.
pub fn lhs_chebu(m: u32, rho: f64, x: f64, branch: Branch) -> Result<f64> {
    let g = geometry(rho, x)?;
    let zeta = match branch {
        Branch::Plus => g.zeta_plus,
        Branch::Minus => g.zeta_minus,
    };
    Ok(g.big_r.powi(-(m as i32) - 2) * chebyshev_u(m, zeta))
}

/// `R^{-(m+1)} P_m(zeta)`.
pub fn lhs_legendre(m: u32, rho: f64, x: f64, branch: Branch) -> Result<f64> {
    let g = geometry(rho, x)?;
    let zeta = match branch {
        Branch::Plus => g.zeta_plus,
        Branch::Minus => g.zeta_minus,
    };
    Ok(g.big_r.powi(-(m as i32) - 1) * legendre_poly(m, zeta))
}

/// `R^{-m} T_m(zeta)`.
pub fn lhs_chebt(m: u32, rho: f64, x: f64, branch: Branch) -> Result<f64> {
    let g = geometry(rho, x)?;
    let zeta = match branch {
        Branch::Plus => g.zeta_plus,
        Branch::Minus => g.zeta_minus,
    };
    Ok(g.big_r.powi(-(m as i32)) * chebyshev_t(m, zeta))
}

/// `R^{-2 mu}`, the classical Gegenbauer generating function.
pub fn lhs_gf_gegenbauer(mu: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    Ok(g.big_r.powf(-2.0 * mu))
}

/// `(1+rho)^{-(s+1)} 2F1((s+1)/2, (s+2)/2; beta+1; 2 rho (1+x)/(1+rho)^2)`.
pub fn lhs_gf_jacobi_plus(alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    geometry(rho, x)?;
    let s = alpha + beta;
    let arg = 2.0 * rho * (1.0 + x) / ((1.0 + rho) * (1.0 + rho));
    let f = hyp2f1(0.5 * (s + 1.0), 0.5 * (s + 2.0), beta + 1.0, arg)?;
    Ok((1.0 + rho).powf(-(s + 1.0)) * f)
}

/// `(1-rho)^{-(s+1)} 2F1((s+1)/2, (s+2)/2; alpha+1; -2 rho (1-x)/(1-rho)^2)`.
pub fn lhs_gf_jacobi_minus(alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    geometry(rho, x)?;
    let s = alpha + beta;
    let arg = -2.0 * rho * (1.0 - x) / ((1.0 - rho) * (1.0 - rho));
    let f = hyp2f1(0.5 * (s + 1.0), 0.5 * (s + 2.0), alpha + 1.0, arg)?;
    Ok((1.0 - rho).powf(-(s + 1.0)) * f)
}

/// `(s+1)(1-rho)/(1+rho)^{s+2} 2F1((s+2)/2, (s+3)/2; beta+1; 2 rho (1+x)/(1+rho)^2)`.
pub fn lhs_gf_jacobi_ext_plus(alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    geometry(rho, x)?;
    let s = alpha + beta;
    let arg = 2.0 * rho * (1.0 + x) / ((1.0 + rho) * (1.0 + rho));
    let f = hyp2f1(0.5 * (s + 2.0), 0.5 * (s + 3.0), beta + 1.0, arg)?;
    Ok((s + 1.0) * (1.0 - rho) * (1.0 + rho).powf(-(s + 2.0)) * f)
}

/// `(s+1)(1+rho)/(1-rho)^{s+2} 2F1((s+2)/2, (s+3)/2; alpha+1; -2 rho (1-x)/(1-rho)^2)`.
pub fn lhs_gf_jacobi_ext_minus(alpha: f64, beta: f64, rho: f64, x: f64) -> Result<f64> {
    geometry(rho, x)?;
    let s = alpha + beta;
    let arg = -2.0 * rho * (1.0 - x) / ((1.0 - rho) * (1.0 - rho));
    let f = hyp2f1(0.5 * (s + 2.0), 0.5 * (s + 3.0), alpha + 1.0, arg)?;
    Ok((s + 1.0) * (1.0 + rho) * (1.0 - rho).powf(-(s + 2.0)) * f)
}

/// `(1-x^2)^{1/4-mu/2} P^{1/2-mu}_{mu-lambda-1/2}(R+rho)
///  F^{1/2-mu}_{mu-lambda-1/2}(R-rho)`, the Koekoek-Swarttouw product form.
pub fn lhs_koekoek(mu: f64, lambda: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(mu - lambda - 0.5, 0.5 - mu)?;
    let outer = assoc_legendre_p(&d, g.big_r + rho)?;
    let inner = ferrers_p(&d, g.big_r - rho)?;
    Ok((1.0 - x * x).powf(0.25 - 0.5 * mu) * outer * inner)
}

/// `(1-x^2)^{1/4-mu/2} R^{-(1/2+lambda-mu)}
///  F^{1/2-mu}_{mu-lambda-1/2}((1 - rho x)/R)`, the Rainville-type form.
pub fn lhs_rainville_gegenbauer(mu: f64, lambda: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(mu - lambda - 0.5, 0.5 - mu)?;
    let f = ferrers_p(&d, (1.0 - rho * x) / g.big_r)?;
    Ok((1.0 - x * x).powf(0.25 - 0.5 * mu) * g.big_r.powf(-(0.5 + lambda - mu)) * f)
}

/// `(1-x^2)^{-1/4} P^{-1/2}_{1/2-lambda}(R+rho) F^{-1/2}_{1/2-lambda}(R-rho)`.
pub fn lhs_brafman_u(lambda: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(0.5 - lambda, -0.5)?;
    let outer = assoc_legendre_p(&d, g.big_r + rho)?;
    let inner = ferrers_p(&d, g.big_r - rho)?;
    Ok((1.0 - x * x).powf(-0.25) * outer * inner)
}

/// `R^{1/2-lambda} (1-x^2)^{-1/4} F^{-1/2}_{1/2-lambda}((1 - rho x)/R)`.
pub fn lhs_rainville_u(lambda: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(0.5 - lambda, -0.5)?;
    let f = ferrers_p(&d, (1.0 - rho * x) / g.big_r)?;
    Ok(g.big_r.powf(0.5 - lambda) * (1.0 - x * x).powf(-0.25) * f)
}

/// `P_{-lambda}(R+rho) F_{-lambda}(R-rho)`, order-zero Legendre product.
pub fn lhs_brafman_legendre(lambda: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(-lambda, 0.0)?;
    Ok(assoc_legendre_p(&d, g.big_r + rho)? * ferrers_p(&d, g.big_r - rho)?)
}

/// `R^{-lambda} F_{lambda-1}((1 - rho x)/R)`.
pub fn lhs_rainville_legendre(lambda: f64, rho: f64, x: f64) -> Result<f64> {
    let g = geometry(rho, x)?;
    let d = DegreeOrder::new(lambda - 1.0, 0.0)?;
    Ok(g.big_r.powf(-lambda) * ferrers_p(&d, (1.0 - rho * x) / g.big_r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn theorem_gauss_form_agrees_with_legendre_form() {
        for &(alpha, beta) in &[(0.0, 0.0), (0.5, -0.4), (1.3, 0.5), (-0.4, 1.3)] {
            for &rho in &[0.1, 0.35, 0.6] {
                for &x in &[-0.9, 0.0, 0.9] {
                    for m in 0..4u32 {
                        let a = lhs_theorem(m, alpha, beta, rho, x).unwrap();
                        let b = lhs_theorem_gauss(m, alpha, beta, rho, x).unwrap();
                        assert_relative_eq!(a, b, max_relative = 1e-11);
                    }
                }
            }
        }
    }

    #[test]
    fn corollary_gauss_form_agrees_with_ferrers_form() {
        for &(alpha, beta) in &[(0.0, 0.0), (0.5, -0.4), (1.3, 0.5)] {
            for &rho in &[0.1, 0.35, 0.6] {
                for &x in &[-0.9, 0.0, 0.9] {
                    for m in 0..4u32 {
                        let a = lhs_corollary(m, alpha, beta, rho, x).unwrap();
                        let b = lhs_corollary_gauss(m, alpha, beta, rho, x).unwrap();
                        assert_relative_eq!(a, b, max_relative = 1e-11);
                    }
                }
            }
        }
    }

    #[test]
    fn szego_form_is_rescaled_theorem_form() {
        // With rho_e = z - sqrt(z^2-1) the Szego left-hand side equals
        // (2 rho_e)^{(alpha+m+1)/2} times the theorem left-hand side.
        let (alpha, beta) = (0.5, 1.3);
        for &z in &[1.2, 2.0, 5.0] {
            let rho = SzegoPoint::new(z).unwrap().rho_equiv;
            for &x in &[-0.9, 0.2, 0.9] {
                for m in 0..4u32 {
                    let scale = (2.0 * rho).powf(0.5 * (alpha + f64::from(m) + 1.0));
                    assert_relative_eq!(
                        lhs_szego(m, alpha, beta, z, x).unwrap(),
                        scale * lhs_theorem(m, alpha, beta, rho, x).unwrap(),
                        max_relative = 1e-11
                    );
                }
            }
        }
    }

    #[test]
    fn classical_jacobi_forms_match_theorem_at_small_m() {
        // The classical generating function is the m = 0 slice of the
        // theorem up to (2/rho)^{beta/2} Gamma(beta+1), and the degree-
        // weighted extension is the matching m = 1 slice.
        for &(alpha, beta) in &[(0.5, -0.4), (1.3, 0.0)] {
            let s = alpha + beta;
            for &rho in &[0.2f64, 0.5] {
                for &x in &[-0.7, 0.1, 0.8] {
                    let norm = (2.0 / rho).powf(0.5 * beta) * gamma(beta + 1.0).unwrap();
                    assert_relative_eq!(
                        lhs_gf_jacobi_plus(alpha, beta, rho, x).unwrap(),
                        norm * lhs_theorem(0, alpha, beta, rho, x).unwrap(),
                        max_relative = 1e-11
                    );
                    assert_relative_eq!(
                        lhs_gf_jacobi_ext_plus(alpha, beta, rho, x).unwrap(),
                        norm * (s + 1.0)
                            * (1.0 - rho)
                            * lhs_theorem(1, alpha, beta, rho, x).unwrap(),
                        max_relative = 1e-11
                    );
                    let norm_m = (2.0 / rho).powf(0.5 * alpha) * gamma(alpha + 1.0).unwrap();
                    assert_relative_eq!(
                        lhs_gf_jacobi_minus(alpha, beta, rho, x).unwrap(),
                        norm_m * lhs_corollary(0, alpha, beta, rho, x).unwrap(),
                        max_relative = 1e-11
                    );
                    assert_relative_eq!(
                        lhs_gf_jacobi_ext_minus(alpha, beta, rho, x).unwrap(),
                        norm_m
                            * (s + 1.0)
                            * (1.0 + rho)
                            * lhs_corollary(1, alpha, beta, rho, x).unwrap(),
                        max_relative = 1e-11
                    );
                }
            }
        }
    }

    #[test]
    fn gegenbauer_lhs_reduces_to_classical_at_m_zero() {
        for &mu in &[0.25, 1.0, 2.5] {
            for &rho in &[0.2, 0.6] {
                for &x in &[-0.5, 0.4] {
                    for branch in [Branch::Plus, Branch::Minus] {
                        assert_relative_eq!(
                            lhs_gegenbauer(0, mu, rho, x, branch).unwrap(),
                            lhs_gf_gegenbauer(mu, rho, x).unwrap(),
                            max_relative = 1e-13
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_forms_specialize_from_gegenbauer() {
        for &lambda in &[0.3, 1.0, 2.5] {
            for &rho in &[0.2f64, 0.5] {
                for &x in &[-0.8, 0.0, 0.6] {
                    assert_relative_eq!(
                        lhs_brafman_u(lambda, rho, x).unwrap(),
                        lhs_koekoek(1.0, lambda, rho, x).unwrap(),
                        max_relative = 1e-12
                    );
                    assert_relative_eq!(
                        lhs_rainville_u(lambda, rho, x).unwrap(),
                        lhs_rainville_gegenbauer(1.0, lambda, rho, x).unwrap(),
                        max_relative = 1e-12
                    );
                    assert_relative_eq!(
                        lhs_brafman_legendre(lambda, rho, x).unwrap(),
                        lhs_koekoek(0.5, lambda, rho, x).unwrap(),
                        max_relative = 1e-12
                    );
                    assert_relative_eq!(
                        lhs_rainville_legendre(lambda, rho, x).unwrap(),
                        lhs_rainville_gegenbauer(0.5, lambda, rho, x).unwrap(),
                        max_relative = 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn chebyshev_and_legendre_lhs_match_gegenbauer_limits() {
        // U_m = C_m^1 and P_m = C_m^{1/2} transfer directly to the lhs.
        for &rho in &[0.25, 0.55] {
            for &x in &[-0.6, 0.3] {
                for m in 0..5u32 {
                    for branch in [Branch::Plus, Branch::Minus] {
                        assert_relative_eq!(
                            lhs_chebu(m, rho, x, branch).unwrap(),
                            lhs_gegenbauer(m, 1.0, rho, x, branch).unwrap(),
                            max_relative = 1e-13
                        );
                        assert_relative_eq!(
                            lhs_legendre(m, rho, x, branch).unwrap(),
                            lhs_gegenbauer(m, 0.5, rho, x, branch).unwrap(),
                            max_relative = 1e-13
                        );
                    }
                }
            }
        }
    }
}
