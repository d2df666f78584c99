//! Associated Legendre functions of the first kind P_nu^mu on (1, inf) and
//! Ferrers functions of the first kind on (-1, 1), for real degree and
//! order, via their Gauss hypergeometric representations (DLMF 14.3.1,
//! 14.3.7, 14.3.18 and the Erdelyi quadratic-argument forms).
//!
//! Two hypergeometric paths are kept side by side:
//!
//! * main: prefactor * 2F1(-nu, nu+1; 1-mu; (1-t)/2);
//! * quadratic: 2^mu t^{nu+mu} |t^2-1|^{-mu/2} / Gamma(1-mu)
//!   * 2F1((-nu-mu)/2, (-nu-mu+1)/2; 1-mu; 1 - 1/t^2), with t > 0.
//!
//! The main series terminates for integer degree, the quadratic one when
//! nu + mu is a nonnegative integer; the half-integer-order cases behind
//! the Chebyshev identities land in the second bucket and come out exact
//! to roundoff.  Everything else picks whichever admissible argument is
//! smaller in magnitude.
//!
//! Positive integer order is a removable limit of the main formula (the
//! 1/Gamma(1-mu) zero cancels a pole of the series), so it is routed
//! through the order-reflection connection (DLMF 14.9.3, 14.9.13) onto
//! negative order instead.

use crate::error::{Error, Result};
use crate::hyp2f1::hyp2f1;
use crate::numcore::{elliptic_k, gamma, recip_gamma};

/// Degree nu and order mu of P_nu^mu.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeOrder {
    pub nu: f64,
    pub mu: f64,
}

impl DegreeOrder {
    pub fn new(nu: f64, mu: f64) -> Result<Self> {
        if !(nu.is_finite() && mu.is_finite()) {
            return Err(Error::domain(format!(
                "degree and order must be finite, got nu={nu}, mu={mu}"
            )));
        }
        Ok(DegreeOrder { nu, mu })
    }
}

/// Whether the argument lies on the cut (-1, 1) or on (1, inf); the two
/// surfaces differ only in prefactor sign conventions.
#[derive(Clone, Copy, PartialEq)]
enum Surface {
    Cut,
    Hyperbolic,
}

fn main_path(nu: f64, mu: f64, t: f64, surface: Surface) -> Result<f64> {
    let ratio = match surface {
        Surface::Cut => (1.0 + t) / (1.0 - t),
        Surface::Hyperbolic => (t + 1.0) / (t - 1.0),
    };
    let f = hyp2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - t) / 2.0)?;
    Ok(recip_gamma(1.0 - mu) * ratio.powf(mu / 2.0) * f)
}

fn quad_path(nu: f64, mu: f64, t: f64, surface: Surface) -> Result<f64> {
    debug_assert!(t > 0.0);
    let squared = match surface {
        Surface::Cut => 1.0 - t * t,
        Surface::Hyperbolic => t * t - 1.0,
    };
    let f = hyp2f1(
        (-nu - mu) / 2.0,
        (-nu - mu + 1.0) / 2.0,
        1.0 - mu,
        1.0 - 1.0 / (t * t),
    )?;
    Ok(2f64.powf(mu) * t.powf(nu + mu) * squared.powf(-mu / 2.0) * recip_gamma(1.0 - mu) * f)
}

fn eval(nu: f64, mu: f64, t: f64, surface: Surface) -> Result<f64> {
    // Positive integer order: reflect to negative order, normalizing an
    // integer degree to be nonnegative first (P_nu = P_{-nu-1}) so the
    // gamma ratio below stays off its poles.
    if mu >= 1.0 && mu == mu.floor() {
        let nu_eff = if nu < 0.0 && nu == nu.floor() {
            -nu - 1.0
        } else {
            nu
        };
        let r = recip_gamma(nu_eff - mu + 1.0);
        if r == 0.0 {
            // Order exceeds an integer degree: the function vanishes.
            return Ok(0.0);
        }
        let sign = match surface {
            Surface::Cut if (mu as u64) % 2 == 1 => -1.0,
            _ => 1.0,
        };
        return Ok(sign * gamma(nu_eff + mu + 1.0)? * r * eval(nu_eff, -mu, t, surface)?);
    }

    if nu == nu.floor() {
        return main_path(nu, mu, t, surface);
    }

    let s = nu + mu;
    let quad_allowed = t > 0.0;
    if quad_allowed && s >= 0.0 && s == s.floor() {
        return quad_path(nu, mu, t, surface);
    }

    let main_arg = ((1.0 - t) / 2.0).abs();
    let quad_arg = (1.0 - 1.0 / (t * t)).abs();
    if quad_allowed && quad_arg < main_arg {
        quad_path(nu, mu, t, surface).or_else(|_| main_path(nu, mu, t, surface))
    } else if quad_allowed {
        main_path(nu, mu, t, surface).or_else(|_| quad_path(nu, mu, t, surface))
    } else {
        main_path(nu, mu, t, surface)
    }
}

/// P_nu^mu(z) on (1, inf).
pub fn assoc_legendre_p(d: &DegreeOrder, z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 1.0 {
        return Err(Error::domain(format!(
            "assoc_legendre_p wants z > 1, got z = {z}"
        )));
    }
    eval(d.nu, d.mu, z, Surface::Hyperbolic)
}

/// Ferrers function P_nu^mu(x) on the cut (-1, 1).
pub fn ferrers_p(d: &DegreeOrder, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= -1.0 || x >= 1.0 {
        return Err(Error::domain(format!(
            "ferrers_p wants x in (-1, 1), got x = {x}"
        )));
    }
    eval(d.nu, d.mu, x, Surface::Cut)
}

/// P_{-1/2}(z) through the complete elliptic integral:
/// (2/pi) sqrt(2/(z+1)) K(sqrt((z-1)/(z+1))).
pub fn legendre_p_minus_half(z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 1.0 {
        return Err(Error::domain(format!(
            "legendre_p_minus_half wants z > 1, got z = {z}"
        )));
    }
    let k = ((z - 1.0) / (z + 1.0)).sqrt();
    Ok(2.0 / std::f64::consts::PI * (2.0 / (z + 1.0)).sqrt() * elliptic_k(k)?)
}

/// Ferrers P_{-1/2}(x) = (2/pi) K(sqrt((1-x)/2)).
pub fn ferrers_p_minus_half(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= -1.0 || x >= 1.0 {
        return Err(Error::domain(format!(
            "ferrers_p_minus_half wants x in (-1, 1), got x = {x}"
        )));
    }
    Ok(2.0 / std::f64::consts::PI * elliptic_k(((1.0 - x) / 2.0).sqrt())?)
}

/// (T_m(z), U_m(z)) for z > 1 through the exponential forms
/// T_m = (s^m + s^{-m})/2 and U_m = (s^{m+1} - s^{-(m+1)}) / (2 sqrt(z^2-1))
/// with s = z + sqrt(z^2 - 1); these are the half-integer-order Legendre
/// specializations in elementary clothing.
pub fn chebyshev_elementary_forms(m: u32, z: f64) -> Result<(f64, f64)> {
    if !z.is_finite() || z <= 1.0 {
        return Err(Error::domain(format!(
            "chebyshev_elementary_forms wants z > 1, got z = {z}"
        )));
    }
    let root = (z * z - 1.0).sqrt();
    let s = z + root;
    let mi = m as i32;
    let t_val = (s.powi(mi) + s.powi(-mi)) / 2.0;
    let u_val = (s.powi(mi + 1) - s.powi(-(mi + 1))) / (2.0 * root);
    Ok((t_val, u_val))
}
