//! Expansions of generalized generating functions in orthogonal polynomials.
//!
//! The identities collected here expand functions of the form
//! `R^{-(a+m+1)} P^{-b}_{a+m}(zeta)` (and their Ferrers, Gegenbauer,
//! Chebyshev and Legendre specializations) in series of Jacobi-type
//! polynomials, where `R = sqrt(1 + rho^2 - 2 rho x)` and
//! `zeta_{+-} = (1 +- rho) / R`. Each identity is registered with a
//! stable id, a coefficient generator, a left-hand-side evaluator and a
//! validity box; see [`registry`].

mod coeffs;
mod lhs;
mod registry;
mod series;
mod wanzudilin;

pub use coeffs::{
    coeff_a, coeff_b, coeff_brafman_legendre, coeff_brafman_u, coeff_c, coeff_chebt, coeff_chebu,
    coeff_f, coeff_gegenbauer, coeff_koekoek, coeff_legendre, coeff_rainville_gegenbauer,
    coeff_rainville_legendre, coeff_rainville_u, gf_jacobi_coeff, gf_jacobi_ext_coeff,
    CoeffSequence,
};
pub use lhs::{
    lhs_brafman_legendre, lhs_brafman_u, lhs_chebt, lhs_chebu, lhs_corollary, lhs_corollary_gauss,
    lhs_gegenbauer, lhs_gf_gegenbauer, lhs_gf_jacobi_ext_minus, lhs_gf_jacobi_ext_plus,
    lhs_gf_jacobi_minus, lhs_gf_jacobi_plus, lhs_koekoek, lhs_legendre, lhs_rainville_gegenbauer,
    lhs_rainville_legendre, lhs_rainville_u, lhs_szego, lhs_theorem, lhs_theorem_gauss,
};
pub use registry::{find, registry, Axis, IdentityKind, IdentitySpec, Point};
pub use series::{truncated_series, TruncationResult, N_MAX};
pub use wanzudilin::{
    wan_zudilin_cubic, wan_zudilin_cubic_closed, wan_zudilin_quadratic,
    wan_zudilin_quadratic_closed, WanZudilin,
};

use crate::error::{Error, Result};

/// Geometric quantities shared by every expansion: the distance-like
/// factor `R` and the two arguments `zeta_{+-}` fed to Legendre functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryFactors {
    pub rho: f64,
    pub x: f64,
    /// `R = sqrt(1 + rho^2 - 2 rho x)`.
    pub big_r: f64,
    /// `(1 + rho) / R`, always `> 1` for `x > -1`.
    pub zeta_plus: f64,
    /// `(1 - rho) / R`, always in `(0, 1)` for `x < 1`.
    pub zeta_minus: f64,
}

/// Computes the shared geometry for `rho in (0, 1)` and `x in [-1, 1]`.
///
/// `R^2 = (1 - rho)^2 + 2 rho (1 - x)` is positive on the whole box, and
/// `zeta_+^2 - zeta_-^2 = 4 rho / R^2`.
pub fn geometry(rho: f64, x: f64) -> Result<GeometryFactors> {
    if !rho.is_finite() || rho <= 0.0 || rho >= 1.0 {
        return Err(Error::domain(format!("rho = {rho} outside (0, 1)")));
    }
    if !x.is_finite() || !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x = {x} outside [-1, 1]")));
    }
    let big_r = (1.0 + rho * rho - 2.0 * rho * x).sqrt();
    Ok(GeometryFactors {
        rho,
        x,
        big_r,
        zeta_plus: (1.0 + rho) / big_r,
        zeta_minus: (1.0 - rho) / big_r,
    })
}

/// Evaluation point for the Szego-type expansion, parameterized by `z > 1`
/// on the cut plane rather than by `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SzegoPoint {
    pub z: f64,
    /// `rho_e = z - sqrt(z^2 - 1)`, the preimage of `z` under the Joukowski
    /// map `rho -> (1 + rho^2) / (2 rho)`; always in `(0, 1)`.
    pub rho_equiv: f64,
}

impl SzegoPoint {
    pub fn new(z: f64) -> Result<Self> {
        if !z.is_finite() || z <= 1.0 {
            return Err(Error::domain(format!(
                "Szego variable z = {z} must exceed 1"
            )));
        }
        Ok(Self {
            z,
            rho_equiv: z - (z * z - 1.0).sqrt(),
        })
    }
}

/// Which of the two companion expansions is meant: `Plus` uses
/// `zeta_+` and the associated Legendre function on `(1, infinity)`,
/// `Minus` uses `zeta_-` and the Ferrers function on `(-1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}
