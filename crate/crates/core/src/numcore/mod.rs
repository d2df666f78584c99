//! Scalar building blocks shared by every other module: the gamma function in
//! signed log form, Pochhammer symbols, the Neumann factor and the complete
//! elliptic integral of the first kind.
//!
//! Everything downstream (hypergeometric series, Legendre functions, expansion
//! coefficients) is assembled from ratios of gamma functions and shifted
//! factorials whose intermediate magnitudes overflow `f64` long before the
//! final result does.  The [`SignedLogValue`] type carries `(sign, ln|v|)`
//! pairs through those products so the exponential is taken exactly once, at
//! the end.

mod elliptic;
mod gamma;
mod slv;

pub use elliptic::elliptic_k;
pub use gamma::{gamma, log_gamma, log_pochhammer, recip_gamma};
pub use slv::SignedLogValue;

/// Shifted factorial (Pochhammer symbol) `(a)_n = a (a+1) ... (a+n-1)`.
///
/// Computed as the literal product so that zero factors (nonpositive integer
/// `a` with `n` large enough) yield an exact `0.0` instead of a rounded
/// gamma-ratio artifact.  `(a)_0 = 1` for every `a`, including `a = 0`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..n {
        p *= a + i as f64;
    }
    p
}

/// Neumann factor `eps_n`: 1 for `n = 0`, 2 for `n >= 1`.
///
/// Shows up as the `n = 0` halving in Chebyshev expansions of the first kind.
pub fn neumann_factor(n: u32) -> f64 {
    if n == 0 {
        1.0
    } else {
        2.0
    }
}
