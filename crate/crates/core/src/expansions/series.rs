//! Adaptive truncation of expansion series.

use crate::error::{Error, Result};

/// Hard cap on the number of series terms; reaching it without meeting the
/// stopping rule is reported as non-convergence rather than silently
/// returning the partial sum.
pub const N_MAX: u32 = 400;

/// Outcome of a truncated summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationResult {
    pub value: f64,
    /// Number of terms actually summed (index of the last term plus one).
    pub terms_used: u32,
    /// Geometric estimate of the dropped tail, `|t_N| r / (1 - r)` with `r`
    /// the last observed term ratio clamped to `[0, 0.99]`.
    pub tail_estimate: f64,
}

/// Sums `terms(0) + terms(1) + ...` until three consecutive terms are below
/// `tol` relative to the running partial sum.
///
/// The three-in-a-row rule guards against families whose terms vanish on a
/// stride (every Chebyshev expansion here has `(m)_{2n}`-type factors that
/// zero out isolated terms) without reading a single small term as
/// convergence.  `terms` is called exactly once per index, in order, so
/// stateful generators can update running products.
///
/// Accumulation is Neumaier-compensated: several expansions alternate in
/// sign with intermediate terms far larger than the total, and the exact
/// running correction removes the rounding the cancellation would otherwise
/// amplify.
pub fn truncated_series(
    mut terms: impl FnMut(u32) -> Result<f64>,
    tol: f64,
) -> Result<TruncationResult> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(format!("tolerance {tol} must be positive")));
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut quiet = 0u32;
    let mut prev_term = f64::NAN;
    let mut last_ratio = 0.0f64;
    for n in 0..N_MAX {
        let term = terms(n)?;
        if !term.is_finite() {
            return Err(Error::no_convergence(format!(
                "series term {n} is not finite"
            )));
        }
        // Neumaier update: the branch recovers the addition error exactly
        // whichever addend dominates.
        let grown = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - grown) + term
        } else {
            (term - grown) + sum
        };
        sum = grown;
        let partial = sum + comp;
        if prev_term.is_finite() && prev_term != 0.0 {
            last_ratio = (term / prev_term).abs();
        }
        prev_term = term;
        // Scale the smallness test by the partial sum, falling back to an
        // absolute test when the sum itself sits near zero.
        let scale = partial.abs().max(f64::MIN_POSITIVE / tol);
        if term.abs() <= tol * scale {
            quiet += 1;
            if quiet == 3 {
                // Geometric tail bound from the last observed ratio.
                let r = last_ratio.clamp(0.0, 0.99);
                return Ok(TruncationResult {
                    value: partial,
                    terms_used: n + 1,
                    tail_estimate: if term == 0.0 {
                        0.0
                    } else {
                        term.abs() / (1.0 - r)
                    },
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::no_convergence(format!(
        "series did not settle within {N_MAX} terms (tol {tol:e})"
    )))
}
