//! Gauss hypergeometric function 2F1(a, b; c; z) on the real line, restricted
//! to the argument range the expansion identities actually need: terminating
//! series for any real z, and non-terminating evaluation for z below a fixed
//! guard at 0.95 (negative z is first mapped into [0, 1) by the Pfaff
//! transformation, DLMF 15.8.1).
//!
//! The series is summed with a running-term recurrence
//! `t_{k+1} = t_k (a+k)(b+k) z / ((c+k)(k+1))` and stops once three
//! consecutive terms are below 1e-17 of the partial sum; a lone zero term
//! (a Pochhammer factor crossing an integer) therefore cannot end the sum
//! prematurely.

use crate::error::{Error, Result};

/// Largest argument accepted by the non-terminating series, applied after
/// the Pfaff step.  The registry grids are chosen so that every identity
/// evaluation stays inside this guard.
pub const Z_MAX: f64 = 0.95;

/// Hard cap on summed terms; at z = 0.95 the tail needs ~760 terms to reach
/// the stopping threshold, so 2000 leaves wide margin without masking a
/// genuinely divergent request.
const TERM_CAP: usize = 2000;

/// A term is "negligible" below this multiple of the partial sum.
const REL_STOP: f64 = 1e-17;

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor() && x > -1e15
}

/// Parameter triple for 2F1 with the pole invariant enforced at
/// construction: `c` may only be a nonpositive integer when `a` or `b` is a
/// nonpositive integer of magnitude no larger than `|c|`, i.e. when the
/// series terminates before the `(c)_k` factor reaches its zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::domain(format!(
                "2F1 parameters must be finite, got a={a}, b={b}, c={c}"
            )));
        }
        if is_nonpositive_integer(c) {
            let stops_in_time = |p: f64| is_nonpositive_integer(p) && -p <= -c;
            if !(stops_in_time(a) || stops_in_time(b)) {
                return Err(Error::pole(format!(
                    "2F1 pole: c = {c} is a nonpositive integer and no numerator \
                     parameter terminates the series first (a={a}, b={b})"
                )));
            }
        }
        Ok(HypParams { a, b, c })
    }

    /// Number of terms of the terminating series, when one exists.
    fn terminating_order(&self) -> Option<usize> {
        let order = |p: f64| is_nonpositive_integer(p).then_some(-p as usize);
        match (order(self.a), order(self.b)) {
            (Some(m), Some(n)) => Some(m.min(n)),
            (Some(m), None) => Some(m),
            (None, Some(n)) => Some(n),
            (None, None) => None,
        }
    }
}

/// Sum the defining series at argument `z`, either exactly `n+1` terms
/// (terminating) or adaptively with the three-consecutive-small-terms rule.
fn series(a: f64, b: f64, c: f64, z: f64, terminate_at: Option<usize>) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    if let Some(n) = terminate_at {
        for k in 0..n {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) * z / ((c + kf) * (kf + 1.0));
            sum += term;
        }
        return Ok(sum);
    }
    let mut quiet_terms = 0;
    for k in 0..TERM_CAP {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) * z / ((c + kf) * (kf + 1.0));
        sum += term;
        if term.abs() <= REL_STOP * sum.abs() {
            quiet_terms += 1;
            if quiet_terms == 3 {
                return Ok(sum);
            }
        } else {
            quiet_terms = 0;
        }
    }
    Err(Error::no_convergence(format!(
        "2F1({a}, {b}; {c}; {z}) still moving after {TERM_CAP} terms"
    )))
}

/// Evaluate 2F1(a, b; c; z).
///
/// Path selection:
/// * a or b a nonpositive integer: exact finite sum, any real `z`;
/// * `z < 0`: Pfaff transformation onto `z/(z-1) in (0, 1)`, choosing the
///   variant whose transformed numerator parameter `c - a` or `c - b`
///   terminates when either does;
/// * `0 <= z <= Z_MAX`: direct series;
/// * anything else: domain error.
pub fn gauss_2f1(p: &HypParams, z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::domain(format!(
            "2F1 argument must be finite, got {z}"
        )));
    }
    if let Some(n) = p.terminating_order() {
        return series(p.a, p.b, p.c, z, Some(n));
    }
    if z < 0.0 {
        let w = z / (z - 1.0);
        if w > Z_MAX {
            return Err(Error::domain(format!(
                "2F1 argument z = {z} maps to {w:.4} under Pfaff, beyond the {Z_MAX} guard"
            )));
        }
        // Prefer the role assignment whose new numerator parameter c - a or
        // c - b is a nonpositive integer: the transformed series is then a
        // finite sum (this is how the half-integer Legendre cases become
        // exact polynomials in disguise).
        let (power_param, other) = if is_nonpositive_integer(p.c - p.b) {
            (p.a, p.c - p.b)
        } else if is_nonpositive_integer(p.c - p.a) {
            (p.b, p.c - p.a)
        } else {
            (p.a, p.c - p.b)
        };
        let inner = HypParams::new(power_param, other, p.c)?;
        let value = gauss_2f1(&inner, w)?;
        return Ok((1.0 - z).powf(-power_param) * value);
    }
    if z > Z_MAX {
        return Err(Error::domain(format!(
            "2F1 argument z = {z} exceeds the non-terminating guard {Z_MAX}"
        )));
    }
    series(p.a, p.b, p.c, z, None)
}

/// Convenience wrapper building the parameter triple inline.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    gauss_2f1(&HypParams::new(a, b, c)?, z)
}
