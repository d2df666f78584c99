//! The five classical orthogonal polynomial families (Jacobi, Gegenbauer,
//! Chebyshev T and U, Legendre), evaluated by their three-term recurrences,
//! plus the finite expansion of (1+x)^n in the Jacobi basis.
//!
//! The recurrences are plain polynomial evaluation, so they work for any
//! real abscissa, not only [-1, 1]; several identities deliberately feed
//! arguments beyond 1.  The terminating-hypergeometric definitions
//! (DLMF 18.5.7 and friends) serve as test oracles only: summed forward
//! they lose digits to cancellation at high degree, while the recurrences
//! stay stable.

use crate::error::{Error, Result};
use crate::numcore::pochhammer;

/// Jacobi weight exponents, alpha and beta both above -1 so the weight is
/// integrable.  The polynomials and the quadrature weight make sense on the
/// whole region (the Chebyshev T line alpha = beta = -1/2 included); the
/// expansion formulas additionally need alpha + beta + 1 != 0, which is
/// checked by the operations that depend on it rather than here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) || alpha <= -1.0 || beta <= -1.0 {
            return Err(Error::domain(format!(
                "Jacobi parameters must be finite and > -1, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(JacobiParams { alpha, beta })
    }

    /// The standing hypothesis of the expansion theorems; the line
    /// alpha + beta = -1 makes the (alpha+beta+1)-type Pochhammer ratios
    /// degenerate (Chebyshev T has its own dedicated formulas there).
    pub fn require_sum_not_minus_one(&self) -> Result<()> {
        if self.alpha + self.beta + 1.0 == 0.0 {
            return Err(Error::domain(format!(
                "alpha + beta = -1 (alpha={}, beta={}) falls outside the expansion \
                 hypotheses; use the Chebyshev T family",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }
}

/// Tag for one of the five families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    Jacobi(JacobiParams),
    Gegenbauer(f64),
    ChebyshevT,
    ChebyshevU,
    Legendre,
}

impl PolyFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PolyFamily::Jacobi(p) => JacobiParams::new(p.alpha, p.beta).map(|_| ()),
            PolyFamily::Gegenbauer(mu) => {
                if !mu.is_finite() || mu <= -0.5 {
                    Err(Error::domain(format!(
                        "Gegenbauer order must be finite and > -1/2, got {mu}"
                    )))
                } else if mu == 0.0 {
                    Err(Error::domain(
                        "Gegenbauer order 0 is a removed singularity of the normalization; \
                         use the Chebyshev T family for that limit"
                            .to_string(),
                    ))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    fn first(&self, x: f64) -> f64 {
        match *self {
            PolyFamily::Jacobi(p) => ((p.alpha + p.beta + 2.0) * x + p.alpha - p.beta) / 2.0,
            PolyFamily::Gegenbauer(mu) => 2.0 * mu * x,
            PolyFamily::ChebyshevT => x,
            PolyFamily::ChebyshevU => 2.0 * x,
            PolyFamily::Legendre => x,
        }
    }

    /// P_{n+1} from (P_n, P_{n-1}) for n >= 1; the Jacobi denominator is
    /// nonzero whenever alpha, beta > -1.
    fn step(&self, n: u32, x: f64, curr: f64, prev: f64) -> f64 {
        let nf = f64::from(n);
        match *self {
            PolyFamily::Jacobi(p) => {
                let (a, b) = (p.alpha, p.beta);
                let s = 2.0 * nf + a + b;
                let denom = 2.0 * (nf + 1.0) * (nf + a + b + 1.0) * s;
                let mid = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
                let low = 2.0 * (nf + a) * (nf + b) * (s + 2.0);
                (mid * curr - low * prev) / denom
            }
            PolyFamily::Gegenbauer(mu) => {
                (2.0 * (nf + mu) * x * curr - (nf + 2.0 * mu - 1.0) * prev) / (nf + 1.0)
            }
            PolyFamily::ChebyshevT | PolyFamily::ChebyshevU => 2.0 * x * curr - prev,
            PolyFamily::Legendre => ((2.0 * nf + 1.0) * x * curr - nf * prev) / (nf + 1.0),
        }
    }

    /// Streaming values P_0(x), P_1(x), ... without re-running the
    /// recurrence from scratch at each degree.
    pub fn iter(&self, x: f64) -> PolyIter {
        PolyIter {
            family: *self,
            x,
            n: 0,
            curr: 1.0,
            prev: 0.0,
        }
    }

    /// Value at a single degree.  Callers are expected to have validated
    /// the family (constructors do this); the recurrence itself is total.
    pub fn eval(&self, n: u32, x: f64) -> f64 {
        self.iter(x).nth(n as usize).expect("PolyIter is infinite")
    }
}

/// Infinite iterator over polynomial values of one family at a fixed
/// abscissa.
#[derive(Debug, Clone)]
pub struct PolyIter {
    family: PolyFamily,
    x: f64,
    n: u32,
    curr: f64,
    prev: f64,
}

impl Iterator for PolyIter {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let out = self.curr;
        let next = match self.n {
            0 => self.family.first(self.x),
            n => self.family.step(n, self.x, self.curr, self.prev),
        };
        self.prev = self.curr;
        self.curr = next;
        self.n += 1;
        Some(out)
    }
}

/// P_n^{(alpha,beta)}(x).
pub fn jacobi_p(n: u32, p: &JacobiParams, x: f64) -> Result<f64> {
    let family = PolyFamily::Jacobi(*p);
    family.validate()?;
    Ok(family.eval(n, x))
}

/// C_n^{mu}(x) for mu > -1/2, mu != 0.
pub fn gegenbauer_c(n: u32, mu: f64, x: f64) -> Result<f64> {
    let family = PolyFamily::Gegenbauer(mu);
    family.validate()?;
    Ok(family.eval(n, x))
}

/// T_n(x).
pub fn chebyshev_t(n: u32, x: f64) -> f64 {
    PolyFamily::ChebyshevT.eval(n, x)
}

/// U_n(x).
pub fn chebyshev_u(n: u32, x: f64) -> f64 {
    PolyFamily::ChebyshevU.eval(n, x)
}

/// Legendre polynomial P_n(x).
pub fn legendre_poly(n: u32, x: f64) -> f64 {
    PolyFamily::Legendre.eval(n, x)
}

/// Coefficients d_0..d_n of (1+x)^n = sum_k d_k P_k^{(alpha,beta)}(x),
/// the basis conversion the Jacobi expansion theorem rests on:
///
/// d_k = 2^n (beta+1)_n (-1)^k (-n)_k (alpha+beta+2k+1) (alpha+beta+1)_k
///       / [ (alpha+beta+1)_{n+k+1} (beta+1)_k ]
pub fn one_plus_x_power_in_jacobi(n: u32, p: &JacobiParams) -> Result<Vec<f64>> {
    PolyFamily::Jacobi(*p).validate()?;
    p.require_sum_not_minus_one()?;
    let (a, b) = (p.alpha, p.beta);
    let lead = 2f64.powi(n as i32) * pochhammer(b + 1.0, n);
    let coeffs = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            lead * sign
                * pochhammer(-f64::from(n), k)
                * (a + b + 2.0 * f64::from(k) + 1.0)
                * pochhammer(a + b + 1.0, k)
                / (pochhammer(a + b + 1.0, n + k + 1) * pochhammer(b + 1.0, k))
        })
        .collect();
    Ok(coeffs)
}
