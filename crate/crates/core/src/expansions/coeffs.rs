//! Expansion coefficients, assembled in signed-log form.
//!
//! Every coefficient below multiplies gamma functions whose arguments grow
//! like `2n` against decaying powers of `rho`; the factors overflow `f64`
//! long before the products do, so assembly happens in
//! [`SignedLogValue`] space and only the finished coefficient is
//! exponentiated.

use crate::error::Result;
use crate::expansions::{Branch, SzegoPoint};
use crate::numcore::{gamma, log_gamma, log_pochhammer, pochhammer};
use crate::numcore::{neumann_factor, SignedLogValue};
use crate::orthopoly::JacobiParams;

/// Argument of the terminating Gauss sum on each branch.
fn branch_w(rho: f64, branch: Branch) -> f64 {
    match branch {
        Branch::Plus => -rho / (1.0 - rho),
        Branch::Minus => rho / (1.0 + rho),
    }
}

/// The terminating sum `2F1(m, 1-m; c; w)`: at most `m+1` terms, all O(1),
/// no log-space care needed.  On the plus branch `w < 0` makes every term
/// nonnegative, so the sum involves no cancellation at all.
fn terminating_gauss_sum(m: u32, c: f64, w: f64) -> f64 {
    let mf = f64::from(m);
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..m {
        let jf = f64::from(j);
        term *= (mf + jf) * (1.0 - mf + jf) / ((c + jf) * (jf + 1.0)) * w;
        sum += term;
    }
    sum
}

/// The terminating Legendre factor shared by all expansion coefficients:
///
/// `P^{-(c-1)}_{-m}((1+rho)/(1-rho))` for the plus branch, or
/// `F^{-(c-1)}_{-m}((1-rho)/(1+rho))` for the minus branch (`F` the Ferrers
/// function), both of which collapse to
///
/// `rho^{(c-1)/2} / Gamma(c) * 2F1(m, 1-m; c; w)`
///
/// with `w = -rho/(1-rho)` resp. `w = rho/(1+rho)`.  The hypergeometric
/// factor terminates; the power and the gamma need log space.
fn terminating_legendre_factor(m: u32, c: f64, rho: f64, branch: Branch) -> Result<SignedLogValue> {
    Ok(
        SignedLogValue::from_value(terminating_gauss_sum(m, c, branch_w(rho, branch)))
            * SignedLogValue::from_pow(rho, 0.5 * (c - 1.0))
            * log_gamma(c)?.recip(),
    )
}

/// Coefficient of `P_n^{(alpha,beta)}(x)` in the expansion of
/// `(1+x)^{-beta/2} R^{-(alpha+m+1)} P^{-beta}_{alpha+m}(zeta_+)`.
pub fn coeff_a(n: u32, m: u32, alpha: f64, beta: f64, rho: f64) -> Result<f64> {
    JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
    let s = alpha + beta;
    let c = s + 2.0 * f64::from(n) + 2.0;
    let slv = SignedLogValue::from_value(2.0 * f64::from(n) + s + 1.0)
        * log_gamma(s + f64::from(n) + 1.0)?
        * log_pochhammer(s + f64::from(m) + 1.0, 2 * n)
        * SignedLogValue::from_pow(2.0, -0.5 * beta)
        * log_gamma(beta + f64::from(n) + 1.0)?.recip()
        * SignedLogValue::from_pow(rho, -0.5 * (alpha + 1.0))
        * SignedLogValue::from_pow(1.0 - rho, -f64::from(m))
        * terminating_legendre_factor(m, c, rho, Branch::Plus)?;
    Ok(slv.value())
}

/// Coefficient of `P_n^{(alpha,beta)}(x)` in the companion expansion of
/// `(1-x)^{-alpha/2} R^{-(beta+m+1)} F^{-alpha}_{beta+m}(zeta_-)`.
pub fn coeff_b(n: u32, m: u32, alpha: f64, beta: f64, rho: f64) -> Result<f64> {
    JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
    let s = alpha + beta;
    let c = s + 2.0 * f64::from(n) + 2.0;
    let slv = SignedLogValue::from_value(2.0 * f64::from(n) + s + 1.0)
        * log_gamma(s + f64::from(n) + 1.0)?
        * log_pochhammer(s + f64::from(m) + 1.0, 2 * n)
        * SignedLogValue::from_pow(2.0, -0.5 * alpha)
        * log_gamma(alpha + f64::from(n) + 1.0)?.recip()
        * SignedLogValue::from_pow(rho, -0.5 * (beta + 1.0))
        * SignedLogValue::from_pow(1.0 + rho, -f64::from(m))
        * terminating_legendre_factor(m, c, rho, Branch::Minus)?;
    Ok(slv.value())
}

/// Coefficient of `P_n^{(alpha,beta)}(x)` in the Szego-variable expansion,
/// parameterized by `z > 1` through `rho_e = z - sqrt(z^2 - 1)`.
pub fn coeff_c(n: u32, m: u32, alpha: f64, beta: f64, z: f64) -> Result<f64> {
    JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
    let rho = SzegoPoint::new(z)?.rho_equiv;
    let s = alpha + beta;
    let c = s + 2.0 * f64::from(n) + 2.0;
    let slv = SignedLogValue::from_value(2.0 * f64::from(n) + s + 1.0)
        * log_gamma(s + f64::from(n) + 1.0)?
        * log_pochhammer(s + f64::from(m) + 1.0, 2 * n)
        * SignedLogValue::from_pow(2.0, -0.5 * (beta - alpha - f64::from(m) - 1.0))
        * log_gamma(beta + f64::from(n) + 1.0)?.recip()
        * SignedLogValue::from_pow(rho, 0.5 * f64::from(m))
        * SignedLogValue::from_pow(1.0 - rho, -f64::from(m))
        * terminating_legendre_factor(m, c, rho, Branch::Plus)?;
    Ok(slv.value())
}

/// The same coefficient as [`coeff_a`] in pure Gauss hypergeometric form,
/// up to the prefactor `(rho/2)^{beta/2} / (Gamma(beta+1) (1+rho)^{a+b+m+1})`
/// that belongs to the left-hand side in that formulation:
///
/// `f_{n,m} = (2n+s+1) (s+1)_n (s+m+1)_{2n} rho^n /
///            ((beta+1)_n (s+1)_{2n+1} (1+rho)^{2n})
///            * 2F1((s+m+2n+1)/2, (s+m+2n+2)/2; s+2n+2; 4 rho/(1+rho)^2)`
///
/// with `s = alpha + beta`.  Used as an independent cross-check of the
/// terminating-Legendre assembly.
pub fn coeff_f(n: u32, m: u32, alpha: f64, beta: f64, rho: f64) -> Result<f64> {
    JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
    let s = alpha + beta;
    let nf = f64::from(n);
    let mf = f64::from(m);
    let zz = 4.0 * rho / ((1.0 + rho) * (1.0 + rho));
    let gauss = crate::hyp2f1::hyp2f1(
        0.5 * (s + mf + 2.0 * nf + 1.0),
        0.5 * (s + mf + 2.0 * nf + 2.0),
        s + 2.0 * nf + 2.0,
        zz,
    )?;
    let slv = SignedLogValue::from_value(2.0 * nf + s + 1.0)
        * log_pochhammer(s + 1.0, n)
        * log_pochhammer(s + mf + 1.0, 2 * n)
        * log_pochhammer(beta + 1.0, n).recip()
        * log_pochhammer(s + 1.0, 2 * n + 1).recip()
        * SignedLogValue::from_pow(rho, nf)
        * SignedLogValue::from_pow(1.0 + rho, -2.0 * nf)
        * SignedLogValue::from_value(gauss);
    Ok(slv.value())
}

/// Coefficient of `C_n^{mu}(x)` in the expansion of
/// `R^{-(2 mu + m)} C_m^{mu}(zeta)` on the chosen branch.
pub fn coeff_gegenbauer(n: u32, m: u32, mu: f64, rho: f64, branch: Branch) -> Result<f64> {
    let sgn = match branch {
        Branch::Plus => -1.0,
        Branch::Minus => 1.0,
    };
    let c = 2.0 * mu + 2.0 * f64::from(n) + 1.0;
    let slv = SignedLogValue::from_value(2.0 * (f64::from(n) + mu))
        * log_gamma(2.0 * mu + f64::from(m))?
        * log_gamma(f64::from(m) + 1.0)?.recip()
        * SignedLogValue::from_pow(rho, -mu)
        * SignedLogValue::from_pow(1.0 + sgn * rho, -f64::from(m))
        * log_pochhammer(2.0 * mu + f64::from(m), 2 * n)
        * terminating_legendre_factor(m, c, rho, branch)?;
    Ok(slv.value())
}

/// Coefficient of `U_n(x)` in the expansion of `R^{-(m+2)} U_m(zeta)`.
pub fn coeff_chebu(n: u32, m: u32, rho: f64, branch: Branch) -> Result<f64> {
    let sgn = match branch {
        Branch::Plus => -1.0,
        Branch::Minus => 1.0,
    };
    let c = 2.0 * f64::from(n) + 3.0;
    let slv = SignedLogValue::from_value(2.0 * (f64::from(m) + 1.0) * (f64::from(n) + 1.0))
        * SignedLogValue::from_pow(rho, -1.0)
        * SignedLogValue::from_pow(1.0 + sgn * rho, -f64::from(m))
        * log_pochhammer(f64::from(m) + 2.0, 2 * n)
        * terminating_legendre_factor(m, c, rho, branch)?;
    Ok(slv.value())
}

/// Coefficient of `P_n(x)` in the expansion of `R^{-(m+1)} P_m(zeta)`.
pub fn coeff_legendre(n: u32, m: u32, rho: f64, branch: Branch) -> Result<f64> {
    let sgn = match branch {
        Branch::Plus => -1.0,
        Branch::Minus => 1.0,
    };
    let c = 2.0 * f64::from(n) + 2.0;
    let slv = SignedLogValue::from_value(2.0 * f64::from(n) + 1.0)
        * SignedLogValue::from_pow(rho, -0.5)
        * SignedLogValue::from_pow(1.0 + sgn * rho, -f64::from(m))
        * log_pochhammer(f64::from(m) + 1.0, 2 * n)
        * terminating_legendre_factor(m, c, rho, branch)?;
    Ok(slv.value())
}

/// Coefficient of `T_n(x)` in the expansion of `R^{-m} T_m(zeta)`.
pub fn coeff_chebt(n: u32, m: u32, rho: f64, branch: Branch) -> Result<f64> {
    let sgn = match branch {
        Branch::Plus => -1.0,
        Branch::Minus => 1.0,
    };
    let c = 2.0 * f64::from(n) + 1.0;
    let slv = SignedLogValue::from_value(neumann_factor(n))
        * SignedLogValue::from_pow(1.0 + sgn * rho, -f64::from(m))
        * log_pochhammer(f64::from(m), 2 * n)
        * terminating_legendre_factor(m, c, rho, branch)?;
    Ok(slv.value())
}

/// Coefficient `(a+b+1)_n / (beta+1)_n rho^n` (plus branch) or
/// `(a+b+1)_n / (alpha+1)_n rho^n` (minus branch) of the two classical
/// Jacobi generating functions.
pub fn gf_jacobi_coeff(n: u32, alpha: f64, beta: f64, rho: f64, branch: Branch) -> Result<f64> {
    JacobiParams::new(alpha, beta)?;
    let den = match branch {
        Branch::Plus => beta,
        Branch::Minus => alpha,
    };
    let slv = log_pochhammer(alpha + beta + 1.0, n)
        * log_pochhammer(den + 1.0, n).recip()
        * SignedLogValue::from_pow(rho, f64::from(n));
    Ok(slv.value())
}

/// Coefficient `(2n+a+b+1) (a+b+1)_n / (beta+1 or alpha+1)_n rho^n` of the
/// degree-weighted extensions of the classical Jacobi generating functions.
pub fn gf_jacobi_ext_coeff(n: u32, alpha: f64, beta: f64, rho: f64, branch: Branch) -> Result<f64> {
    let base = gf_jacobi_coeff(n, alpha, beta, rho, branch)?;
    Ok((2.0 * f64::from(n) + alpha + beta + 1.0) * base)
}

/// Coefficient of `C_n^{mu}(x)` in the Koekoek-Swarttouw product
/// generating function:
/// `2^{1/2-mu} / Gamma(mu+1/2) * (lambda)_n (2mu-lambda)_n /
///  ((2mu)_n Gamma(mu+1/2+n)) * rho^{mu-1/2+n}`.
pub fn coeff_koekoek(n: u32, mu: f64, lambda: f64, rho: f64) -> Result<f64> {
    let slv = SignedLogValue::from_pow(2.0, 0.5 - mu)
        * log_gamma(mu + 0.5)?.recip()
        * log_pochhammer(lambda, n)
        * log_pochhammer(2.0 * mu - lambda, n)
        * log_pochhammer(2.0 * mu, n).recip()
        * log_gamma(mu + 0.5 + f64::from(n))?.recip()
        * SignedLogValue::from_pow(rho, mu - 0.5 + f64::from(n));
    Ok(slv.value())
}

/// Coefficient of `C_n^{mu}(x)` in the Rainville-type generating function:
/// `(rho/2)^{mu-1/2} / Gamma(mu+1/2) * (lambda)_n / (2mu)_n * rho^n`.
pub fn coeff_rainville_gegenbauer(n: u32, mu: f64, lambda: f64, rho: f64) -> Result<f64> {
    let slv = SignedLogValue::from_pow(0.5 * rho, mu - 0.5)
        * log_gamma(mu + 0.5)?.recip()
        * log_pochhammer(lambda, n)
        * log_pochhammer(2.0 * mu, n).recip()
        * SignedLogValue::from_pow(rho, f64::from(n));
    Ok(slv.value())
}

/// Coefficient of `U_n(x)` in the Brafman product generating function:
/// `2^{5/2} sqrt(rho) / pi * (lambda)_n (2-lambda)_n 2^{2n} rho^n / (2n+2)!`.
pub fn coeff_brafman_u(n: u32, lambda: f64, rho: f64) -> Result<f64> {
    let slv = SignedLogValue::from_value(2.0f64.powf(2.5) * rho.sqrt() / std::f64::consts::PI)
        * log_pochhammer(lambda, n)
        * log_pochhammer(2.0 - lambda, n)
        * SignedLogValue::from_pow(4.0, f64::from(n))
        * SignedLogValue::from_pow(rho, f64::from(n))
        * log_gamma(2.0 * f64::from(n) + 3.0)?.recip();
    Ok(slv.value())
}

/// Coefficient of `U_n(x)` in the Rainville-type generating function:
/// `sqrt(2 rho / pi) * (lambda)_n / (n+1)! * rho^n`.
pub fn coeff_rainville_u(n: u32, lambda: f64, rho: f64) -> Result<f64> {
    let slv = SignedLogValue::from_value((2.0 * rho / std::f64::consts::PI).sqrt())
        * log_pochhammer(lambda, n)
        * log_gamma(f64::from(n) + 2.0)?.recip()
        * SignedLogValue::from_pow(rho, f64::from(n));
    Ok(slv.value())
}

/// Coefficient of `P_n(x)` in the Brafman product generating function:
/// `(lambda)_n (1-lambda)_n / (n!)^2 * rho^n`.
pub fn coeff_brafman_legendre(n: u32, lambda: f64, rho: f64) -> Result<f64> {
    let nfact = log_gamma(f64::from(n) + 1.0)?;
    let slv = log_pochhammer(lambda, n)
        * log_pochhammer(1.0 - lambda, n)
        * nfact.recip()
        * nfact.recip()
        * SignedLogValue::from_pow(rho, f64::from(n));
    Ok(slv.value())
}

/// Coefficient of `P_n(x)` in the Rainville-type generating function:
/// `(lambda)_n / n! * rho^n`.
pub fn coeff_rainville_legendre(n: u32, lambda: f64, rho: f64) -> Result<f64> {
    let slv = log_pochhammer(lambda, n)
        * log_gamma(f64::from(n) + 1.0)?.recip()
        * SignedLogValue::from_pow(rho, f64::from(n));
    Ok(slv.value())
}

/// Terminating-sum factor `2F1(m, 1-m; c0 + 2n; w)` of a coefficient family.
struct GaussFactor {
    m: u32,
    c0: f64,
    w: f64,
}

/// Degree-ordered generator for one coefficient family: `next_coeff()`
/// yields the same `c_0, c_1, ...` as the pointwise functions above, but
/// each value comes from an O(1) exact-ratio update of its predecessor
/// instead of a fresh log-space assembly.
///
/// The distinction decides summation accuracy.  A coefficient exponentiated
/// from logs of magnitude `L` carries a relative error near `L * eps`, and
/// the alternating series at negative `x` amplify per-term error by the
/// ratio of largest term to series value, which passes 1e6 on the harshest
/// grid corners.  Ratio updates keep every coefficient within a few ulp
/// because all factors stay O(1).  The terminating Gauss sum, whose `c`
/// argument shifts with the degree, is re-evaluated per term; on the plus
/// branch it is a positive-term sum and costs nothing.
pub struct CoeffSequence {
    n: u32,
    smooth: f64,
    ratio: Box<dyn Fn(u32) -> f64>,
    gauss: Option<GaussFactor>,
}

/// Smooth-part ratio shared by the three Jacobi expansions; `den` is `beta`
/// for the theorem and Szego forms, `alpha` for the corollary form.
fn jacobi_expansion_ratio(s: f64, mf: f64, den: f64, rho: f64) -> impl Fn(u32) -> f64 {
    move |n| {
        let nf = f64::from(n);
        rho * (2.0 * nf + s + 3.0) / (2.0 * nf + s + 1.0)
            * (s + nf + 1.0)
            * (s + mf + 1.0 + 2.0 * nf)
            * (s + mf + 2.0 + 2.0 * nf)
            / ((den + nf + 1.0) * (s + 2.0 * nf + 2.0) * (s + 2.0 * nf + 3.0))
    }
}

impl CoeffSequence {
    fn new(smooth0: f64, ratio: Box<dyn Fn(u32) -> f64>, gauss: Option<GaussFactor>) -> Self {
        CoeffSequence {
            n: 0,
            smooth: smooth0,
            ratio,
            gauss,
        }
    }

    /// The next coefficient in degree order, starting from `n = 0`.
    pub fn next_coeff(&mut self) -> f64 {
        let s = match &self.gauss {
            Some(g) => terminating_gauss_sum(g.m, g.c0 + 2.0 * f64::from(self.n), g.w),
            None => 1.0,
        };
        let value = self.smooth * s;
        self.smooth *= (self.ratio)(self.n);
        self.n += 1;
        value
    }

    /// Sequence form of [`coeff_a`].
    pub fn theorem(m: u32, alpha: f64, beta: f64, rho: f64) -> Result<Self> {
        JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
        let s = alpha + beta;
        let smooth0 =
            (0.5 * rho).powf(0.5 * beta) / (gamma(beta + 1.0)? * (1.0 - rho).powi(m as i32));
        Ok(Self::new(
            smooth0,
            Box::new(jacobi_expansion_ratio(s, f64::from(m), beta, rho)),
            Some(GaussFactor {
                m,
                c0: s + 2.0,
                w: branch_w(rho, Branch::Plus),
            }),
        ))
    }

    /// Sequence form of [`coeff_b`].
    pub fn corollary(m: u32, alpha: f64, beta: f64, rho: f64) -> Result<Self> {
        JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
        let s = alpha + beta;
        let smooth0 =
            (0.5 * rho).powf(0.5 * alpha) / (gamma(alpha + 1.0)? * (1.0 + rho).powi(m as i32));
        Ok(Self::new(
            smooth0,
            Box::new(jacobi_expansion_ratio(s, f64::from(m), alpha, rho)),
            Some(GaussFactor {
                m,
                c0: s + 2.0,
                w: branch_w(rho, Branch::Minus),
            }),
        ))
    }

    /// Sequence form of [`coeff_c`], parameterized by `z > 1` through
    /// `rho_e = z - sqrt(z^2 - 1)`.
    pub fn szego(m: u32, alpha: f64, beta: f64, z: f64) -> Result<Self> {
        JacobiParams::new(alpha, beta)?.require_sum_not_minus_one()?;
        let rho = SzegoPoint::new(z)?.rho_equiv;
        let s = alpha + beta;
        let mf = f64::from(m);
        let smooth0 = 2.0f64.powf(0.5 * (alpha + mf + 1.0 - beta)) * rho.powf(0.5 * (s + mf + 1.0))
            / (gamma(beta + 1.0)? * (1.0 - rho).powi(m as i32));
        Ok(Self::new(
            smooth0,
            Box::new(jacobi_expansion_ratio(s, mf, beta, rho)),
            Some(GaussFactor {
                m,
                c0: s + 2.0,
                w: branch_w(rho, Branch::Plus),
            }),
        ))
    }

    /// Sequence form of [`coeff_gegenbauer`].
    pub fn gegenbauer(m: u32, mu: f64, rho: f64, branch: Branch) -> Result<Self> {
        let mf = f64::from(m);
        let one_pm = match branch {
            Branch::Plus => 1.0 - rho,
            Branch::Minus => 1.0 + rho,
        };
        let smooth0 = pochhammer(2.0 * mu, m) / (gamma(mf + 1.0)? * one_pm.powi(m as i32));
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (nf + 1.0 + mu) / (nf + mu)
                * (2.0 * mu + mf + 2.0 * nf)
                * (2.0 * mu + mf + 2.0 * nf + 1.0)
                / ((2.0 * mu + 2.0 * nf + 1.0) * (2.0 * mu + 2.0 * nf + 2.0))
        };
        Ok(Self::new(
            smooth0,
            Box::new(ratio),
            Some(GaussFactor {
                m,
                c0: 2.0 * mu + 1.0,
                w: branch_w(rho, branch),
            }),
        ))
    }

    /// Sequence form of [`coeff_chebu`].
    pub fn chebu(m: u32, rho: f64, branch: Branch) -> Self {
        let mf = f64::from(m);
        let one_pm = match branch {
            Branch::Plus => 1.0 - rho,
            Branch::Minus => 1.0 + rho,
        };
        let smooth0 = (mf + 1.0) * one_pm.powi(-(m as i32));
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (nf + 2.0) / (nf + 1.0) * (mf + 2.0 + 2.0 * nf) * (mf + 3.0 + 2.0 * nf)
                / ((2.0 * nf + 3.0) * (2.0 * nf + 4.0))
        };
        Self::new(
            smooth0,
            Box::new(ratio),
            Some(GaussFactor {
                m,
                c0: 3.0,
                w: branch_w(rho, branch),
            }),
        )
    }

    /// Sequence form of [`coeff_legendre`].
    pub fn legendre(m: u32, rho: f64, branch: Branch) -> Self {
        let mf = f64::from(m);
        let one_pm = match branch {
            Branch::Plus => 1.0 - rho,
            Branch::Minus => 1.0 + rho,
        };
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (2.0 * nf + 3.0) / (2.0 * nf + 1.0)
                * (mf + 1.0 + 2.0 * nf)
                * (mf + 2.0 + 2.0 * nf)
                / ((2.0 * nf + 2.0) * (2.0 * nf + 3.0))
        };
        Self::new(
            one_pm.powi(-(m as i32)),
            Box::new(ratio),
            Some(GaussFactor {
                m,
                c0: 2.0,
                w: branch_w(rho, branch),
            }),
        )
    }

    /// Sequence form of [`coeff_chebt`].  The Neumann factor contributes a
    /// one-time extra 2 on the `n = 0 -> 1` step.
    pub fn chebt(m: u32, rho: f64, branch: Branch) -> Self {
        let mf = f64::from(m);
        let one_pm = match branch {
            Branch::Plus => 1.0 - rho,
            Branch::Minus => 1.0 + rho,
        };
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            let neumann_step = if n == 0 { 2.0 } else { 1.0 };
            neumann_step * rho * (mf + 2.0 * nf) * (mf + 2.0 * nf + 1.0)
                / ((2.0 * nf + 1.0) * (2.0 * nf + 2.0))
        };
        Self::new(
            one_pm.powi(-(m as i32)),
            Box::new(ratio),
            Some(GaussFactor {
                m,
                c0: 1.0,
                w: branch_w(rho, branch),
            }),
        )
    }

    /// Sequence form of [`gf_jacobi_coeff`].
    pub fn gf_jacobi(alpha: f64, beta: f64, rho: f64, branch: Branch) -> Result<Self> {
        JacobiParams::new(alpha, beta)?;
        let s = alpha + beta;
        let den = match branch {
            Branch::Plus => beta,
            Branch::Minus => alpha,
        };
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (s + 1.0 + nf) / (den + 1.0 + nf)
        };
        Ok(Self::new(1.0, Box::new(ratio), None))
    }

    /// Sequence form of [`gf_jacobi_ext_coeff`].
    pub fn gf_jacobi_ext(alpha: f64, beta: f64, rho: f64, branch: Branch) -> Result<Self> {
        JacobiParams::new(alpha, beta)?;
        let s = alpha + beta;
        let den = match branch {
            Branch::Plus => beta,
            Branch::Minus => alpha,
        };
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (s + 1.0 + nf) / (den + 1.0 + nf) * (2.0 * nf + s + 3.0) / (2.0 * nf + s + 1.0)
        };
        Ok(Self::new(s + 1.0, Box::new(ratio), None))
    }

    /// Geometric sequence `rho^n`, the classical Gegenbauer coefficient.
    pub fn geometric(rho: f64) -> Self {
        Self::new(1.0, Box::new(move |_| rho), None)
    }

    /// Sequence form of [`coeff_koekoek`].
    pub fn koekoek(mu: f64, lambda: f64, rho: f64) -> Result<Self> {
        let g = gamma(mu + 0.5)?;
        let smooth0 = 2.0f64.powf(0.5 - mu) * rho.powf(mu - 0.5) / (g * g);
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (lambda + nf) * (2.0 * mu - lambda + nf) / ((2.0 * mu + nf) * (mu + 0.5 + nf))
        };
        Ok(Self::new(smooth0, Box::new(ratio), None))
    }

    /// Sequence form of [`coeff_rainville_gegenbauer`].
    pub fn rainville_gegenbauer(mu: f64, lambda: f64, rho: f64) -> Result<Self> {
        let smooth0 = (0.5 * rho).powf(mu - 0.5) / gamma(mu + 0.5)?;
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (lambda + nf) / (2.0 * mu + nf)
        };
        Ok(Self::new(smooth0, Box::new(ratio), None))
    }

    /// Sequence form of [`coeff_brafman_u`].
    pub fn brafman_u(lambda: f64, rho: f64) -> Self {
        let smooth0 = 2.0f64.powf(2.5) * rho.sqrt() / (2.0 * std::f64::consts::PI);
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            4.0 * rho * (lambda + nf) * (2.0 - lambda + nf) / ((2.0 * nf + 3.0) * (2.0 * nf + 4.0))
        };
        Self::new(smooth0, Box::new(ratio), None)
    }

    /// Sequence form of [`coeff_rainville_u`].
    pub fn rainville_u(lambda: f64, rho: f64) -> Self {
        let smooth0 = (2.0 * rho / std::f64::consts::PI).sqrt();
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (lambda + nf) / (nf + 2.0)
        };
        Self::new(smooth0, Box::new(ratio), None)
    }

    /// Sequence form of [`coeff_brafman_legendre`].
    pub fn brafman_legendre(lambda: f64, rho: f64) -> Self {
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (lambda + nf) * (1.0 - lambda + nf) / ((nf + 1.0) * (nf + 1.0))
        };
        Self::new(1.0, Box::new(ratio), None)
    }

    /// Sequence form of [`coeff_rainville_legendre`].
    pub fn rainville_legendre(lambda: f64, rho: f64) -> Self {
        let ratio = move |n: u32| {
            let nf = f64::from(n);
            rho * (lambda + nf) / (nf + 1.0)
        };
        Self::new(1.0, Box::new(ratio), None)
    }
}
