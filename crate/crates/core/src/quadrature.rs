//! Gauss-Jacobi quadrature on [-1, 1] against the weight
//! (1-x)^alpha (1+x)^beta, built the Golub-Welsch way: nodes are the
//! eigenvalues of the symmetric tridiagonal Jacobi matrix of the monic
//! three-term recurrence, weights come from the squared first components
//! of the normalized eigenvectors scaled by the zeroth moment.
//!
//! The eigenproblem is solved by implicit-shift QL with eigenvector
//! accumulation, following the classic EISPACK/Numerical Recipes tqli
//! routine; full eigenvector matrices are kept for simplicity (only the
//! first row is consumed) since rules here stay small (N <= 256).

use crate::error::{Error, Result};
use crate::expansions::{IdentitySpec, Point};
use crate::numcore::gamma;
use crate::orthopoly::{JacobiParams, PolyFamily};

/// Nodes and weights of an N-point rule, nodes strictly increasing.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub params: JacobiParams,
    pub order: usize,
}

impl QuadratureRule {
    /// Sum of w_i f(x_i), approximating the weighted integral of f.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Same, for integrands that can fail pointwise.
    pub fn try_integrate<F: Fn(f64) -> Result<f64>>(&self, f: F) -> Result<f64> {
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(x)?;
        }
        Ok(acc)
    }
}

/// Integral of the bare weight, 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2).
pub fn zeroth_moment(p: &JacobiParams) -> Result<f64> {
    Ok(
        2f64.powf(p.alpha + p.beta + 1.0) * gamma(p.alpha + 1.0)? * gamma(p.beta + 1.0)?
            / gamma(p.alpha + p.beta + 2.0)?,
    )
}

/// Diagonal a_k and squared subdiagonal b_k of the monic Jacobi recurrence
/// x p_k = p_{k+1} + a_k p_k + b_k p_{k-1}.  The k = 0 and k = 1 entries
/// use the cancelled forms so nothing degenerates as alpha + beta
/// approaches 0 or -1.
fn monic_coefficients(n: usize, p: &JacobiParams) -> (Vec<f64>, Vec<f64>) {
    let (al, be) = (p.alpha, p.beta);
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    a[0] = (be - al) / (al + be + 2.0);
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + al + be;
        a[k] = (be * be - al * al) / (s * (s + 2.0));
        b[k] = if k == 1 {
            4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + al + be).powi(2) * (3.0 + al + be))
        } else {
            4.0 * kf * (kf + al) * (kf + be) * (kf + al + be) / (s * s * (s + 1.0) * (s - 1.0))
        };
    }
    (a, b)
}

/// Implicit-shift QL for a symmetric tridiagonal matrix (diagonal `d`,
/// subdiagonal `e[i]` coupling rows i and i+1, `e[n-1]` scratch), rotating
/// the rows of `z` along.  On return `d` holds eigenvalues (unsorted) and
/// column j of `z` the corresponding normalized eigenvector.
fn ql_implicit_shift(d: &mut [f64], e: &mut [f64], z: &mut [Vec<f64>]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::no_convergence(format!(
                    "tridiagonal QL failed to deflate row {l} after 50 sweeps"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0f64;
            let mut c = 1.0f64;
            let mut p = 0.0f64;
            let mut i = m;
            while i > l {
                let im = i - 1;
                let mut f = s * e[im];
                let b = c * e[im];
                r = f.hypot(g);
                e[i] = r;
                if r == 0.0 {
                    // A rotation annihilated early; drop the negligible
                    // element and restart the sweep.
                    d[i] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i] - p;
                r = (d[im] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    f = row[i];
                    row[i] = s * row[im] + c * f;
                    row[im] = c * row[im] - s * f;
                }
                i -= 1;
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Build the N-point Gauss-Jacobi rule.
pub fn gauss_jacobi_rule(n: usize, p: &JacobiParams) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::domain(
            "quadrature order must be at least 1".to_string(),
        ));
    }
    PolyFamily::Jacobi(*p).validate()?;
    let (mut d, b) = monic_coefficients(n, p);
    let mut e = vec![0.0; n];
    for k in 1..n {
        e[k - 1] = b[k].sqrt();
    }
    let mut z: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = vec![0.0; n];
            row[i] = 1.0;
            row
        })
        .collect();
    ql_implicit_shift(&mut d, &mut e, &mut z)?;
    let mu0 = zeroth_moment(p)?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("eigenvalues are finite"));
    let nodes = idx.iter().map(|&i| d[i]).collect();
    let weights = idx.iter().map(|&i| mu0 * z[0][i] * z[0][i]).collect();
    Ok(QuadratureRule {
        nodes,
        weights,
        params: *p,
        order: n,
    })
}

/// The Jacobi weight each family is orthogonal against.
pub fn weight_params(family: &PolyFamily) -> Result<JacobiParams> {
    family.validate()?;
    match *family {
        PolyFamily::Jacobi(p) => Ok(p),
        PolyFamily::Gegenbauer(mu) => JacobiParams::new(mu - 0.5, mu - 0.5),
        PolyFamily::ChebyshevT => JacobiParams::new(-0.5, -0.5),
        PolyFamily::ChebyshevU => JacobiParams::new(0.5, 0.5),
        PolyFamily::Legendre => JacobiParams::new(0.0, 0.0),
    }
}

/// Analytic norm ||p_n||^2 in the family's weighted L2 space.
pub fn norm_constant(family: &PolyFamily, n: u32) -> Result<f64> {
    family.validate()?;
    let nf = f64::from(n);
    let pi = std::f64::consts::PI;
    Ok(match *family {
        PolyFamily::Jacobi(p) => {
            if n == 0 {
                zeroth_moment(&p)?
            } else {
                let (al, be) = (p.alpha, p.beta);
                2f64.powf(al + be + 1.0) / (2.0 * nf + al + be + 1.0)
                    * gamma(nf + al + 1.0)?
                    * gamma(nf + be + 1.0)?
                    / (gamma(nf + al + be + 1.0)? * gamma(nf + 1.0)?)
            }
        }
        PolyFamily::Gegenbauer(mu) => {
            pi * 2f64.powf(1.0 - 2.0 * mu) * gamma(nf + 2.0 * mu)?
                / ((nf + mu) * gamma(mu)?.powi(2) * gamma(nf + 1.0)?)
        }
        PolyFamily::ChebyshevT => {
            if n == 0 {
                pi
            } else {
                pi / 2.0
            }
        }
        PolyFamily::ChebyshevU => pi / 2.0,
        PolyFamily::Legendre => 2.0 / (2.0 * nf + 1.0),
    })
}

/// Recovers the degree-n expansion coefficient of an identity as the
/// projection <lhs, p_n> / ||p_n||^2 under the family's orthogonality
/// weight, evaluated by an `order`-point Gauss-Jacobi rule.
///
/// The left-hand sides are analytic on [-1, 1] (their nearest complex
/// singularity sits at x = (1+rho^2)/(2 rho) > 1), so the rule converges
/// geometrically like rho^(2 order) and modest orders already give full
/// accuracy.  `point.x` is ignored; x is the integration variable.
pub fn coefficient_via_integral(
    spec: &IdentitySpec,
    n: u32,
    point: &Point,
    order: usize,
) -> Result<f64> {
    let family = spec.poly_family(point)?;
    let rule = gauss_jacobi_rule(order, &weight_params(&family)?)?;
    let integral = rule.try_integrate(|x| {
        let mut q = *point;
        q.x = x;
        Ok(spec.lhs(&q)? * family.eval(n, x))
    })?;
    Ok(integral / norm_constant(&family, n)?)
}

/// Quadrature value of the weighted inner product <p_n, p_m>; zero off the
/// diagonal and the norm constant on it, provided the rule is exact.
pub fn orthogonality_check(family: &PolyFamily, n: u32, m: u32, order: usize) -> Result<f64> {
    family.validate()?;
    if order < (n + m + 1) as usize {
        return Err(Error::domain(format!(
            "quadrature order {order} is below n + m + 1 = {}; the product rule would be inexact",
            n + m + 1
        )));
    }
    let rule = gauss_jacobi_rule(order, &weight_params(family)?)?;
    Ok(rule.integrate(|x| family.eval(n, x) * family.eval(m, x)))
}
