//! The identity registry: one entry per verified expansion or generating
//! function, binding a left-hand-side evaluator, a coefficient generator, a
//! polynomial family, a parameter box and a default grid under a stable id.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::expansions::series::{truncated_series, TruncationResult};
use crate::expansions::{coeffs, lhs, wanzudilin, Branch};
use crate::orthopoly::{JacobiParams, PolyFamily};

/// One evaluation point.  Fields not used by a given identity stay at their
/// `NaN` (or zero, for `m`) defaults and are never read.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub rho: f64,
    pub x: f64,
    pub y: f64,
    pub m: u32,
    pub alpha: f64,
    pub beta: f64,
    pub mu: f64,
    pub lambda: f64,
}

impl Default for Point {
    fn default() -> Self {
        Point {
            rho: f64::NAN,
            x: f64::NAN,
            y: f64::NAN,
            m: 0,
            alpha: f64::NAN,
            beta: f64::NAN,
            mu: f64::NAN,
            lambda: f64::NAN,
        }
    }
}

impl Point {
    /// Reads the named parameter; `m` comes back as an exact float.
    pub fn get(&self, name: &str) -> Result<f64> {
        Ok(match name {
            "rho" => self.rho,
            "x" => self.x,
            "y" => self.y,
            "m" => f64::from(self.m),
            "alpha" => self.alpha,
            "beta" => self.beta,
            "mu" => self.mu,
            "lambda" => self.lambda,
            _ => return Err(Error::grid(format!("unknown parameter `{name}`"))),
        })
    }

    /// Writes the named parameter; `m` must be a nonnegative integer.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        match name {
            "rho" => self.rho = value,
            "x" => self.x = value,
            "y" => self.y = value,
            "m" => {
                if value < 0.0 || value.fract() != 0.0 || value > f64::from(u32::MAX) {
                    return Err(Error::grid(format!(
                        "m must be a nonnegative integer, got {value}"
                    )));
                }
                self.m = value as u32;
            }
            "alpha" => self.alpha = value,
            "beta" => self.beta = value,
            "mu" => self.mu = value,
            "lambda" => self.lambda = value,
            _ => return Err(Error::grid(format!("unknown parameter `{name}`"))),
        }
        Ok(())
    }
}

/// One grid dimension: its parameter name, the closed interval the registry
/// accepts for it, and the default grid values.
#[derive(Debug, Clone, Copy)]
pub struct Axis {
    pub name: &'static str,
    pub min: f64,
    pub max: f64,
    pub defaults: &'static [f64],
}

/// Dispatch tag selecting the lhs/coefficient pair of an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    GfGegenbauer,
    GfJacobi(Branch),
    GfJacobiExt(Branch),
    ExpTheorem,
    ExpCorollary,
    ExpSzego,
    ExpGegenbauer(Branch),
    ExpChebU(Branch),
    ExpLegendre(Branch),
    ExpChebT(Branch),
    Koekoek,
    RainvilleGegenbauer,
    BrafmanU,
    RainvilleU,
    BrafmanLegendre,
    RainvilleLegendre,
    WanZudilinQuadratic,
    WanZudilinCubic,
}

/// Registry entry.  Everything needed to evaluate and verify one identity.
#[derive(Debug, Clone, Copy)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub kind: IdentityKind,
    pub family_name: &'static str,
    pub description: &'static str,
    pub axes: &'static [Axis],
    pub has_integral: bool,
}

/// `z = (1 + rho^2) / (2 rho)`, the inverse Joukowski map used by the
/// Szego-variable entry: its grid is expressed in `rho` like every other
/// entry and mapped to `z > 1` internally.
fn szego_z(rho: f64) -> f64 {
    (1.0 + rho * rho) / (2.0 * rho)
}

impl IdentitySpec {
    /// Validates a point against the axis boxes plus the per-kind
    /// constraints that a box cannot express.
    pub fn check_point(&self, p: &Point) -> Result<()> {
        for axis in self.axes {
            let v = p.get(axis.name)?;
            if !v.is_finite() || v < axis.min || v > axis.max {
                return Err(Error::grid(format!(
                    "{}: {} = {v} outside [{}, {}]",
                    self.id, axis.name, axis.min, axis.max
                )));
            }
        }
        if matches!(
            self.kind,
            IdentityKind::GfJacobi(_)
                | IdentityKind::GfJacobiExt(_)
                | IdentityKind::ExpTheorem
                | IdentityKind::ExpCorollary
                | IdentityKind::ExpSzego
        ) && (p.alpha + p.beta + 1.0).abs() < 1e-9
        {
            return Err(Error::grid(format!(
                "{}: alpha + beta = -1 is excluded",
                self.id
            )));
        }
        Ok(())
    }

    /// Polynomial family the series side expands over.
    pub fn poly_family(&self, p: &Point) -> Result<PolyFamily> {
        Ok(match self.kind {
            IdentityKind::GfJacobi(_)
            | IdentityKind::GfJacobiExt(_)
            | IdentityKind::ExpTheorem
            | IdentityKind::ExpCorollary
            | IdentityKind::ExpSzego => PolyFamily::Jacobi(JacobiParams::new(p.alpha, p.beta)?),
            IdentityKind::GfGegenbauer
            | IdentityKind::ExpGegenbauer(_)
            | IdentityKind::Koekoek
            | IdentityKind::RainvilleGegenbauer => PolyFamily::Gegenbauer(p.mu),
            IdentityKind::ExpChebU(_) | IdentityKind::BrafmanU | IdentityKind::RainvilleU => {
                PolyFamily::ChebyshevU
            }
            IdentityKind::ExpChebT(_) => PolyFamily::ChebyshevT,
            IdentityKind::ExpLegendre(_)
            | IdentityKind::BrafmanLegendre
            | IdentityKind::RainvilleLegendre
            | IdentityKind::WanZudilinQuadratic
            | IdentityKind::WanZudilinCubic => PolyFamily::Legendre,
        })
    }

    /// Closed-form side at a point.
    pub fn lhs(&self, p: &Point) -> Result<f64> {
        match self.kind {
            IdentityKind::GfGegenbauer => lhs::lhs_gf_gegenbauer(p.mu, p.rho, p.x),
            IdentityKind::GfJacobi(Branch::Plus) => {
                lhs::lhs_gf_jacobi_plus(p.alpha, p.beta, p.rho, p.x)
            }
            IdentityKind::GfJacobi(Branch::Minus) => {
                lhs::lhs_gf_jacobi_minus(p.alpha, p.beta, p.rho, p.x)
            }
            IdentityKind::GfJacobiExt(Branch::Plus) => {
                lhs::lhs_gf_jacobi_ext_plus(p.alpha, p.beta, p.rho, p.x)
            }
            IdentityKind::GfJacobiExt(Branch::Minus) => {
                lhs::lhs_gf_jacobi_ext_minus(p.alpha, p.beta, p.rho, p.x)
            }
            IdentityKind::ExpTheorem => lhs::lhs_theorem(p.m, p.alpha, p.beta, p.rho, p.x),
            IdentityKind::ExpCorollary => lhs::lhs_corollary(p.m, p.alpha, p.beta, p.rho, p.x),
            IdentityKind::ExpSzego => lhs::lhs_szego(p.m, p.alpha, p.beta, szego_z(p.rho), p.x),
            IdentityKind::ExpGegenbauer(br) => lhs::lhs_gegenbauer(p.m, p.mu, p.rho, p.x, br),
            IdentityKind::ExpChebU(br) => lhs::lhs_chebu(p.m, p.rho, p.x, br),
            IdentityKind::ExpLegendre(br) => lhs::lhs_legendre(p.m, p.rho, p.x, br),
            IdentityKind::ExpChebT(br) => lhs::lhs_chebt(p.m, p.rho, p.x, br),
            IdentityKind::Koekoek => lhs::lhs_koekoek(p.mu, p.lambda, p.rho, p.x),
            IdentityKind::RainvilleGegenbauer => {
                lhs::lhs_rainville_gegenbauer(p.mu, p.lambda, p.rho, p.x)
            }
            IdentityKind::BrafmanU => lhs::lhs_brafman_u(p.lambda, p.rho, p.x),
            IdentityKind::RainvilleU => lhs::lhs_rainville_u(p.lambda, p.rho, p.x),
            IdentityKind::BrafmanLegendre => lhs::lhs_brafman_legendre(p.lambda, p.rho, p.x),
            IdentityKind::RainvilleLegendre => lhs::lhs_rainville_legendre(p.lambda, p.rho, p.x),
            IdentityKind::WanZudilinQuadratic => wanzudilin::wan_zudilin_quadratic_closed(p.x, p.y),
            IdentityKind::WanZudilinCubic => wanzudilin::wan_zudilin_cubic_closed(p.x, p.y),
        }
    }

    /// Series coefficient of degree `n` at a point.  The two theorem-style
    /// equalities have no expansion coefficients; asking for one is an error.
    pub fn coeff(&self, n: u32, p: &Point) -> Result<f64> {
        match self.kind {
            IdentityKind::GfGegenbauer => Ok(p.rho.powi(n as i32)),
            IdentityKind::GfJacobi(br) => coeffs::gf_jacobi_coeff(n, p.alpha, p.beta, p.rho, br),
            IdentityKind::GfJacobiExt(br) => {
                coeffs::gf_jacobi_ext_coeff(n, p.alpha, p.beta, p.rho, br)
            }
            IdentityKind::ExpTheorem => coeffs::coeff_a(n, p.m, p.alpha, p.beta, p.rho),
            IdentityKind::ExpCorollary => coeffs::coeff_b(n, p.m, p.alpha, p.beta, p.rho),
            IdentityKind::ExpSzego => coeffs::coeff_c(n, p.m, p.alpha, p.beta, szego_z(p.rho)),
            IdentityKind::ExpGegenbauer(br) => coeffs::coeff_gegenbauer(n, p.m, p.mu, p.rho, br),
            IdentityKind::ExpChebU(br) => coeffs::coeff_chebu(n, p.m, p.rho, br),
            IdentityKind::ExpLegendre(br) => coeffs::coeff_legendre(n, p.m, p.rho, br),
            IdentityKind::ExpChebT(br) => coeffs::coeff_chebt(n, p.m, p.rho, br),
            IdentityKind::Koekoek => coeffs::coeff_koekoek(n, p.mu, p.lambda, p.rho),
            IdentityKind::RainvilleGegenbauer => {
                coeffs::coeff_rainville_gegenbauer(n, p.mu, p.lambda, p.rho)
            }
            IdentityKind::BrafmanU => coeffs::coeff_brafman_u(n, p.lambda, p.rho),
            IdentityKind::RainvilleU => coeffs::coeff_rainville_u(n, p.lambda, p.rho),
            IdentityKind::BrafmanLegendre => coeffs::coeff_brafman_legendre(n, p.lambda, p.rho),
            IdentityKind::RainvilleLegendre => coeffs::coeff_rainville_legendre(n, p.lambda, p.rho),
            IdentityKind::WanZudilinQuadratic | IdentityKind::WanZudilinCubic => {
                Err(Error::domain(format!(
                    "{}: no expansion coefficients; the series side is evaluated as a whole",
                    self.id
                )))
            }
        }
    }

    /// Coefficient generator feeding [`series`](Self::series).  Produces the
    /// same values as [`coeff`](Self::coeff) but through ratio updates, which
    /// keep per-term error at the ulp level; the alternating sums near
    /// `x = -1` amplify whatever error the terms carry by the ratio of
    /// largest term to series value, so the series path cannot afford the
    /// log-space route that the pointwise path uses.
    fn coeff_sequence(&self, p: &Point) -> Result<coeffs::CoeffSequence> {
        use coeffs::CoeffSequence as Seq;
        match self.kind {
            IdentityKind::GfGegenbauer => Ok(Seq::geometric(p.rho)),
            IdentityKind::GfJacobi(br) => Seq::gf_jacobi(p.alpha, p.beta, p.rho, br),
            IdentityKind::GfJacobiExt(br) => Seq::gf_jacobi_ext(p.alpha, p.beta, p.rho, br),
            IdentityKind::ExpTheorem => Seq::theorem(p.m, p.alpha, p.beta, p.rho),
            IdentityKind::ExpCorollary => Seq::corollary(p.m, p.alpha, p.beta, p.rho),
            IdentityKind::ExpSzego => Seq::szego(p.m, p.alpha, p.beta, szego_z(p.rho)),
            IdentityKind::ExpGegenbauer(br) => Seq::gegenbauer(p.m, p.mu, p.rho, br),
            IdentityKind::ExpChebU(br) => Ok(Seq::chebu(p.m, p.rho, br)),
            IdentityKind::ExpLegendre(br) => Ok(Seq::legendre(p.m, p.rho, br)),
            IdentityKind::ExpChebT(br) => Ok(Seq::chebt(p.m, p.rho, br)),
            IdentityKind::Koekoek => Seq::koekoek(p.mu, p.lambda, p.rho),
            IdentityKind::RainvilleGegenbauer => Seq::rainville_gegenbauer(p.mu, p.lambda, p.rho),
            IdentityKind::BrafmanU => Ok(Seq::brafman_u(p.lambda, p.rho)),
            IdentityKind::RainvilleU => Ok(Seq::rainville_u(p.lambda, p.rho)),
            IdentityKind::BrafmanLegendre => Ok(Seq::brafman_legendre(p.lambda, p.rho)),
            IdentityKind::RainvilleLegendre => Ok(Seq::rainville_legendre(p.lambda, p.rho)),
            IdentityKind::WanZudilinQuadratic | IdentityKind::WanZudilinCubic => {
                Err(Error::domain(format!(
                    "{}: no expansion coefficients; the series side is evaluated as a whole",
                    self.id
                )))
            }
        }
    }

    /// Series side at a point, truncated adaptively.
    pub fn series(&self, p: &Point, tol: f64) -> Result<TruncationResult> {
        match self.kind {
            IdentityKind::WanZudilinQuadratic => {
                let w = wanzudilin::wan_zudilin_quadratic(p.x, p.y, tol)?;
                Ok(TruncationResult {
                    value: w.series,
                    terms_used: w.terms_used,
                    tail_estimate: w.tail_estimate,
                })
            }
            IdentityKind::WanZudilinCubic => {
                let w = wanzudilin::wan_zudilin_cubic(p.x, p.y, tol)?;
                Ok(TruncationResult {
                    value: w.series,
                    terms_used: w.terms_used,
                    tail_estimate: w.tail_estimate,
                })
            }
            _ => {
                let family = self.poly_family(p)?;
                family.validate()?;
                let mut poly = family.iter(p.x);
                let mut seq = self.coeff_sequence(p)?;
                truncated_series(
                    |_| {
                        let pn = poly.next().expect("PolyIter is infinite");
                        Ok(seq.next_coeff() * pn)
                    },
                    tol,
                )
            }
        }
    }

    /// Parameter tuple of a point in axis order, for report records.
    pub fn params_tuple(&self, p: &Point) -> Vec<f64> {
        self.axes
            .iter()
            .map(|a| p.get(a.name).expect("axis names are valid"))
            .collect()
    }

    /// Default verification grid: the cartesian product of the axis default
    /// value lists, last axis varying fastest.
    pub fn default_grid(&self) -> Vec<Point> {
        let lists: Vec<&[f64]> = self.axes.iter().map(|a| a.defaults).collect();
        let total: usize = lists.iter().map(|l| l.len()).product();
        let mut grid = Vec::with_capacity(total);
        for mut idx in 0..total {
            let mut point = Point::default();
            for (axis, list) in self.axes.iter().zip(&lists).rev() {
                let v = list[idx % list.len()];
                idx /= list.len();
                point.set(axis.name, v).expect("default values are valid");
            }
            grid.push(point);
        }
        grid
    }

    /// Two interior parameter points at which the expansion-coefficient
    /// integrals are checked (empty when no integral form exists).  The `x`
    /// coordinate is the integration variable and is left unset.
    pub fn integral_points(&self) -> Vec<Point> {
        if !self.has_integral {
            return Vec::new();
        }
        let mut a = Point::default();
        let mut b = Point::default();
        match self.kind {
            IdentityKind::ExpTheorem | IdentityKind::ExpCorollary | IdentityKind::ExpSzego => {
                a.rho = 0.3;
                a.m = 2;
                a.alpha = 0.5;
                a.beta = -0.25;
                b.rho = 0.5;
                b.m = 1;
                b.alpha = 1.3;
                b.beta = 0.5;
            }
            IdentityKind::ExpGegenbauer(_) => {
                a.rho = 0.4;
                a.m = 1;
                a.mu = 0.75;
                b.rho = 0.3;
                b.m = 3;
                b.mu = 2.5;
            }
            IdentityKind::ExpChebU(_)
            | IdentityKind::ExpLegendre(_)
            | IdentityKind::ExpChebT(_) => {
                a.rho = 0.3;
                a.m = 2;
                b.rho = 0.55;
                b.m = 5;
            }
            IdentityKind::Koekoek | IdentityKind::RainvilleGegenbauer => {
                a.rho = 0.3;
                a.mu = 0.75;
                a.lambda = 1.0;
                b.rho = 0.5;
                b.mu = 2.5;
                b.lambda = 0.3;
            }
            _ => unreachable!("has_integral is set only on the kinds above"),
        }
        vec![a, b]
    }

    /// Human-readable domain box, one `name in [lo, hi]` clause per axis.
    pub fn domain_string(&self) -> String {
        self.axes
            .iter()
            .map(|a| format!("{} in [{}, {}]", a.name, a.min, a.max))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

const RHO: Axis = Axis {
    name: "rho",
    min: 0.05,
    max: 0.6,
    defaults: &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6],
};
const X_CUT: Axis = Axis {
    name: "x",
    min: -0.9,
    max: 0.9,
    defaults: &[-0.9, -0.5, 0.0, 0.5, 0.9],
};
const M: Axis = Axis {
    name: "m",
    min: 0.0,
    max: 8.0,
    defaults: &[0.0, 1.0, 2.0, 3.0, 5.0],
};
const ALPHA: Axis = Axis {
    name: "alpha",
    min: -0.9,
    max: 1.5,
    defaults: &[-0.4, 0.0, 0.5, 1.3],
};
const BETA: Axis = Axis {
    name: "beta",
    min: -0.9,
    max: 1.5,
    defaults: &[-0.4, 0.0, 0.5, 1.3],
};
const MU: Axis = Axis {
    name: "mu",
    min: 0.1,
    max: 2.5,
    defaults: &[0.25, 0.75, 1.0, 2.5],
};
const LAMBDA: Axis = Axis {
    name: "lambda",
    min: 0.1,
    max: 2.5,
    defaults: &[0.3, 1.0, 2.5],
};
const WZ_X: Axis = Axis {
    name: "x",
    min: 0.5,
    max: 1.5,
    defaults: &[0.9, 1.0, 1.1],
};
const WZ_Y: Axis = Axis {
    name: "y",
    min: 0.5,
    max: 1.5,
    defaults: &[0.9, 1.0, 1.1],
};

fn build_registry() -> Vec<IdentitySpec> {
    use IdentityKind::*;
    vec![
        IdentitySpec {
            id: "gf.gegenbauer",
            kind: GfGegenbauer,
            family_name: "gegenbauer",
            description: "classical generating function: R^(-2mu) = sum rho^n C_n^mu(x)",
            axes: &[MU, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "gf.jacobi.plus",
            kind: GfJacobi(Branch::Plus),
            family_name: "jacobi",
            description: "Gauss-form generating function on the zeta_+ branch, \
                          coefficients (a+b+1)_n/(b+1)_n rho^n",
            axes: &[ALPHA, BETA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "gf.jacobi.minus",
            kind: GfJacobi(Branch::Minus),
            family_name: "jacobi",
            description: "Gauss-form generating function on the zeta_- branch, \
                          coefficients (a+b+1)_n/(a+1)_n rho^n",
            axes: &[ALPHA, BETA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "gf.jacobi.ext.plus",
            kind: GfJacobiExt(Branch::Plus),
            family_name: "jacobi",
            description: "degree-weighted extension of gf.jacobi.plus, \
                          coefficients (2n+a+b+1)(a+b+1)_n/(b+1)_n rho^n",
            axes: &[ALPHA, BETA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "gf.jacobi.ext.minus",
            kind: GfJacobiExt(Branch::Minus),
            family_name: "jacobi",
            description: "degree-weighted extension of gf.jacobi.minus, \
                          coefficients (2n+a+b+1)(a+b+1)_n/(a+1)_n rho^n",
            axes: &[ALPHA, BETA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "exp.jacobi.thm21",
            kind: ExpTheorem,
            family_name: "jacobi",
            description: "Jacobi expansion of (1+x)^(-b/2) R^(-(a+m+1)) P^(-b)_(a+m)(zeta_+)",
            axes: &[M, ALPHA, BETA, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.jacobi.cor22",
            kind: ExpCorollary,
            family_name: "jacobi",
            description: "Jacobi expansion of (1-x)^(-a/2) R^(-(b+m+1)) F^(-a)_(b+m)(zeta_-)",
            axes: &[M, ALPHA, BETA, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.jacobi.szego23",
            kind: ExpSzego,
            family_name: "jacobi",
            description: "ellipse-variable form of exp.jacobi.thm21 under z = (1+rho^2)/(2 rho)",
            axes: &[M, ALPHA, BETA, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.gegenbauer.plus",
            kind: ExpGegenbauer(Branch::Plus),
            family_name: "gegenbauer",
            description: "Gegenbauer expansion of R^(-(2mu+m)) C_m^mu(zeta_+)",
            axes: &[M, MU, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.gegenbauer.minus",
            kind: ExpGegenbauer(Branch::Minus),
            family_name: "gegenbauer",
            description: "Gegenbauer expansion of R^(-(2mu+m)) C_m^mu(zeta_-)",
            axes: &[M, MU, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "gf.gegenbauer.koekoek",
            kind: Koekoek,
            family_name: "gegenbauer",
            description: "Koekoek-Swarttouw product form: (1-x^2)^(1/4-mu/2) \
                          P^(1/2-mu)(R+rho) F^(1/2-mu)(R-rho) over C_n^mu",
            axes: &[MU, LAMBDA, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "gf.gegenbauer.rainville",
            kind: RainvilleGegenbauer,
            family_name: "gegenbauer",
            description: "Rainville-type form: (1-x^2)^(1/4-mu/2) R^(mu-lambda-1/2) \
                          F^(1/2-mu)((1-rho x)/R) over C_n^mu",
            axes: &[MU, LAMBDA, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.chebu.plus",
            kind: ExpChebU(Branch::Plus),
            family_name: "chebyshev-u",
            description: "Chebyshev-U expansion of R^(-(m+2)) U_m(zeta_+)",
            axes: &[M, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.chebu.minus",
            kind: ExpChebU(Branch::Minus),
            family_name: "chebyshev-u",
            description: "Chebyshev-U expansion of R^(-(m+2)) U_m(zeta_-)",
            axes: &[M, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "gf.chebu.brafman",
            kind: BrafmanU,
            family_name: "chebyshev-u",
            description: "Brafman product form: (1-x^2)^(-1/4) P^(-1/2)(R+rho) \
                          F^(-1/2)(R-rho) over U_n",
            axes: &[LAMBDA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "gf.chebu.rainville",
            kind: RainvilleU,
            family_name: "chebyshev-u",
            description: "Rainville-type form: R^(1/2-lambda) (1-x^2)^(-1/4) \
                          F^(-1/2)((1-rho x)/R) over U_n",
            axes: &[LAMBDA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "exp.legendre.plus",
            kind: ExpLegendre(Branch::Plus),
            family_name: "legendre",
            description: "Legendre expansion of R^(-(m+1)) P_m(zeta_+)",
            axes: &[M, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.legendre.minus",
            kind: ExpLegendre(Branch::Minus),
            family_name: "legendre",
            description: "Legendre expansion of R^(-(m+1)) P_m(zeta_-)",
            axes: &[M, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "gf.legendre.brafman",
            kind: BrafmanLegendre,
            family_name: "legendre",
            description: "Brafman product form: P_(-lambda)(R+rho) F_(-lambda)(R-rho) over P_n",
            axes: &[LAMBDA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "gf.legendre.rainville",
            kind: RainvilleLegendre,
            family_name: "legendre",
            description: "Rainville-type form: R^(-lambda) F_(lambda-1)((1-rho x)/R) over P_n",
            axes: &[LAMBDA, RHO, X_CUT],
            has_integral: false,
        },
        IdentitySpec {
            id: "exp.chebt.plus",
            kind: ExpChebT(Branch::Plus),
            family_name: "chebyshev-t",
            description: "Chebyshev-T expansion of R^(-m) T_m(zeta_+)",
            axes: &[M, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "exp.chebt.minus",
            kind: ExpChebT(Branch::Minus),
            family_name: "chebyshev-t",
            description: "Chebyshev-T expansion of R^(-m) T_m(zeta_-)",
            axes: &[M, RHO, X_CUT],
            has_integral: true,
        },
        IdentitySpec {
            id: "thm.wanzudilin.quadratic",
            kind: WanZudilinQuadratic,
            family_name: "legendre",
            description: "quadratic Legendre series transformation vs product of \
                          complete elliptic integrals",
            axes: &[WZ_X, WZ_Y],
            has_integral: false,
        },
        IdentitySpec {
            id: "thm.wanzudilin.cubic",
            kind: WanZudilinCubic,
            family_name: "legendre",
            description: "cubic Legendre series transformation vs degree -1/3 \
                          Legendre/Ferrers closed form",
            axes: &[WZ_X, WZ_Y],
            has_integral: false,
        },
    ]
}

/// The immutable identity registry.
pub fn registry() -> &'static [IdentitySpec] {
    static REGISTRY: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

/// Looks up an entry by id.
pub fn find(id: &str) -> Result<&'static IdentitySpec> {
    registry()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
