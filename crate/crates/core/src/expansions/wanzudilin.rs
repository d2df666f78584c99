//! Quadratic and cubic theta-style transformations for Legendre series.
//!
//! Both identities sum `P_k` of an argument that blows up as `x -> y`; the
//! stable route is the homogenized polynomial `Q_k(u, t) = t^k P_k(u/t)`,
//! which satisfies the same three-term recurrence
//! `(k+1) Q_{k+1} = (2k+1) u Q_k - k t^2 Q_{k-1}` and is a polynomial in
//! `(u, t^2)`, so the `x = y` diagonal (`t = 0`) needs no limit argument.

use crate::error::{Error, Result};
use crate::expansions::series::{truncated_series, TruncationResult};
use crate::legfun::{assoc_legendre_p, ferrers_p, DegreeOrder};
use crate::numcore::elliptic_k;

/// Both sides of one evaluation: the truncated series and the closed form
/// it must reproduce.
#[derive(Debug, Clone, Copy)]
pub struct WanZudilin {
    pub series: f64,
    pub closed: f64,
    pub terms_used: u32,
    pub tail_estimate: f64,
}

fn check_xy(x: f64, y: f64) -> Result<()> {
    for (name, v) in [("x", x), ("y", y)] {
        if !v.is_finite() || !(0.5..=1.5).contains(&v) {
            return Err(Error::domain(format!("{name} = {v} outside [0.5, 1.5]")));
        }
    }
    Ok(())
}

/// `Q_k(u, t)` for `k = 0, 1, 2, ...` as an infinite iterator.
struct HomogeneousLegendre {
    u: f64,
    t2: f64,
    k: u32,
    prev: f64,
    curr: f64,
}

impl HomogeneousLegendre {
    fn new(u: f64, t: f64) -> Self {
        HomogeneousLegendre {
            u,
            t2: t * t,
            k: 0,
            prev: 0.0,
            curr: 1.0,
        }
    }
}

impl Iterator for HomogeneousLegendre {
    type Item = f64;
    fn next(&mut self) -> Option<f64> {
        let out = self.curr;
        let kf = f64::from(self.k);
        let next = ((2.0 * kf + 1.0) * self.u * self.curr - kf * self.t2 * self.prev) / (kf + 1.0);
        self.prev = self.curr;
        self.curr = next;
        self.k += 1;
        Some(out)
    }
}

/// One factor of the quadratic closed form: `K(sqrt(v^2-1)/v)/v` above the
/// unit argument and `K(sqrt(1-v^2))` below; both branches meet at
/// `K(0) = pi/2`.
fn quadratic_factor(v: f64) -> Result<f64> {
    if v >= 1.0 {
        Ok(elliptic_k((v * v - 1.0).sqrt() / v)? / v)
    } else {
        elliptic_k((1.0 - v * v).sqrt())
    }
}

/// One factor of the cubic closed form: a degree `-1/3` Legendre (above 1)
/// or Ferrers (below 1) function of `2v^3 - 1`, continuous across `v = 1`
/// where it equals 1.
fn cubic_factor(v: f64) -> Result<f64> {
    let w = 2.0 * v * v * v - 1.0;
    let d = DegreeOrder::new(-1.0 / 3.0, 0.0)?;
    if w > 1.0 {
        assoc_legendre_p(&d, w)
    } else if w < 1.0 {
        ferrers_p(&d, w)
    } else {
        Ok(1.0)
    }
}

/// Evaluates the quadratic transformation at `(x, y)` in `[0.5, 1.5]^2`:
///
/// series = `(pi^2/2) sum_n ((1/2)_n / n!)^2 Q_{2n}(u, t)` with
/// `u = (x+y)(1-xy)/(1+xy)^2`, `t = (x-y)/(1+xy)`;
///
/// closed = `(1+xy) q(x) q(y)` with `q` the [`quadratic_factor`].
pub fn wan_zudilin_quadratic(x: f64, y: f64, tol: f64) -> Result<WanZudilin> {
    let p = 1.0 + x * y;
    let u = (x + y) * (1.0 - x * y) / (p * p);
    let t = (x - y) / p;
    let closed = wan_zudilin_quadratic_closed(x, y)?;
    let series = quadratic_series(u, t, tol)?;
    Ok(WanZudilin {
        series: series.value,
        closed,
        terms_used: series.terms_used,
        tail_estimate: series.tail_estimate,
    })
}

/// The closed side alone: `(1 + xy) q(x) q(y)`.
pub fn wan_zudilin_quadratic_closed(x: f64, y: f64) -> Result<f64> {
    check_xy(x, y)?;
    Ok((1.0 + x * y) * quadratic_factor(x)? * quadratic_factor(y)?)
}

fn quadratic_series(u: f64, t: f64, tol: f64) -> Result<TruncationResult> {
    let mut q = HomogeneousLegendre::new(u, t);
    let mut q_even = Vec::new();
    let mut ratio = 1.0f64; // ((1/2)_n / n!)^2
    let half_pi2 = 0.5 * std::f64::consts::PI * std::f64::consts::PI;
    truncated_series(
        |n| {
            while q_even.len() <= n as usize {
                let q2k = q.next().expect("infinite iterator");
                q.next();
                q_even.push(q2k);
            }
            if n > 0 {
                let nf = f64::from(n);
                let r = (nf - 0.5) / nf;
                ratio *= r * r;
            }
            Ok(half_pi2 * ratio * q_even[n as usize])
        },
        tol,
    )
}

/// Evaluates the cubic transformation at `(x, y)` in `[0.5, 1.5]^2`:
///
/// series = `3 sum_n (1/3)_n (2/3)_n / (n!)^2 Q_{3n}(u, t)` with
/// `u = (x + y - 2 x^2 y^2) / (1 + 4xy(x+y))`,
/// `t = (x-y) / sqrt(1 + 4xy(x+y))`;
///
/// closed = `sqrt(1 + 4xy(x+y)) c(x) c(y)` with `c` the [`cubic_factor`].
pub fn wan_zudilin_cubic(x: f64, y: f64, tol: f64) -> Result<WanZudilin> {
    let s = 1.0 + 4.0 * x * y * (x + y);
    let u = (x + y - 2.0 * x * x * y * y) / s;
    let t = (x - y) / s.sqrt();
    let closed = wan_zudilin_cubic_closed(x, y)?;
    let series = cubic_series(u, t, tol)?;
    Ok(WanZudilin {
        series: series.value,
        closed,
        terms_used: series.terms_used,
        tail_estimate: series.tail_estimate,
    })
}

/// The closed side alone: `sqrt(1 + 4xy(x+y)) c(x) c(y)`.
pub fn wan_zudilin_cubic_closed(x: f64, y: f64) -> Result<f64> {
    check_xy(x, y)?;
    let s = 1.0 + 4.0 * x * y * (x + y);
    Ok(s.sqrt() * cubic_factor(x)? * cubic_factor(y)?)
}

fn cubic_series(u: f64, t: f64, tol: f64) -> Result<TruncationResult> {
    let mut q = HomogeneousLegendre::new(u, t);
    let mut q_third = Vec::new();
    let mut ratio = 1.0f64; // (1/3)_n (2/3)_n / (n!)^2
    truncated_series(
        |n| {
            while q_third.len() <= n as usize {
                let q3k = q.next().expect("infinite iterator");
                q.next();
                q.next();
                q_third.push(q3k);
            }
            if n > 0 {
                let nf = f64::from(n);
                ratio *= (nf - 2.0 / 3.0) * (nf - 1.0 / 3.0) / (nf * nf);
            }
            Ok(3.0 * ratio * q_third[n as usize])
        },
        tol,
    )
}
