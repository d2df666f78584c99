//! Verification plumbing: grid configuration, report types and the two
//! runners (series-vs-lhs over a grid, coefficient-vs-integral at fixed
//! interior points) that the command-line front end wraps.

use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansions::{IdentitySpec, Point};
use crate::quadrature::coefficient_via_integral;

/// Grid file contents: per-parameter value lists overriding an identity's
/// defaults, plus optional tolerance and integral-degree settings.  Unknown
/// keys are a load error so typos cannot silently shrink coverage.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub rho: Option<Vec<f64>>,
    pub x: Option<Vec<f64>>,
    pub y: Option<Vec<f64>>,
    pub m: Option<Vec<u32>>,
    pub alpha: Option<Vec<f64>>,
    pub beta: Option<Vec<f64>>,
    pub mu: Option<Vec<f64>>,
    pub lambda: Option<Vec<f64>>,
    pub tol: Option<f64>,
    pub n_max: Option<u32>,
}

impl GridConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::grid(format!("grid file rejected: {e}")))
    }

    /// The parameter list for `name`, if one was given.
    fn list_for(&self, name: &str) -> Option<Vec<f64>> {
        match name {
            "rho" => self.rho.clone(),
            "x" => self.x.clone(),
            "y" => self.y.clone(),
            "m" => self
                .m
                .as_ref()
                .map(|v| v.iter().map(|&m| f64::from(m)).collect()),
            "alpha" => self.alpha.clone(),
            "beta" => self.beta.clone(),
            "mu" => self.mu.clone(),
            "lambda" => self.lambda.clone(),
            _ => None,
        }
    }

    /// Names of every parameter list actually present in the file.
    fn provided(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.rho.is_some() {
            out.push("rho");
        }
        if self.x.is_some() {
            out.push("x");
        }
        if self.y.is_some() {
            out.push("y");
        }
        if self.m.is_some() {
            out.push("m");
        }
        if self.alpha.is_some() {
            out.push("alpha");
        }
        if self.beta.is_some() {
            out.push("beta");
        }
        if self.mu.is_some() {
            out.push("mu");
        }
        if self.lambda.is_some() {
            out.push("lambda");
        }
        out
    }
}

/// Expands a grid config against an identity's axes into the cartesian
/// product of the per-axis lists (defaults where absent), last axis varying
/// fastest.  Every resulting point must pass the identity's domain check.
pub fn resolve_grid(spec: &IdentitySpec, cfg: &GridConfig) -> Result<Vec<Point>> {
    for name in cfg.provided() {
        if !spec.axes.iter().any(|a| a.name == name) {
            return Err(Error::grid(format!(
                "{}: parameter `{name}` does not apply to this identity",
                spec.id
            )));
        }
    }
    let mut lists: Vec<Vec<f64>> = Vec::with_capacity(spec.axes.len());
    for axis in spec.axes {
        let list = cfg
            .list_for(axis.name)
            .unwrap_or_else(|| axis.defaults.to_vec());
        if list.is_empty() {
            return Err(Error::grid(format!(
                "{}: empty value list for `{}`",
                spec.id, axis.name
            )));
        }
        lists.push(list);
    }
    let total: usize = lists.iter().map(|l| l.len()).product();
    let mut grid = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut point = Point::default();
        for (axis, list) in spec.axes.iter().zip(&lists).rev() {
            point.set(axis.name, list[idx % list.len()])?;
            idx /= list.len();
        }
        spec.check_point(&point)?;
        grid.push(point);
    }
    Ok(grid)
}

/// One grid point's outcome.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationRecord {
    pub grid_index: usize,
    pub params: Vec<f64>,
    pub lhs: f64,
    pub series: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub terms_used: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationSummary {
    pub max_rel_err: f64,
    pub worst_point: Vec<f64>,
    pub points: usize,
    pub passed: bool,
    pub tol: f64,
}

/// Full report for one identity over one grid; `records` are sorted by
/// `grid_index` and `passed` holds iff `max_rel_err <= tol`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub identity_id: String,
    pub records: Vec<VerificationRecord>,
    pub summary: VerificationSummary,
}

impl VerificationReport {
    fn assemble(
        identity_id: &str,
        records: Vec<VerificationRecord>,
        tol: f64,
    ) -> VerificationReport {
        let mut max_rel_err = f64::NEG_INFINITY;
        let mut worst_point = Vec::new();
        for r in &records {
            if r.rel_err > max_rel_err {
                max_rel_err = r.rel_err;
                worst_point = r.params.clone();
            }
        }
        let points = records.len();
        VerificationReport {
            identity_id: identity_id.to_string(),
            records,
            summary: VerificationSummary {
                max_rel_err,
                worst_point,
                points,
                passed: max_rel_err <= tol,
                tol,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail") + "\n"
    }

    /// CSV flattening: identity id and the named parameters, one record per
    /// row, floats in shortest round-trip form.
    pub fn to_csv(&self, param_names: &[String]) -> String {
        let mut out = String::from("identity_id,grid_index");
        for name in param_names {
            out.push(',');
            out.push_str(name);
        }
        out.push_str(",lhs,series,abs_err,rel_err,terms_used\n");
        for r in &self.records {
            out.push_str(&self.identity_id);
            out.push_str(&format!(",{}", r.grid_index));
            for v in &r.params {
                out.push_str(&format!(",{v}"));
            }
            out.push_str(&format!(
                ",{},{},{},{},{}\n",
                r.lhs, r.series, r.abs_err, r.rel_err, r.terms_used
            ));
        }
        out
    }
}

/// Evaluates one grid point.  The series is truncated two decades below the
/// pass tolerance: near x = +-1 the polynomials oscillate, so a term dipping
/// under tol does not bound the tail by tol, and truncating at the threshold
/// itself would leave residuals straddling it.
fn verify_point(
    spec: &IdentitySpec,
    index: usize,
    point: &Point,
    tol: f64,
) -> Result<VerificationRecord> {
    let lhs = spec.lhs(point)?;
    let series = spec.series(point, tol * 1e-2)?;
    let abs_err = (series.value - lhs).abs();
    Ok(VerificationRecord {
        grid_index: index,
        params: spec.params_tuple(point),
        lhs,
        series: series.value,
        abs_err,
        rel_err: abs_err / lhs.abs().max(1.0),
        terms_used: series.terms_used,
    })
}

/// Runs series-vs-lhs over a grid with `jobs` worker threads.  Output is
/// independent of `jobs`: records are stored by index and assembled in grid
/// order, and on failure the error from the lowest failing index wins.
pub fn run_verification(
    spec: &'static IdentitySpec,
    grid: &[Point],
    tol: f64,
    jobs: usize,
) -> Result<VerificationReport> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let jobs = jobs.max(1).min(grid.len().max(1));
    let slots: Mutex<Vec<Option<Result<VerificationRecord>>>> = Mutex::new(vec![None; grid.len()]);
    std::thread::scope(|scope| {
        for worker in 0..jobs {
            let slots = &slots;
            scope.spawn(move || {
                for index in (worker..grid.len()).step_by(jobs) {
                    let outcome = verify_point(spec, index, &grid[index], tol);
                    slots.lock().expect("no panics hold this lock")[index] = Some(outcome);
                }
            });
        }
    });
    let mut records = Vec::with_capacity(grid.len());
    for slot in slots.into_inner().expect("workers joined") {
        records.push(slot.expect("every index was assigned")?);
    }
    Ok(VerificationReport::assemble(spec.id, records, tol))
}

/// Quadrature order for the integral cross-check and for its doubled
/// resolution control.
const INTEGRAL_ORDER: usize = 64;

/// Runs coefficient-vs-integral for `n <= n_max` at the identity's two
/// interior check points.  Each record compares the analytic coefficient
/// (as `lhs`) against the 2N-point projection (as `series`); `rel_err`
/// additionally folds in the N-vs-2N quadrature shift, so an
/// under-resolved integral fails the point rather than passing silently.
pub fn run_integrals(
    spec: &'static IdentitySpec,
    n_max: u32,
    tol: f64,
) -> Result<VerificationReport> {
    if !spec.has_integral {
        return Err(Error::UnknownIdentity(format!(
            "{}: no definite-integral form registered",
            spec.id
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut records = Vec::new();
    for point in spec.integral_points() {
        for n in 0..=n_max {
            let analytic = spec.coeff(n, &point)?;
            let coarse = coefficient_via_integral(spec, n, &point, INTEGRAL_ORDER)?;
            let fine = coefficient_via_integral(spec, n, &point, 2 * INTEGRAL_ORDER)?;
            let abs_err = (fine - analytic).abs();
            let scale = analytic.abs().max(1.0);
            let mut params = vec![f64::from(n)];
            for axis in spec.axes {
                if axis.name != "x" {
                    params.push(point.get(axis.name)?);
                }
            }
            records.push(VerificationRecord {
                grid_index: records.len(),
                params,
                lhs: analytic,
                series: fine,
                abs_err,
                rel_err: abs_err.max((fine - coarse).abs()) / scale,
                terms_used: 2 * INTEGRAL_ORDER as u32,
            });
        }
    }
    Ok(VerificationReport::assemble(spec.id, records, tol))
}

/// Parameter-name header for a verify report, in axis order.
pub fn verify_param_names(spec: &IdentitySpec) -> Vec<String> {
    spec.axes.iter().map(|a| a.name.to_string()).collect()
}

/// Parameter-name header for an integrals report: the expansion degree
/// followed by every non-integration axis.
pub fn integral_param_names(spec: &IdentitySpec) -> Vec<String> {
    let mut names = vec!["n".to_string()];
    for axis in spec.axes {
        if axis.name != "x" {
            names.push(axis.name.to_string());
        }
    }
    names
}
