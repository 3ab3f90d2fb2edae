//! Product generalization on C^m: componentwise exponential fields, their
//! inverses, and convergence diagnostics over multi-strips.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::helicoid::{exp_field, HelicoidParams, HelicoidPoint};
use crate::limits::{strip_convergence, ConvergenceReport, StripSpec};
use crate::logmap::log_general;

/// Positive pitch parameters a_1, ..., a_m.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiParams {
    pitches: Vec<f64>,
}

impl MultiParams {
    pub fn new(pitches: Vec<f64>) -> Result<Self> {
        if pitches.is_empty() {
            return Err(Error::InvalidParameter("need at least one pitch parameter"));
        }
        if pitches.iter().any(|a| !(a.is_finite() && *a > 0.0)) {
            return Err(Error::InvalidParameter("all pitch parameters must be finite and > 0"));
        }
        Ok(MultiParams { pitches })
    }

    /// Equal pitch 1/n in every factor.
    pub fn uniform(n: u32, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be >= 1"));
        }
        Self::new(vec![1.0 / n as f64; m])
    }

    pub fn dim(&self) -> usize {
        self.pitches.len()
    }

    pub fn pitches(&self) -> &[f64] {
        &self.pitches
    }
}

/// A point of (C \ {0})^m x R^m.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiHelicoidPoint {
    pub planar: Vec<Complex64>,
    pub heights: Vec<f64>,
}

/// Componentwise helicoid field on C^m.
pub fn multi_exp(p: &MultiParams, z: &[Complex64]) -> Result<MultiHelicoidPoint> {
    if z.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: z.len(),
        });
    }
    let mut planar = Vec::with_capacity(z.len());
    let mut heights = Vec::with_capacity(z.len());
    for (&a, &zk) in p.pitches().iter().zip(z) {
        let q = exp_field(HelicoidParams::new(a)?, zk)?;
        planar.push(q.planar());
        heights.push(q.h);
    }
    Ok(MultiHelicoidPoint { planar, heights })
}

/// Componentwise inverse; reports the offending component on a puncture.
pub fn multi_log(p: &MultiParams, q: &MultiHelicoidPoint) -> Result<Vec<Complex64>> {
    if q.planar.len() != q.heights.len() {
        return Err(Error::DimensionMismatch {
            expected: q.planar.len(),
            got: q.heights.len(),
        });
    }
    if q.planar.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.planar.len(),
        });
    }
    let mut out = Vec::with_capacity(p.dim());
    for (index, ((&a, k), &h)) in p.pitches().iter().zip(&q.planar).zip(&q.heights).enumerate() {
        let point = HelicoidPoint::new(k.re, k.im, h);
        let z = log_general(HelicoidParams::new(a)?, point).map_err(|e| match e {
            Error::ZeroMagnitude => Error::ZeroComponent { index },
            other => other,
        })?;
        out.push(z);
    }
    Ok(out)
}

/// Per-component strip reports plus the Euclidean aggregate across factors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiConvergenceReport {
    pub aggregate_predicted: f64,
    pub aggregate_sup: f64,
    pub components: Vec<ConvergenceReport>,
    pub n: u32,
}

/// Runs `strip_convergence` in every factor of the multi-strip and combines
/// the sups in the Euclidean norm, bounded by sqrt(sum M_k^2) / n.
pub fn multi_strip_convergence(
    n: u32,
    bounds: &[f64],
    windows: &[(f64, f64)],
    nu: usize,
    nv: usize,
) -> Result<MultiConvergenceReport> {
    if bounds.len() != windows.len() {
        return Err(Error::DimensionMismatch {
            expected: bounds.len(),
            got: windows.len(),
        });
    }
    if bounds.is_empty() {
        return Err(Error::InvalidParameter("need at least one strip bound"));
    }
    let mut components = Vec::with_capacity(bounds.len());
    for (&m_bound, &(u_min, u_max)) in bounds.iter().zip(windows) {
        let strip = StripSpec::new(m_bound, u_min, u_max)?;
        components.push(strip_convergence(n, &strip, nu, nv)?);
    }
    let aggregate_sup = components
        .iter()
        .map(|r| r.sup_observed * r.sup_observed)
        .sum::<f64>()
        .sqrt();
    let aggregate_predicted = bounds.iter().map(|m| m * m).sum::<f64>().sqrt() / n as f64;
    Ok(MultiConvergenceReport {
        aggregate_predicted,
        aggregate_sup,
        components,
        n,
    })
}
