//! Transition maps between helicoids of different pitch and the exact
//! convergence diagnostics of the pitch-1/n fields toward the flat
//! complex exponential.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::helicoid::HelicoidPoint;
use crate::numerics::complex_exp;

/// A horizontal strip {z : |Im z| < M} with a finite real-part window for
/// sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripSpec {
    pub m_bound: f64,
    pub u_min: f64,
    pub u_max: f64,
}

impl StripSpec {
    pub fn new(m_bound: f64, u_min: f64, u_max: f64) -> Result<Self> {
        if !(m_bound.is_finite() && u_min.is_finite() && u_max.is_finite()) {
            return Err(Error::NonFinite);
        }
        if !(m_bound > 0.0) || !(u_min < u_max) {
            return Err(Error::InvalidParameter("strip needs M > 0 and u_min < u_max"));
        }
        Ok(StripSpec { m_bound, u_min, u_max })
    }
}

/// Observed vs predicted sup of the gap between Exp_n and exp over a strip.
/// Fields are ordered alphabetically so serialized JSON is key-sorted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceReport {
    #[serde(rename = "M")]
    pub m_bound: f64,
    pub n: u32,
    pub samples: usize,
    pub sup_observed: f64,
    pub sup_predicted: f64,
}

impl ConvergenceReport {
    pub fn passes(&self, abs_eps: f64) -> bool {
        self.sup_observed <= self.sup_predicted + abs_eps
    }
}

/// One row of the injectivity diagnostic: separations of a point pair on the
/// pitch-1/n helicoid and under the flat exponential, with the triangle
/// bound on their difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InjectivityRow {
    pub bound: f64,
    pub gap: f64,
    pub helicoid_sep: f64,
    pub n: u32,
    pub pair: (usize, usize),
    pub planar_sep: f64,
    pub within_bound: bool,
}

/// Transition map Theta_{n,m} between the pitch-1/n and pitch-1/m helicoids:
/// the planar part is unchanged and the height rescales by n/m.
pub fn theta_map(n: u32, m: u32, q: HelicoidPoint) -> Result<HelicoidPoint> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("theta indices must be >= 1"));
    }
    if !(q.x.is_finite() && q.y.is_finite() && q.h.is_finite()) {
        return Err(Error::NonFinite);
    }
    // Scale by the ratio, not h*n/m: with n == m the factor is exactly 1.0
    // and the map is the bitwise identity.
    Ok(HelicoidPoint::new(q.x, q.y, q.h * (n as f64 / m as f64)))
}

/// Euclidean distance in R^3 between Exp_{1/n}(z) and (exp z, 0).
/// Analytically this equals |Im z| / n.
pub fn pointwise_gap(n: u32, z: Complex64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1"));
    }
    let k = complex_exp(z)?;
    let q = HelicoidPoint::new(k.re, k.im, z.im / n as f64);
    let dx = q.x - k.re;
    let dy = q.y - k.im;
    Ok((dx * dx + dy * dy + q.h * q.h).sqrt())
}

/// Sup of the pointwise gap over a grid on the open strip
/// [u_min, u_max] x (-M, M). The v samples are interior points so the open
/// bound |Im z| < M is honored.
pub fn strip_convergence(n: u32, strip: &StripSpec, nu: usize, nv: usize) -> Result<ConvergenceReport> {
    if n == 0 || nu < 2 || nv < 2 {
        return Err(Error::InvalidParameter("need n >= 1 and at least 2 samples per axis"));
    }
    let du = (strip.u_max - strip.u_min) / (nu - 1) as f64;
    let dv = 2.0 * strip.m_bound / (nv + 1) as f64;
    let mut sup = 0.0f64;
    for i in 0..nu {
        let u = strip.u_min + i as f64 * du;
        for j in 0..nv {
            let v = -strip.m_bound + (j + 1) as f64 * dv;
            let gap = pointwise_gap(n, Complex64::new(u, v))?;
            sup = sup.max(gap);
        }
    }
    Ok(ConvergenceReport {
        m_bound: strip.m_bound,
        n,
        samples: nu * nv,
        sup_observed: sup,
        sup_predicted: strip.m_bound / n as f64,
    })
}

/// For each n in the schedule and each pair of sample points, compare the
/// helicoid separation with the planar separation and check the triangle
/// bound |difference| <= (|Im z| + |Im w|) / n.
pub fn injectivity_in_limit(zs: &[Complex64], n_schedule: &[u32]) -> Result<Vec<InjectivityRow>> {
    let mut rows = Vec::new();
    for &n in n_schedule {
        if n == 0 {
            return Err(Error::InvalidParameter("schedule entries must be >= 1"));
        }
        for i in 0..zs.len() {
            for j in (i + 1)..zs.len() {
                let (z, w) = (zs[i], zs[j]);
                let ez = complex_exp(z)?;
                let ew = complex_exp(w)?;
                let hz = z.im / n as f64;
                let hw = w.im / n as f64;
                let planar = (ez - ew).norm();
                let d = ez - ew;
                let dh = hz - hw;
                let helicoid = (d.norm_sqr() + dh * dh).sqrt();
                let bound = (z.im.abs() + w.im.abs()) / n as f64;
                let gap = (helicoid - planar).abs();
                rows.push(InjectivityRow {
                    bound,
                    gap,
                    helicoid_sep: helicoid,
                    n,
                    pair: (i, j),
                    planar_sep: planar,
                    within_bound: gap <= bound + 1e-12,
                });
            }
        }
    }
    Ok(rows)
}
