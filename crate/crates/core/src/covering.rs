//! Numerical path lifting through the covering exp : C -> C \ {0},
//! winding numbers, deck transformations and loop monodromy.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::logmap::{limit_log_tol, sheet_index};
use crate::numerics::{ensure_finite, principal_arg_tol, Tolerance};

/// Default angular margin kept clear of the +-pi branch boundary when
/// validating consecutive path samples.
pub const DEFAULT_STEP_MARGIN: f64 = 0.1;

/// A polyline in the punctured plane.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPath {
    points: Vec<Complex64>,
    closed: bool,
}

impl SampledPath {
    /// Validates the invariants: no point at the puncture, consecutive
    /// samples turning by less than pi - margin, and closure when claimed.
    pub fn new(points: Vec<Complex64>, closed: bool) -> Result<Self> {
        Self::with_margin(points, closed, DEFAULT_STEP_MARGIN)
    }

    pub fn with_margin(points: Vec<Complex64>, closed: bool, margin: f64) -> Result<Self> {
        let tol = Tolerance::default();
        if points.is_empty() {
            return Err(Error::InvalidParameter("path needs at least one sample"));
        }
        for p in &points {
            ensure_finite(*p)?;
            if p.norm() <= tol.abs_eps {
                return Err(Error::ZeroMagnitude);
            }
        }
        for (k, pair) in points.windows(2).enumerate() {
            let turn = principal_arg_tol(pair[1] / pair[0], &tol)?;
            if turn.abs() >= PI - margin {
                return Err(Error::StepTooLarge { index: k, turn });
            }
        }
        if closed {
            let first = points.first().unwrap();
            let last = points.last().unwrap();
            if (first - last).norm() > tol.abs_eps {
                return Err(Error::NotClosed);
            }
        }
        Ok(SampledPath { points, closed })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }
}

/// The unique continuous lift of a sampled path, together with the sheets
/// its endpoints live on.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedPath {
    pub points: Vec<Complex64>,
    pub start_sheet: i64,
    pub end_sheet: i64,
}

/// Discrete path lifting: the first lift is the limit logarithm on the
/// starting sheet, each following one adds the principal logarithm of the
/// ratio of consecutive base points.
pub fn lift_path(path: &SampledPath, start_sheet: i64) -> Result<LiftedPath> {
    let tol = Tolerance::default();
    let base = path.points();
    let mut lifts = Vec::with_capacity(base.len());
    let mut current = limit_log_tol(base[0], start_sheet, &tol)?;
    lifts.push(current);
    for pair in base.windows(2) {
        let ratio = pair[1] / pair[0];
        let step = Complex64::new(ratio.norm().ln(), principal_arg_tol(ratio, &tol)?);
        current += step;
        lifts.push(current);
    }
    let end_sheet = sheet_index(*lifts.last().unwrap())?;
    Ok(LiftedPath {
        points: lifts,
        start_sheet,
        end_sheet,
    })
}

/// Winding number about the origin: accumulated turning divided by 2 pi.
/// Errors unless the residual from an integer is below 1e-9.
pub fn winding_number(path: &SampledPath) -> Result<i64> {
    if !path.is_closed() {
        return Err(Error::NotClosed);
    }
    let tol = Tolerance::default();
    let mut total = 0.0;
    for pair in path.points().windows(2) {
        total += principal_arg_tol(pair[1] / pair[0], &tol)?;
    }
    let turns = total / (2.0 * PI);
    let nearest = turns.round();
    let residual = (turns - nearest).abs();
    if residual > 1e-9 {
        return Err(Error::NonIntegerWinding { residual });
    }
    Ok(nearest as i64)
}

/// The deck transformation z -> z + 2 pi i k. Leaves exp invariant.
pub fn deck_transform(z: Complex64, k: i64) -> Complex64 {
    Complex64::new(z.re, z.im + 2.0 * PI * k as f64)
}

/// Sheet shift produced by lifting a closed path; must equal its winding
/// number about the origin.
pub fn monodromy_check(path: &SampledPath, start_sheet: i64) -> Result<i64> {
    if !path.is_closed() {
        return Err(Error::NotClosed);
    }
    let lifted = lift_path(path, start_sheet)?;
    Ok(lifted.end_sheet - lifted.start_sheet)
}

/// Circle of radius r about `center`, traversed `turns` times (sign gives
/// orientation), sampled at `samples` points plus the closing repeat.
pub fn circle_path(center: Complex64, radius: f64, turns: i64, samples: usize) -> Result<SampledPath> {
    if radius <= 0.0 || samples < 3 {
        return Err(Error::InvalidParameter("circle needs radius > 0 and >= 3 samples"));
    }
    let total = 2.0 * PI * turns as f64;
    let mut pts = Vec::with_capacity(samples + 1);
    for k in 0..samples {
        let theta = total * k as f64 / samples as f64;
        pts.push(center + Complex64::from_polar(radius, theta));
    }
    // Close with an exact repeat of the first sample.
    pts.push(pts[0]);
    SampledPath::new(pts, true)
}
