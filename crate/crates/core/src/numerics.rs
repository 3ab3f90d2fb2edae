//! Scalar and complex primitives shared by every other module: the principal
//! argument, the complex exponential, tolerance policy and deterministic grids.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest real part for which e^u is finite in f64.
const MAX_EXPONENT: f64 = 709.782712893384;

/// Absolute/relative comparison policy.
///
/// Comparisons combine the two floors as `max(abs_eps, rel_eps * scale)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-12,
            rel_eps: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        if !(abs_eps > 0.0 && abs_eps.is_finite()) || !(rel_eps > 0.0 && rel_eps.is_finite()) {
            return Err(Error::InvalidParameter("tolerances must be finite and > 0"));
        }
        Ok(Tolerance { abs_eps, rel_eps })
    }

    /// Combined floor at a given magnitude scale.
    pub fn at_scale(&self, scale: f64) -> f64 {
        self.abs_eps.max(self.rel_eps * scale.abs())
    }

    /// Reads `HELICOVER_EPS` and, when set, overrides both floors jointly.
    pub fn from_env() -> Result<Self> {
        match std::env::var("HELICOVER_EPS") {
            Ok(s) => {
                let eps: f64 = s
                    .parse()
                    .map_err(|_| Error::InvalidParameter("HELICOVER_EPS is not a number"))?;
                Tolerance::new(eps, eps)
            }
            Err(_) => Ok(Tolerance::default()),
        }
    }
}

/// Uniform rectangular grid over a (u, v) window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub u_min: f64,
    pub u_max: f64,
    pub v_min: f64,
    pub v_max: f64,
    pub nu: usize,
    pub nv: usize,
}

impl GridSpec {
    pub fn new(u_min: f64, u_max: f64, v_min: f64, v_max: f64, nu: usize, nv: usize) -> Result<Self> {
        if !(u_min.is_finite() && u_max.is_finite() && v_min.is_finite() && v_max.is_finite()) {
            return Err(Error::NonFinite);
        }
        if !(u_min < u_max) || !(v_min < v_max) {
            return Err(Error::InvalidParameter("grid window must have positive extent"));
        }
        if nu < 2 || nv < 2 {
            return Err(Error::InvalidParameter("grid needs at least 2 samples per axis"));
        }
        Ok(GridSpec {
            u_min,
            u_max,
            v_min,
            v_max,
            nu,
            nv,
        })
    }
}

pub(crate) fn ensure_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Principal argument of `w` in (-pi, pi], with the branch closed at +pi.
pub fn principal_arg(w: Complex64) -> Result<f64> {
    principal_arg_tol(w, &Tolerance::default())
}

pub fn principal_arg_tol(w: Complex64, tol: &Tolerance) -> Result<f64> {
    ensure_finite(w)?;
    if w.norm() <= tol.abs_eps {
        return Err(Error::ZeroMagnitude);
    }
    let theta = w.im.atan2(w.re);
    // atan2 returns -pi for (negative, -0.0); fold onto the closed +pi boundary.
    if theta <= -PI {
        Ok(PI)
    } else {
        Ok(theta)
    }
}

/// The complex exponential e^z = (e^u cos v, e^u sin v), z = u + iv.
pub fn complex_exp(z: Complex64) -> Result<Complex64> {
    ensure_finite(z)?;
    if z.re > MAX_EXPONENT {
        return Err(Error::Overflow { re: z.re });
    }
    let r = z.re.exp();
    Ok(Complex64::new(r * z.im.cos(), r * z.im.sin()))
}

/// Row-major sample grid: u is the outer (slow) axis, v the inner (fast) one.
/// Corners are included and spacing is uniform per axis.
pub fn make_grid(spec: &GridSpec) -> Vec<Complex64> {
    let du = (spec.u_max - spec.u_min) / (spec.nu - 1) as f64;
    let dv = (spec.v_max - spec.v_min) / (spec.nv - 1) as f64;
    let mut out = Vec::with_capacity(spec.nu * spec.nv);
    for i in 0..spec.nu {
        let u = if i == spec.nu - 1 {
            spec.u_max
        } else {
            spec.u_min + i as f64 * du
        };
        for j in 0..spec.nv {
            let v = if j == spec.nv - 1 {
                spec.v_max
            } else {
                spec.v_min + j as f64 * dv
            };
            out.push(Complex64::new(u, v));
        }
    }
    out
}
