//! The exponential helicoid field z -> (e^u cos v, e^u sin v, a v), its
//! projection back to the punctured plane, and the angle it subtends with
//! constant tangent vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{complex_exp, ensure_finite, make_grid, GridSpec, Tolerance};

/// Pitch parameter of the helicoid; strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicoidParams {
    a: f64,
}

impl HelicoidParams {
    pub fn new(a: f64) -> Result<Self> {
        if a.is_finite() && a > 0.0 {
            Ok(HelicoidParams { a })
        } else {
            Err(Error::InvalidParameter("pitch parameter must be finite and > 0"))
        }
    }

    pub fn pitch(&self) -> f64 {
        self.a
    }
}

/// A point of C x R, the ambient space of the helicoid. `x + iy` is the
/// planar part, `h` the height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicoidPoint {
    pub x: f64,
    pub y: f64,
    pub h: f64,
}

impl HelicoidPoint {
    pub fn new(x: f64, y: f64, h: f64) -> Self {
        HelicoidPoint { x, y, h }
    }

    pub fn planar(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// Coefficients of the constant tangent field A e1 + B e2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentWeights {
    pub a_weight: f64,
    pub b_weight: f64,
}

impl TangentWeights {
    pub fn new(a_weight: f64, b_weight: f64) -> Result<Self> {
        if !(a_weight.is_finite() && b_weight.is_finite()) {
            return Err(Error::NonFinite);
        }
        if a_weight.abs() + b_weight.abs() == 0.0 {
            return Err(Error::DegenerateWeights);
        }
        Ok(TangentWeights { a_weight, b_weight })
    }
}

/// The helicoid field: z = u + iv maps to (e^u cos v, e^u sin v, a v).
/// The height is exactly a * Im z; no normalization is applied.
pub fn exp_field(p: HelicoidParams, z: Complex64) -> Result<HelicoidPoint> {
    let k = complex_exp(z)?;
    Ok(HelicoidPoint::new(k.re, k.im, p.pitch() * z.im))
}

/// Drop the height: the commuting projection onto C \ {0}.
pub fn project_to_plane(q: HelicoidPoint) -> Complex64 {
    Complex64::new(q.x, q.y)
}

/// Cosine of the angle between the helicoid field value and the constant
/// tangent A e1 + B e2, measured in R^3:
///
/// cos Phi = e^u (A cos v + B sin v) / (sqrt(e^{2u} + a^2 v^2) sqrt(A^2 + B^2))
pub fn angle_cos(p: HelicoidParams, w: TangentWeights, z: Complex64) -> Result<f64> {
    angle_cos_tol(p, w, z, &Tolerance::default())
}

pub fn angle_cos_tol(
    p: HelicoidParams,
    w: TangentWeights,
    z: Complex64,
    tol: &Tolerance,
) -> Result<f64> {
    ensure_finite(z)?;
    if w.a_weight.abs() + w.b_weight.abs() == 0.0 {
        return Err(Error::DegenerateWeights);
    }
    let (u, v) = (z.re, z.im);
    if u > 709.0 {
        return Err(Error::Overflow { re: u });
    }
    let eu = u.exp();
    let a = p.pitch();
    let num = eu * (w.a_weight * v.cos() + w.b_weight * v.sin());
    let den = (eu * eu + a * a * v * v).sqrt()
        * (w.a_weight * w.a_weight + w.b_weight * w.b_weight).sqrt();
    let c = num / den;
    if c.abs() <= 1.0 {
        Ok(c)
    } else if c.abs() - 1.0 <= tol.abs_eps {
        Ok(c.clamp(-1.0, 1.0))
    } else {
        // Mathematically unreachable; a larger overshoot means broken inputs.
        Err(Error::NotOnSurface {
            residual: c.abs() - 1.0,
        })
    }
}

/// The helicoid field evaluated over a grid, row-major in u then v.
pub fn sample_surface(p: HelicoidParams, spec: &GridSpec) -> Result<Vec<HelicoidPoint>> {
    make_grid(spec)
        .into_iter()
        .map(|z| exp_field(p, z))
        .collect()
}
