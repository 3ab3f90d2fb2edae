//! Closed-form inverses of the helicoid field, sheet indexing, and the
//! realization maps between the R^3 helicoid and the R^4 graph surface.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::helicoid::{HelicoidParams, HelicoidPoint};
use crate::numerics::{ensure_finite, principal_arg_tol, Tolerance};

/// A logarithm split into its principal value and integer sheet index, so
/// that z = principal + 2*pi*i*sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SheetedLog {
    pub principal: Complex64,
    pub sheet: i64,
}

impl SheetedLog {
    /// Reassemble the full logarithm from principal value and sheet.
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.principal.re, self.principal.im + 2.0 * PI * self.sheet as f64)
    }
}

/// A point (u, v, e^u cos v, e^u sin v) of the graph surface in R^4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaLogPoint {
    pub u: f64,
    pub v: f64,
    pub x: f64,
    pub y: f64,
}

fn planar_log(q: HelicoidPoint, tol: &Tolerance) -> Result<f64> {
    let mag = q.planar().norm();
    if mag <= tol.abs_eps {
        return Err(Error::ZeroMagnitude);
    }
    Ok(mag.ln())
}

/// Inverse of the pitch-1/n helicoid field: (K, L) -> ln|K| + i n L.
pub fn log_field(n: u32, q: HelicoidPoint) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1"));
    }
    let tol = Tolerance::default();
    let u = planar_log(q, &tol)?;
    Ok(Complex64::new(u, n as f64 * q.h))
}

/// Inverse for arbitrary pitch a: ln|K| + i h/a. Total on (C \ {0}) x R.
pub fn log_general(p: HelicoidParams, q: HelicoidPoint) -> Result<Complex64> {
    let tol = Tolerance::default();
    let u = planar_log(q, &tol)?;
    Ok(Complex64::new(u, q.h / p.pitch()))
}

/// Which sheet of the covering z lives on: the k with
/// z = (principal log of e^z) + 2*pi*i*k. k = 0 iff Im z is in (-pi, pi].
pub fn sheet_index(z: Complex64) -> Result<i64> {
    ensure_finite(z)?;
    // Reduce Im z against the principal argument of e^{iv}; |e^z| is irrelevant.
    let arg = principal_arg_tol(Complex64::from_polar(1.0, z.im), &Tolerance::default())?;
    Ok(((z.im - arg) / (2.0 * PI)).round() as i64)
}

/// The limit logarithm: ln|K| + i (Arg K + 2 pi sheet). A right inverse of
/// the complex exponential on every sheet.
pub fn limit_log(k: Complex64, sheet: i64) -> Result<Complex64> {
    limit_log_tol(k, sheet, &Tolerance::default())
}

pub fn limit_log_tol(k: Complex64, sheet: i64, tol: &Tolerance) -> Result<Complex64> {
    let arg = principal_arg_tol(k, tol)?;
    Ok(Complex64::new(k.norm().ln(), arg + 2.0 * PI * sheet as f64))
}

fn surface_residual(u: f64, v: f64, x: f64, y: f64) -> f64 {
    let eu = u.exp();
    (eu * v.cos() - x).abs().max((eu * v.sin() - y).abs())
}

fn membership_tol(u: f64, tol: &Tolerance) -> f64 {
    tol.abs_eps.max(tol.rel_eps * u.exp())
}

/// Realization map Xi: a helicoid point (e^u cos v, e^u sin v, a v) maps to
/// the graph-surface point (u, v, e^u cos v, e^u sin v). Defined only on the
/// helicoid; membership is enforced through the residual check.
pub fn xi_realize(p: HelicoidParams, q: HelicoidPoint) -> Result<SigmaLogPoint> {
    xi_realize_tol(p, q, &Tolerance::default())
}

pub fn xi_realize_tol(p: HelicoidParams, q: HelicoidPoint, tol: &Tolerance) -> Result<SigmaLogPoint> {
    let u = planar_log(q, tol)?;
    let v = q.h / p.pitch();
    let residual = surface_residual(u, v, q.x, q.y);
    if residual > membership_tol(u, tol) {
        return Err(Error::NotOnSurface { residual });
    }
    Ok(SigmaLogPoint { u, v, x: q.x, y: q.y })
}

/// Inverse realization Omega = Xi^{-1}: (u, v, e^u cos v, e^u sin v) maps
/// back to (e^u cos v, e^u sin v, a v).
pub fn omega_realize(p: HelicoidParams, s: SigmaLogPoint) -> Result<HelicoidPoint> {
    omega_realize_tol(p, s, &Tolerance::default())
}

pub fn omega_realize_tol(
    p: HelicoidParams,
    s: SigmaLogPoint,
    tol: &Tolerance,
) -> Result<HelicoidPoint> {
    if !(s.u.is_finite() && s.v.is_finite() && s.x.is_finite() && s.y.is_finite()) {
        return Err(Error::NonFinite);
    }
    let residual = surface_residual(s.u, s.v, s.x, s.y);
    if residual > membership_tol(s.u, tol) {
        return Err(Error::NotOnSurface { residual });
    }
    Ok(HelicoidPoint::new(s.x, s.y, p.pitch() * s.v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::helicoid::exp_field;
    use crate::numerics::complex_exp;
    use std::f64::consts::E;

    fn params(a: f64) -> HelicoidParams {
        HelicoidParams::new(a).unwrap()
    }

    #[test]
    fn log_field_identity_point() {
        let z = log_field(1, HelicoidPoint::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(z, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn log_field_roundtrips_forward_map() {
        // n = 2: forward map at 1 + i, then invert.
        let q = exp_field(params(0.5), Complex64::new(1.0, 1.0)).unwrap();
        assert!((q.x - E * 1.0f64.cos()).abs() < 1e-14);
        assert!((q.y - E * 1.0f64.sin()).abs() < 1e-14);
        assert!((q.h - 0.5).abs() == 0.0);
        let z = log_field(2, q).unwrap();
        assert!((z - Complex64::new(1.0, 1.0)).norm() < 1e-14);

        // n = 3 at i pi: (-1, 0, pi/3) inverts to i pi.
        let q = exp_field(params(1.0 / 3.0), Complex64::new(0.0, PI)).unwrap();
        let z = log_field(3, q).unwrap();
        assert!(z.re.abs() < 1e-15);
        assert!((z.im - PI).abs() < 1e-15);
    }

    #[test]
    fn log_field_rejects_puncture() {
        assert_eq!(
            log_field(1, HelicoidPoint::new(0.0, 0.0, 1.0)),
            Err(Error::ZeroMagnitude)
        );
    }

    #[test]
    fn log_general_examples() {
        let q = exp_field(params(0.5), Complex64::new(2.0, -3.0)).unwrap();
        let z = log_general(params(0.5), q).unwrap();
        assert!((z - Complex64::new(2.0, -3.0)).norm() < 1e-13);

        let z = log_general(params(1.0), HelicoidPoint::new(1.0, 0.0, 2.0 * PI)).unwrap();
        assert_eq!(z, Complex64::new(0.0, 2.0 * PI));

        let z = log_general(params(2.0), HelicoidPoint::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(z, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sheet_index_examples() {
        assert_eq!(sheet_index(Complex64::new(0.0, 0.0)).unwrap(), 0);
        assert_eq!(sheet_index(Complex64::new(0.0, 2.0 * PI)).unwrap(), 1);
        // The nearest f64 to -5 pi sits one ulp off the cut, inside sheet -2:
        // atan2 there yields -pi + 6e-16, which does not fold to +pi.
        assert_eq!(sheet_index(Complex64::new(1.0, -5.0 * PI)).unwrap(), -2);
    }

    #[test]
    fn sheet_index_boundary() {
        assert_eq!(sheet_index(Complex64::new(0.0, PI)).unwrap(), 0);
        assert_eq!(sheet_index(Complex64::new(0.0, -PI)).unwrap(), -1);
    }

    #[test]
    fn limit_log_examples() {
        assert_eq!(
            limit_log(Complex64::new(1.0, 0.0), 0).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            limit_log(Complex64::new(-1.0, 0.0), 0).unwrap(),
            Complex64::new(0.0, PI)
        );
        assert_eq!(
            limit_log(Complex64::new(1.0, 0.0), -2).unwrap(),
            Complex64::new(0.0, -4.0 * PI)
        );
    }

    #[test]
    fn limit_log_inverts_exp() {
        let k = Complex64::new(-0.3, 1.7);
        for sheet in -10..=10 {
            let z = limit_log(k, sheet).unwrap();
            assert!((complex_exp(z).unwrap() - k).norm() < 1e-12 * k.norm());
        }
    }

    #[test]
    fn xi_examples() {
        let s = xi_realize(params(1.0), HelicoidPoint::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!((s.u, s.v, s.x, s.y), (0.0, 0.0, 1.0, 0.0));

        let s = xi_realize(params(1.0), HelicoidPoint::new(-1.0, 0.0, PI)).unwrap();
        assert_eq!((s.u, s.v, s.x, s.y), (0.0, PI, -1.0, 0.0));
    }

    #[test]
    fn xi_rejects_off_surface() {
        assert!(matches!(
            xi_realize(params(1.0), HelicoidPoint::new(1.0, 0.0, 0.1)),
            Err(Error::NotOnSurface { .. })
        ));
    }

    #[test]
    fn omega_examples() {
        let q = omega_realize(
            params(1.0),
            SigmaLogPoint { u: 0.0, v: 0.0, x: 1.0, y: 0.0 },
        )
        .unwrap();
        assert_eq!((q.x, q.y, q.h), (1.0, 0.0, 0.0));

        // a = 2, s = (1, pi/2, 0, e): e^1 sin(pi/2) = e, height 2 * pi/2 = pi.
        let q = omega_realize(
            params(2.0),
            SigmaLogPoint { u: 1.0, v: PI / 2.0, x: E * (PI / 2.0).cos(), y: E },
        )
        .unwrap();
        assert!(q.x.abs() < 1e-15);
        assert_eq!(q.y, E);
        assert_eq!(q.h, PI);
    }

    #[test]
    fn omega_rejects_off_surface() {
        assert!(matches!(
            omega_realize(
                params(1.0),
                SigmaLogPoint { u: 0.0, v: 0.0, x: 0.9, y: 0.0 },
            ),
            Err(Error::NotOnSurface { .. })
        ));
    }

    #[test]
    fn sheeted_log_value() {
        let s = SheetedLog {
            principal: Complex64::new(0.5, 1.0),
            sheet: 2,
        };
        let z = s.value();
        assert_eq!(z.re, 0.5);
        assert!((z.im - (1.0 + 4.0 * PI)).abs() < 1e-15);
        assert!((complex_exp(z).unwrap() - complex_exp(s.principal).unwrap()).norm() < 1e-12);
    }
}
