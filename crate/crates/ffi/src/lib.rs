//! C ABI surface over the helicover library.
//!
//! Every fallible function returns an `HcStatus` code and writes its result
//! through an out-pointer. Paths and lifted paths are opaque handles owned
//! by the library; free them with the matching `_free` function.

use std::slice;

use num_complex::Complex64;

use helicover::covering::{deck_transform, lift_path, monodromy_check, winding_number, SampledPath};
use helicover::logmap::{omega_realize, xi_realize, SigmaLogPoint};
use helicover::{
    complex_exp, exp_field, limit_log, log_field, log_general, pointwise_gap, principal_arg,
    sheet_index, strip_convergence, theta_map, Error, HelicoidParams, HelicoidPoint, StripSpec,
};

/// Status codes returned by every fallible call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NonFinite = 1,
    ZeroMagnitude = 2,
    Overflow = 3,
    DegenerateWeights = 4,
    NotOnSurface = 5,
    StepTooLarge = 6,
    NotClosed = 7,
    NonIntegerWinding = 8,
    DimensionMismatch = 9,
    InvalidParameter = 10,
    BadInput = 11,
    Io = 12,
    NullPointer = 13,
}

fn status_of(err: &Error) -> HcStatus {
    match err {
        Error::NonFinite => HcStatus::NonFinite,
        Error::ZeroMagnitude | Error::ZeroComponent { .. } => HcStatus::ZeroMagnitude,
        Error::Overflow { .. } => HcStatus::Overflow,
        Error::DegenerateWeights => HcStatus::DegenerateWeights,
        Error::NotOnSurface { .. } => HcStatus::NotOnSurface,
        Error::StepTooLarge { .. } => HcStatus::StepTooLarge,
        Error::NotClosed => HcStatus::NotClosed,
        Error::NonIntegerWinding { .. } => HcStatus::NonIntegerWinding,
        Error::DimensionMismatch { .. } => HcStatus::DimensionMismatch,
        Error::InvalidParameter(_) => HcStatus::InvalidParameter,
        Error::BadInput(_) => HcStatus::BadInput,
        Error::Io(_) => HcStatus::Io,
    }
}

/// A complex number as a plain pair of doubles.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for HcComplex {
    fn from(z: Complex64) -> Self {
        HcComplex { re: z.re, im: z.im }
    }
}

impl From<HcComplex> for Complex64 {
    fn from(z: HcComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// A point of the helicoid's ambient R^3: planar (x, y) plus height h.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcPoint3 {
    pub x: f64,
    pub y: f64,
    pub h: f64,
}

impl From<HelicoidPoint> for HcPoint3 {
    fn from(q: HelicoidPoint) -> Self {
        HcPoint3 { x: q.x, y: q.y, h: q.h }
    }
}

impl From<HcPoint3> for HelicoidPoint {
    fn from(q: HcPoint3) -> Self {
        HelicoidPoint::new(q.x, q.y, q.h)
    }
}

/// A point (u, v, x, y) of the graph surface in R^4.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcSigmaPoint {
    pub u: f64,
    pub v: f64,
    pub x: f64,
    pub y: f64,
}

/// Strip convergence result: observed and predicted sup of the gap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcConvergenceReport {
    pub m_bound: f64,
    pub n: u32,
    pub samples: usize,
    pub sup_observed: f64,
    pub sup_predicted: f64,
}

/// Opaque handle to a validated sampled path in the punctured plane.
pub struct HcPath(SampledPath);

/// Opaque handle to a lifted path in the total space.
pub struct HcLiftedPath(helicover::covering::LiftedPath);

macro_rules! out_write {
    ($ptr:expr, $value:expr) => {{
        if $ptr.is_null() {
            return HcStatus::NullPointer;
        }
        unsafe { *$ptr = $value };
        HcStatus::Ok
    }};
}

macro_rules! try_ffi {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return status_of(&e),
        }
    };
}

/// e^z for z = re + i im.
#[no_mangle]
pub extern "C" fn hc_complex_exp(z: HcComplex, out: *mut HcComplex) -> HcStatus {
    let w = try_ffi!(complex_exp(z.into()));
    out_write!(out, w.into())
}

/// Principal argument in (-pi, pi], branch closed at +pi.
#[no_mangle]
pub extern "C" fn hc_principal_arg(w: HcComplex, out: *mut f64) -> HcStatus {
    let theta = try_ffi!(principal_arg(w.into()));
    out_write!(out, theta)
}

/// The pitch-a helicoid field at z.
#[no_mangle]
pub extern "C" fn hc_exp_field(a: f64, z: HcComplex, out: *mut HcPoint3) -> HcStatus {
    let p = try_ffi!(HelicoidParams::new(a));
    let q = try_ffi!(exp_field(p, z.into()));
    out_write!(out, q.into())
}

/// Closed-form inverse of the pitch-a field: ln|K| + i h/a.
#[no_mangle]
pub extern "C" fn hc_log_general(a: f64, q: HcPoint3, out: *mut HcComplex) -> HcStatus {
    let p = try_ffi!(HelicoidParams::new(a));
    let z = try_ffi!(log_general(p, q.into()));
    out_write!(out, z.into())
}

/// Inverse of the pitch-1/n field: ln|K| + i n h.
#[no_mangle]
pub extern "C" fn hc_log_field(n: u32, q: HcPoint3, out: *mut HcComplex) -> HcStatus {
    let z = try_ffi!(log_field(n, q.into()));
    out_write!(out, z.into())
}

/// Sheet index k with z = principal log + 2 pi i k.
#[no_mangle]
pub extern "C" fn hc_sheet_index(z: HcComplex, out: *mut i64) -> HcStatus {
    let k = try_ffi!(sheet_index(z.into()));
    out_write!(out, k)
}

/// Limit logarithm ln|K| + i (Arg K + 2 pi sheet).
#[no_mangle]
pub extern "C" fn hc_limit_log(k: HcComplex, sheet: i64, out: *mut HcComplex) -> HcStatus {
    let z = try_ffi!(limit_log(k.into(), sheet));
    out_write!(out, z.into())
}

/// Deck transformation z + 2 pi i k.
#[no_mangle]
pub extern "C" fn hc_deck_transform(z: HcComplex, k: i64) -> HcComplex {
    deck_transform(z.into(), k).into()
}

/// Transition map between the pitch-1/n and pitch-1/m helicoids.
#[no_mangle]
pub extern "C" fn hc_theta_map(n: u32, m: u32, q: HcPoint3, out: *mut HcPoint3) -> HcStatus {
    let r = try_ffi!(theta_map(n, m, q.into()));
    out_write!(out, r.into())
}

/// Euclidean gap between Exp_{1/n}(z) and (exp z, 0); equals |Im z|/n.
#[no_mangle]
pub extern "C" fn hc_pointwise_gap(n: u32, z: HcComplex, out: *mut f64) -> HcStatus {
    let g = try_ffi!(pointwise_gap(n, z.into()));
    out_write!(out, g)
}

/// Grid sup of the gap over [u_min, u_max] x (-m_bound, m_bound).
#[no_mangle]
pub extern "C" fn hc_strip_convergence(
    n: u32,
    m_bound: f64,
    u_min: f64,
    u_max: f64,
    nu: usize,
    nv: usize,
    out: *mut HcConvergenceReport,
) -> HcStatus {
    let strip = try_ffi!(StripSpec::new(m_bound, u_min, u_max));
    let r = try_ffi!(strip_convergence(n, &strip, nu, nv));
    out_write!(
        out,
        HcConvergenceReport {
            m_bound: r.m_bound,
            n: r.n,
            samples: r.samples,
            sup_observed: r.sup_observed,
            sup_predicted: r.sup_predicted,
        }
    )
}

/// Realization map Xi from the helicoid into the R^4 graph surface.
#[no_mangle]
pub extern "C" fn hc_xi_realize(a: f64, q: HcPoint3, out: *mut HcSigmaPoint) -> HcStatus {
    let p = try_ffi!(HelicoidParams::new(a));
    let s = try_ffi!(xi_realize(p, q.into()));
    out_write!(
        out,
        HcSigmaPoint { u: s.u, v: s.v, x: s.x, y: s.y }
    )
}

/// Inverse realization Omega back onto the helicoid.
#[no_mangle]
pub extern "C" fn hc_omega_realize(a: f64, s: HcSigmaPoint, out: *mut HcPoint3) -> HcStatus {
    let p = try_ffi!(HelicoidParams::new(a));
    let q = try_ffi!(omega_realize(
        p,
        SigmaLogPoint { u: s.u, v: s.v, x: s.x, y: s.y }
    ));
    out_write!(out, q.into())
}

/// Builds and validates a sampled path. On success the handle must be
/// released with `hc_path_free`.
#[no_mangle]
pub extern "C" fn hc_path_new(
    points: *const HcComplex,
    len: usize,
    closed: bool,
    out: *mut *mut HcPath,
) -> HcStatus {
    if points.is_null() || out.is_null() {
        return HcStatus::NullPointer;
    }
    let pts: Vec<Complex64> = unsafe { slice::from_raw_parts(points, len) }
        .iter()
        .map(|&z| z.into())
        .collect();
    let path = try_ffi!(SampledPath::new(pts, closed));
    unsafe { *out = Box::into_raw(Box::new(HcPath(path))) };
    HcStatus::Ok
}

/// Releases a path handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn hc_path_free(path: *mut HcPath) {
    if !path.is_null() {
        drop(unsafe { Box::from_raw(path) });
    }
}

/// Lifts a path starting on the given sheet. On success the handle must be
/// released with `hc_lifted_free`.
#[no_mangle]
pub extern "C" fn hc_path_lift(
    path: *const HcPath,
    start_sheet: i64,
    out: *mut *mut HcLiftedPath,
) -> HcStatus {
    if path.is_null() || out.is_null() {
        return HcStatus::NullPointer;
    }
    let lifted = try_ffi!(lift_path(unsafe { &(*path).0 }, start_sheet));
    unsafe { *out = Box::into_raw(Box::new(HcLiftedPath(lifted))) };
    HcStatus::Ok
}

/// Releases a lifted-path handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn hc_lifted_free(lifted: *mut HcLiftedPath) {
    if !lifted.is_null() {
        drop(unsafe { Box::from_raw(lifted) });
    }
}

/// Number of points in a lifted path; 0 for a null handle.
#[no_mangle]
pub extern "C" fn hc_lifted_len(lifted: *const HcLiftedPath) -> usize {
    if lifted.is_null() {
        0
    } else {
        unsafe { &(*lifted).0 }.points.len()
    }
}

/// Reads one lifted point by index.
#[no_mangle]
pub extern "C" fn hc_lifted_point(
    lifted: *const HcLiftedPath,
    index: usize,
    out: *mut HcComplex,
) -> HcStatus {
    if lifted.is_null() {
        return HcStatus::NullPointer;
    }
    let inner = unsafe { &(*lifted).0 };
    match inner.points.get(index) {
        Some(&z) => out_write!(out, z.into()),
        None => HcStatus::BadInput,
    }
}

/// Sheet of the lifted path's endpoint.
#[no_mangle]
pub extern "C" fn hc_lifted_end_sheet(lifted: *const HcLiftedPath) -> i64 {
    if lifted.is_null() {
        0
    } else {
        unsafe { &(*lifted).0 }.end_sheet
    }
}

/// Winding number of a closed path about the origin.
#[no_mangle]
pub extern "C" fn hc_winding_number(path: *const HcPath, out: *mut i64) -> HcStatus {
    if path.is_null() {
        return HcStatus::NullPointer;
    }
    let w = try_ffi!(winding_number(unsafe { &(*path).0 }));
    out_write!(out, w)
}

/// Monodromy (sheet shift) of lifting a closed path.
#[no_mangle]
pub extern "C" fn hc_monodromy_check(
    path: *const HcPath,
    start_sheet: i64,
    out: *mut i64,
) -> HcStatus {
    if path.is_null() {
        return HcStatus::NullPointer;
    }
    let m = try_ffi!(monodromy_check(unsafe { &(*path).0 }, start_sheet));
    out_write!(out, m)
}
