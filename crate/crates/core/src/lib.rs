//! Numerical realization of the logarithmic Riemann surface as the limit of
//! helicoid embeddings of the complex plane.
//!
//! The pitch-`a` helicoid field maps `z = u + iv` to
//! `(e^u cos v, e^u sin v, a v)` in R^3. The extra height coordinate breaks
//! the `2 pi i`-periodicity of the complex exponential, so the field has a
//! globally defined closed-form inverse (a well-defined logarithm with sheet
//! bookkeeping). This crate evaluates the fields and their inverses, the
//! transition maps between helicoids of different pitch, the exact `|Im z|/n`
//! convergence bound toward the flat exponential, covering-space path
//! lifting and winding numbers, the realization maps between the R^3
//! helicoid and the R^4 graph surface, and the componentwise product
//! generalization on C^m.

pub mod covering;
pub mod error;
pub mod helicoid;
pub mod limits;
pub mod logmap;
pub mod mesh;
pub mod multi;
pub mod numerics;
pub mod pathio;
pub mod report;

pub use error::{Error, Result};
pub use helicoid::{
    angle_cos, exp_field, project_to_plane, sample_surface, HelicoidParams, HelicoidPoint,
    TangentWeights,
};
pub use limits::{
    injectivity_in_limit, pointwise_gap, strip_convergence, theta_map, ConvergenceReport,
    InjectivityRow, StripSpec,
};
pub use logmap::{
    limit_log, log_field, log_general, omega_realize, sheet_index, xi_realize, SheetedLog,
    SigmaLogPoint,
};
pub use numerics::{complex_exp, make_grid, principal_arg, GridSpec, Tolerance};

pub use num_complex::Complex64;
