#ifndef HELICOVER_H
#define HELICOVER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
enum HcStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  HcStatus_Ok = 0,
  HcStatus_NonFinite = 1,
  HcStatus_ZeroMagnitude = 2,
  HcStatus_Overflow = 3,
  HcStatus_DegenerateWeights = 4,
  HcStatus_NotOnSurface = 5,
  HcStatus_StepTooLarge = 6,
  HcStatus_NotClosed = 7,
  HcStatus_NonIntegerWinding = 8,
  HcStatus_DimensionMismatch = 9,
  HcStatus_InvalidParameter = 10,
  HcStatus_BadInput = 11,
  HcStatus_Io = 12,
  HcStatus_NullPointer = 13,
};
#ifndef __cplusplus
typedef int32_t HcStatus;
#endif // __cplusplus

/**
 * Opaque handle to a lifted path in the total space.
 */
typedef struct HcLiftedPath HcLiftedPath;

/**
 * Opaque handle to a validated sampled path in the punctured plane.
 */
typedef struct HcPath HcPath;

/**
 * A complex number as a plain pair of doubles.
 */
typedef struct HcComplex {
  double re;
  double im;
} HcComplex;

/**
 * A point of the helicoid's ambient R^3: planar (x, y) plus height h.
 */
typedef struct HcPoint3 {
  double x;
  double y;
  double h;
} HcPoint3;

/**
 * Strip convergence result: observed and predicted sup of the gap.
 */
typedef struct HcConvergenceReport {
  double m_bound;
  uint32_t n;
  uintptr_t samples;
  double sup_observed;
  double sup_predicted;
} HcConvergenceReport;

/**
 * A point (u, v, x, y) of the graph surface in R^4.
 */
typedef struct HcSigmaPoint {
  double u;
  double v;
  double x;
  double y;
} HcSigmaPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * e^z for z = re + i im.
 */
HcStatus hc_complex_exp(struct HcComplex z, struct HcComplex *out);

/**
 * Principal argument in (-pi, pi], branch closed at +pi.
 */
HcStatus hc_principal_arg(struct HcComplex w, double *out);

/**
 * The pitch-a helicoid field at z.
 */
HcStatus hc_exp_field(double a, struct HcComplex z, struct HcPoint3 *out);

/**
 * Closed-form inverse of the pitch-a field: ln|K| + i h/a.
 */
HcStatus hc_log_general(double a, struct HcPoint3 q, struct HcComplex *out);

/**
 * Inverse of the pitch-1/n field: ln|K| + i n h.
 */
HcStatus hc_log_field(uint32_t n, struct HcPoint3 q, struct HcComplex *out);

/**
 * Sheet index k with z = principal log + 2 pi i k.
 */
HcStatus hc_sheet_index(struct HcComplex z, int64_t *out);

/**
 * Limit logarithm ln|K| + i (Arg K + 2 pi sheet).
 */
HcStatus hc_limit_log(struct HcComplex k, int64_t sheet, struct HcComplex *out);

/**
 * Deck transformation z + 2 pi i k.
 */
struct HcComplex hc_deck_transform(struct HcComplex z, int64_t k);

/**
 * Transition map between the pitch-1/n and pitch-1/m helicoids.
 */
HcStatus hc_theta_map(uint32_t n, uint32_t m, struct HcPoint3 q, struct HcPoint3 *out);

/**
 * Euclidean gap between Exp_{1/n}(z) and (exp z, 0); equals |Im z|/n.
 */
HcStatus hc_pointwise_gap(uint32_t n, struct HcComplex z, double *out);

/**
 * Grid sup of the gap over [u_min, u_max] x (-m_bound, m_bound).
 */
HcStatus hc_strip_convergence(uint32_t n,
                              double m_bound,
                              double u_min,
                              double u_max,
                              uintptr_t nu,
                              uintptr_t nv,
                              struct HcConvergenceReport *out);

/**
 * Realization map Xi from the helicoid into the R^4 graph surface.
 */
HcStatus hc_xi_realize(double a, struct HcPoint3 q, struct HcSigmaPoint *out);

/**
 * Inverse realization Omega back onto the helicoid.
 */
HcStatus hc_omega_realize(double a, struct HcSigmaPoint s, struct HcPoint3 *out);

/**
 * Builds and validates a sampled path. On success the handle must be
 * released with `hc_path_free`.
 */
HcStatus hc_path_new(const struct HcComplex *points,
                     uintptr_t len,
                     bool closed,
                     struct HcPath **out);

/**
 * Releases a path handle. Null is a no-op.
 */
void hc_path_free(struct HcPath *path);

/**
 * Lifts a path starting on the given sheet. On success the handle must be
 * released with `hc_lifted_free`.
 */
HcStatus hc_path_lift(const struct HcPath *path, int64_t start_sheet, struct HcLiftedPath **out);

/**
 * Releases a lifted-path handle. Null is a no-op.
 */
void hc_lifted_free(struct HcLiftedPath *lifted);

/**
 * Number of points in a lifted path; 0 for a null handle.
 */
uintptr_t hc_lifted_len(const struct HcLiftedPath *lifted);

/**
 * Reads one lifted point by index.
 */
HcStatus hc_lifted_point(const struct HcLiftedPath *lifted, uintptr_t index, struct HcComplex *out);

/**
 * Sheet of the lifted path's endpoint.
 */
int64_t hc_lifted_end_sheet(const struct HcLiftedPath *lifted);

/**
 * Winding number of a closed path about the origin.
 */
HcStatus hc_winding_number(const struct HcPath *path, int64_t *out);

/**
 * Monodromy (sheet shift) of lifting a closed path.
 */
HcStatus hc_monodromy_check(const struct HcPath *path, int64_t start_sheet, int64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HELICOVER_H */
