/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef SHARPSTEP_H
#define SHARPSTEP_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SgRuleKind {
  SG_RULE_KIND_POLYAK_ADAPTIVE = 0,
  SG_RULE_KIND_POLYAK_LIPSCHITZ = 1,
  SG_RULE_KIND_POLYAK_PARTIAL = 2,
  SG_RULE_KIND_POLYAK_DELTA_PARTIAL = 3,
  SG_RULE_KIND_HARMONIC_STRONGLY_CONVEX = 4,
} SgRuleKind;

/**
 * Result code of every fallible call.
 */
typedef enum SgStatus {
  SG_STATUS_OK = 0,
  SG_STATUS_NULL_POINTER = 1,
  SG_STATUS_DIMENSION_MISMATCH = 2,
  SG_STATUS_INVALID_PARAMETER = 3,
  SG_STATUS_INFEASIBLE = 4,
  SG_STATUS_UNSUPPORTED = 5,
  SG_STATUS_HYPOTHESIS = 6,
  SG_STATUS_SHORT_TRACE = 7,
  SG_STATUS_IO = 8,
  SG_STATUS_PANIC = 99,
} SgStatus;

typedef enum SgTermination {
  SG_TERMINATION_MAX_ITERS = 0,
  SG_TERMINATION_ZERO_GRADIENT = 1,
  SG_TERMINATION_REACHED_F_BAR = 2,
  SG_TERMINATION_NONPOSITIVE_STEP = 3,
} SgTermination;

/**
 * Opaque problem handle.
 */
typedef struct SgProblem SgProblem;

/**
 * Opaque trace handle.
 */
typedef struct SgTrace SgTrace;

/**
 * Sharp-minimum constants; absent values are NaN.
 */
typedef struct SgSharpness {
  double alpha;
  double delta;
  double f_bar;
  double beta;
  double lipschitz;
  double strong_convexity;
  double f_star;
} SgSharpness;

typedef struct SgRunOptions {
  size_t max_iters;
  bool project;
  bool use_delta_oracle;
  double target_tolerance;
} SgRunOptions;

/**
 * Step rule. Fields a rule does not use are ignored; for
 * `POLYAK_DELTA_PARTIAL` a NaN `delta` uses the oracle's reported
 * inexactness.
 */
typedef struct SgStepRule {
  enum SgRuleKind kind;
  double beta;
  double f_bar;
  double lipschitz;
  double delta;
  double mu;
} SgStepRule;

/**
 * Scalar fields of one record; `step` and `dist_sq` are NaN when absent.
 */
typedef struct SgRecord {
  size_t k;
  double value;
  double objective;
  double grad_norm;
  double step;
  double dist_sq;
  double inexactness;
  double radius_from_start;
} SgRecord;

/**
 * A bound value with its floor and hypothesis flag.
 */
typedef struct SgBound {
  double value;
  double floor;
  bool hypothesis_ok;
} SgBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message into `buf` (NUL
 * terminated, truncated to `len`) and returns the full message length.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t sg_last_error_message(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sg_version(void);

/**
 * `||x|| + gamma ||x - shift||^2` on the ball of radius `feasible_radius`
 * around the origin (`INFINITY` for the whole space).
 *
 * # Safety
 * `shift` must point to `dim` doubles; `out` must be writable.
 */
enum SgStatus sg_problem_norm_plus_quadratic(double gamma,
                                             const double *shift,
                                             size_t dim,
                                             double feasible_radius,
                                             struct SgProblem **out);

/**
 * Enclosing-ball objective over `count` points of dimension `dim`.
 * `approx_min` is NaN when no approximate minimum is known.
 *
 * # Safety
 * `points` must point to `count * dim` doubles; `out` must be writable.
 */
enum SgStatus sg_problem_enclosing_ball(const double *points,
                                        size_t count,
                                        size_t dim,
                                        double scale_alpha,
                                        bool squared,
                                        double feasible_radius,
                                        double approx_min,
                                        struct SgProblem **out);

/**
 * `dist(x, capsule) + gamma ||x||^2` on the ball of radius `big_r`.
 *
 * # Safety
 * `a` and `b` must point to `dim` doubles; `out` must be writable.
 */
enum SgStatus sg_problem_capsule_regularized(const double *a,
                                             const double *b,
                                             size_t dim,
                                             double radius,
                                             double gamma,
                                             double big_r,
                                             struct SgProblem **out);

/**
 * Distance to the hull of `count` equal balls; `seed` drives the inexact
 * oracle.
 *
 * # Safety
 * `centers` must point to `count * dim` doubles; `out` must be writable.
 */
enum SgStatus sg_problem_hull_of_balls(const double *centers,
                                       size_t count,
                                       size_t dim,
                                       double radius,
                                       uint64_t seed,
                                       struct SgProblem **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_problem_weakly_quasiconvex_1d(struct SgProblem **out);

/**
 * Distance to a single ball, unconstrained.
 *
 * # Safety
 * `center` must point to `dim` doubles; `out` must be writable.
 */
enum SgStatus sg_problem_dist_to_ball(const double *center,
                                      size_t dim,
                                      double radius,
                                      struct SgProblem **out);

/**
 * # Safety
 * `problem` must be null or a handle from an `sg_problem_*` constructor
 * that has not been freed.
 */
void sg_problem_free(struct SgProblem *problem);

/**
 * # Safety
 * `problem` must be a live handle or null (returns 0).
 */
size_t sg_problem_dimension(const struct SgProblem *problem);

/**
 * # Safety
 * `problem` must be a live handle; `out` must be writable.
 */
enum SgStatus sg_problem_sharpness(const struct SgProblem *problem, struct SgSharpness *out);

/**
 * Exact oracle: writes `f(x)` and a subgradient (`dim` doubles).
 *
 * # Safety
 * `x` and `grad` must point to `dim` doubles; `value` must be writable.
 */
enum SgStatus sg_problem_eval(const struct SgProblem *problem,
                              const double *x,
                              size_t dim,
                              double *value,
                              double *grad);

/**
 * Squared distance from `x` to the known solution set, NaN when unknown.
 *
 * # Safety
 * `x` must point to `dim` doubles; `out` must be writable.
 */
enum SgStatus sg_problem_dist_sq_to_target(const struct SgProblem *problem,
                                           const double *x,
                                           size_t dim,
                                           double *out);

/**
 * Default options: 1000 iterations, projection on, exact oracle.
 */
struct SgRunOptions sg_run_options_default(void);

/**
 * Runs the method from `x0`. A null `options` uses the defaults.
 *
 * # Safety
 * `problem` must be a live handle, `rule` readable, `x0` must point to
 * `dim` doubles, `options` null or readable, `out` writable.
 */
enum SgStatus sg_run(const struct SgProblem *problem,
                     const struct SgStepRule *rule,
                     const double *x0,
                     size_t dim,
                     const struct SgRunOptions *options,
                     struct SgTrace **out);

/**
 * # Safety
 * `trace` must be null or a handle from [`sg_run`] not yet freed.
 */
void sg_trace_free(struct SgTrace *trace);

/**
 * Number of records (iterates), 0 for a null handle.
 *
 * # Safety
 * `trace` must be a live handle or null.
 */
size_t sg_trace_len(const struct SgTrace *trace);

/**
 * Number of steps taken, 0 for a null handle.
 *
 * # Safety
 * `trace` must be a live handle or null.
 */
size_t sg_trace_steps(const struct SgTrace *trace);

/**
 * # Safety
 * `trace` must be a live handle; `out` writable.
 */
enum SgStatus sg_trace_termination(const struct SgTrace *trace, enum SgTermination *out);

/**
 * # Safety
 * `trace` must be a live handle; `out` writable.
 */
enum SgStatus sg_trace_record(const struct SgTrace *trace, size_t index, struct SgRecord *out);

/**
 * Copies iterate `index` into `out` (`dim` doubles).
 *
 * # Safety
 * `trace` must be a live handle; `out` must point to `dim` doubles.
 */
enum SgStatus sg_trace_point(const struct SgTrace *trace, size_t index, double *out, size_t dim);

/**
 * Weighted average of a harmonic run; `UNSUPPORTED` for other rules.
 *
 * # Safety
 * `trace` must be a live handle; `out` must point to `dim` doubles.
 */
enum SgStatus sg_trace_x_hat(const struct SgTrace *trace, double *out, size_t dim);

/**
 * Lipschitz-step bound `(1 - a^2 b^2/(2M^2))^{k+1} R0^2 + 2 D^2/(a^2 b^2)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_bound_theorem2(size_t k,
                                double alpha,
                                double beta,
                                double lipschitz,
                                double delta,
                                double r0_sq,
                                struct SgBound *out);

/**
 * `(1 - a^2 b^2/M^2)^{k+1} R0^2`; `HYPOTHESIS` when `a b > M`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_bound_corollary1(size_t k,
                                  double alpha,
                                  double beta,
                                  double lipschitz,
                                  double r0_sq,
                                  struct SgBound *out);

/**
 * `(1 - a^2/M^2)^{k+1} R0^2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_bound_theorem3(size_t k,
                                double alpha,
                                double lipschitz,
                                double r0_sq,
                                struct SgBound *out);

/**
 * `(1 - a^2/(2M^2))^{k+1} R0^2 + 2 D^2/a^2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_bound_theorem4(size_t k,
                                double alpha,
                                double lipschitz,
                                double delta,
                                double r0_sq,
                                struct SgBound *out);

/**
 * `(1 - a^2/(2M^2))^{k+1} R0^2 + 2 (D + d)^2/a^2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_bound_theorem7(size_t k,
                                double alpha,
                                double lipschitz,
                                double delta,
                                double inexactness,
                                double r0_sq,
                                struct SgBound *out);

/**
 * Radius around `x0` that projection-free partial-step runs stay within.
 *
 * # Safety
 * `out` must be writable.
 */
enum SgStatus sg_trajectory_radius(double lipschitz, double alpha, double r0, double *out);

/**
 * `2 M^2 / (mu (N + 1))`
 */
double sg_bound_harmonic_original(double lipschitz, double mu, size_t n);

/**
 * Adaptive value bound over the first `n` averaging iterates of `trace`.
 *
 * # Safety
 * `trace` must be a live handle; `out` writable.
 */
enum SgStatus sg_bound_harmonic_adaptive(const struct SgTrace *trace,
                                         double mu,
                                         size_t n,
                                         double *out);

/**
 * Bound on `||x_hat - x*||^2`; uses the trace's gradients when `trace` is
 * non-null and `4 M^2/(mu^2 (N+1))` otherwise.
 *
 * # Safety
 * `trace` must be a live handle or null; `out` writable.
 */
enum SgStatus sg_bound_harmonic_argument(const struct SgTrace *trace,
                                         double lipschitz,
                                         double mu,
                                         size_t n,
                                         double *out);

/**
 * Projection of `x` onto the ball of radius `radius` around `center`
 * (the origin when `center` is null).
 *
 * # Safety
 * `x` and `out` must point to `dim` doubles; `center` null or `dim` doubles.
 */
enum SgStatus sg_project_ball(const double *x,
                              size_t dim,
                              const double *center,
                              double radius,
                              double *out);

/**
 * Sequential projection onto `count` balls of common radius, each visit
 * stopping at distance `f_bar`. `budget` caps the total iterations (0: no
 * cap). Writes the best point, its largest ball distance and the number of
 * iterations used.
 *
 * # Safety
 * `centers` must point to `count * dim` doubles, `x0` and `point` to `dim`
 * doubles; `max_dist` and `iterations` must be writable.
 */
enum SgStatus sg_sequential_project(const double *centers,
                                    size_t count,
                                    size_t dim,
                                    double radius,
                                    double f_bar,
                                    const double *x0,
                                    size_t max_iters_per_ball,
                                    size_t sweeps,
                                    size_t budget,
                                    double *point,
                                    double *max_dist,
                                    size_t *iterations);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHARPSTEP_H */
