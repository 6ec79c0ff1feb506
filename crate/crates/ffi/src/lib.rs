//! C ABI for sharpstep.
//!
//! Problems and traces are opaque handles created by `sg_*` constructors and
//! released with the matching `*_free`. Every fallible call returns an
//! [`SgStatus`]; on failure a message for the calling thread is available
//! from [`sg_last_error_message`]. Panics never cross the boundary.
//!
//! Vectors are passed as `(pointer, length)` pairs; point sets are row-major
//! `count x dim` arrays. Optional scalars use NaN for "absent".

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use sharpstep::certificates::{self, ArgumentMode};
use sharpstep::feasibility::{sequential_project_with_budget, BallSystem};
use sharpstep::geometry::{project_ball, Ball, Capsule};
use sharpstep::oracles;
use sharpstep::{Error, ProblemSpec, RunOptions, StepRule, Termination, Trace};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgStatus {
    Ok = 0,
    NullPointer = 1,
    DimensionMismatch = 2,
    InvalidParameter = 3,
    Infeasible = 4,
    Unsupported = 5,
    Hypothesis = 6,
    ShortTrace = 7,
    Io = 8,
    Panic = 99,
}

impl From<&Error> for SgStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } => SgStatus::DimensionMismatch,
            Error::InvalidParameter { .. } => SgStatus::InvalidParameter,
            Error::InfeasibleStart { .. } => SgStatus::Infeasible,
            Error::Unsupported(_) => SgStatus::Unsupported,
            Error::Hypothesis(_) => SgStatus::Hypothesis,
            Error::ShortTrace(_) => SgStatus::ShortTrace,
            Error::Io(_) => SgStatus::Io,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(SgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SgStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SgStatus::NullPointer, format!("`{what}` is null"))
}

/// Runs `f`, recording its error message and converting panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            SgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            SgStatus::Panic
        }
    }
}

unsafe fn read<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn write<'a>(p: *mut f64, len: usize, what: &str) -> Result<&'a mut [f64], Failure> {
    if len == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts_mut(p, len))
}

unsafe fn read_points(p: *const f64, count: usize, dim: usize, what: &str) -> Result<Vec<Vec<f64>>, Failure> {
    let flat = read(p, count * dim, what)?;
    Ok(flat.chunks(dim.max(1)).map(|c| c.to_vec()).collect())
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

fn optional(v: f64) -> Option<f64> {
    (!v.is_nan()).then_some(v)
}

/// Feasible ball around the origin; a non-finite radius means the whole space.
fn feasible(dim: usize, radius: f64) -> Result<Ball, Failure> {
    if radius.is_infinite() && radius > 0.0 {
        Ok(Ball::unbounded(dim))
    } else {
        Ok(Ball::centered(dim, radius)?)
    }
}

fn check_len(expected: usize, found: usize) -> Result<(), Failure> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found }.into());
    }
    Ok(())
}

/// Opaque problem handle.
pub struct SgProblem {
    inner: ProblemSpec,
}

/// Opaque trace handle.
pub struct SgTrace {
    inner: Trace,
}

fn boxed(out: *mut *mut SgProblem, problem: ProblemSpec) -> Result<(), Failure> {
    let out = unsafe { out_ptr(out, "out")? };
    *out = Box::into_raw(Box::new(SgProblem { inner: problem }));
    Ok(())
}

unsafe fn problem_ref<'a>(p: *const SgProblem) -> Result<&'a ProblemSpec, Failure> {
    p.as_ref().map(|p| &p.inner).ok_or_else(|| null("problem"))
}

unsafe fn trace_ref<'a>(t: *const SgTrace) -> Result<&'a Trace, Failure> {
    t.as_ref().map(|t| &t.inner).ok_or_else(|| null("trace"))
}

/// Copies the calling thread's last error message into `buf` (NUL
/// terminated, truncated to `len`) and returns the full message length.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn sg_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sg_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => c"",
    };
    VERSION.as_ptr()
}

// Problems

/// `||x|| + gamma ||x - shift||^2` on the ball of radius `feasible_radius`
/// around the origin (`INFINITY` for the whole space).
///
/// # Safety
/// `shift` must point to `dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_norm_plus_quadratic(
    gamma: f64,
    shift: *const f64,
    dim: usize,
    feasible_radius: f64,
    out: *mut *mut SgProblem,
) -> SgStatus {
    guard(|| {
        let shift = read(shift, dim, "shift")?.to_vec();
        boxed(out, oracles::norm_plus_quadratic(gamma, shift, feasible(dim, feasible_radius)?)?)
    })
}

/// Enclosing-ball objective over `count` points of dimension `dim`.
/// `approx_min` is NaN when no approximate minimum is known.
///
/// # Safety
/// `points` must point to `count * dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_enclosing_ball(
    points: *const f64,
    count: usize,
    dim: usize,
    scale_alpha: f64,
    squared: bool,
    feasible_radius: f64,
    approx_min: f64,
    out: *mut *mut SgProblem,
) -> SgStatus {
    guard(|| {
        let pts = read_points(points, count, dim, "points")?;
        let q = feasible(dim, feasible_radius)?;
        boxed(out, oracles::enclosing_ball(pts, scale_alpha, squared, q, optional(approx_min))?)
    })
}

/// `dist(x, capsule) + gamma ||x||^2` on the ball of radius `big_r`.
///
/// # Safety
/// `a` and `b` must point to `dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_capsule_regularized(
    a: *const f64,
    b: *const f64,
    dim: usize,
    radius: f64,
    gamma: f64,
    big_r: f64,
    out: *mut *mut SgProblem,
) -> SgStatus {
    guard(|| {
        let capsule = Capsule::new(read(a, dim, "a")?.to_vec(), read(b, dim, "b")?.to_vec(), radius)?;
        boxed(out, oracles::capsule_regularized(capsule, gamma, big_r)?)
    })
}

/// Distance to the hull of `count` equal balls; `seed` drives the inexact
/// oracle.
///
/// # Safety
/// `centers` must point to `count * dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_hull_of_balls(
    centers: *const f64,
    count: usize,
    dim: usize,
    radius: f64,
    seed: u64,
    out: *mut *mut SgProblem,
) -> SgStatus {
    guard(|| {
        let c = read_points(centers, count, dim, "centers")?;
        boxed(out, oracles::hull_of_balls_inexact(c, radius, seed, None)?)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_weakly_quasiconvex_1d(out: *mut *mut SgProblem) -> SgStatus {
    guard(|| boxed(out, oracles::weakly_quasiconvex_1d()?))
}

/// Distance to a single ball, unconstrained.
///
/// # Safety
/// `center` must point to `dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_dist_to_ball(
    center: *const f64,
    dim: usize,
    radius: f64,
    out: *mut *mut SgProblem,
) -> SgStatus {
    guard(|| {
        let ball = Ball::new(read(center, dim, "center")?.to_vec(), radius)?;
        boxed(out, oracles::dist_to_ball_problem(ball, None)?)
    })
}

/// # Safety
/// `problem` must be null or a handle from an `sg_problem_*` constructor
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_free(problem: *mut SgProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// # Safety
/// `problem` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn sg_problem_dimension(problem: *const SgProblem) -> usize {
    problem.as_ref().map_or(0, |p| p.inner.dimension)
}

/// Sharp-minimum constants; absent values are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SgSharpness {
    pub alpha: f64,
    pub delta: f64,
    pub f_bar: f64,
    pub beta: f64,
    pub lipschitz: f64,
    pub strong_convexity: f64,
    pub f_star: f64,
}

/// # Safety
/// `problem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_sharpness(problem: *const SgProblem, out: *mut SgSharpness) -> SgStatus {
    guard(|| {
        let s = &problem_ref(problem)?.sharpness;
        *out_ptr(out, "out")? = SgSharpness {
            alpha: s.alpha,
            delta: s.delta,
            f_bar: s.f_bar.unwrap_or(f64::NAN),
            beta: s.beta,
            lipschitz: s.lipschitz.unwrap_or(f64::NAN),
            strong_convexity: s.strong_convexity,
            f_star: s.f_star.unwrap_or(f64::NAN),
        };
        Ok(())
    })
}

/// Exact oracle: writes `f(x)` and a subgradient (`dim` doubles).
///
/// # Safety
/// `x` and `grad` must point to `dim` doubles; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_eval(
    problem: *const SgProblem,
    x: *const f64,
    dim: usize,
    value: *mut f64,
    grad: *mut f64,
) -> SgStatus {
    guard(|| {
        let p = problem_ref(problem)?;
        check_len(p.dimension, dim)?;
        let out = p.oracle(read(x, dim, "x")?)?;
        *out_ptr(value, "value")? = out.value;
        write(grad, dim, "grad")?.copy_from_slice(&out.subgradient);
        Ok(())
    })
}

/// Squared distance from `x` to the known solution set, NaN when unknown.
///
/// # Safety
/// `x` must point to `dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_problem_dist_sq_to_target(
    problem: *const SgProblem,
    x: *const f64,
    dim: usize,
    out: *mut f64,
) -> SgStatus {
    guard(|| {
        let p = problem_ref(problem)?;
        check_len(p.dimension, dim)?;
        *out_ptr(out, "out")? = p.dist_sq_to_target(read(x, dim, "x")?).unwrap_or(f64::NAN);
        Ok(())
    })
}

// Solver

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgRuleKind {
    PolyakAdaptive = 0,
    PolyakLipschitz = 1,
    PolyakPartial = 2,
    PolyakDeltaPartial = 3,
    HarmonicStronglyConvex = 4,
}

/// Step rule. Fields a rule does not use are ignored; for
/// `POLYAK_DELTA_PARTIAL` a NaN `delta` uses the oracle's reported
/// inexactness.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SgStepRule {
    pub kind: SgRuleKind,
    pub beta: f64,
    pub f_bar: f64,
    pub lipschitz: f64,
    pub delta: f64,
    pub mu: f64,
}

impl SgStepRule {
    fn to_rule(self) -> StepRule {
        match self.kind {
            SgRuleKind::PolyakAdaptive => StepRule::PolyakAdaptive {
                beta: self.beta,
                f_bar: self.f_bar,
            },
            SgRuleKind::PolyakLipschitz => StepRule::PolyakLipschitz {
                beta: self.beta,
                f_bar: self.f_bar,
                lipschitz: self.lipschitz,
            },
            SgRuleKind::PolyakPartial => StepRule::PolyakPartial {
                f_bar: self.f_bar,
                lipschitz: self.lipschitz,
            },
            SgRuleKind::PolyakDeltaPartial => StepRule::PolyakDeltaPartial {
                f_bar: self.f_bar,
                delta: optional(self.delta),
                lipschitz: self.lipschitz,
            },
            SgRuleKind::HarmonicStronglyConvex => StepRule::HarmonicStronglyConvex { mu: self.mu },
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SgRunOptions {
    pub max_iters: usize,
    pub project: bool,
    pub use_delta_oracle: bool,
    pub target_tolerance: f64,
}

/// Default options: 1000 iterations, projection on, exact oracle.
#[no_mangle]
pub extern "C" fn sg_run_options_default() -> SgRunOptions {
    let d = RunOptions::default();
    SgRunOptions {
        max_iters: d.max_iters,
        project: d.project,
        use_delta_oracle: d.use_delta_oracle,
        target_tolerance: d.target_tolerance,
    }
}

/// Runs the method from `x0`. A null `options` uses the defaults.
///
/// # Safety
/// `problem` must be a live handle, `rule` readable, `x0` must point to
/// `dim` doubles, `options` null or readable, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_run(
    problem: *const SgProblem,
    rule: *const SgStepRule,
    x0: *const f64,
    dim: usize,
    options: *const SgRunOptions,
    out: *mut *mut SgTrace,
) -> SgStatus {
    guard(|| {
        let p = problem_ref(problem)?;
        let rule = rule.as_ref().ok_or_else(|| null("rule"))?.to_rule();
        let o = options.as_ref().copied().unwrap_or_else(|| sg_run_options_default());
        let opts = RunOptions {
            max_iters: o.max_iters,
            project: o.project,
            use_delta_oracle: o.use_delta_oracle,
            target_tolerance: o.target_tolerance,
        };
        let out = out_ptr(out, "out")?;
        let trace = sharpstep::iterate(p, &rule, read(x0, dim, "x0")?, &opts)?;
        *out = Box::into_raw(Box::new(SgTrace { inner: trace }));
        Ok(())
    })
}

/// # Safety
/// `trace` must be null or a handle from [`sg_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_free(trace: *mut SgTrace) {
    if !trace.is_null() {
        drop(Box::from_raw(trace));
    }
}

/// Number of records (iterates), 0 for a null handle.
///
/// # Safety
/// `trace` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_len(trace: *const SgTrace) -> usize {
    trace.as_ref().map_or(0, |t| t.inner.records.len())
}

/// Number of steps taken, 0 for a null handle.
///
/// # Safety
/// `trace` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_steps(trace: *const SgTrace) -> usize {
    trace.as_ref().map_or(0, |t| t.inner.steps())
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgTermination {
    MaxIters = 0,
    ZeroGradient = 1,
    ReachedFBar = 2,
    NonpositiveStep = 3,
}

/// # Safety
/// `trace` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_termination(trace: *const SgTrace, out: *mut SgTermination) -> SgStatus {
    guard(|| {
        *out_ptr(out, "out")? = match trace_ref(trace)?.terminated_by {
            Termination::MaxIters => SgTermination::MaxIters,
            Termination::ZeroGradient => SgTermination::ZeroGradient,
            Termination::ReachedFBar => SgTermination::ReachedFBar,
            Termination::NonpositiveStep => SgTermination::NonpositiveStep,
        };
        Ok(())
    })
}

/// Scalar fields of one record; `step` and `dist_sq` are NaN when absent.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SgRecord {
    pub k: usize,
    pub value: f64,
    pub objective: f64,
    pub grad_norm: f64,
    pub step: f64,
    pub dist_sq: f64,
    pub inexactness: f64,
    pub radius_from_start: f64,
}

fn record_at(t: &Trace, index: usize) -> Result<&sharpstep::solvers::IterateRecord, Failure> {
    t.records.get(index).ok_or_else(|| {
        Failure(
            SgStatus::InvalidParameter,
            format!("record {index} out of range ({} records)", t.records.len()),
        )
    })
}

/// # Safety
/// `trace` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_record(trace: *const SgTrace, index: usize, out: *mut SgRecord) -> SgStatus {
    guard(|| {
        let r = record_at(trace_ref(trace)?, index)?;
        *out_ptr(out, "out")? = SgRecord {
            k: r.k,
            value: r.value,
            objective: r.objective,
            grad_norm: r.grad_norm,
            step: r.step.unwrap_or(f64::NAN),
            dist_sq: r.dist_sq.unwrap_or(f64::NAN),
            inexactness: r.inexactness,
            radius_from_start: r.radius_from_start,
        };
        Ok(())
    })
}

/// Copies iterate `index` into `out` (`dim` doubles).
///
/// # Safety
/// `trace` must be a live handle; `out` must point to `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_point(trace: *const SgTrace, index: usize, out: *mut f64, dim: usize) -> SgStatus {
    guard(|| {
        let r = record_at(trace_ref(trace)?, index)?;
        check_len(r.x.len(), dim)?;
        write(out, dim, "out")?.copy_from_slice(&r.x);
        Ok(())
    })
}

/// Weighted average of a harmonic run; `UNSUPPORTED` for other rules.
///
/// # Safety
/// `trace` must be a live handle; `out` must point to `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn sg_trace_x_hat(trace: *const SgTrace, out: *mut f64, dim: usize) -> SgStatus {
    guard(|| {
        let t = trace_ref(trace)?;
        let x_hat = t
            .x_hat
            .as_ref()
            .ok_or_else(|| Failure(SgStatus::Unsupported, "trace has no averaged point".into()))?;
        check_len(x_hat.len(), dim)?;
        write(out, dim, "out")?.copy_from_slice(x_hat);
        Ok(())
    })
}

// Certificates

/// A bound value with its floor and hypothesis flag.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SgBound {
    pub value: f64,
    pub floor: f64,
    pub hypothesis_ok: bool,
}

unsafe fn put_bound(out: *mut SgBound, c: certificates::Certified) -> Result<(), Failure> {
    *out_ptr(out, "out")? = SgBound {
        value: c.value,
        floor: c.floor,
        hypothesis_ok: c.hypothesis_ok,
    };
    Ok(())
}

unsafe fn put_value(out: *mut SgBound, value: f64) -> Result<(), Failure> {
    *out_ptr(out, "out")? = SgBound {
        value,
        floor: 0.0,
        hypothesis_ok: true,
    };
    Ok(())
}

/// Lipschitz-step bound `(1 - a^2 b^2/(2M^2))^{k+1} R0^2 + 2 D^2/(a^2 b^2)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_theorem2(
    k: usize,
    alpha: f64,
    beta: f64,
    lipschitz: f64,
    delta: f64,
    r0_sq: f64,
    out: *mut SgBound,
) -> SgStatus {
    guard(|| put_bound(out, certificates::bound_theorem2(k, alpha, beta, lipschitz, delta, r0_sq)?))
}

/// `(1 - a^2 b^2/M^2)^{k+1} R0^2`; `HYPOTHESIS` when `a b > M`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_corollary1(
    k: usize,
    alpha: f64,
    beta: f64,
    lipschitz: f64,
    r0_sq: f64,
    out: *mut SgBound,
) -> SgStatus {
    guard(|| put_value(out, certificates::bound_corollary1(k, alpha, beta, lipschitz, r0_sq)?))
}

/// `(1 - a^2/M^2)^{k+1} R0^2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_theorem3(k: usize, alpha: f64, lipschitz: f64, r0_sq: f64, out: *mut SgBound) -> SgStatus {
    guard(|| put_value(out, certificates::bound_theorem3(k, alpha, lipschitz, r0_sq)?))
}

/// `(1 - a^2/(2M^2))^{k+1} R0^2 + 2 D^2/a^2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_theorem4(
    k: usize,
    alpha: f64,
    lipschitz: f64,
    delta: f64,
    r0_sq: f64,
    out: *mut SgBound,
) -> SgStatus {
    guard(|| put_bound(out, certificates::bound_theorem4(k, alpha, lipschitz, delta, r0_sq)?))
}

/// `(1 - a^2/(2M^2))^{k+1} R0^2 + 2 (D + d)^2/a^2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_theorem7(
    k: usize,
    alpha: f64,
    lipschitz: f64,
    delta: f64,
    inexactness: f64,
    r0_sq: f64,
    out: *mut SgBound,
) -> SgStatus {
    guard(|| {
        put_bound(
            out,
            certificates::bound_theorem7(k, alpha, lipschitz, delta, inexactness, r0_sq)?,
        )
    })
}

/// Radius around `x0` that projection-free partial-step runs stay within.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_trajectory_radius(lipschitz: f64, alpha: f64, r0: f64, out: *mut f64) -> SgStatus {
    guard(|| {
        *out_ptr(out, "out")? = certificates::trajectory_radius(lipschitz, alpha, r0)?;
        Ok(())
    })
}

/// `2 M^2 / (mu (N + 1))`
#[no_mangle]
pub extern "C" fn sg_bound_harmonic_original(lipschitz: f64, mu: f64, n: usize) -> f64 {
    certificates::bound_harmonic_original(lipschitz, mu, n)
}

/// Adaptive value bound over the first `n` averaging iterates of `trace`.
///
/// # Safety
/// `trace` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_harmonic_adaptive(trace: *const SgTrace, mu: f64, n: usize, out: *mut f64) -> SgStatus {
    guard(|| {
        *out_ptr(out, "out")? = certificates::bound_harmonic_adaptive(trace_ref(trace)?, mu, n)?;
        Ok(())
    })
}

/// Bound on `||x_hat - x*||^2`; uses the trace's gradients when `trace` is
/// non-null and `4 M^2/(mu^2 (N+1))` otherwise.
///
/// # Safety
/// `trace` must be a live handle or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_bound_harmonic_argument(
    trace: *const SgTrace,
    lipschitz: f64,
    mu: f64,
    n: usize,
    out: *mut f64,
) -> SgStatus {
    guard(|| {
        let mode = match trace.as_ref() {
            Some(t) => ArgumentMode::Adaptive { trace: &t.inner },
            None => ArgumentMode::Global { lipschitz },
        };
        *out_ptr(out, "out")? = certificates::bound_harmonic_argument(mode, mu, n)?;
        Ok(())
    })
}

// Geometry and feasibility

/// Projection of `x` onto the ball of radius `radius` around `center`
/// (the origin when `center` is null).
///
/// # Safety
/// `x` and `out` must point to `dim` doubles; `center` null or `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn sg_project_ball(
    x: *const f64,
    dim: usize,
    center: *const f64,
    radius: f64,
    out: *mut f64,
) -> SgStatus {
    guard(|| {
        let c = if center.is_null() {
            vec![0.0; dim]
        } else {
            read(center, dim, "center")?.to_vec()
        };
        let p = project_ball(read(x, dim, "x")?, &Ball::new(c, radius)?)?;
        write(out, dim, "out")?.copy_from_slice(&p);
        Ok(())
    })
}

/// Sequential projection onto `count` balls of common radius, each visit
/// stopping at distance `f_bar`. `budget` caps the total iterations (0: no
/// cap). Writes the best point, its largest ball distance and the number of
/// iterations used.
///
/// # Safety
/// `centers` must point to `count * dim` doubles, `x0` and `point` to `dim`
/// doubles; `max_dist` and `iterations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_sequential_project(
    centers: *const f64,
    count: usize,
    dim: usize,
    radius: f64,
    f_bar: f64,
    x0: *const f64,
    max_iters_per_ball: usize,
    sweeps: usize,
    budget: usize,
    point: *mut f64,
    max_dist: *mut f64,
    iterations: *mut usize,
) -> SgStatus {
    guard(|| {
        let balls = read_points(centers, count, dim, "centers")?
            .into_iter()
            .map(|c| Ball::new(c, radius))
            .collect::<Result<Vec<_>, _>>()?;
        let system = BallSystem::uniform(balls, f_bar.max(0.0), f_bar)?;
        let budget = (budget > 0).then_some(budget);
        let res = sequential_project_with_budget(&system, read(x0, dim, "x0")?, max_iters_per_ball, sweeps, budget)?;
        let (max_dist, iterations) = (out_ptr(max_dist, "max_dist")?, out_ptr(iterations, "iterations")?);
        write(point, dim, "point")?.copy_from_slice(&res.point);
        *max_dist = res.max_distance();
        *iterations = res.iterations_used;
        Ok(())
    })
}
