//! Theoretical convergence bounds evaluated along traces.
//!
//! Series built from a trace are aligned with its records: entry `j` bounds
//! the squared distance of record `j`, so entry 0 is the starting value
//! `R0^2` (plus the floor for the geometric bounds).

use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::solvers::Trace;

/// A bound evaluated along a trace.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSeries {
    pub name: String,
    pub values: Vec<f64>,
    /// Additive term the bound does not descend below.
    pub floor: f64,
    pub assumptions_ok: bool,
    /// Iterations at which a hypothesis of the bound fails.
    pub violations: Vec<usize>,
}

/// Bound value with the outcome of its hypothesis check. The value is
/// computed even when the hypothesis fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certified {
    pub value: f64,
    pub floor: f64,
    pub hypothesis_ok: bool,
}

fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be positive, got {v}")))
    }
}

/// Gradient norms at the iterates a step was taken from.
fn counted_grads(trace: &Trace) -> Vec<f64> {
    trace
        .records
        .iter()
        .filter(|r| r.step.is_some())
        .map(|r| r.grad_norm)
        .collect()
}

/// Theorem 1 bound for the adaptive Polyak step from the recorded gradient
/// norms, via `b_{k+1} = (1 - a^2 b^2 / (2 g_k^2)) b_k + D^2 / (2 g_k^2)`.
pub fn bound_theorem1(trace: &Trace, alpha: f64, beta: f64, delta: f64, r0_sq: f64) -> Result<BoundSeries> {
    bound_theorem1_from_grads(&counted_grads(trace), alpha, beta, delta, r0_sq)
}

/// [`bound_theorem1`] on an explicit gradient-norm sequence `g_0, g_1, ...`;
/// returns `len + 1` values.
pub fn bound_theorem1_from_grads(
    grads: &[f64],
    alpha: f64,
    beta: f64,
    delta: f64,
    r0_sq: f64,
) -> Result<BoundSeries> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    let ab2 = (alpha * beta).powi(2);
    let mut values = Vec::with_capacity(grads.len() + 1);
    let mut b = r0_sq;
    values.push(b);
    let mut violations = Vec::new();
    for (k, &g) in grads.iter().enumerate() {
        if !(g > 0.0) {
            return Err(invalid("trace", format!("zero gradient norm at iteration {k}")));
        }
        let g2 = g * g;
        if ab2 > 2.0 * g2 {
            violations.push(k);
        }
        b = (1.0 - ab2 / (2.0 * g2)) * b + delta * delta / (2.0 * g2);
        values.push(b);
    }
    Ok(BoundSeries {
        name: "theorem1".into(),
        values,
        floor: 0.0,
        assumptions_ok: violations.is_empty(),
        violations,
    })
}

/// Iterations whose gradient norm violates `alpha^2 beta^2 <= 2 g^2`.
pub fn check_theorem1_condition(trace: &Trace, alpha: f64, beta: f64) -> (bool, Vec<usize>) {
    let ab2 = (alpha * beta).powi(2);
    let violated: Vec<usize> = trace
        .records
        .iter()
        .filter(|r| r.step.is_some() && ab2 > 2.0 * r.grad_norm * r.grad_norm)
        .map(|r| r.k)
        .collect();
    (violated.is_empty(), violated)
}

fn geometric(k: usize, base: f64, r0_sq: f64) -> f64 {
    base.powi(k as i32 + 1) * r0_sq
}

/// Theorem 2: `(1 - a^2 b^2/(2M^2))^{k+1} R0^2 + 2 D^2/(a^2 b^2)`.
pub fn bound_theorem2(k: usize, alpha: f64, beta: f64, lipschitz: f64, delta: f64, r0_sq: f64) -> Result<Certified> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    check_positive("M", lipschitz)?;
    let ab2 = (alpha * beta).powi(2);
    let m2 = lipschitz * lipschitz;
    let floor = 2.0 * delta * delta / ab2;
    Ok(Certified {
        value: geometric(k, 1.0 - ab2 / (2.0 * m2), r0_sq) + floor,
        floor,
        hypothesis_ok: ab2 <= 2.0 * m2,
    })
}

/// Corollary 1: `(1 - a^2 b^2/M^2)^{k+1} R0^2`.
pub fn bound_corollary1(k: usize, alpha: f64, beta: f64, lipschitz: f64, r0_sq: f64) -> Result<f64> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    check_positive("M", lipschitz)?;
    if alpha * beta > lipschitz {
        return Err(Error::Hypothesis(format!(
            "alpha * beta = {} exceeds M = {lipschitz}",
            alpha * beta
        )));
    }
    Ok(geometric(k, 1.0 - (alpha * beta / lipschitz).powi(2), r0_sq))
}

/// Theorem 3: `(1 - a^2/M^2)^{k+1} R0^2`.
pub fn bound_theorem3(k: usize, alpha: f64, lipschitz: f64, r0_sq: f64) -> Result<f64> {
    bound_corollary1(k, alpha, 1.0, lipschitz, r0_sq)
}

/// Theorem 4: `(1 - a^2/(2M^2))^{k+1} R0^2 + 2 D^2/a^2`.
pub fn bound_theorem4(k: usize, alpha: f64, lipschitz: f64, delta: f64, r0_sq: f64) -> Result<Certified> {
    bound_theorem7(k, alpha, lipschitz, delta, 0.0, r0_sq)
}

/// Theorem 7: `(1 - a^2/(2M^2))^{k+1} R0^2 + 2 (D + d)^2/a^2`.
pub fn bound_theorem7(
    k: usize,
    alpha: f64,
    lipschitz: f64,
    delta: f64,
    inexactness: f64,
    r0_sq: f64,
) -> Result<Certified> {
    check_positive("alpha", alpha)?;
    check_positive("M", lipschitz)?;
    let a2 = alpha * alpha;
    let m2 = lipschitz * lipschitz;
    let floor = 2.0 * (delta + inexactness).powi(2) / a2;
    Ok(Certified {
        value: geometric(k, 1.0 - a2 / (2.0 * m2), r0_sq) + floor,
        floor,
        hypothesis_ok: a2 <= 2.0 * m2,
    })
}

/// Theorem 5: `((M + sqrt(M^2 - a^2)) / a^2) R0`.
pub fn trajectory_radius(lipschitz: f64, alpha: f64, r0: f64) -> Result<f64> {
    check_positive("alpha", alpha)?;
    check_positive("M", lipschitz)?;
    if alpha > lipschitz {
        return Err(Error::Hypothesis(format!("alpha = {alpha} exceeds M = {lipschitz}")));
    }
    Ok((lipschitz + (lipschitz * lipschitz - alpha * alpha).sqrt()) / (alpha * alpha) * r0)
}

/// `2 M^2 / (mu (N + 1))`
pub fn bound_harmonic_original(lipschitz: f64, mu: f64, n: usize) -> f64 {
    2.0 * lipschitz * lipschitz / (mu * (n as f64 + 1.0))
}

/// `2/(mu N (N+1)) * sum_{k=1}^N k g_k^2/(k+1)` over the first `N` entries
/// of `grads` (which hold `g_1, g_2, ...`).
pub fn bound_harmonic_adaptive_from(grads: &[f64], mu: f64, n: usize) -> Result<f64> {
    check_positive("mu", mu)?;
    if n == 0 || grads.len() < n {
        return Err(Error::ShortTrace(format!("need {n} gradient norms, have {}", grads.len())));
    }
    let sum: f64 = grads[..n]
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let k = i as f64 + 1.0;
            k * g * g / (k + 1.0)
        })
        .sum();
    let nf = n as f64;
    Ok(2.0 / (mu * nf * (nf + 1.0)) * sum)
}

/// Theorem 8 bound for the first `N` averaging iterates of a harmonic run.
pub fn bound_harmonic_adaptive(trace: &Trace, mu: f64, n: usize) -> Result<f64> {
    let grads: Vec<f64> = trace.averaging_points().iter().map(|r| r.grad_norm).collect();
    bound_harmonic_adaptive_from(&grads, mu, n)
}

/// Source of the Lipschitz information for [`bound_harmonic_argument`].
#[derive(Debug, Clone, Copy)]
pub enum ArgumentMode<'a> {
    /// `4 M^2 / (mu^2 (N+1))`
    Global { lipschitz: f64 },
    /// `(2/mu)` times the adaptive value bound.
    Adaptive { trace: &'a Trace },
}

/// Bound on `||x_hat - x*||^2` for the harmonic method.
pub fn bound_harmonic_argument(mode: ArgumentMode<'_>, mu: f64, n: usize) -> Result<f64> {
    check_positive("mu", mu)?;
    match mode {
        ArgumentMode::Global { lipschitz } => {
            Ok(4.0 * lipschitz * lipschitz / (mu * mu * (n as f64 + 1.0)))
        }
        ArgumentMode::Adaptive { trace } => Ok(2.0 / mu * bound_harmonic_adaptive(trace, mu, n)?),
    }
}

/// Geometric bound series aligned with `len` records:
/// `values[j] = base^j R0^2 + floor`.
pub fn geometric_series(name: &str, len: usize, base: f64, r0_sq: f64, floor: f64, hypothesis_ok: bool) -> BoundSeries {
    let mut values = Vec::with_capacity(len);
    let mut pow = 1.0;
    for _ in 0..len {
        values.push(pow * r0_sq + floor);
        pow *= base;
    }
    BoundSeries {
        name: name.into(),
        values,
        floor,
        assumptions_ok: hypothesis_ok,
        violations: Vec::new(),
    }
}

/// `<g/||g||, x - x*>`, `None` when `g = 0`.
pub fn nu_f(g: &[f64], x: &[f64], x_star: &[f64]) -> Option<f64> {
    let n = linalg::norm(g);
    (n > 0.0).then(|| linalg::dot(g, &linalg::sub(x, x_star)) / n)
}

/// Slack in the per-iteration inequality
/// `h <g, x_k - x> <= h^2 ||g||^2 / 2 + ||x - x_k||^2 / 2 - ||x - x_{k+1}||^2 / 2`;
/// non-negative when it holds.
pub fn lemma2_slack(h: f64, g: &[f64], x_k: &[f64], x_next: &[f64], x: &[f64]) -> f64 {
    let lhs = h * linalg::dot(g, &linalg::sub(x_k, x));
    let rhs = 0.5 * h * h * linalg::norm_sq(g) + 0.5 * linalg::dist_sq(x, x_k) - 0.5 * linalg::dist_sq(x, x_next);
    rhs - lhs
}
