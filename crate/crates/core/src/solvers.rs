//! The projected subgradient iteration `x_{k+1} = Pr_Q(x_k - h_k g_k)` with
//! Polyak-type and harmonic step sizes.

use crate::error::{check_dim, invalid, Error, Result};
use crate::geometry::project_ball;
use crate::linalg;
use crate::oracles::{ObjectiveValue, ProblemSpec};

/// Step-size rule.
#[derive(Debug, Clone, PartialEq)]
pub enum StepRule {
    /// `beta (f - f_bar) / ||g||^2`
    PolyakAdaptive { beta: f64, f_bar: f64 },
    /// `beta (f - f_bar) / M^2`
    PolyakLipschitz { beta: f64, f_bar: f64, lipschitz: f64 },
    /// `(f - f_bar) / (M ||g||)`
    PolyakPartial { f_bar: f64, lipschitz: f64 },
    /// `(f - f_bar - delta) / (M ||g||)`. With `delta = None` the oracle's
    /// reported inexactness for the current query is used.
    PolyakDeltaPartial {
        f_bar: f64,
        delta: Option<f64>,
        lipschitz: f64,
    },
    /// `2 / (mu (k + 1))`
    HarmonicStronglyConvex { mu: f64 },
}

impl StepRule {
    pub fn name(&self) -> &'static str {
        match self {
            StepRule::PolyakAdaptive { .. } => "polyak_adaptive",
            StepRule::PolyakLipschitz { .. } => "polyak_lipschitz",
            StepRule::PolyakPartial { .. } => "polyak_partial",
            StepRule::PolyakDeltaPartial { .. } => "polyak_delta_partial",
            StepRule::HarmonicStronglyConvex { .. } => "harmonic_strongly_convex",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &'static str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(invalid(name, format!("must be positive and finite, got {v}")))
            }
        };
        let beta_ok = |beta: f64| {
            if beta > 0.0 && beta <= 1.0 {
                Ok(())
            } else {
                Err(invalid("beta", format!("must lie in (0, 1], got {beta}")))
            }
        };
        let finite = |name: &'static str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(invalid(name, "must be finite"))
            }
        };
        match *self {
            StepRule::PolyakAdaptive { beta, f_bar } => {
                beta_ok(beta)?;
                finite("f_bar", f_bar)
            }
            StepRule::PolyakLipschitz {
                beta,
                f_bar,
                lipschitz,
            } => {
                beta_ok(beta)?;
                finite("f_bar", f_bar)?;
                positive("M", lipschitz)
            }
            StepRule::PolyakPartial { f_bar, lipschitz } => {
                finite("f_bar", f_bar)?;
                positive("M", lipschitz)
            }
            StepRule::PolyakDeltaPartial {
                f_bar,
                delta,
                lipschitz,
            } => {
                finite("f_bar", f_bar)?;
                if let Some(d) = delta {
                    if !(d >= 0.0 && d.is_finite()) {
                        return Err(invalid("delta", "must be non-negative"));
                    }
                }
                positive("M", lipschitz)
            }
            StepRule::HarmonicStronglyConvex { mu } => positive("mu", mu),
        }
    }

    /// Target level below which the Polyak rules stop; `None` for the
    /// harmonic rule.
    pub fn stop_level(&self) -> Option<f64> {
        match *self {
            StepRule::PolyakAdaptive { f_bar, .. }
            | StepRule::PolyakLipschitz { f_bar, .. }
            | StepRule::PolyakPartial { f_bar, .. } => Some(f_bar),
            StepRule::PolyakDeltaPartial { f_bar, delta, .. } => Some(f_bar + delta.unwrap_or(0.0)),
            StepRule::HarmonicStronglyConvex { .. } => None,
        }
    }

    pub fn is_harmonic(&self) -> bool {
        matches!(self, StepRule::HarmonicStronglyConvex { .. })
    }
}

/// Step length for one iteration. `k` is the harmonic iteration number
/// (starting at 1); `inexactness` feeds [`StepRule::PolyakDeltaPartial`]
/// without a fixed `delta`. Returns `None` when a gradient-dependent rule
/// meets a zero gradient.
pub fn step_size(rule: &StepRule, value: f64, grad_norm: f64, k: usize, inexactness: f64) -> Option<f64> {
    let needs_grad = !matches!(
        rule,
        StepRule::PolyakLipschitz { .. } | StepRule::HarmonicStronglyConvex { .. }
    );
    if needs_grad && grad_norm <= 0.0 {
        return None;
    }
    Some(match *rule {
        StepRule::PolyakAdaptive { beta, f_bar } => beta * (value - f_bar) / (grad_norm * grad_norm),
        StepRule::PolyakLipschitz {
            beta,
            f_bar,
            lipschitz,
        } => beta * (value - f_bar) / (lipschitz * lipschitz),
        StepRule::PolyakPartial { f_bar, lipschitz } => (value - f_bar) / (lipschitz * grad_norm),
        StepRule::PolyakDeltaPartial {
            f_bar,
            delta,
            lipschitz,
        } => (value - f_bar - delta.unwrap_or(inexactness)) / (lipschitz * grad_norm),
        StepRule::HarmonicStronglyConvex { mu } => 2.0 / (mu * (k as f64 + 1.0)),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub max_iters: usize,
    /// Project onto the feasible ball after each step.
    pub project: bool,
    /// Query the problem's randomized inexact oracle instead of the exact one.
    pub use_delta_oracle: bool,
    /// Absolute slack on the `value <= f_bar` stopping test.
    pub target_tolerance: f64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_iters: 1000,
            project: true,
            use_delta_oracle: false,
            target_tolerance: 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    MaxIters,
    ZeroGradient,
    ReachedFBar,
    NonpositiveStep,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::MaxIters => "max_iters",
            Termination::ZeroGradient => "zero_gradient",
            Termination::ReachedFBar => "reached_f_bar",
            Termination::NonpositiveStep => "nonpositive_step",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterateRecord {
    pub k: usize,
    pub x: Vec<f64>,
    /// Value returned by the oracle (inexact under a randomized oracle).
    pub value: f64,
    /// Objective value for reporting; see `objective_is_proxy`.
    pub objective: f64,
    pub objective_is_proxy: bool,
    pub grad_norm: f64,
    /// Step taken from this iterate, `None` on the last record.
    pub step: Option<f64>,
    pub dist_sq: Option<f64>,
    pub inexactness: f64,
    /// `||x_k - x_0||`
    pub radius_from_start: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub records: Vec<IterateRecord>,
    pub terminated_by: Termination,
    /// Weighted average of the harmonic method.
    pub x_hat: Option<Vec<f64>>,
    pub rule: StepRule,
}

impl Trace {
    pub fn last(&self) -> &IterateRecord {
        self.records.last().expect("trace has at least one record")
    }

    /// Number of steps taken.
    pub fn steps(&self) -> usize {
        self.records.iter().filter(|r| r.step.is_some()).count()
    }

    pub fn max_radius(&self) -> f64 {
        self.records.iter().map(|r| r.radius_from_start).fold(0.0, f64::max)
    }

    pub fn grad_norms(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.grad_norm).collect()
    }

    /// Iterates entering the harmonic average: every iterate a step was
    /// taken from, plus the final one when the run stopped at a zero gradient.
    pub fn averaging_points(&self) -> Vec<&IterateRecord> {
        self.records
            .iter()
            .filter(|r| r.step.is_some() || self.terminated_by == Termination::ZeroGradient && r.k + 1 == self.records.len())
            .collect()
    }
}

/// `sum_{k=1}^N 2k/(N(N+1)) x_k`, the last weight absorbing rounding so the
/// weights sum to one.
pub fn weighted_average(points: &[&[f64]]) -> Result<Vec<f64>> {
    let n = points.len();
    let first = points
        .first()
        .ok_or_else(|| Error::ShortTrace("no averaging iterates".into()))?;
    let dim = first.len();
    let denom = (n as f64) * (n as f64 + 1.0);
    let mut out = linalg::zeros(dim);
    let mut used = 0.0;
    for (i, x) in points.iter().enumerate() {
        check_dim(dim, x.len())?;
        let w = if i + 1 == n {
            1.0 - used
        } else {
            2.0 * (i as f64 + 1.0) / denom
        };
        used += w;
        linalg::axpy(w, x, &mut out);
    }
    Ok(out)
}

/// Harmonic average of a trace's averaging iterates.
pub fn trace_average(trace: &Trace) -> Result<Vec<f64>> {
    let pts: Vec<&[f64]> = trace.averaging_points().iter().map(|r| r.x.as_slice()).collect();
    weighted_average(&pts)
}

/// Runs the method from `x0`.
///
/// Record `i` holds `x_i`. For the harmonic rule record `i` is the iterate
/// numbered `i + 1`, so the first step is `2 / (2 mu)`.
pub fn iterate(problem: &ProblemSpec, rule: &StepRule, x0: &[f64], opts: &RunOptions) -> Result<Trace> {
    rule.validate()?;
    check_dim(problem.dimension, x0.len())?;
    if x0.iter().any(|v| !v.is_finite()) {
        return Err(invalid("x0", "coordinates must be finite"));
    }
    let feasible = &problem.feasible_set;
    if opts.project && !feasible.contains(x0, 1e-12) {
        let distance = linalg::dist(x0, feasible.center()) - feasible.radius();
        return Err(Error::InfeasibleStart { distance });
    }
    let mut rng = if opts.use_delta_oracle {
        if !problem.has_delta_oracle() {
            return Err(Error::Unsupported(format!("{} has no inexact oracle", problem.name())));
        }
        problem.run_rng()
    } else {
        None
    };

    let query = |x: &[f64], rng: &mut Option<_>| -> Result<(IterateRecord, Vec<f64>)> {
        let (out, objective) = match rng {
            Some(r) => (problem.delta_oracle(x, r)?, problem.objective(x)?),
            None => {
                let out = problem.oracle(x)?;
                let obj = ObjectiveValue {
                    value: out.value,
                    proxy: false,
                };
                (out, obj)
            }
        };
        let record = IterateRecord {
            k: 0,
            x: x.to_vec(),
            value: out.value,
            objective: objective.value,
            objective_is_proxy: objective.proxy,
            grad_norm: linalg::norm(&out.subgradient),
            step: None,
            dist_sq: problem.dist_sq_to_target(x),
            inexactness: out.inexactness,
            radius_from_start: linalg::dist(x, x0),
        };
        Ok((record, out.subgradient))
    };
    let realized_delta = matches!(rule, StepRule::PolyakDeltaPartial { delta: None, .. });

    let mut records: Vec<IterateRecord> = Vec::with_capacity(opts.max_iters.min(1 << 16) + 1);
    let (mut current, mut grad) = query(x0, &mut rng)?;
    let terminated_by = loop {
        let k = records.len();
        current.k = k;
        if let Some(level) = rule.stop_level() {
            if current.value - level <= opts.target_tolerance {
                records.push(current);
                break Termination::ReachedFBar;
            }
        }
        if k >= opts.max_iters {
            records.push(current);
            break Termination::MaxIters;
        }
        let Some(h) = step_size(rule, current.value, current.grad_norm, k + 1, current.inexactness)
            .filter(|_| current.grad_norm > 0.0)
        else {
            records.push(current);
            break Termination::ZeroGradient;
        };
        let h = if h <= 0.0 && realized_delta {
            // This answer certifies no progress; stay put and query again.
            0.0
        } else if !(h > 0.0 && h.is_finite()) {
            records.push(current);
            break Termination::NonpositiveStep;
        } else {
            h
        };
        let mut next = current.x.clone();
        linalg::axpy(-h, &grad, &mut next);
        if opts.project {
            next = project_ball(&next, feasible)?;
        }
        current.step = Some(h);
        records.push(current);
        (current, grad) = query(&next, &mut rng)?;
    };

    let mut trace = Trace {
        records,
        terminated_by,
        x_hat: None,
        rule: rule.clone(),
    };
    if rule.is_harmonic() && !trace.averaging_points().is_empty() {
        trace.x_hat = Some(trace_average(&trace)?);
    }
    Ok(trace)
}
