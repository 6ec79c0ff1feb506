//! Common point of a system of balls by sequential projection, each
//! projection carried out by Polyak steps on the distance to one ball.
//!
//! With per-ball targets `f_bar_i = 0` every visit from outside is an exact
//! projection reached in one step. Positive targets stop each visit at
//! distance `f_bar_i` from the ball, which trades accuracy for fewer
//! iterations when the balls barely intersect or do not intersect at all.

use crate::error::{check_dim, invalid, Result};
use crate::geometry::{dist_to_ball, Ball};
use crate::oracles::dist_to_ball_problem;
use crate::solvers::{iterate, RunOptions, StepRule};

#[derive(Debug, Clone, PartialEq)]
pub struct BallSystem {
    pub balls: Vec<Ball>,
    /// Acceptable distance to every ball.
    pub delta_target: f64,
    pub f_bar_per_ball: Vec<f64>,
}

impl BallSystem {
    pub fn new(balls: Vec<Ball>, delta_target: f64, f_bar_per_ball: Vec<f64>) -> Result<Self> {
        let first = balls.first().ok_or_else(|| invalid("balls", "at least one ball is required"))?;
        let dim = first.dim();
        for b in &balls {
            check_dim(dim, b.dim())?;
            if b.is_unbounded() {
                return Err(invalid("balls", "radii must be finite"));
            }
        }
        if !(delta_target >= 0.0) {
            return Err(invalid("delta_target", "must be non-negative"));
        }
        if f_bar_per_ball.len() != balls.len() {
            return Err(invalid("f_bar_per_ball", "needs one entry per ball"));
        }
        if f_bar_per_ball.iter().any(|f| !(*f >= 0.0 && f.is_finite())) {
            return Err(invalid("f_bar_per_ball", "entries must be finite and non-negative"));
        }
        Ok(BallSystem {
            balls,
            delta_target,
            f_bar_per_ball,
        })
    }

    /// Same target for every ball.
    pub fn uniform(balls: Vec<Ball>, delta_target: f64, f_bar: f64) -> Result<Self> {
        let n = balls.len();
        BallSystem::new(balls, delta_target, vec![f_bar; n])
    }

    pub fn dim(&self) -> usize {
        self.balls[0].dim()
    }

    pub fn distances(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.balls.iter().map(|b| dist_to_ball(x, b).map(|(d, _)| d)).collect()
    }

    pub fn max_distance(&self, x: &[f64]) -> Result<f64> {
        Ok(self.distances(x)?.into_iter().fold(0.0, f64::max))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityStep {
    /// Index of the ball being approached.
    pub ball: usize,
    pub step: f64,
    /// Largest distance to any ball after the step.
    pub max_dist: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityResult {
    /// Point with the smallest maximal distance among the starting point and
    /// the points reached after each ball visit.
    pub point: Vec<f64>,
    pub per_ball_dist: Vec<f64>,
    pub iterations_used: usize,
    /// Iterate after the last visit.
    pub last_point: Vec<f64>,
    /// Best maximal distance after each completed sweep.
    pub max_dist_per_sweep: Vec<f64>,
    /// One entry per subgradient step, in order.
    pub history: Vec<FeasibilityStep>,
    /// Some per-ball target is positive, so visits stop short of the ball.
    pub relaxed_targets: bool,
}

impl FeasibilityResult {
    pub fn max_distance(&self) -> f64 {
        self.per_ball_dist.iter().copied().fold(0.0, f64::max)
    }
}

pub fn sequential_project(
    system: &BallSystem,
    x0: &[f64],
    max_iters_per_subproblem: usize,
    sweeps: usize,
) -> Result<FeasibilityResult> {
    sequential_project_with_budget(system, x0, max_iters_per_subproblem, sweeps, None)
}

/// [`sequential_project`] stopping once `total_budget` subgradient
/// iterations have been spent.
pub fn sequential_project_with_budget(
    system: &BallSystem,
    x0: &[f64],
    max_iters_per_subproblem: usize,
    sweeps: usize,
    total_budget: Option<usize>,
) -> Result<FeasibilityResult> {
    check_dim(system.dim(), x0.len())?;
    if max_iters_per_subproblem == 0 || sweeps == 0 {
        return Err(invalid("iterations", "per-subproblem limit and sweeps must be positive"));
    }
    let mut x = x0.to_vec();
    let mut best = (system.max_distance(&x)?, x.clone());
    let mut used = 0usize;
    let mut per_sweep = Vec::with_capacity(sweeps);
    let mut history = Vec::new();
    'sweeps: for _ in 0..sweeps {
        for (index, (ball, &f_bar)) in system.balls.iter().zip(&system.f_bar_per_ball).enumerate() {
            let remaining = total_budget.map_or(usize::MAX, |b| b.saturating_sub(used));
            if remaining == 0 {
                break 'sweeps;
            }
            let problem = dist_to_ball_problem(ball.clone(), None)?;
            let rule = StepRule::PolyakLipschitz {
                beta: 1.0,
                f_bar,
                lipschitz: 1.0,
            };
            let scale = 1.0 + ball.radius() + crate::linalg::norm(ball.center()) + f_bar;
            let opts = RunOptions {
                max_iters: max_iters_per_subproblem.min(remaining),
                project: false,
                use_delta_oracle: false,
                target_tolerance: 1e-12 * scale,
            };
            let trace = iterate(&problem, &rule, &x, &opts)?;
            used += trace.steps();
            for pair in trace.records.windows(2) {
                history.push(FeasibilityStep {
                    ball: index,
                    step: pair[0].step.unwrap_or(0.0),
                    max_dist: system.max_distance(&pair[1].x)?,
                });
            }
            x = trace.last().x.clone();
            let d = system.max_distance(&x)?;
            if d < best.0 {
                best = (d, x.clone());
            }
        }
        per_sweep.push(best.0);
    }
    Ok(FeasibilityResult {
        per_ball_dist: system.distances(&best.1)?,
        point: best.1,
        iterations_used: used,
        last_point: x,
        max_dist_per_sweep: per_sweep,
        history,
        relaxed_targets: system.f_bar_per_ball.iter().any(|f| *f > 0.0),
    })
}
