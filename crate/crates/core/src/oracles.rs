//! Test objectives exposed as first-order oracles, each carrying the
//! analytically known sharpness and regularity constants.
//!
//! A [`ProblemSpec`] bundles an [`Objective`], the feasible ball and a
//! [`SharpnessInfo`] record. The metadata states a relaxed sharp-minimum
//! inequality
//!
//! ```text
//! f(x) - f_bar >= alpha * dist(x, target) - delta      for all feasible x
//! ```
//!
//! where `target` is a set of points whose objective value does not exceed
//! `f_bar` (usually the solution set). Every distance-based certificate is
//! measured against that set.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{check_dim, invalid, Error, Result};
use crate::geometry::{dist_to_ball, dist_to_capsule, Ball, Capsule};
use crate::linalg;

/// Value and (possibly inexact) subgradient returned by an oracle query.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleOutput {
    pub value: f64,
    pub subgradient: Vec<f64>,
    /// Additive slack `d` such that `f(y) >= value + <g, y - x> - d` for all `y`.
    /// Zero for exact oracles.
    pub inexactness: f64,
}

impl OracleOutput {
    fn exact(value: f64, subgradient: Vec<f64>) -> Self {
        OracleOutput {
            value,
            subgradient,
            inexactness: 0.0,
        }
    }
}

/// Objective value used for reporting. `proxy` marks an upper estimate
/// standing in for a value that is not computed exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveValue {
    pub value: f64,
    pub proxy: bool,
}

/// Reference set for distance certificates.
#[derive(Debug, Clone, PartialEq)]
pub enum TargetSet {
    Unknown,
    Point(Vec<f64>),
    Ball(Ball),
    Capsule(Capsule),
}

impl TargetSet {
    pub fn dist(&self, x: &[f64]) -> Option<f64> {
        match self {
            TargetSet::Unknown => None,
            TargetSet::Point(p) => Some(linalg::dist(x, p)),
            TargetSet::Ball(b) => dist_to_ball(x, b).ok().map(|(d, _)| d),
            TargetSet::Capsule(c) => dist_to_capsule(x, c).ok().map(|(d, _)| d),
        }
    }

    pub fn dist_sq(&self, x: &[f64]) -> Option<f64> {
        match self {
            TargetSet::Point(p) => Some(linalg::dist_sq(x, p)),
            _ => self.dist(x).map(|d| d * d),
        }
    }

    pub fn is_known(&self) -> bool {
        !matches!(self, TargetSet::Unknown)
    }
}

/// Sharp-minimum and regularity constants of a problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessInfo {
    /// Sharp-minimum modulus.
    pub alpha: f64,
    /// Additive relaxation of the sharp-minimum inequality.
    pub delta: f64,
    /// Approximate minimal value; `None` when nothing better than `f_star`
    /// is available and `f_star` is itself unknown.
    pub f_bar: Option<f64>,
    /// Weak quasiconvexity parameter in `(0, 1]`; 1 for convex objectives.
    pub beta: f64,
    /// Bound on subgradient norms over the feasible set.
    pub lipschitz: Option<f64>,
    /// Strong convexity modulus, 0 when not strongly convex.
    pub strong_convexity: f64,
    pub f_star: Option<f64>,
    pub target: TargetSet,
    /// Free-form provenance notes (derived constants, known caveats).
    pub notes: Vec<String>,
}

impl SharpnessInfo {
    pub fn minimizer(&self) -> Option<&[f64]> {
        match &self.target {
            TargetSet::Point(p) => Some(p),
            _ => None,
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.alpha > 0.0) {
            return Err(invalid("alpha", "must be positive"));
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            return Err(invalid("beta", "must lie in (0, 1]"));
        }
        if self.delta < 0.0 {
            return Err(invalid("delta", "must be non-negative"));
        }
        if let (Some(f_bar), Some(f_star)) = (self.f_bar, self.f_star) {
            if f_bar < f_star - 1e-12 * (1.0 + f_star.abs()) {
                return Err(invalid("f_bar", format!("{f_bar} is below f* = {f_star}")));
            }
        }
        Ok(())
    }
}

/// Named objective with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Objective {
    /// `||x|| + gamma * ||x - shift||^2`
    NormPlusQuadratic { gamma: f64, shift: Vec<f64> },
    /// `scale * max_i ||x - a_i||`, or `max_i ||x - a_i||^2` when `squared`.
    EnclosingBall {
        points: Vec<Vec<f64>>,
        scale: f64,
        squared: bool,
    },
    /// `dist(x, capsule) + gamma * ||x||^2`
    CapsuleRegularized { capsule: Capsule, gamma: f64 },
    /// Distance to the convex hull of equal balls, queried through a
    /// random-center inexact oracle.
    HullOfBalls {
        centers: Vec<Vec<f64>>,
        radius: f64,
        seed: u64,
    },
    /// `|x| (1 - exp(-|x|))` on the real line.
    WeaklyQuasiconvex1d,
    /// `dist(x, ball)`
    DistToBall { ball: Ball },
}

impl Objective {
    pub fn name(&self) -> &'static str {
        match self {
            Objective::NormPlusQuadratic { .. } => "norm_plus_quadratic",
            Objective::EnclosingBall { .. } => "enclosing_ball",
            Objective::CapsuleRegularized { .. } => "capsule_regularized",
            Objective::HullOfBalls { .. } => "hull_of_balls_inexact",
            Objective::WeaklyQuasiconvex1d => "weakly_quasiconvex_1d",
            Objective::DistToBall { .. } => "dist_to_ball",
        }
    }
}

/// Objective, feasible set and metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub objective: Objective,
    pub feasible_set: Ball,
    pub sharpness: SharpnessInfo,
    pub dimension: usize,
}

impl ProblemSpec {
    fn build(objective: Objective, feasible_set: Ball, sharpness: SharpnessInfo) -> Result<Self> {
        let dimension = feasible_set.dim();
        sharpness.check()?;
        if let Some(x) = sharpness.minimizer() {
            check_dim(dimension, x.len())?;
            if !feasible_set.contains(x, 1e-12) {
                return Err(invalid("feasible_set", "does not contain the known minimizer"));
            }
        }
        Ok(ProblemSpec {
            objective,
            feasible_set,
            sharpness,
            dimension,
        })
    }

    pub fn name(&self) -> &'static str {
        self.objective.name()
    }

    /// Records an externally computed solution (e.g. from a reference run).
    pub fn with_known_solution(mut self, minimizer: Vec<f64>, f_star: f64) -> Result<Self> {
        check_dim(self.dimension, minimizer.len())?;
        self.sharpness.target = TargetSet::Point(minimizer);
        self.sharpness.f_star = Some(f_star);
        if self.sharpness.f_bar.is_none() {
            self.sharpness.f_bar = Some(f_star);
        }
        self.sharpness.check()?;
        Ok(self)
    }

    /// Whether a randomized inexact oracle is available.
    pub fn has_delta_oracle(&self) -> bool {
        matches!(self.objective, Objective::HullOfBalls { .. })
    }

    /// Fresh random state for one solver run, seeded from the problem.
    pub fn run_rng(&self) -> Option<ChaCha8Rng> {
        match self.objective {
            Objective::HullOfBalls { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        }
    }

    /// Exact value and subgradient.
    pub fn oracle(&self, x: &[f64]) -> Result<OracleOutput> {
        check_dim(self.dimension, x.len())?;
        match &self.objective {
            Objective::NormPlusQuadratic { gamma, shift } => {
                let nx = linalg::norm(x);
                let value = nx + gamma * linalg::dist_sq(x, shift);
                let g = x
                    .iter()
                    .zip(shift)
                    .map(|(xi, ci)| {
                        let unit = if nx > 0.0 { xi / nx } else { 0.0 };
                        unit + 2.0 * gamma * (xi - ci)
                    })
                    .collect();
                Ok(OracleOutput::exact(value, g))
            }
            Objective::EnclosingBall {
                points,
                scale,
                squared,
            } => {
                let (j, d_sq) = farthest_point(points, x);
                let a = &points[j];
                if *squared {
                    let g = x.iter().zip(a).map(|(xi, ai)| 2.0 * (xi - ai)).collect();
                    Ok(OracleOutput::exact(d_sq, g))
                } else {
                    let d = d_sq.sqrt();
                    let g = if d > 0.0 {
                        x.iter().zip(a).map(|(xi, ai)| scale * (xi - ai) / d).collect()
                    } else {
                        linalg::zeros(x.len())
                    };
                    Ok(OracleOutput::exact(scale * d, g))
                }
            }
            Objective::CapsuleRegularized { capsule, gamma } => {
                let (d, mut g) = dist_to_capsule(x, capsule)?;
                linalg::axpy(2.0 * gamma, x, &mut g);
                Ok(OracleOutput::exact(d + gamma * linalg::norm_sq(x), g))
            }
            Objective::HullOfBalls {
                centers, radius, ..
            } => match centers.len() {
                1 => {
                    let ball = Ball::new(centers[0].clone(), *radius)?;
                    let (v, g) = dist_to_ball(x, &ball)?;
                    Ok(OracleOutput::exact(v, g))
                }
                2 => {
                    let cap = Capsule::new(centers[0].clone(), centers[1].clone(), *radius)?;
                    let (v, g) = dist_to_capsule(x, &cap)?;
                    Ok(OracleOutput::exact(v, g))
                }
                m => Err(Error::Unsupported(format!(
                    "exact oracle for the hull of {m} balls; use the inexact oracle"
                ))),
            },
            Objective::WeaklyQuasiconvex1d => {
                let t = x[0].abs();
                let e = (-t).exp();
                let value = t * (1.0 - e);
                let slope = if x[0] == 0.0 {
                    0.0
                } else {
                    x[0].signum() * (1.0 - e + t * e)
                };
                Ok(OracleOutput::exact(value, vec![slope]))
            }
            Objective::DistToBall { ball } => {
                let (v, g) = dist_to_ball(x, ball)?;
                Ok(OracleOutput::exact(v, g))
            }
        }
    }

    /// Inexact oracle. The hull-of-balls objective answers with the distance
    /// and direction to one uniformly drawn ball and reports the tightest
    /// slack that makes the answer a valid lower model of the objective.
    pub fn delta_oracle<R: Rng + ?Sized>(&self, x: &[f64], rng: &mut R) -> Result<OracleOutput> {
        check_dim(self.dimension, x.len())?;
        match &self.objective {
            Objective::HullOfBalls {
                centers, radius, ..
            } => {
                let j = rng.random_range(0..centers.len());
                let ball = Ball::new(centers[j].clone(), *radius)?;
                let (value, g) = dist_to_ball(x, &ball)?;
                // For a unit g pointing away from center j, the hull's support
                // function exceeds that of ball j by max_i <g, O_i - O_j>.
                let inexactness = if value > 0.0 {
                    let own = linalg::dot(&g, &centers[j]);
                    centers
                        .iter()
                        .map(|c| linalg::dot(&g, c) - own)
                        .fold(0.0, f64::max)
                } else {
                    0.0
                };
                Ok(OracleOutput {
                    value,
                    subgradient: g,
                    inexactness,
                })
            }
            other => Err(Error::Unsupported(format!(
                "{} has no inexact oracle",
                other.name()
            ))),
        }
    }

    /// Objective value for reporting.
    pub fn objective(&self, x: &[f64]) -> Result<ObjectiveValue> {
        match &self.objective {
            Objective::HullOfBalls {
                centers, radius, ..
            } if centers.len() > 2 => {
                check_dim(self.dimension, x.len())?;
                let value = centers
                    .iter()
                    .map(|c| (linalg::dist(x, c) - radius).max(0.0))
                    .fold(f64::INFINITY, f64::min);
                Ok(ObjectiveValue { value, proxy: true })
            }
            _ => Ok(ObjectiveValue {
                value: self.oracle(x)?.value,
                proxy: false,
            }),
        }
    }

    /// Squared distance from `x` to the metadata's target set, if known.
    pub fn dist_sq_to_target(&self, x: &[f64]) -> Option<f64> {
        self.sharpness.target.dist_sq(x)
    }
}

/// Smallest index attaining the largest squared distance.
fn farthest_point(points: &[Vec<f64>], x: &[f64]) -> (usize, f64) {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, a) in points.iter().enumerate() {
        let d = linalg::dist_sq(x, a);
        if d > best.1 {
            best = (i, d);
        }
    }
    best
}

fn check_points(points: &[Vec<f64>], name: &'static str) -> Result<usize> {
    let first = points
        .first()
        .ok_or_else(|| invalid(name, "at least one point is required"))?;
    let dim = first.len();
    if dim == 0 {
        return Err(invalid(name, "points must have positive dimension"));
    }
    for p in points {
        check_dim(dim, p.len())?;
    }
    Ok(dim)
}

/// `f(x) = ||x|| + gamma * ||x - shift||^2` with `gamma` the coefficient of
/// the quadratic term.
///
/// With `shift = 0` the minimum is sharp (`alpha = 1`, `delta = 0`,
/// `f* = 0` at the origin). Otherwise `f_bar = f(0) = gamma ||shift||^2`
/// and `delta = 2 gamma ||shift||^2`.
pub fn norm_plus_quadratic(gamma: f64, shift: Vec<f64>, feasible: Ball) -> Result<ProblemSpec> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(invalid("gamma", format!("must be positive, got {gamma}")));
    }
    check_dim(feasible.dim(), shift.len())?;
    let n = shift.len();
    let c_norm = linalg::norm(&shift);
    let lipschitz = (!feasible.is_unbounded()).then(|| {
        1.0 + 2.0 * gamma * (linalg::dist(feasible.center(), &shift) + feasible.radius())
    });
    let mut notes = Vec::new();
    let sharpness = if c_norm == 0.0 {
        SharpnessInfo {
            alpha: 1.0,
            delta: 0.0,
            f_bar: Some(0.0),
            beta: 1.0,
            lipschitz,
            strong_convexity: 2.0 * gamma,
            f_star: Some(0.0),
            target: TargetSet::Point(linalg::zeros(n)),
            notes,
        }
    } else {
        // Minimizer: the origin while ||2 gamma shift|| <= 1, otherwise on the
        // ray through `shift`.
        let (x_star, f_star) = if 2.0 * gamma * c_norm <= 1.0 {
            (linalg::zeros(n), gamma * c_norm * c_norm)
        } else {
            let t = 1.0 - 1.0 / (2.0 * gamma * c_norm);
            (linalg::scale(&shift, t), c_norm - 1.0 / (4.0 * gamma))
        };
        let f_bar = gamma * c_norm * c_norm;
        notes.push("delta = 2 gamma ||c||^2 with f_bar = f(0)".to_string());
        SharpnessInfo {
            alpha: 1.0,
            delta: 2.0 * f_bar,
            f_bar: Some(f_bar),
            beta: 1.0,
            lipschitz,
            strong_convexity: 2.0 * gamma,
            f_star: Some(f_star),
            target: TargetSet::Point(x_star),
            notes,
        }
    };
    ProblemSpec::build(Objective::NormPlusQuadratic { gamma, shift }, feasible, sharpness)
}

/// Smallest-enclosing-ball objective.
///
/// Non-squared: `scale * max_i ||x - a_i||`, sharp with `alpha = scale`
/// because the maximum dominates `||x - x*||`. An optional `approx_min`
/// becomes `f_bar` with `delta = f_bar`.
///
/// Squared: `max_i ||x - a_i||^2`, 2-strongly convex; its relaxed sharp
/// constants come from [`weak_sharp_to_delta`] with `mu = 1, p = 2, eps = 1`.
pub fn enclosing_ball(
    points: Vec<Vec<f64>>,
    scale_alpha: f64,
    squared: bool,
    feasible: Ball,
    approx_min: Option<f64>,
) -> Result<ProblemSpec> {
    let dim = check_points(&points, "points")?;
    check_dim(feasible.dim(), dim)?;
    if !(scale_alpha > 0.0) {
        return Err(invalid("scale_alpha", "must be positive"));
    }
    let mut notes = Vec::new();
    let sharpness = if squared {
        let lipschitz = (!feasible.is_unbounded()).then(|| {
            points
                .iter()
                .map(|a| 2.0 * (linalg::dist(a, feasible.center()) + feasible.radius()))
                .fold(0.0, f64::max)
        });
        let (alpha, delta) = weak_sharp_to_delta(1.0, 2.0, 1.0, approx_min.unwrap_or(0.0).max(0.0))?;
        notes.push("alpha, delta from the quadratic growth of a 2-strongly convex max".to_string());
        SharpnessInfo {
            alpha,
            delta,
            f_bar: approx_min,
            beta: 1.0,
            lipschitz,
            strong_convexity: 2.0,
            f_star: None,
            target: TargetSet::Unknown,
            notes,
        }
    } else {
        if let Some(f_bar) = approx_min {
            if f_bar < 0.0 {
                return Err(invalid("approx_min", "must be non-negative"));
            }
        }
        notes.push("alpha = scale since max_i ||x - a_i|| >= ||x - x*||".to_string());
        SharpnessInfo {
            alpha: scale_alpha,
            delta: approx_min.unwrap_or(0.0),
            f_bar: approx_min,
            beta: 1.0,
            lipschitz: Some(scale_alpha),
            strong_convexity: 0.0,
            f_star: None,
            target: TargetSet::Unknown,
            notes,
        }
    };
    ProblemSpec::build(
        Objective::EnclosingBall {
            points,
            scale: scale_alpha,
            squared,
        },
        feasible,
        sharpness,
    )
}

/// `F(x) = dist(x, capsule) + gamma ||x||^2` on the ball of radius `big_r`
/// around the origin.
///
/// The capsule itself serves as target set: every point of it has
/// `F <= gamma R^2 = f_bar`, and `F >= dist(., capsule)` gives the relaxed
/// sharp inequality with `alpha = 1`, `delta = gamma R^2`.
pub fn capsule_regularized(capsule: Capsule, gamma: f64, big_r: f64) -> Result<ProblemSpec> {
    if !(gamma > 0.0) {
        return Err(invalid("gamma", "must be positive"));
    }
    if !(big_r > 0.0) {
        return Err(invalid("R", "must be positive"));
    }
    for end in [capsule.endpoint_a(), capsule.endpoint_b()] {
        if linalg::norm(end) + capsule.radius() > big_r * (1.0 + 1e-12) {
            return Err(invalid("capsule", format!("not contained in the ball of radius {big_r}")));
        }
    }
    let feasible = Ball::centered(capsule.dim(), big_r)?;
    let f_bar = gamma * big_r * big_r;
    let sharpness = SharpnessInfo {
        alpha: 1.0,
        delta: f_bar,
        f_bar: Some(f_bar),
        beta: 1.0,
        lipschitz: Some(1.0 + 2.0 * gamma * big_r),
        strong_convexity: 2.0 * gamma,
        f_star: None,
        target: TargetSet::Capsule(capsule.clone()),
        notes: vec!["distances are measured to the capsule, a subset of {F <= f_bar}".to_string()],
    };
    ProblemSpec::build(Objective::CapsuleRegularized { capsule, gamma }, feasible, sharpness)
}

/// Distance to the hull of equal balls with a random-center inexact oracle.
///
/// `feasible` defaults to the whole space when `None`.
pub fn hull_of_balls_inexact(
    centers: Vec<Vec<f64>>,
    r: f64,
    rng_seed: u64,
    feasible: Option<Ball>,
) -> Result<ProblemSpec> {
    let dim = check_points(&centers, "centers")?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid("r", "must be positive"));
    }
    let feasible = feasible.unwrap_or_else(|| Ball::unbounded(dim));
    check_dim(feasible.dim(), dim)?;
    let target = match centers.len() {
        1 => TargetSet::Ball(Ball::new(centers[0].clone(), r)?),
        2 => TargetSet::Capsule(Capsule::new(centers[0].clone(), centers[1].clone(), r)?),
        _ => TargetSet::Unknown,
    };
    let mut notes = Vec::new();
    if centers.len() > 2 {
        notes.push("objective values are the per-ball minimum (proxy, exact at 0)".to_string());
    }
    let sharpness = SharpnessInfo {
        alpha: 1.0,
        delta: 0.0,
        f_bar: Some(0.0),
        beta: 1.0,
        lipschitz: Some(1.0),
        strong_convexity: 0.0,
        f_star: Some(0.0),
        target,
        notes,
    };
    ProblemSpec::build(
        Objective::HullOfBalls {
            centers,
            radius: r,
            seed: rng_seed,
        },
        feasible,
        sharpness,
    )
}

/// Default half-width of the working interval for [`weakly_quasiconvex_1d`].
pub const QUASICONVEX_INTERVAL: f64 = 5.0;

/// `f(x) = |x| (1 - exp(-|x|))` on `[-T, T]`, `T = 5`.
///
/// Not convex, but weakly 1-quasiconvex about 0. With `alpha = 1 - 1/e` the
/// relaxation `delta` is the largest violation of `f(x) >= alpha |x|` on the
/// interval, located numerically at construction.
pub fn weakly_quasiconvex_1d() -> Result<ProblemSpec> {
    let half_width = QUASICONVEX_INTERVAL;
    let alpha = 1.0 - (-1.0f64).exp();
    let delta = max_shortfall(alpha, half_width);
    let sharpness = SharpnessInfo {
        alpha,
        delta,
        f_bar: Some(0.0),
        beta: 1.0,
        // f' peaks at |x| = 2.
        lipschitz: Some(1.0 + (-2.0f64).exp()),
        strong_convexity: 0.0,
        f_star: Some(0.0),
        target: TargetSet::Point(vec![0.0]),
        notes: vec![format!("alpha, delta derived numerically on [-{half_width}, {half_width}]")],
    };
    ProblemSpec::build(
        Objective::WeaklyQuasiconvex1d,
        Ball::centered(1, half_width)?,
        sharpness,
    )
}

/// `max_{0 <= t <= T} alpha t - t (1 - e^{-t})`, by a grid scan refined with
/// golden-section search around the best grid node.
fn max_shortfall(alpha: f64, half_width: f64) -> f64 {
    let shortfall = |t: f64| alpha * t - t * (1.0 - (-t).exp());
    const NODES: usize = 20_000;
    let h = half_width / NODES as f64;
    let best = (0..=NODES)
        .map(|i| i as f64 * h)
        .max_by(|a, b| shortfall(*a).total_cmp(&shortfall(*b)))
        .unwrap_or(0.0);
    let (mut lo, mut hi) = ((best - h).max(0.0), (best + h).min(half_width));
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let m1 = hi - ratio * (hi - lo);
        let m2 = lo + ratio * (hi - lo);
        if shortfall(m1) < shortfall(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    shortfall(0.5 * (lo + hi)).max(shortfall(best)).max(0.0)
}

/// Distance to a single ball (`alpha = M = 1`, `f* = 0`, the ball is the
/// solution set).
pub fn dist_to_ball_problem(ball: Ball, feasible: Option<Ball>) -> Result<ProblemSpec> {
    let dim = ball.dim();
    let feasible = feasible.unwrap_or_else(|| Ball::unbounded(dim));
    check_dim(dim, feasible.dim())?;
    let sharpness = SharpnessInfo {
        alpha: 1.0,
        delta: 0.0,
        f_bar: Some(0.0),
        beta: 1.0,
        lipschitz: Some(1.0),
        strong_convexity: 0.0,
        f_star: Some(0.0),
        target: TargetSet::Ball(ball.clone()),
        notes: Vec::new(),
    };
    ProblemSpec::build(Objective::DistToBall { ball }, feasible, sharpness)
}

/// Converts a weak sharp minimum `f - f* >= mu ||x - x*||^p` into relaxed
/// sharp constants `(alpha, delta) = (mu eps^(p-1), mu eps + f_bar_gap)`.
pub fn weak_sharp_to_delta(mu: f64, p: f64, eps: f64, f_bar_gap: f64) -> Result<(f64, f64)> {
    if !(mu > 0.0) {
        return Err(invalid("mu", "must be positive"));
    }
    if !(p > 1.0) {
        return Err(invalid("p", "must exceed 1"));
    }
    if !(eps > 0.0) {
        return Err(invalid("eps", "must be positive"));
    }
    if f_bar_gap < 0.0 {
        return Err(invalid("f_bar_gap", "must be non-negative"));
    }
    Ok((mu * eps.powf(p - 1.0), mu * eps + f_bar_gap))
}
