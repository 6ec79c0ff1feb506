//! Configuration-driven runs that write traces and bound series as CSV.

pub mod config;
pub mod presets;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use config::{ExperimentConfig, PointSet, ProblemConfig, RuleConfig, StartPolicy, VectorSpec};

use crate::certificates::{self, ArgumentMode};
use crate::error::{invalid, Error, Result};
use crate::feasibility::{sequential_project_with_budget, BallSystem};
use crate::geometry::{Ball, Capsule};
use crate::linalg;
use crate::oracles::{self, ProblemSpec};
use crate::reference::minimal_enclosing_ball;
use crate::solvers::{iterate, RunOptions, StepRule, Trace};

pub const PROBLEM_NAMES: &[&str] = &[
    "norm_plus_quadratic",
    "enclosing_ball",
    "capsule_regularized",
    "hull_of_balls_inexact",
    "weakly_quasiconvex_1d",
    "dist_to_ball",
    "ball_system",
];

pub const RULE_NAMES: &[&str] = &[
    "polyak_adaptive",
    "polyak_lipschitz",
    "polyak_partial",
    "polyak_delta_partial",
    "harmonic_strongly_convex",
];

pub const BOUND_NAMES: &[&str] = &[
    "theorem1",
    "theorem2",
    "corollary1",
    "theorem3",
    "theorem4",
    "theorem7",
    "trajectory_radius",
    "harmonic_original",
    "harmonic_adaptive",
    "harmonic_argument_global",
    "harmonic_argument_adaptive",
];

const BASE_COLUMNS: [&str; 7] = ["k", "f", "gap", "dist_sq", "grad_norm", "step", "inexactness"];

/// Outcome of a run, for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub output_path: PathBuf,
    pub rows: usize,
    pub terminated_by: String,
    pub final_gap: Option<f64>,
}

/// Checks names and parameters that can be checked without running.
pub fn validate(cfg: &ExperimentConfig) -> Result<()> {
    if cfg.dimension == 0 {
        return Err(invalid("dimension", "must be positive"));
    }
    if cfg.max_iters == 0 {
        return Err(invalid("max_iters", "must be positive"));
    }
    if let Some(r) = cfg.feasible_radius {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(invalid("feasible_radius", "must be finite and non-negative"));
        }
    }
    for b in &cfg.bounds {
        if !BOUND_NAMES.contains(&b.as_str()) {
            return Err(invalid("bounds", format!("unknown bound `{b}`; known: {}", BOUND_NAMES.join(", "))));
        }
    }
    let is_system = matches!(cfg.problem, ProblemConfig::BallSystem { .. });
    if is_system && (cfg.rule.is_some() || !cfg.bounds.is_empty()) {
        return Err(invalid("rule", "ball_system runs use their own step rule and take no bounds"));
    }
    if !is_system && cfg.rule.is_none() {
        return Err(invalid("rule", "a step rule is required"));
    }
    if cfg.seed.is_none() && (cfg.problem.is_random() || cfg.x0.is_random()) {
        return Err(invalid("seed", "required when points, vectors or the oracle are random"));
    }
    if matches!(cfg.problem, ProblemConfig::WeaklyQuasiconvex1d {}) && cfg.dimension != 1 {
        return Err(invalid("dimension", "weakly_quasiconvex_1d is one-dimensional"));
    }
    Ok(())
}

/// Runs the experiment and writes its CSV atomically.
pub fn run(cfg: &ExperimentConfig) -> Result<RunSummary> {
    let (csv, mut summary) = render(cfg)?;
    write_atomic(&cfg.output_path, &csv)?;
    summary.output_path = cfg.output_path.clone();
    Ok(summary)
}

/// Runs the experiment and returns the CSV text without touching the disk.
pub fn render(cfg: &ExperimentConfig) -> Result<(String, RunSummary)> {
    validate(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.unwrap_or(0));
    let n = cfg.dimension;
    let feasible = match cfg.feasible_radius {
        Some(r) => Ball::centered(n, r)?,
        None => Ball::unbounded(n),
    };
    if let ProblemConfig::BallSystem {
        centers,
        radius,
        delta,
        f_bar,
        sweeps,
    } = &cfg.problem
    {
        let balls = centers
            .build(n, &mut rng)?
            .into_iter()
            .map(|c| Ball::new(c, *radius))
            .collect::<Result<Vec<_>>>()?;
        let system = BallSystem::uniform(balls, *delta, *f_bar)?;
        let x0 = cfg.x0.build(n, cfg.feasible_radius, &mut rng)?;
        return render_feasibility(cfg, &system, &x0, *sweeps);
    }

    let mut notes: Vec<(String, String)> = Vec::new();
    let problem = build_problem(cfg, feasible, &mut rng, &mut notes)?;
    let x0 = cfg.x0.build(n, cfg.feasible_radius, &mut rng)?;
    let rule_cfg = cfg.rule.as_ref().ok_or_else(|| invalid("rule", "a step rule is required"))?;
    let rule = build_rule(rule_cfg, &problem)?;
    let opts = RunOptions {
        max_iters: cfg.max_iters,
        project: cfg.project,
        use_delta_oracle: cfg.use_delta_oracle,
        target_tolerance: 0.0,
    };
    let trace = iterate(&problem, &rule, &x0, &opts)?;

    let mut columns: Vec<(String, Vec<Option<f64>>)> = Vec::new();
    for name in &cfg.bounds {
        let values = bound_column(name, &problem, &rule, &trace, &x0, &mut notes)?;
        columns.push((name.clone(), values));
    }

    let s = &problem.sharpness;
    let (reference_value, reference_name) = match (s.f_star, s.f_bar) {
        (Some(f), _) => (Some(f), "f_star"),
        (None, Some(f)) => (Some(f), "f_bar"),
        (None, None) => (None, "none"),
    };
    let gap = |f: f64| reference_value.map(|r| f - r);

    if rule.is_harmonic() {
        let (gaps, dists) = harmonic_average_columns(&problem, &trace, &gap)?;
        columns.push(("xhat_gap".into(), gaps));
        columns.push(("xhat_dist_sq".into(), dists));
        if let Some(x_hat) = &trace.x_hat {
            let value = problem.objective(x_hat)?.value;
            notes.push(("xhat_gap".into(), opt(gap(value))));
            notes.push(("xhat_dist_sq".into(), opt(problem.dist_sq_to_target(x_hat))));
        }
    }

    let mut out = String::new();
    let header: Vec<&str> = BASE_COLUMNS
        .iter()
        .copied()
        .chain(columns.iter().map(|(name, _)| name.as_str()))
        .collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for (j, r) in trace.records.iter().enumerate() {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{}",
            r.k,
            num(r.objective),
            opt(gap(r.objective)),
            opt(r.dist_sq),
            num(r.grad_norm),
            opt(r.step),
            num(r.inexactness)
        );
        for (_, values) in &columns {
            out.push(',');
            out.push_str(&opt(values.get(j).copied().flatten()));
        }
        out.push('\n');
    }

    let last = trace.last();
    let mut meta = vec![
        ("problem".to_string(), problem.name().to_string()),
        ("rule".to_string(), rule.name().to_string()),
        ("terminated_by".to_string(), trace.terminated_by.as_str().to_string()),
        ("steps".to_string(), trace.steps().to_string()),
        ("gap_reference".to_string(), reference_name.to_string()),
        ("max_radius_from_start".to_string(), num(trace.max_radius())),
    ];
    if let Some(r0) = s.target.dist(&x0) {
        if let Ok(m) = lipschitz_of(&rule, &problem) {
            if let Ok(radius) = certificates::trajectory_radius(m, s.alpha, r0) {
                meta.push(("trajectory_certificate".into(), num(radius)));
            }
        }
    }
    if trace.records.iter().any(|r| r.objective_is_proxy) {
        meta.push(("objective".into(), "proxy".into()));
    }
    for note in &s.notes {
        meta.push(("note".into(), note.replace(',', ";")));
    }
    meta.extend(notes);
    for (key, value) in &meta {
        let _ = writeln!(out, "#{key},{value}");
    }

    let summary = RunSummary {
        output_path: PathBuf::new(),
        rows: trace.records.len(),
        terminated_by: trace.terminated_by.as_str().to_string(),
        final_gap: gap(last.objective),
    };
    Ok((out, summary))
}

fn build_problem(
    cfg: &ExperimentConfig,
    feasible: Ball,
    rng: &mut ChaCha8Rng,
    notes: &mut Vec<(String, String)>,
) -> Result<ProblemSpec> {
    let n = cfg.dimension;
    let problem = match &cfg.problem {
        ProblemConfig::NormPlusQuadratic { gamma, shift } => {
            let c = match shift {
                Some(spec) => spec.build(n, rng)?,
                None => vec![0.0; n],
            };
            oracles::norm_plus_quadratic(*gamma, c, feasible)?
        }
        ProblemConfig::EnclosingBall {
            points,
            scale_alpha,
            squared,
            approx_min,
        } => {
            let pts = points.build(n, rng)?;
            let p = oracles::enclosing_ball(pts.clone(), *scale_alpha, *squared, feasible, *approx_min)?;
            with_enclosing_reference(p, &pts, *scale_alpha, *squared, notes)?
        }
        ProblemConfig::CapsuleRegularized {
            endpoint_a,
            endpoint_b,
            radius,
            gamma,
        } => {
            let big_r = cfg
                .feasible_radius
                .ok_or_else(|| invalid("feasible_radius", "capsule_regularized needs the radius R"))?;
            let capsule = Capsule::new(endpoint_a.build(n, rng)?, endpoint_b.build(n, rng)?, *radius)?;
            oracles::capsule_regularized(capsule, *gamma, big_r)?
        }
        ProblemConfig::HullOfBallsInexact { centers, radius } => {
            let c = centers.build(n, rng)?;
            let seed = cfg.seed.unwrap_or(0);
            oracles::hull_of_balls_inexact(c, *radius, seed, Some(feasible))?
        }
        ProblemConfig::WeaklyQuasiconvex1d {} => oracles::weakly_quasiconvex_1d()?,
        ProblemConfig::DistToBall { center, radius } => {
            let ball = Ball::new(center.build(n, rng)?, *radius)?;
            oracles::dist_to_ball_problem(ball, Some(feasible))?
        }
        ProblemConfig::BallSystem { .. } => unreachable!("handled by the feasibility path"),
    };
    Ok(problem)
}

/// Attaches the minimal enclosing ball as the known solution when it lies in
/// the feasible set.
fn with_enclosing_reference(
    problem: ProblemSpec,
    points: &[Vec<f64>],
    scale: f64,
    squared: bool,
    notes: &mut Vec<(String, String)>,
) -> Result<ProblemSpec> {
    let sol = minimal_enclosing_ball(points, 1e-13, 2_000_000)?;
    if !problem.feasible_set.contains(&sol.center, 1e-12) {
        notes.push(("reference".into(), "enclosing center outside the feasible set; no solution attached".into()));
        return Ok(problem);
    }
    let f_star = if squared {
        sol.radius_sq
    } else {
        scale * sol.radius_sq.sqrt()
    };
    notes.push(("reference".into(), "minimal enclosing ball (dual solver)".into()));
    notes.push(("reference_gap".into(), num(sol.gap)));
    problem.with_known_solution(sol.center, f_star)
}

fn build_rule(cfg: &RuleConfig, problem: &ProblemSpec) -> Result<StepRule> {
    let s = &problem.sharpness;
    let f_bar = |v: Option<f64>| {
        v.or(s.f_bar)
            .ok_or_else(|| invalid("f_bar", "not given and not known for this problem"))
    };
    let lipschitz = |v: Option<f64>| {
        v.or(s.lipschitz)
            .ok_or_else(|| invalid("M", "not given and not known for this problem (unbounded feasible set?)"))
    };
    let rule = match *cfg {
        RuleConfig::PolyakAdaptive { beta, f_bar: fb } => StepRule::PolyakAdaptive {
            beta: beta.unwrap_or(s.beta),
            f_bar: f_bar(fb)?,
        },
        RuleConfig::PolyakLipschitz {
            beta,
            f_bar: fb,
            lipschitz: m,
        } => StepRule::PolyakLipschitz {
            beta: beta.unwrap_or(s.beta),
            f_bar: f_bar(fb)?,
            lipschitz: lipschitz(m)?,
        },
        RuleConfig::PolyakPartial { f_bar: fb, lipschitz: m } => StepRule::PolyakPartial {
            f_bar: f_bar(fb)?,
            lipschitz: lipschitz(m)?,
        },
        RuleConfig::PolyakDeltaPartial {
            f_bar: fb,
            delta,
            lipschitz: m,
        } => StepRule::PolyakDeltaPartial {
            f_bar: f_bar(fb)?,
            delta,
            lipschitz: lipschitz(m)?,
        },
        RuleConfig::HarmonicStronglyConvex { mu } => {
            let mu = mu.unwrap_or(s.strong_convexity);
            if !(mu > 0.0) {
                return Err(invalid("mu", "not given and the problem is not strongly convex"));
            }
            StepRule::HarmonicStronglyConvex { mu }
        }
    };
    rule.validate()?;
    Ok(rule)
}

fn lipschitz_of(rule: &StepRule, problem: &ProblemSpec) -> Result<f64> {
    match *rule {
        StepRule::PolyakLipschitz { lipschitz, .. }
        | StepRule::PolyakPartial { lipschitz, .. }
        | StepRule::PolyakDeltaPartial { lipschitz, .. } => Ok(lipschitz),
        _ => problem
            .sharpness
            .lipschitz
            .ok_or_else(|| invalid("M", "bound needs a Lipschitz constant")),
    }
}

fn beta_of(rule: &StepRule) -> f64 {
    match *rule {
        StepRule::PolyakAdaptive { beta, .. } | StepRule::PolyakLipschitz { beta, .. } => beta,
        _ => 1.0,
    }
}

fn mu_of(rule: &StepRule, problem: &ProblemSpec) -> Result<f64> {
    match *rule {
        StepRule::HarmonicStronglyConvex { mu } => Ok(mu),
        _ if problem.sharpness.strong_convexity > 0.0 => Ok(problem.sharpness.strong_convexity),
        _ => Err(invalid("mu", "bound needs a strongly convex problem")),
    }
}

fn bound_column(
    name: &str,
    problem: &ProblemSpec,
    rule: &StepRule,
    trace: &Trace,
    x0: &[f64],
    notes: &mut Vec<(String, String)>,
) -> Result<Vec<Option<f64>>> {
    let s = &problem.sharpness;
    let len = trace.records.len();
    let r0_sq = || {
        problem
            .dist_sq_to_target(x0)
            .ok_or_else(|| invalid("bounds", format!("`{name}` needs a known solution set")))
    };
    let (alpha, beta, delta) = (s.alpha, beta_of(rule), s.delta);
    let flag = |notes: &mut Vec<(String, String)>, ok: bool| {
        if !ok {
            notes.push(("hypothesis_violated".into(), name.to_string()));
        }
    };
    let series = |sr: certificates::BoundSeries| -> Vec<Option<f64>> { sr.values.into_iter().map(Some).collect() };
    let column = match name {
        "theorem1" => {
            let sr = certificates::bound_theorem1(trace, alpha, beta, delta, r0_sq()?)?;
            if !sr.assumptions_ok {
                notes.push(("theorem1_condition_violations".into(), sr.violations.len().to_string()));
            }
            series(sr)
        }
        "theorem2" => {
            let m = lipschitz_of(rule, problem)?;
            let c = certificates::bound_theorem2(0, alpha, beta, m, delta, 1.0)?;
            flag(notes, c.hypothesis_ok);
            let base = 1.0 - (alpha * beta / m).powi(2) / 2.0;
            series(certificates::geometric_series(name, len, base, r0_sq()?, c.floor, c.hypothesis_ok))
        }
        "corollary1" | "theorem3" => {
            let m = lipschitz_of(rule, problem)?;
            let b = if name == "theorem3" { 1.0 } else { beta };
            certificates::bound_corollary1(0, alpha, b, m, 1.0)?;
            let base = 1.0 - (alpha * b / m).powi(2);
            series(certificates::geometric_series(name, len, base, r0_sq()?, 0.0, true))
        }
        "theorem4" | "theorem7" => {
            let m = lipschitz_of(rule, problem)?;
            let inexact = if name == "theorem7" {
                match *rule {
                    StepRule::PolyakDeltaPartial { delta: Some(d), .. } => d,
                    _ => trace.records.iter().map(|r| r.inexactness).fold(0.0, f64::max),
                }
            } else {
                0.0
            };
            let c = certificates::bound_theorem7(0, alpha, m, delta, inexact, 1.0)?;
            flag(notes, c.hypothesis_ok);
            let base = 1.0 - (alpha / m).powi(2) / 2.0;
            series(certificates::geometric_series(name, len, base, r0_sq()?, c.floor, c.hypothesis_ok))
        }
        "trajectory_radius" => {
            let m = lipschitz_of(rule, problem)?;
            let v = certificates::trajectory_radius(m, alpha, r0_sq()?.sqrt())?;
            vec![Some(v); len]
        }
        "harmonic_original" | "harmonic_adaptive" | "harmonic_argument_global" | "harmonic_argument_adaptive" => {
            let mu = mu_of(rule, problem)?;
            let count = trace.averaging_points().len();
            let m = if name == "harmonic_original" || name == "harmonic_argument_global" {
                Some(lipschitz_of(rule, problem)?)
            } else {
                None
            };
            (0..len)
                .map(|j| {
                    let n = j + 1;
                    if n > count {
                        return Ok(None);
                    }
                    let v = match name {
                        "harmonic_original" => certificates::bound_harmonic_original(m.unwrap_or(0.0), mu, n),
                        "harmonic_adaptive" => certificates::bound_harmonic_adaptive(trace, mu, n)?,
                        "harmonic_argument_global" => certificates::bound_harmonic_argument(
                            ArgumentMode::Global {
                                lipschitz: m.unwrap_or(0.0),
                            },
                            mu,
                            n,
                        )?,
                        _ => certificates::bound_harmonic_argument(ArgumentMode::Adaptive { trace }, mu, n)?,
                    };
                    Ok(Some(v))
                })
                .collect::<Result<Vec<_>>>()?
        }
        other => return Err(invalid("bounds", format!("unknown bound `{other}`"))),
    };
    Ok(column)
}

/// Gap and squared distance of the running harmonic average after each
/// averaging iterate.
type Column = Vec<Option<f64>>;

fn harmonic_average_columns(
    problem: &ProblemSpec,
    trace: &Trace,
    gap: &dyn Fn(f64) -> Option<f64>,
) -> Result<(Column, Column)> {
    let points = trace.averaging_points();
    let mut gaps = vec![None; trace.records.len()];
    let mut dists = vec![None; trace.records.len()];
    let mut avg = linalg::zeros(problem.dimension);
    for (i, r) in points.iter().enumerate() {
        // x_hat_N = (1 - w) x_hat_{N-1} + w x_N with w = 2/(N+1)
        let w = 2.0 / (i as f64 + 2.0);
        for (a, x) in avg.iter_mut().zip(&r.x) {
            *a = (1.0 - w) * *a + w * x;
        }
        gaps[i] = gap(problem.objective(&avg)?.value);
        dists[i] = problem.dist_sq_to_target(&avg);
    }
    Ok((gaps, dists))
}

fn render_feasibility(
    cfg: &ExperimentConfig,
    system: &BallSystem,
    x0: &[f64],
    sweeps: usize,
) -> Result<(String, RunSummary)> {
    let res = sequential_project_with_budget(system, x0, cfg.max_iters, sweeps, Some(cfg.max_iters))?;
    let delta = system.delta_target;
    let mut out = String::new();
    out.push_str(&BASE_COLUMNS.join(","));
    out.push_str(",ball\n");
    let mut f = system.max_distance(x0)?;
    for k in 0..=res.history.len() {
        let step = res.history.get(k);
        let _ = writeln!(
            out,
            "{},{},{},,{},{},{},{}",
            k,
            num(f),
            num(f - delta),
            step.map_or(String::new(), |_| num(1.0)),
            step.map_or(String::new(), |s| num(s.step)),
            num(0.0),
            step.map_or(String::new(), |s| s.ball.to_string())
        );
        if let Some(s) = step {
            f = s.max_dist;
        }
    }
    let best = res.max_distance();
    let terminated_by = if res.iterations_used >= cfg.max_iters {
        "max_iters"
    } else {
        "sweeps_done"
    };
    let meta = [
        ("problem", "ball_system".to_string()),
        ("rule", "polyak_lipschitz".to_string()),
        ("terminated_by", terminated_by.to_string()),
        ("iterations_used", res.iterations_used.to_string()),
        ("best_max_distance", num(best)),
        ("delta_target", num(delta)),
        ("relaxed_targets", res.relaxed_targets.to_string()),
    ];
    for (key, value) in meta {
        let _ = writeln!(out, "#{key},{value}");
    }
    let summary = RunSummary {
        output_path: PathBuf::new(),
        rows: res.history.len() + 1,
        terminated_by: terminated_by.into(),
        final_gap: Some(best - delta),
    };
    Ok((out, summary))
}

fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// Writes through a temporary file in the target directory, so a failed
/// run never leaves a partial file behind.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
