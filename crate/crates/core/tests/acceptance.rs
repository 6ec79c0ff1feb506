//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits with status 1 if any criterion fails.
//!
//! Reference quantities (projections, distances, the enclosing-ball
//! optimum, the product-sum bound) come from `common`, which does not use
//! the library.

mod common;

use std::panic;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sharpstep::certificates::{
    bound_corollary1, bound_harmonic_adaptive, bound_harmonic_original, bound_theorem1, bound_theorem1_from_grads,
    bound_theorem2, bound_theorem3, bound_theorem4, trajectory_radius,
};
use sharpstep::feasibility::{sequential_project_with_budget, BallSystem};
use sharpstep::geometry::{Ball, Capsule};
use sharpstep::oracles::{
    capsule_regularized, dist_to_ball_problem, enclosing_ball, hull_of_balls_inexact, norm_plus_quadratic,
    weakly_quasiconvex_1d,
};
use sharpstep::sampling::{in_ball, on_sphere};
use sharpstep::{iterate, ProblemSpec, RunOptions, StepRule, Termination};

use common::{dist, dist_to_ball, dist_to_capsule, dot, max_dist_sq, norm, project_onto_ball};

// Pinned tolerances.
const PROJECTION_TOL: f64 = 1e-9;
const PROJECTION_TIME: Duration = Duration::from_secs(1);
const CERT_REL_TOL: f64 = 1e-7;
const RATE_REL_TOL: f64 = 1e-9;
const FLOOR_SLACK: f64 = 1.10;
const RADIUS_TOL: f64 = 1e-9;
const HULL_ZERO_TOL: f64 = 1e-9;
const PROPERTY_TOL: f64 = 1e-9;
const EQ8_REL_TOL: f64 = 1e-10;
const PROPERTY_CASES: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn opts(max_iters: usize, project: bool) -> RunOptions {
    RunOptions {
        max_iters,
        project,
        ..RunOptions::default()
    }
}

fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    dist(a, b).powi(2)
}

fn c1_one_step_projection() -> Outcome {
    let mut r = rng(101);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let n = r.random_range(2..=100);
        let center: Vec<f64> = (0..n).map(|_| r.random_range(-10.0..10.0)).collect();
        let radius = r.random_range(0.1..5.0);
        let len = radius * r.random_range(1.01..20.0);
        let offset = on_sphere(&mut r, n, len);
        let x: Vec<f64> = center.iter().zip(&offset).map(|(c, o)| c + o).collect();
        let problem = dist_to_ball_problem(Ball::new(center.clone(), radius).unwrap(), None).unwrap();
        let rule = StepRule::PolyakAdaptive { beta: 1.0, f_bar: 0.0 };
        let trace = iterate(&problem, &rule, &x, &opts(1, false)).unwrap();
        let expected = project_onto_ball(&x, &center, radius);
        let err = dist(&trace.records[1].x, &expected) / (1.0 + norm(&expected));
        worst = worst.max(err);
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst <= PROJECTION_TOL && elapsed < PROJECTION_TIME,
        format!("max relative error {worst:.2e} (tol {PROJECTION_TOL:e}), 200 pairs in {elapsed:.2?} (limit 1s)"),
    )
}

/// Counts `k <= horizon` with `dist_sq(x_k, x*) > bound(k - 1)` (`R0^2` at
/// `k = 0`) and returns the largest ratio measured/bound over `k >= 1`.
fn envelope_violations(
    records: &[sharpstep::solvers::IterateRecord],
    x_star: &[f64],
    horizon: usize,
    rel_tol: f64,
    bound: impl Fn(usize) -> f64,
) -> (usize, f64) {
    let r0_sq = dist_sq(&records[0].x, x_star);
    let mut bad = 0;
    let mut worst_ratio = 0.0f64;
    for (k, rec) in records.iter().enumerate().take(horizon + 1) {
        let measured = dist_sq(&rec.x, x_star);
        let b = if k == 0 { r0_sq } else { bound(k - 1) };
        if measured > b * (1.0 + rel_tol) {
            bad += 1;
        }
        if k > 0 && b > 0.0 {
            worst_ratio = worst_ratio.max(measured / b);
        }
    }
    (bad, worst_ratio)
}

fn c2_theorem2_theorem4() -> Outcome {
    let n = 100;
    let big_r = 5000.0;
    let gamma = 2.0 * 0.001;
    let mut r = rng(202);
    let shift = on_sphere(&mut r, n, 0.01);
    let problem = norm_plus_quadratic(gamma, shift, Ball::centered(n, big_r).unwrap()).unwrap();
    let s = problem.sharpness.clone();
    let m = s.lipschitz.unwrap();
    let f_bar = s.f_bar.unwrap();
    let x_star = s.minimizer().unwrap().to_vec();
    let x0 = vec![big_r / (n as f64).sqrt(); n];
    let r0_sq = dist_sq(&x0, &x_star);

    let rules = [
        (
            "polyak_lipschitz",
            StepRule::PolyakLipschitz {
                beta: 1.0,
                f_bar,
                lipschitz: m,
            },
        ),
        ("polyak_partial", StepRule::PolyakPartial { f_bar, lipschitz: m }),
    ];
    let mut pass = true;
    let mut details = Vec::new();
    for (name, rule) in rules {
        let trace = iterate(&problem, &rule, &x0, &opts(20_000, true)).unwrap();
        let bound = |k: usize| match name {
            "polyak_lipschitz" => bound_theorem2(k, s.alpha, 1.0, m, s.delta, r0_sq).unwrap(),
            _ => bound_theorem4(k, s.alpha, m, s.delta, r0_sq).unwrap(),
        };
        let floor = bound(0).floor;
        let (bad, _) = envelope_violations(&trace.records, &x_star, 500, CERT_REL_TOL, |k| bound(k).value);
        let terminal = dist_sq(&trace.last().x, &x_star);
        let ok = bad == 0 && terminal <= FLOOR_SLACK * floor;
        pass &= ok;
        details.push(format!(
            "{name}: {bad} violations over k<=500, terminal dist^2 {terminal:.2e} vs floor {floor:.2e} after {} steps",
            trace.steps()
        ));
    }
    Outcome::new(pass, details.join("; "))
}

fn c3_linear_rate() -> Outcome {
    let n = 100;
    let big_r = 10.0;
    let problem = norm_plus_quadratic(0.5, vec![0.0; n], Ball::centered(n, big_r).unwrap()).unwrap();
    let s = problem.sharpness.clone();
    let m = s.lipschitz.unwrap();
    let x_star = vec![0.0; n];
    let x0 = vec![big_r / (n as f64).sqrt(); n];
    let r0_sq = dist_sq(&x0, &x_star);
    let horizon = 300;

    let mut pass = true;
    let mut details = Vec::new();

    let partial = StepRule::PolyakPartial {
        f_bar: 0.0,
        lipschitz: m,
    };
    let t = iterate(&problem, &partial, &x0, &opts(horizon, true)).unwrap();
    let (bad, worst) = envelope_violations(&t.records, &x_star, horizon, RATE_REL_TOL, |k| {
        bound_theorem3(k, s.alpha, m, r0_sq).unwrap()
    });
    pass &= bad == 0;
    details.push(format!("partial/theorem3: {bad} violations, max ratio {worst:.3}"));

    let lipschitz = StepRule::PolyakLipschitz {
        beta: 1.0,
        f_bar: 0.0,
        lipschitz: m,
    };
    let t = iterate(&problem, &lipschitz, &x0, &opts(horizon, true)).unwrap();
    let (bad, worst) = envelope_violations(&t.records, &x_star, horizon, RATE_REL_TOL, |k| {
        bound_corollary1(k, s.alpha, 1.0, m, r0_sq).unwrap()
    });
    pass &= bad == 0;
    details.push(format!("lipschitz/corollary1: {bad} violations, max ratio {worst:.3}"));

    let adaptive = StepRule::PolyakAdaptive { beta: 1.0, f_bar: 0.0 };
    let t = iterate(&problem, &adaptive, &x0, &opts(horizon, true)).unwrap();
    let series = bound_theorem1(&t, s.alpha, 1.0, 0.0, r0_sq).unwrap();
    let (bad, worst) = envelope_violations(&t.records, &x_star, horizon, RATE_REL_TOL, |k| {
        series.values[k + 1]
    });
    pass &= bad == 0;
    details.push(format!("adaptive/theorem1: {bad} violations, max ratio {worst:.3}"));
    Outcome::new(pass, details.join("; "))
}

fn c4_trajectory_radius() -> Outcome {
    let mut r = rng(404);
    let mut violations = 0;
    let mut tightest = 0.0f64;
    for i in 0..100 {
        let n = r.random_range(2..=40);
        let (problem, x0, r0) = match i % 3 {
            0 => {
                let big_r = r.random_range(1.0..100.0);
                let gamma = r.random_range(0.01..2.0);
                let p = norm_plus_quadratic(gamma, vec![0.0; n], Ball::centered(n, big_r).unwrap()).unwrap();
                let x0 = in_ball(&mut r, n, big_r);
                let r0 = norm(&x0);
                (p, x0, r0)
            }
            1 => {
                let center = in_ball(&mut r, n, 5.0);
                let radius = r.random_range(0.1..3.0);
                let p = dist_to_ball_problem(Ball::new(center.clone(), radius).unwrap(), None).unwrap();
                let x0 = in_ball(&mut r, n, 20.0);
                let r0 = dist_to_ball(&x0, &center, radius);
                (p, x0, r0)
            }
            _ => {
                let a = in_ball(&mut r, n, 2.0);
                let b = in_ball(&mut r, n, 2.0);
                let radius = r.random_range(0.1..1.0);
                let p = hull_of_balls_inexact(vec![a.clone(), b.clone()], radius, i as u64, None).unwrap();
                let x0 = in_ball(&mut r, n, 20.0);
                let r0 = dist_to_capsule(&x0, &a, &b, radius);
                (p, x0, r0)
            }
        };
        let s = &problem.sharpness;
        let m = s.lipschitz.unwrap();
        let rule = StepRule::PolyakPartial {
            f_bar: s.f_star.unwrap(),
            lipschitz: m,
        };
        let trace = iterate(&problem, &rule, &x0, &opts(500, false)).unwrap();
        let bound = trajectory_radius(m, s.alpha, r0).unwrap();
        let reached = trace.records.iter().map(|rec| dist(&rec.x, &x0)).fold(0.0, f64::max);
        if reached > bound + RADIUS_TOL {
            violations += 1;
        }
        if bound > 0.0 {
            tightest = tightest.max(reached / bound);
        }
    }
    Outcome::new(
        violations == 0,
        format!("{violations} of 100 instances exceed the radius; largest radius/bound {tightest:.3}"),
    )
}

fn c5_harmonic() -> Outcome {
    let n = 100;
    let mut r = rng(505);
    let points: Vec<Vec<f64>> = (0..100).map(|_| on_sphere(&mut r, n, 5.0)).collect();
    let q = Ball::centered(n, 4.0).unwrap();
    let problem = enclosing_ball(points.clone(), 1.0, true, q, None).unwrap();
    let m = problem.sharpness.lipschitz.unwrap();
    let mu = problem.sharpness.strong_convexity;
    let x0 = in_ball(&mut r, n, 4.0);
    let trace = iterate(&problem, &StepRule::HarmonicStronglyConvex { mu }, &x0, &opts(2000, true)).unwrap();

    let reference = common::meb_reference(&points, 1e-10, 200_000);
    let ref_gap = reference.upper - reference.lower;
    if norm(&reference.center) > 4.0 {
        return Outcome::new(false, "reference minimizer lies outside Q");
    }

    let pts: Vec<&[f64]> = trace.averaging_points().iter().map(|rec| rec.x.as_slice()).collect();
    let mut x_hat = vec![0.0; n];
    let (mut value_bad, mut order_bad, mut arg_bad) = (0, 0, 0);
    for (i, x) in pts.iter().enumerate() {
        let big_n = i as f64 + 1.0;
        // x_hat_N = (N-1)/(N+1) x_hat_{N-1} + 2/(N+1) x_N
        for (h, xi) in x_hat.iter_mut().zip(x.iter()) {
            *h = (big_n - 1.0) / (big_n + 1.0) * *h + 2.0 / (big_n + 1.0) * xi;
        }
        let gap = max_dist_sq(&x_hat, &points) - reference.lower;
        let adaptive = bound_harmonic_adaptive(&trace, mu, i + 1).unwrap();
        let original = bound_harmonic_original(m, mu, i + 1);
        if gap > adaptive {
            value_bad += 1;
        }
        if adaptive > original {
            order_bad += 1;
        }
        let arg = (dist(&x_hat, &reference.center) + ref_gap.sqrt()).powi(2);
        if arg > 4.0 * m * m / (mu * mu * (big_n + 1.0)) {
            arg_bad += 1;
        }
    }
    let matches_library = trace.x_hat.as_ref().is_some_and(|h| dist(h, &x_hat) <= 1e-9 * (1.0 + norm(&x_hat)));
    Outcome::new(
        value_bad + order_bad + arg_bad == 0 && pts.len() == 2000 && matches_library,
        format!(
            "N<=2000: value {value_bad}, ordering {order_bad}, argument {arg_bad} violations; \
             reference gap {ref_gap:.1e}; averaged point matches library: {matches_library}"
        ),
    )
}

fn c6_delta_floor() -> Outcome {
    let n = 50;
    let mut violations = 0;
    let mut details = Vec::new();
    for seed in 0..20u64 {
        let mut r = rng(600 + seed);
        let a = in_ball(&mut r, n, 1.0);
        let b = in_ball(&mut r, n, 1.0);
        let radius = 0.5;
        let problem = hull_of_balls_inexact(vec![a.clone(), b.clone()], radius, seed, None).unwrap();
        let x0 = on_sphere(&mut r, n, 5.0);
        let rule = StepRule::PolyakDeltaPartial {
            f_bar: 0.0,
            delta: None,
            lipschitz: 1.0,
        };
        let run = RunOptions {
            use_delta_oracle: true,
            ..opts(1000, false)
        };
        let trace = iterate(&problem, &rule, &x0, &run).unwrap();
        let delta_max = trace.records.iter().map(|rec| rec.inexactness).fold(0.0, f64::max);
        let terminal = dist_to_capsule(&trace.last().x, &a, &b, radius).powi(2);
        let floor = 2.0 * delta_max * delta_max / problem.sharpness.alpha.powi(2);
        if terminal > FLOOR_SLACK * floor {
            violations += 1;
            details.push(format!("seed {seed}: {terminal:.2e} > {floor:.2e}"));
        }
    }
    Outcome::new(
        violations == 0,
        format!("{violations} of 20 runs above 1.1 x 2(D + d_max)^2/a^2 {}", details.join(", ")),
    )
}

fn c7_remark2() -> Outcome {
    let n = 50;
    let mut successes = 0;
    let mut total_steps = 0;
    for seed in 0..100u64 {
        let mut r = rng(700 + seed);
        let centers: Vec<Vec<f64>> = (0..5).map(|_| in_ball(&mut r, n, 1.0)).collect();
        let radius = 0.5;
        let problem = hull_of_balls_inexact(centers.clone(), radius, seed, None).unwrap();
        let x0 = on_sphere(&mut r, n, 5.0);
        let rule = StepRule::PolyakDeltaPartial {
            f_bar: 0.0,
            delta: Some(0.0),
            lipschitz: 1.0,
        };
        let run = RunOptions {
            use_delta_oracle: true,
            target_tolerance: 1e-12,
            ..opts(20, false)
        };
        let trace = iterate(&problem, &rule, &x0, &run).unwrap();
        let x = &trace.last().x;
        let in_hull = centers.iter().any(|c| dist_to_ball(x, c, radius) <= HULL_ZERO_TOL);
        if trace.terminated_by == Termination::ReachedFBar && in_hull {
            successes += 1;
            total_steps += trace.steps();
        }
    }
    let mean = total_steps as f64 / successes.max(1) as f64;
    Outcome::new(
        successes >= 95,
        format!("{successes}/100 runs reach f = 0 within 20 iterations (mean {mean:.1} iterations)"),
    )
}

fn c8_remark3() -> Outcome {
    let n = 50;
    let (delta, radius) = (0.5, 10.0);
    let mut r = rng(808);
    let balls: Vec<Ball> = (0..20)
        .map(|_| Ball::new(on_sphere(&mut r, n, delta + radius), radius).unwrap())
        .collect();
    let centers: Vec<Vec<f64>> = balls.iter().map(|b| b.center().to_vec()).collect();
    let system = BallSystem::uniform(balls, delta, 0.4).unwrap();
    let x0 = vec![0.0; n];
    let res = sequential_project_with_budget(&system, &x0, 50, 3, Some(50)).unwrap();
    let max_of = |x: &[f64]| centers.iter().map(|c| dist_to_ball(x, c, radius)).fold(0.0, f64::max);
    let start = max_of(&x0);
    let end = max_of(&res.point);
    Outcome::new(
        end <= delta && end < start && res.iterations_used <= 50,
        format!(
            "max distance {end:.4} (start {start:.4}, threshold {delta}) after {} iterations",
            res.iterations_used
        ),
    )
}

/// Test-side objective of the problems used by the property checks.
enum Model {
    NormQuad { gamma: f64, shift: Vec<f64> },
    Enclosing { points: Vec<Vec<f64>>, scale: f64, squared: bool },
    CapsuleReg { a: Vec<f64>, b: Vec<f64>, r: f64, gamma: f64 },
    Ball { c: Vec<f64>, r: f64 },
    Hull2 { a: Vec<f64>, b: Vec<f64>, r: f64 },
    Quasi,
}

impl Model {
    fn value(&self, x: &[f64]) -> f64 {
        match self {
            Model::NormQuad { gamma, shift } => norm(x) + gamma * dist_sq(x, shift),
            Model::Enclosing { points, scale, squared } => {
                let d = max_dist_sq(x, points);
                if *squared {
                    d
                } else {
                    scale * d.sqrt()
                }
            }
            Model::CapsuleReg { a, b, r, gamma } => dist_to_capsule(x, a, b, *r) + gamma * dot(x, x),
            Model::Ball { c, r } => dist_to_ball(x, c, *r),
            Model::Hull2 { a, b, r } => dist_to_capsule(x, a, b, *r),
            Model::Quasi => x[0].abs() * (1.0 - (-x[0].abs()).exp()),
        }
    }

    /// Distance to the solution set, when known.
    fn target_dist(&self, x: &[f64]) -> Option<f64> {
        match self {
            Model::NormQuad { gamma, shift } => Some(dist(x, &norm_quad_minimizer(*gamma, shift))),
            Model::CapsuleReg { a, b, r, .. } | Model::Hull2 { a, b, r } => Some(dist_to_capsule(x, a, b, *r)),
            Model::Ball { c, r } => Some(dist_to_ball(x, c, *r)),
            Model::Quasi => Some(x[0].abs()),
            Model::Enclosing { .. } => None,
        }
    }
}

fn norm_quad_minimizer(gamma: f64, shift: &[f64]) -> Vec<f64> {
    let c = norm(shift);
    if 2.0 * gamma * c <= 1.0 {
        vec![0.0; shift.len()]
    } else {
        shift.iter().map(|v| v * (1.0 - 1.0 / (2.0 * gamma * c))).collect()
    }
}

/// Random problem together with its test-side model and a sampler radius
/// for feasible points.
fn random_problem(r: &mut ChaCha8Rng, kind: usize) -> (ProblemSpec, Model, f64) {
    let n = r.random_range(1..=12);
    match kind % 7 {
        0 => {
            let big_r = r.random_range(0.5..20.0);
            let gamma = r.random_range(0.01..2.0);
            let shift = if r.random_bool(0.3) {
                vec![0.0; n]
            } else {
                in_ball(r, n, big_r * 0.5)
            };
            let p = norm_plus_quadratic(gamma, shift.clone(), Ball::centered(n, big_r).unwrap()).unwrap();
            (p, Model::NormQuad { gamma, shift }, big_r)
        }
        1 => {
            let points: Vec<Vec<f64>> = (0..r.random_range(1..8)).map(|_| in_ball(r, n, 3.0)).collect();
            let squared = r.random_bool(0.5);
            let scale = if squared { 1.0 } else { r.random_range(0.1..2.0) };
            let p = enclosing_ball(points.clone(), scale, squared, Ball::centered(n, 5.0).unwrap(), None).unwrap();
            (p, Model::Enclosing { points, scale, squared }, 5.0)
        }
        2 => {
            let big_r = r.random_range(1.0..6.0);
            let radius = r.random_range(0.05..0.4) * big_r;
            let a = in_ball(r, n, 0.5 * (big_r - radius));
            let b = in_ball(r, n, 0.5 * (big_r - radius));
            let gamma = r.random_range(0.001..0.5);
            let p = capsule_regularized(Capsule::new(a.clone(), b.clone(), radius).unwrap(), gamma, big_r).unwrap();
            (p, Model::CapsuleReg { a, b, r: radius, gamma }, big_r)
        }
        3 => {
            let c = in_ball(r, n, 3.0);
            let radius = r.random_range(0.0..2.0);
            let p = dist_to_ball_problem(Ball::new(c.clone(), radius).unwrap(), None).unwrap();
            (p, Model::Ball { c, r: radius }, 10.0)
        }
        4 | 5 => {
            let a = in_ball(r, n, 2.0);
            let b = in_ball(r, n, 2.0);
            let radius = r.random_range(0.1..1.0);
            let p = hull_of_balls_inexact(vec![a.clone(), b.clone()], radius, r.random(), None).unwrap();
            (p, Model::Hull2 { a, b, r: radius }, 10.0)
        }
        _ => (weakly_quasiconvex_1d().unwrap(), Model::Quasi, 5.0),
    }
}

fn c9_properties() -> Outcome {
    let mut r = rng(909);
    let mut failures: Vec<String> = Vec::new();

    // Subgradient validity: f(y) >= f(x) + <g, y - x> - delta for the exact
    // oracles and the inexact hull oracle; weak quasiconvexity toward 0 for
    // the one-dimensional objective.
    let mut bad = 0;
    for case in 0..PROPERTY_CASES {
        let (p, model, rad) = random_problem(&mut r, case);
        let x = in_ball(&mut r, p.dimension, rad);
        let y = in_ball(&mut r, p.dimension, rad);
        let out = if matches!(model, Model::Hull2 { .. }) && case % 7 == 5 {
            p.delta_oracle(&x, &mut r).unwrap()
        } else {
            p.oracle(&x).unwrap()
        };
        let fx = model.value(&x);
        let scale = 1.0 + fx.abs() + out.value.abs() + norm(&out.subgradient) * (norm(&x) + norm(&y));
        if out.inexactness == 0.0 && (out.value - fx).abs() > PROPERTY_TOL * scale {
            bad += 1;
        }
        let diff: Vec<f64> = y.iter().zip(&x).map(|(a, b)| a - b).collect();
        let ok = match model {
            Model::Quasi => 0.0 >= fx - dot(&out.subgradient, &x) - PROPERTY_TOL * scale,
            _ => model.value(&y) >= out.value + dot(&out.subgradient, &diff) - out.inexactness - PROPERTY_TOL * scale,
        };
        if !ok {
            bad += 1;
        }
    }
    if bad > 0 {
        failures.push(format!("subgradient {bad}"));
    }

    // Relaxed sharp minimum metadata: f - f_bar >= alpha dist(x, X*) - Delta.
    let mut bad = 0;
    let mut checked = 0;
    while checked < PROPERTY_CASES {
        let kind = r.random_range(0..7);
        let (p, model, rad) = random_problem(&mut r, kind);
        let Some(_) = model.target_dist(&vec![0.0; p.dimension]) else {
            continue;
        };
        checked += 1;
        let s = &p.sharpness;
        let x = in_ball(&mut r, p.dimension, rad);
        let fx = model.value(&x);
        let lhs = fx - s.f_bar.unwrap();
        let rhs = s.alpha * model.target_dist(&x).unwrap() - s.delta;
        if lhs < rhs - PROPERTY_TOL * (1.0 + fx.abs() + rhs.abs()) {
            bad += 1;
        }
    }
    if bad > 0 {
        failures.push(format!("relaxed sharpness {bad}"));
    }

    // Lemma 1: f(x) - f* <= M nu_f(x, x*) for feasible x with g != 0.
    let mut bad = 0;
    let mut checked = 0;
    while checked < PROPERTY_CASES {
        let kind = [0, 3, 4, 6][r.random_range(0..4)];
        let (p, model, rad) = random_problem(&mut r, kind);
        let x = in_ball(&mut r, p.dimension, rad);
        let x_star = match &model {
            Model::NormQuad { gamma, shift } => norm_quad_minimizer(*gamma, shift),
            Model::Ball { c, r } => project_onto_ball(&x, c, *r),
            Model::Hull2 { a, b, r: radius } => {
                // a point of the capsule: the projection onto its closer ball end
                let d = dist_to_capsule(&x, a, b, *radius);
                if d == 0.0 {
                    continue;
                }
                let ab: Vec<f64> = b.iter().zip(a.iter()).map(|(bi, ai)| bi - ai).collect();
                let ax: Vec<f64> = x.iter().zip(a.iter()).map(|(xi, ai)| xi - ai).collect();
                let t = (dot(&ax, &ab) / dot(&ab, &ab).max(f64::MIN_POSITIVE)).clamp(0.0, 1.0);
                let seg: Vec<f64> = a.iter().zip(&ab).map(|(ai, di)| ai + t * di).collect();
                project_onto_ball(&x, &seg, *radius)
            }
            Model::Quasi => vec![0.0],
            _ => unreachable!(),
        };
        let out = p.oracle(&x).unwrap();
        let gn = norm(&out.subgradient);
        if gn == 0.0 {
            continue;
        }
        checked += 1;
        let diff: Vec<f64> = x.iter().zip(&x_star).map(|(a, b)| a - b).collect();
        let nu = dot(&out.subgradient, &diff) / gn;
        let f_star = model.value(&x_star);
        let m = p.sharpness.lipschitz.unwrap();
        let gap = model.value(&x) - f_star;
        if gap > m * nu + PROPERTY_TOL * (1.0 + gap.abs() + m * norm(&diff)) {
            bad += 1;
        }
    }
    if bad > 0 {
        failures.push(format!("lemma 1 {bad}"));
    }

    // Lemma 2 along projected runs, 10 feasible probes per iteration.
    let mut bad = 0;
    for case in 0..PROPERTY_CASES {
        let (p, _, rad) = random_problem(&mut r, [0, 1, 2][case % 3]);
        let s = p.sharpness.clone();
        let rule = match case % 2 {
            0 if s.strong_convexity > 0.0 => StepRule::HarmonicStronglyConvex { mu: s.strong_convexity },
            _ => StepRule::PolyakAdaptive {
                beta: 1.0,
                f_bar: s.f_bar.or(s.f_star).unwrap_or(0.0),
            },
        };
        let x0 = in_ball(&mut r, p.dimension, rad);
        let trace = iterate(&p, &rule, &x0, &opts(15, true)).unwrap();
        for pair in trace.records.windows(2) {
            let h = pair[0].step.unwrap();
            let g = p.oracle(&pair[0].x).unwrap().subgradient;
            for _ in 0..10 {
                let probe = in_ball(&mut r, p.dimension, rad);
                let lhs = h * dot(&g, &pair[0].x.iter().zip(&probe).map(|(a, b)| a - b).collect::<Vec<_>>());
                let rhs = 0.5 * h * h * dot(&g, &g) + 0.5 * dist_sq(&probe, &pair[0].x) - 0.5 * dist_sq(&probe, &pair[1].x);
                let scale = 1.0 + h * h * dot(&g, &g) + dist_sq(&probe, &pair[0].x);
                if lhs > rhs + PROPERTY_TOL * scale {
                    bad += 1;
                }
            }
        }
    }
    if bad > 0 {
        failures.push(format!("lemma 2 {bad}"));
    }

    // Forward recurrence against the explicit product-sum.
    let mut bad = 0;
    for _ in 0..PROPERTY_CASES {
        let alpha = r.random_range(0.05..2.0);
        let beta = r.random_range(0.05..=1.0);
        let delta = r.random_range(0.0..3.0);
        let r0_sq = r.random_range(0.0..100.0);
        let len = r.random_range(1..=50);
        let floor = alpha * beta / 2f64.sqrt();
        let grads: Vec<f64> = (0..len).map(|_| floor * r.random_range(1.0..10.0)).collect();
        let series = bound_theorem1_from_grads(&grads, alpha, beta, delta, r0_sq).unwrap();
        let direct = common::theorem1_direct(&grads, alpha, beta, delta, r0_sq);
        let worst = series
            .values
            .iter()
            .zip(&direct)
            .map(|(a, b)| (a - b).abs() / b.abs().max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max);
        if series.values.len() != direct.len() || worst > EQ8_REL_TOL {
            bad += 1;
        }
    }
    if bad > 0 {
        failures.push(format!("recurrence {bad}"));
    }

    Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            format!("5 properties x {PROPERTY_CASES} cases, zero violations")
        } else {
            format!("violations: {}", failures.join(", "))
        },
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("one-step projection", c1_one_step_projection),
        ("relaxed-sharp certificates (Lipschitz, partial steps)", c2_theorem2_theorem4),
        ("linear rate at Delta = 0", c3_linear_rate),
        ("projection-free trajectory radius", c4_trajectory_radius),
        ("harmonic averaging bounds", c5_harmonic),
        ("inexact-subgradient floor", c6_delta_floor),
        ("hull of five balls, random centers", c7_remark2),
        ("ball system at desk scale", c8_remark3),
        ("property suites", c9_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(false, format!("panicked: {msg}"))
        });
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{name}] {} ({:.2?})",
            i + 1,
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail,
            start.elapsed()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
