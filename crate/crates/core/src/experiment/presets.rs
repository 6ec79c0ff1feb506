//! Named experiment settings for the published figures and remarks.
//!
//! Every preset accepts a dimension override for quick runs; all generated
//! data depends only on the dimension and the fixed seed.

use std::path::Path;

use super::config::{BallSample, ExperimentConfig, PointSet, ProblemConfig, RuleConfig, SphereSample, StartPolicy, VectorSpec};
use crate::error::{invalid, Result};

/// Preset names with one-line descriptions.
pub const PRESETS: &[(&str, &str)] = &[
    ("fig1-enclosing-squared", "squared enclosing ball, r = 5, Q of radius 4, harmonic steps"),
    ("fig2-enclosing-squared-unbounded", "squared enclosing ball, r = 5, Q = R^n, harmonic steps"),
    ("fig3-sharp-convex", "scaled enclosing ball, alpha = 0.6, r = 0.7525, adaptive Polyak step"),
    ("fig4-strong-convex", "squared enclosing ball on the fig3 points, harmonic steps"),
    ("fig5-norm-quadratic-r10", "||x|| + 2g||x||^2, n = 10000, R = 10, g = 0.5"),
    ("fig6-norm-quadratic-r1000", "||x|| + 2g||x||^2, n = 10000, R = 1000, g = 0.01"),
    ("fig7-norm-quadratic-shifted", "||x|| + 2g||x - c||^2, n = 1000, R = 5000, g = 0.001, ||c|| = 0.01"),
    ("fig8-capsule", "capsule distance + g||x||^2, n = 1000, g = 0.01, R = 1, r = 0.1"),
    ("fig9-capsule", "capsule distance + g||x||^2, n = 1000, g = 0.001, R = 5, r = 0.5"),
    ("remark2", "hull of 5 balls, random-center inexact subgradients"),
    ("remark3", "20 balls of radius 10 at distance 10.5 from the origin, Delta = 0.5"),
];

const SEED: u64 = 20240607;

fn base(problem: ProblemConfig, rule: Option<RuleConfig>, dimension: usize) -> ExperimentConfig {
    ExperimentConfig {
        problem,
        rule,
        dimension,
        feasible_radius: None,
        x0: StartPolicy::Origin {},
        max_iters: 1000,
        seed: Some(SEED),
        project: true,
        use_delta_oracle: false,
        bounds: Vec::new(),
        output_path: "out.csv".into(),
    }
}

fn bounds(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn harmonic(mu: Option<f64>) -> Option<RuleConfig> {
    Some(RuleConfig::HarmonicStronglyConvex { mu })
}

fn adaptive() -> Option<RuleConfig> {
    Some(RuleConfig::PolyakAdaptive { beta: None, f_bar: None })
}

fn lipschitz() -> Option<RuleConfig> {
    Some(RuleConfig::PolyakLipschitz {
        beta: None,
        f_bar: None,
        lipschitz: None,
    })
}

/// The three panels compared in the strongly convex experiments: adaptive
/// and Lipschitz Polyak steps against harmonic steps with the published `mu`.
fn three_panels(cfg: ExperimentConfig, mu: f64) -> Vec<(String, ExperimentConfig)> {
    let mut a = cfg.clone();
    a.rule = adaptive();
    a.bounds = bounds(&["theorem1"]);
    let mut l = cfg.clone();
    l.rule = lipschitz();
    l.bounds = bounds(&["theorem2"]);
    let mut h = cfg;
    h.rule = harmonic(Some(mu));
    h.bounds = bounds(&["harmonic_original", "harmonic_adaptive", "harmonic_argument_global"]);
    vec![("adaptive".into(), a), ("lipschitz".into(), l), ("harmonic".into(), h)]
}

fn sphere_points(count: usize, radius: f64, extra: Option<f64>) -> PointSet {
    PointSet::OnSphere {
        random_on_sphere: SphereSample {
            count,
            radius,
            extra_point_radius: extra,
        },
    }
}

/// Configurations of a preset as `(panel, config)` pairs; the panel name is
/// empty for single-panel presets. `dimension` overrides the published size.
pub fn preset(name: &str, dimension: Option<usize>) -> Result<Vec<(String, ExperimentConfig)>> {
    let dim = |published: usize| dimension.unwrap_or(published);
    let single = |cfg: ExperimentConfig| vec![(String::new(), cfg)];
    let panels = match name {
        "fig1-enclosing-squared" | "fig2-enclosing-squared-unbounded" => {
            let problem = ProblemConfig::EnclosingBall {
                points: sphere_points(100, 5.0, None),
                scale_alpha: 1.0,
                squared: true,
                approx_min: None,
            };
            let mut cfg = base(problem, harmonic(None), dim(1000));
            cfg.x0 = StartPolicy::UniformInBall { radius: Some(4.0) };
            cfg.max_iters = 2000;
            if name.starts_with("fig1") {
                cfg.feasible_radius = Some(4.0);
                cfg.bounds = bounds(&[
                    "harmonic_original",
                    "harmonic_adaptive",
                    "harmonic_argument_global",
                    "harmonic_argument_adaptive",
                ]);
            } else {
                cfg.project = false;
                cfg.bounds = bounds(&["harmonic_adaptive", "harmonic_argument_adaptive"]);
            }
            single(cfg)
        }
        "fig3-sharp-convex" | "fig4-strong-convex" => {
            let (r, outer, alpha) = (0.7525, 0.8, 0.6);
            let points = sphere_points(100, r, Some(outer));
            let squared = name.starts_with("fig4");
            let problem = ProblemConfig::EnclosingBall {
                points,
                scale_alpha: if squared { 1.0 } else { alpha },
                squared,
                // every point lies within `outer` of the origin
                approx_min: (!squared).then_some(alpha * outer),
            };
            let mut cfg = base(problem, None, dim(1000));
            cfg.x0 = StartPolicy::UniformInBall { radius: Some(r) };
            cfg.project = false;
            if squared {
                cfg.rule = harmonic(None);
                cfg.max_iters = 2000;
                cfg.bounds = bounds(&["harmonic_adaptive", "harmonic_argument_adaptive"]);
            } else {
                cfg.rule = adaptive();
                cfg.max_iters = 200;
                cfg.bounds = bounds(&["theorem1"]);
            }
            single(cfg)
        }
        "fig5-norm-quadratic-r10" | "fig6-norm-quadratic-r1000" | "fig7-norm-quadratic-shifted" => {
            let (n, big_r, g, shift, iters) = match name {
                "fig5-norm-quadratic-r10" => (10_000, 10.0, 0.5, None, 2000),
                "fig6-norm-quadratic-r1000" => (10_000, 1000.0, 0.01, None, 2000),
                _ => (1000, 5000.0, 0.001, Some(VectorSpec::ConstantNorm { constant_norm: 0.01 }), 5000),
            };
            // the published objective carries the coefficient 2g
            let problem = ProblemConfig::NormPlusQuadratic { gamma: 2.0 * g, shift };
            let mut cfg = base(problem, None, dim(n));
            cfg.feasible_radius = Some(big_r);
            cfg.x0 = StartPolicy::Corner { radius: None };
            cfg.max_iters = iters;
            three_panels(cfg, 2.0 * g)
        }
        "fig8-capsule" | "fig9-capsule" => {
            let (g, big_r, r) = if name == "fig8-capsule" { (0.01, 1.0, 0.1) } else { (0.001, 5.0, 0.5) };
            let half = 0.5 * (big_r - r);
            let problem = ProblemConfig::CapsuleRegularized {
                endpoint_a: VectorSpec::RandomDirection { random_direction: half },
                endpoint_b: VectorSpec::RandomDirection { random_direction: half },
                radius: r,
                gamma: g,
            };
            let mut cfg = base(problem, None, dim(1000));
            cfg.feasible_radius = Some(big_r);
            cfg.x0 = StartPolicy::Corner { radius: None };
            cfg.max_iters = 1000;
            three_panels(cfg, 2.0 * g)
        }
        "remark2" => {
            let problem = ProblemConfig::HullOfBallsInexact {
                centers: PointSet::InBall {
                    random_in_ball: BallSample { count: 5, radius: 1.0 },
                },
                radius: 0.5,
            };
            let rule = RuleConfig::PolyakDeltaPartial {
                f_bar: Some(0.0),
                delta: Some(0.0),
                lipschitz: Some(1.0),
            };
            let mut cfg = base(problem, Some(rule), dim(1000));
            cfg.x0 = StartPolicy::UniformOnSphere { radius: 5.0 };
            cfg.project = false;
            cfg.use_delta_oracle = true;
            cfg.max_iters = 100;
            single(cfg)
        }
        "remark3" => {
            let (delta, r) = (0.5, 10.0);
            let problem = ProblemConfig::BallSystem {
                centers: sphere_points(20, delta + r, None),
                radius: r,
                delta,
                f_bar: 0.4,
                sweeps: 3,
            };
            let mut cfg = base(problem, None, dim(1000));
            cfg.max_iters = 50;
            single(cfg)
        }
        other => {
            let names: Vec<&str> = PRESETS.iter().map(|(n, _)| *n).collect();
            return Err(invalid(
                "preset",
                format!("unknown preset `{other}`; available: {}", names.join(", ")),
            ));
        }
    };
    Ok(panels)
}

/// [`preset`] with output paths `<dir>/<name>[-<panel>].csv`.
pub fn preset_in(name: &str, dimension: Option<usize>, dir: &Path) -> Result<Vec<ExperimentConfig>> {
    Ok(preset(name, dimension)?
        .into_iter()
        .map(|(panel, mut cfg)| {
            let file = if panel.is_empty() {
                format!("{name}.csv")
            } else {
                format!("{name}-{panel}.csv")
            };
            cfg.output_path = dir.join(file);
            cfg
        })
        .collect())
}
