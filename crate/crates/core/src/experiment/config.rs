//! Experiment configuration, read from JSON.

use std::path::PathBuf;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::sampling;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problem: ProblemConfig,
    /// Required for every problem except `ball_system`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleConfig>,
    pub dimension: usize,
    /// Radius of the feasible ball around the origin; absent means the
    /// whole space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible_radius: Option<f64>,
    pub x0: StartPolicy,
    pub max_iters: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default = "default_true")]
    pub project: bool,
    #[serde(default)]
    pub use_delta_oracle: bool,
    #[serde(default)]
    pub bounds: Vec<String>,
    pub output_path: PathBuf,
}

fn default_true() -> bool {
    true
}

fn default_one() -> f64 {
    1.0
}

fn default_sweeps() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProblemConfig {
    NormPlusQuadratic {
        gamma: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<VectorSpec>,
    },
    EnclosingBall {
        points: PointSet,
        #[serde(default = "default_one")]
        scale_alpha: f64,
        #[serde(default)]
        squared: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        approx_min: Option<f64>,
    },
    /// Feasible radius is the problem's `R`.
    CapsuleRegularized {
        endpoint_a: VectorSpec,
        endpoint_b: VectorSpec,
        radius: f64,
        gamma: f64,
    },
    HullOfBallsInexact {
        centers: PointSet,
        radius: f64,
    },
    #[serde(rename = "weakly_quasiconvex_1d")]
    WeaklyQuasiconvex1d {},
    DistToBall {
        center: VectorSpec,
        radius: f64,
    },
    /// Common point of balls by sequential projection. `max_iters` is the
    /// total iteration budget.
    BallSystem {
        centers: PointSet,
        radius: f64,
        delta: f64,
        f_bar: f64,
        #[serde(default = "default_sweeps")]
        sweeps: usize,
    },
}

impl ProblemConfig {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemConfig::NormPlusQuadratic { .. } => "norm_plus_quadratic",
            ProblemConfig::EnclosingBall { .. } => "enclosing_ball",
            ProblemConfig::CapsuleRegularized { .. } => "capsule_regularized",
            ProblemConfig::HullOfBallsInexact { .. } => "hull_of_balls_inexact",
            ProblemConfig::WeaklyQuasiconvex1d {} => "weakly_quasiconvex_1d",
            ProblemConfig::DistToBall { .. } => "dist_to_ball",
            ProblemConfig::BallSystem { .. } => "ball_system",
        }
    }

    pub(crate) fn is_random(&self) -> bool {
        match self {
            ProblemConfig::NormPlusQuadratic { shift, .. } => shift.as_ref().is_some_and(VectorSpec::is_random),
            ProblemConfig::EnclosingBall { points, .. } => points.is_random(),
            ProblemConfig::CapsuleRegularized {
                endpoint_a, endpoint_b, ..
            } => endpoint_a.is_random() || endpoint_b.is_random(),
            // the oracle itself draws random centers
            ProblemConfig::HullOfBallsInexact { .. } => true,
            ProblemConfig::WeaklyQuasiconvex1d {} => false,
            ProblemConfig::DistToBall { center, .. } => center.is_random(),
            ProblemConfig::BallSystem { centers, .. } => centers.is_random(),
        }
    }
}

/// Step rule. Omitted parameters are taken from the problem's metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum RuleConfig {
    PolyakAdaptive {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f_bar: Option<f64>,
    },
    PolyakLipschitz {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f_bar: Option<f64>,
        #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
        lipschitz: Option<f64>,
    },
    PolyakPartial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f_bar: Option<f64>,
        #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
        lipschitz: Option<f64>,
    },
    /// Without `delta` the oracle's realized inexactness is used per query.
    PolyakDeltaPartial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f_bar: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<f64>,
        #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
        lipschitz: Option<f64>,
    },
    HarmonicStronglyConvex {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mu: Option<f64>,
    },
}

/// Dense vector given explicitly or generated for the configured dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VectorSpec {
    Explicit(Vec<f64>),
    /// Every coordinate equal to `fill`.
    Fill { fill: f64 },
    /// Constant coordinates scaled to the given Euclidean norm.
    ConstantNorm { constant_norm: f64 },
    /// Uniformly random direction with the given norm (uses the seed).
    RandomDirection { random_direction: f64 },
}

impl VectorSpec {
    fn is_random(&self) -> bool {
        matches!(self, VectorSpec::RandomDirection { .. })
    }

    pub(crate) fn build<R: Rng + ?Sized>(&self, dim: usize, rng: &mut R) -> Result<Vec<f64>> {
        let v = match self {
            VectorSpec::Explicit(v) => {
                if v.len() != dim {
                    return Err(crate::Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                v.clone()
            }
            VectorSpec::Fill { fill } => vec![*fill; dim],
            VectorSpec::ConstantNorm { constant_norm } => vec![constant_norm / (dim as f64).sqrt(); dim],
            VectorSpec::RandomDirection { random_direction } => sampling::on_sphere(rng, dim, *random_direction),
        };
        if v.iter().any(|c| !c.is_finite()) {
            return Err(invalid("vector", "coordinates must be finite"));
        }
        Ok(v)
    }
}

/// Finite point set given explicitly or sampled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointSet {
    Explicit(Vec<Vec<f64>>),
    OnSphere { random_on_sphere: SphereSample },
    InBall { random_in_ball: BallSample },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereSample {
    pub count: usize,
    pub radius: f64,
    /// Append one more random point at this distance from the origin.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_point_radius: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallSample {
    pub count: usize,
    pub radius: f64,
}

impl PointSet {
    fn is_random(&self) -> bool {
        !matches!(self, PointSet::Explicit(_))
    }

    pub(crate) fn build<R: Rng + ?Sized>(&self, dim: usize, rng: &mut R) -> Result<Vec<Vec<f64>>> {
        let pts = match self {
            PointSet::Explicit(p) => {
                for v in p {
                    if v.len() != dim {
                        return Err(crate::Error::DimensionMismatch {
                            expected: dim,
                            found: v.len(),
                        });
                    }
                }
                p.clone()
            }
            PointSet::OnSphere { random_on_sphere: s } => {
                if !(s.radius >= 0.0) {
                    return Err(invalid("radius", "must be non-negative"));
                }
                let mut pts: Vec<Vec<f64>> = (0..s.count).map(|_| sampling::on_sphere(rng, dim, s.radius)).collect();
                if let Some(r) = s.extra_point_radius {
                    pts.push(sampling::on_sphere(rng, dim, r));
                }
                pts
            }
            PointSet::InBall { random_in_ball: s } => {
                if !(s.radius >= 0.0) {
                    return Err(invalid("radius", "must be non-negative"));
                }
                (0..s.count).map(|_| sampling::in_ball(rng, dim, s.radius)).collect()
            }
        };
        if pts.is_empty() {
            return Err(invalid("points", "at least one point is required"));
        }
        Ok(pts)
    }
}

/// Starting point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "snake_case", deny_unknown_fields)]
pub enum StartPolicy {
    Explicit { point: Vec<f64> },
    /// `(R/sqrt(n), ..., R/sqrt(n))`, with `R` the feasible radius unless given.
    Corner {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        radius: Option<f64>,
    },
    UniformOnSphere { radius: f64 },
    /// Uniform in the ball of the given radius (default: feasible radius).
    UniformInBall {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        radius: Option<f64>,
    },
    Origin {},
}

impl StartPolicy {
    pub(crate) fn is_random(&self) -> bool {
        matches!(self, StartPolicy::UniformOnSphere { .. } | StartPolicy::UniformInBall { .. })
    }

    pub(crate) fn build<R: Rng + ?Sized>(&self, dim: usize, feasible_radius: Option<f64>, rng: &mut R) -> Result<Vec<f64>> {
        let need_radius = |r: Option<f64>| {
            r.or(feasible_radius)
                .ok_or_else(|| invalid("x0", "needs a radius when the feasible set is unbounded"))
        };
        match self {
            StartPolicy::Explicit { point } => VectorSpec::Explicit(point.clone()).build(dim, rng),
            StartPolicy::Corner { radius } => {
                let r = need_radius(*radius)?;
                Ok(vec![r / (dim as f64).sqrt(); dim])
            }
            StartPolicy::UniformOnSphere { radius } => Ok(sampling::on_sphere(rng, dim, *radius)),
            StartPolicy::UniformInBall { radius } => Ok(sampling::in_ball(rng, dim, need_radius(*radius)?)),
            StartPolicy::Origin {} => Ok(vec![0.0; dim]),
        }
    }
}
