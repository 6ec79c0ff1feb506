//! Euclidean projections and distance functions for balls, segments and
//! capsules.
//!
//! Distances return a subgradient alongside the value. On the set itself the
//! zero vector is returned, which is a valid subgradient there and lets the
//! step rules recognise a minimizer.

use crate::error::{check_dim, invalid, Result};
use crate::linalg;

/// Closed Euclidean ball. An infinite radius denotes the whole space.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    center: Vec<f64>,
    radius: f64,
}

impl Ball {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        if radius.is_nan() || radius < 0.0 {
            return Err(invalid("radius", format!("must be non-negative, got {radius}")));
        }
        if center.iter().any(|c| !c.is_finite()) {
            return Err(invalid("center", "coordinates must be finite"));
        }
        Ok(Ball { center, radius })
    }

    /// The whole of `R^dim`; projection onto it is the identity.
    pub fn unbounded(dim: usize) -> Self {
        Ball {
            center: vec![0.0; dim],
            radius: f64::INFINITY,
        }
    }

    /// Ball of the given radius around the origin.
    pub fn centered(dim: usize, radius: f64) -> Result<Self> {
        Ball::new(vec![0.0; dim], radius)
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn is_unbounded(&self) -> bool {
        self.radius.is_infinite()
    }

    /// Membership with a relative slack of `rel_tol` on the radius.
    pub fn contains(&self, x: &[f64], rel_tol: f64) -> bool {
        if self.is_unbounded() {
            return true;
        }
        linalg::dist(x, &self.center) <= self.radius * (1.0 + rel_tol) + rel_tol
    }
}

/// Convex hull of two balls of equal radius: a segment thickened by `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct Capsule {
    a: Vec<f64>,
    b: Vec<f64>,
    radius: f64,
}

impl Capsule {
    pub fn new(a: Vec<f64>, b: Vec<f64>, radius: f64) -> Result<Self> {
        check_dim(a.len(), b.len())?;
        if !radius.is_finite() || radius < 0.0 {
            return Err(invalid("radius", format!("must be finite and non-negative, got {radius}")));
        }
        Ok(Capsule { a, b, radius })
    }

    pub fn endpoint_a(&self) -> &[f64] {
        &self.a
    }

    pub fn endpoint_b(&self) -> &[f64] {
        &self.b
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }
}

pub fn project_ball(x: &[f64], ball: &Ball) -> Result<Vec<f64>> {
    check_dim(ball.dim(), x.len())?;
    if ball.is_unbounded() {
        return Ok(x.to_vec());
    }
    let d = linalg::dist(x, ball.center());
    if d <= ball.radius() {
        return Ok(x.to_vec());
    }
    let s = ball.radius() / d;
    Ok(x.iter()
        .zip(ball.center())
        .map(|(xi, ci)| ci + s * (xi - ci))
        .collect())
}

/// Distance from `x` to the ball and a subgradient of that distance.
pub fn dist_to_ball(x: &[f64], ball: &Ball) -> Result<(f64, Vec<f64>)> {
    check_dim(ball.dim(), x.len())?;
    if ball.is_unbounded() {
        return Ok((0.0, linalg::zeros(x.len())));
    }
    let d = linalg::dist(x, ball.center());
    let value = (d - ball.radius()).max(0.0);
    if value > 0.0 {
        let g = x.iter().zip(ball.center()).map(|(xi, ci)| (xi - ci) / d).collect();
        Ok((value, g))
    } else {
        Ok((0.0, linalg::zeros(x.len())))
    }
}

/// Distance from `x` to the segment `[a, b]` and the closest point on it.
pub fn dist_to_segment(x: &[f64], a: &[f64], b: &[f64]) -> Result<(f64, Vec<f64>)> {
    check_dim(a.len(), x.len())?;
    check_dim(a.len(), b.len())?;
    let ab = linalg::sub(b, a);
    let len_sq = linalg::norm_sq(&ab);
    let t = if len_sq > 0.0 {
        let ax = linalg::sub(x, a);
        (linalg::dot(&ax, &ab) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let mut closest = a.to_vec();
    linalg::axpy(t, &ab, &mut closest);
    Ok((linalg::dist(x, &closest), closest))
}

/// Distance from `x` to the capsule and a subgradient of that distance.
pub fn dist_to_capsule(x: &[f64], capsule: &Capsule) -> Result<(f64, Vec<f64>)> {
    let (d, closest) = dist_to_segment(x, capsule.endpoint_a(), capsule.endpoint_b())?;
    let value = (d - capsule.radius()).max(0.0);
    if value > 0.0 {
        let g = x.iter().zip(&closest).map(|(xi, ci)| (xi - ci) / d).collect();
        Ok((value, g))
    } else {
        Ok((0.0, linalg::zeros(x.len())))
    }
}
