//! Random points on spheres and in balls.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg;

/// Uniform point on the sphere of radius `radius` around the origin.
pub fn on_sphere<R: Rng + ?Sized>(rng: &mut R, dim: usize, radius: f64) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let n = linalg::norm(&g);
        if n > 0.0 {
            return linalg::scale(&g, radius / n);
        }
    }
}

/// Uniform point in the ball of radius `radius` around the origin.
pub fn in_ball<R: Rng + ?Sized>(rng: &mut R, dim: usize, radius: f64) -> Vec<f64> {
    let u: f64 = rng.random();
    on_sphere(rng, dim, radius * u.powf(1.0 / dim as f64))
}
