//! Reference solutions for problems without a closed-form minimizer.

use crate::error::{invalid, Result};
use crate::linalg;

/// Minimal enclosing ball of a point set.
#[derive(Debug, Clone, PartialEq)]
pub struct EnclosingBallSolution {
    pub center: Vec<f64>,
    /// `max_i ||center - a_i||^2`
    pub radius_sq: f64,
    /// Duality gap; bounds both `radius_sq - r*^2` and `||center - c*||^2`.
    pub gap: f64,
    pub iterations: usize,
}

/// Solves `min_x max_i ||x - a_i||^2` through its dual over the simplex,
/// `max_l sum_i l_i ||a_i||^2 - ||sum_i l_i a_i||^2`, with Frank-Wolfe
/// toward/away steps and exact line search. Stops once the relative gap is
/// below `rel_tol` or after `max_iters` iterations.
pub fn minimal_enclosing_ball(points: &[Vec<f64>], rel_tol: f64, max_iters: usize) -> Result<EnclosingBallSolution> {
    let m = points.len();
    let dim = points.first().map(|p| p.len()).ok_or_else(|| invalid("points", "empty point set"))?;
    if points.iter().any(|p| p.len() != dim) {
        return Err(invalid("points", "points differ in dimension"));
    }
    let gram: Vec<Vec<f64>> = points
        .iter()
        .map(|a| points.iter().map(|b| linalg::dot(a, b)).collect())
        .collect();
    let diag: Vec<f64> = (0..m).map(|i| gram[i][i]).collect();

    // start from the point farthest from a_0
    let far = (0..m)
        .max_by(|&i, &j| linalg::dist_sq(&points[i], &points[0]).total_cmp(&linalg::dist_sq(&points[j], &points[0])))
        .unwrap_or(0);
    let mut lambda = vec![0.0; m];
    lambda[0] = 0.5;
    lambda[far] += 0.5;
    let mut g_lambda: Vec<f64> = (0..m).map(|i| 0.5 * (gram[i][0] + gram[i][far])).collect();
    let recompute_q = |lambda: &[f64], g_lambda: &[f64]| linalg::dot(lambda, g_lambda);
    let mut q = recompute_q(&lambda, &g_lambda);

    let mut iterations = 0;
    while iterations < max_iters {
        if iterations % 512 == 0 {
            g_lambda = (0..m).map(|i| linalg::dot(&gram[i], &lambda)).collect();
            q = recompute_q(&lambda, &g_lambda);
        }
        let dual = linalg::dot(&lambda, &diag) - q;
        let dist = |i: usize| (q - 2.0 * g_lambda[i] + diag[i]).max(0.0);
        let (mut plus, mut d_plus) = (0, f64::NEG_INFINITY);
        let (mut minus, mut d_minus) = (0, f64::INFINITY);
        for i in 0..m {
            let d = dist(i);
            if d > d_plus {
                (plus, d_plus) = (i, d);
            }
            if lambda[i] > 0.0 && d < d_minus {
                (minus, d_minus) = (i, d);
            }
        }
        if d_plus <= 0.0 || d_plus - dual <= rel_tol * d_plus {
            break;
        }
        iterations += 1;
        let scale = dual.max(f64::MIN_POSITIVE);
        let delta_plus = d_plus / scale - 1.0;
        let delta_minus = 1.0 - d_minus / scale;
        if delta_plus >= delta_minus || lambda[minus] >= 1.0 {
            let tau = delta_plus / (2.0 * (1.0 + delta_plus));
            for l in lambda.iter_mut() {
                *l *= 1.0 - tau;
            }
            lambda[plus] += tau;
            q = (1.0 - tau).powi(2) * q + 2.0 * tau * (1.0 - tau) * g_lambda[plus] + tau * tau * diag[plus];
            for (i, gl) in g_lambda.iter_mut().enumerate() {
                *gl = (1.0 - tau) * *gl + tau * gram[i][plus];
            }
        } else {
            let l_minus = lambda[minus];
            let tau = (delta_minus / (2.0 * (1.0 - delta_minus))).min(l_minus / (1.0 - l_minus));
            for l in lambda.iter_mut() {
                *l *= 1.0 + tau;
            }
            lambda[minus] -= tau;
            if lambda[minus] < 1e-15 {
                lambda[minus] = 0.0;
            }
            q = (1.0 + tau).powi(2) * q - 2.0 * tau * (1.0 + tau) * g_lambda[minus] + tau * tau * diag[minus];
            for (i, gl) in g_lambda.iter_mut().enumerate() {
                *gl = (1.0 + tau) * *gl - tau * gram[i][minus];
            }
        }
    }

    let mut center = linalg::zeros(dim);
    for (l, a) in lambda.iter().zip(points) {
        if *l != 0.0 {
            linalg::axpy(*l, a, &mut center);
        }
    }
    let radius_sq = points.iter().map(|a| linalg::dist_sq(&center, a)).fold(0.0, f64::max);
    let dual = linalg::dot(&lambda, &diag) - linalg::norm_sq(&center);
    Ok(EnclosingBallSolution {
        gap: (radius_sq - dual).max(0.0),
        center,
        radius_sq,
        iterations,
    })
}
