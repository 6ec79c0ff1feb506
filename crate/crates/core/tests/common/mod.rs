//! Independent reference computations for the integration tests. Nothing
//! here calls into the library.
#![allow(dead_code)]

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

pub fn project_onto_ball(x: &[f64], c: &[f64], r: f64) -> Vec<f64> {
    let d = dist(x, c);
    if d <= r {
        return x.to_vec();
    }
    x.iter().zip(c).map(|(xi, ci)| ci + r * (xi - ci) / d).collect()
}

pub fn dist_to_ball(x: &[f64], c: &[f64], r: f64) -> f64 {
    (dist(x, c) - r).max(0.0)
}

pub fn dist_to_capsule(x: &[f64], a: &[f64], b: &[f64], r: f64) -> f64 {
    let ab: Vec<f64> = b.iter().zip(a).map(|(bi, ai)| bi - ai).collect();
    let ax: Vec<f64> = x.iter().zip(a).map(|(xi, ai)| xi - ai).collect();
    let len_sq = dot(&ab, &ab);
    let t = if len_sq > 0.0 {
        (dot(&ax, &ab) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let closest: Vec<f64> = a.iter().zip(&ab).map(|(ai, di)| ai + t * di).collect();
    (dist(x, &closest) - r).max(0.0)
}

pub fn max_dist_sq(x: &[f64], points: &[Vec<f64>]) -> f64 {
    points.iter().map(|a| dist(x, a).powi(2)).fold(0.0, f64::max)
}

/// Euclidean projection onto the probability simplex (sort-based).
fn project_simplex(v: &mut [f64]) {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (i, ui) in u.iter().enumerate() {
        cum += ui;
        let t = (cum - 1.0) / (i as f64 + 1.0);
        if ui - t > 0.0 {
            theta = t;
        }
    }
    for vi in v.iter_mut() {
        *vi = (*vi - theta).max(0.0);
    }
}

pub struct Meb {
    pub center: Vec<f64>,
    /// `max_i ||center - a_i||^2`, an upper bound on the optimal value.
    pub upper: f64,
    /// Dual value, a lower bound on the optimal value.
    pub lower: f64,
}

/// Minimal enclosing ball by accelerated projected gradient ascent on the
/// simplex dual `max_l sum l_i |a_i|^2 - |sum l_i a_i|^2`, with restarts.
pub fn meb_reference(points: &[Vec<f64>], gap_tol: f64, max_iters: usize) -> Meb {
    let m = points.len();
    let gram: Vec<Vec<f64>> = points.iter().map(|a| points.iter().map(|b| dot(a, b)).collect()).collect();
    let diag: Vec<f64> = (0..m).map(|i| gram[i][i]).collect();
    let gl = |l: &[f64]| -> Vec<f64> { (0..m).map(|i| dot(&gram[i], l)).collect() };
    let dual = |l: &[f64]| dot(l, &diag) - dot(l, &gl(l));

    // largest eigenvalue of the Gram matrix by power iteration
    let mut v = vec![1.0; m];
    let mut lam = 0.0;
    for _ in 0..200 {
        let w = gl(&v);
        lam = norm(&w);
        v = w.iter().map(|x| x / lam).collect();
    }
    let step = 1.0 / (2.0 * lam * 1.01);

    let center_of = |l: &[f64]| -> Vec<f64> {
        let mut c = vec![0.0; points[0].len()];
        for (li, a) in l.iter().zip(points) {
            for (ci, ai) in c.iter_mut().zip(a) {
                *ci += li * ai;
            }
        }
        c
    };

    let mut x = vec![1.0 / m as f64; m];
    let mut y = x.clone();
    let mut t = 1.0f64;
    let mut best = Meb {
        center: center_of(&x),
        upper: f64::INFINITY,
        lower: f64::NEG_INFINITY,
    };
    for it in 0..max_iters {
        let g: Vec<f64> = gl(&y).iter().zip(&diag).map(|(q, d)| d - 2.0 * q).collect();
        let mut next: Vec<f64> = y.iter().zip(&g).map(|(yi, gi)| yi + step * gi).collect();
        project_simplex(&mut next);
        let t_next = 0.5 * (1.0 + (1.0 + 4.0 * t * t).sqrt());
        if dual(&next) < dual(&x) {
            // restart the momentum
            y = x.clone();
            t = 1.0;
            continue;
        }
        y = next
            .iter()
            .zip(&x)
            .map(|(n, o)| n + (t - 1.0) / t_next * (n - o))
            .collect();
        x = next;
        t = t_next;
        if it % 50 == 0 || it + 1 == max_iters {
            let c = center_of(&x);
            let upper = max_dist_sq(&c, points);
            let lower = dual(&x);
            if upper - lower < best.upper - best.lower {
                best = Meb { center: c, upper, lower };
            }
            if best.upper - best.lower <= gap_tol {
                break;
            }
        }
    }
    best
}

/// Theorem 1 bound by the explicit product-sum
/// `prod_i (1 - c_i) R0^2 + sum_i D_i prod_{j > i} (1 - c_j)`,
/// `c_i = a^2 b^2 / (2 g_i^2)`, `D_i = D^2 / (2 g_i^2)`; entry `k` uses the
/// first `k` gradient norms.
pub fn theorem1_direct(grads: &[f64], alpha: f64, beta: f64, delta: f64, r0_sq: f64) -> Vec<f64> {
    let c: Vec<f64> = grads.iter().map(|g| (alpha * beta).powi(2) / (2.0 * g * g)).collect();
    let d: Vec<f64> = grads.iter().map(|g| delta * delta / (2.0 * g * g)).collect();
    (0..=grads.len())
        .map(|k| {
            let mut total = r0_sq;
            for ci in &c[..k] {
                total *= 1.0 - ci;
            }
            for i in 0..k {
                let mut term = d[i];
                for cj in &c[i + 1..k] {
                    term *= 1.0 - cj;
                }
                total += term;
            }
            total
        })
        .collect()
}
