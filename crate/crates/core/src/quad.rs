//! Tensor-product Gauss-Legendre quadrature over phase-space boxes.
//!
//! Rules are generated by Newton iteration on the Legendre recurrence.
//! Multi-dimensional integrals parallelize over outer grid tiles; the
//! partial sums are collected in index order and reduced sequentially, so
//! results do not depend on the thread count.

use rayon::prelude::*;

/// A Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Build an `n`-point rule (exact for polynomials of degree `2n - 1`).
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "quadrature needs at least 2 nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Chebyshev-flavored initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre P_n(x) and derivative by recurrence.
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Nodes and weights scaled to `[-r, r]`.
    pub fn scaled(&self, r: f64) -> (Vec<f64>, Vec<f64>) {
        (
            self.nodes.iter().map(|x| x * r).collect(),
            self.weights.iter().map(|w| w * r).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Integrate `m` integrands at once over the square `[-r, r]^2`.
///
/// The integrand maps `(x, y)` to an array of values accumulated with the
/// same weights.
pub fn integrate_2d<const M: usize, F>(r: f64, n: usize, f: F) -> [f64; M]
where
    F: Fn(f64, f64) -> [f64; M] + Sync,
{
    let rule = GaussLegendre::new(n);
    let (xs, ws) = rule.scaled(r);
    let rows: Vec<[f64; M]> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = [0.0; M];
            for j in 0..n {
                let v = f(xs[i], xs[j]);
                for (a, vv) in acc.iter_mut().zip(v) {
                    *a += ws[j] * vv;
                }
            }
            for a in acc.iter_mut() {
                *a *= ws[i];
            }
            acc
        })
        .collect();
    let mut total = [0.0; M];
    for row in rows {
        for (t, v) in total.iter_mut().zip(row) {
            *t += v;
        }
    }
    total
}

/// Integrate `m` integrands at once over the box `[-r, r]^4`.
pub fn integrate_4d<const M: usize, F>(r: f64, n: usize, f: F) -> [f64; M]
where
    F: Fn(f64, f64, f64, f64) -> [f64; M] + Sync,
{
    let rule = GaussLegendre::new(n);
    let (xs, ws) = rule.scaled(r);
    let tiles: Vec<[f64; M]> = (0..n * n)
        .into_par_iter()
        .map(|t| {
            let i = t / n;
            let j = t % n;
            let mut acc = [0.0; M];
            for k in 0..n {
                for l in 0..n {
                    let v = f(xs[i], xs[j], xs[k], xs[l]);
                    let w = ws[k] * ws[l];
                    for (a, vv) in acc.iter_mut().zip(v) {
                        *a += w * vv;
                    }
                }
            }
            let w = ws[i] * ws[j];
            for a in acc.iter_mut() {
                *a *= w;
            }
            acc
        })
        .collect();
    let mut total = [0.0; M];
    for tile in tiles {
        for (t, v) in total.iter_mut().zip(tile) {
            *t += v;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(8);
        let (xs, ws) = rule.scaled(1.0);
        // x^10 over [-1, 1] = 2/11 needs n >= 6.
        let v: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(10)).sum();
        assert_abs_diff_eq!(v, 2.0 / 11.0, epsilon = 1e-13);
        // Odd powers vanish.
        let v: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(7)).sum();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn gaussian_moments_2d() {
        // ∫ exp(-2(x²+y²)) over R² = π/2; radius 6 truncation error ~ e^{-72}.
        let [v] = integrate_2d(6.0, 48, |x, y| [(-2.0 * (x * x + y * y)).exp()]);
        assert_abs_diff_eq!(v, std::f64::consts::PI / 2.0, epsilon = 1e-10);
    }

    #[test]
    fn gaussian_moments_4d() {
        let [v] = integrate_4d(5.0, 24, |x, y, z, w| {
            [(-(x * x + y * y + z * z + w * w)).exp()]
        });
        assert_abs_diff_eq!(v, std::f64::consts::PI * std::f64::consts::PI, epsilon = 1e-8);
    }

    #[test]
    fn multi_integrand_consistency() {
        let [a, b] = integrate_2d(4.0, 32, |x, y| {
            let g = (-(x * x + y * y)).exp();
            [g, x * x * g]
        });
        assert_abs_diff_eq!(a, std::f64::consts::PI, epsilon = 1e-10);
        assert_abs_diff_eq!(b, std::f64::consts::PI / 2.0, epsilon = 1e-10);
    }
}
