//! The classical Lambert function `W` and its base-`λ` variant `R_λ`.

use super::BranchId;
use crate::error::{Error, Result};

/// Branch point of `W`: `z_b = -1/e`.
pub const W_BRANCH_Z: f64 = -0.36787944117144233;

/// Evaluate the Lambert function, the solution of `w e^w = z`.
///
/// The principal branch covers `z >= -1/e` with `W` increasing through
/// `(0, 0)`; the lower branch covers `-1/e <= z < 0` with `W <= -1`.
/// Accuracy target is `|w e^w - z| <= 1e-12 * max(1, |z|)`.
pub fn lambert_w(z: f64, branch: BranchId) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("lambert_w of non-finite {z}")));
    }
    if z < W_BRANCH_Z {
        // Tolerate round-off just below the branch point.
        if z > W_BRANCH_Z - 1e-14 * (1.0 + z.abs()) {
            return Ok(-1.0);
        }
        return Err(Error::Domain(format!(
            "lambert_w: z = {z} below branch point -1/e"
        )));
    }
    match branch {
        BranchId::Principal => Ok(w0(z)),
        BranchId::Lower => {
            if z >= 0.0 {
                return Err(Error::Domain(format!(
                    "lambert_w: lower branch undefined for z = {z} >= 0"
                )));
            }
            Ok(wm1(z))
        }
    }
}

fn halley(z: f64, mut w: f64) -> f64 {
    for _ in 0..40 {
        let e = w.exp();
        let f = w * e - z;
        if f == 0.0 {
            break;
        }
        let d1 = e * (w + 1.0);
        let d2 = e * (w + 2.0);
        let denom = d1 - 0.5 * f * d2 / d1;
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-16 * (1.0 + w.abs()) {
            break;
        }
    }
    w
}

fn w0(z: f64) -> f64 {
    if z == 0.0 {
        return 0.0;
    }
    let guess = if z < -0.3235 {
        // Series around the branch point.
        let p = (2.0 * (std::f64::consts::E * z + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if z < 1.0 {
        // Padé-flavored small-argument start.
        z * (1.0 + 1.5 * z) / (1.0 + 2.5 * z + 0.875 * z * z)
    } else {
        let l1 = z.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    let w = halley(z, guess.max(-1.0 + 1e-14));
    w.max(-1.0)
}

fn wm1(z: f64) -> f64 {
    if z >= -1e-300 {
        return f64::NEG_INFINITY;
    }
    let guess = if z < -0.3235 {
        let p = (2.0 * (std::f64::consts::E * z + 1.0)).max(0.0).sqrt();
        -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p
    } else {
        // W_{-1}(z) ~ ln(-z) - ln(-ln(-z)) near zero.
        let l = (-z).ln();
        l - (-l).ln()
    };
    let w = halley(z, guess.min(-1.0 - 1e-14));
    w.min(-1.0)
}

/// Evaluate `R_λ`, the solution of `R λ^R = z`, via `R_λ(z) = log_λ(e) W(z / log_λ(e))`.
///
/// Requires `λ > 0`, `λ != 1`. For `λ > 1` the principal branch exists for
/// `z >= -log_λ(e)/e` and the lower branch for negative `z` down to the same
/// branch point.
pub fn r_lambda(z: f64, lambda_base: f64, branch: BranchId) -> Result<f64> {
    if !(lambda_base > 0.0) || lambda_base == 1.0 || !lambda_base.is_finite() {
        return Err(Error::InvalidBase(lambda_base));
    }
    let ln_l = lambda_base.ln();
    Ok(lambert_w(z * ln_l, branch)? / ln_l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::BranchId::{Lower, Principal};
    use approx::assert_abs_diff_eq;

    /// Independent bisection oracle on `w e^w = z` (principal branch).
    fn bisect_w0(z: f64) -> f64 {
        let mut lo = -1.0;
        let mut hi = if z > std::f64::consts::E {
            z
        } else {
            std::f64::consts::E
        };
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid * mid.exp() > z {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn principal_fixed_points() {
        assert_eq!(lambert_w(0.0, Principal).unwrap(), 0.0);
        assert_abs_diff_eq!(
            lambert_w(std::f64::consts::E, Principal).unwrap(),
            1.0,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(lambert_w(W_BRANCH_Z, Principal).unwrap(), -1.0, epsilon = 1e-6);
    }

    #[test]
    fn omega_constant_against_bisection() {
        let w = lambert_w(1.0, Principal).unwrap();
        assert_abs_diff_eq!(w, bisect_w0(1.0), epsilon = 1e-12);
        assert_abs_diff_eq!(w, 0.5671432904, epsilon = 1e-9);
    }

    #[test]
    fn residuals_across_domain() {
        let zs: Vec<f64> = (0..2000)
            .map(|i| W_BRANCH_Z + 1e-9 + (i as f64) * 0.05)
            .collect();
        for &z in &zs {
            let w = lambert_w(z, Principal).unwrap();
            assert!(
                (w * w.exp() - z).abs() <= 1e-12 * z.abs().max(1.0),
                "residual too large at z = {z}"
            );
        }
        // Lower branch.
        for i in 1..1000 {
            let z = W_BRANCH_Z * (i as f64) / 1000.0;
            let w = lambert_w(z, Lower).unwrap();
            assert!(w <= -1.0);
            assert!(
                (w * w.exp() - z).abs() <= 1e-12 * z.abs().max(1.0),
                "lower residual too large at z = {z}, w = {w}"
            );
        }
    }

    #[test]
    fn domain_errors() {
        assert!(lambert_w(-0.4, Principal).is_err());
        assert!(lambert_w(0.5, Lower).is_err());
    }

    #[test]
    fn r2_fixed_points() {
        // 1 * 2^1 = 2.
        assert_abs_diff_eq!(r_lambda(2.0, 2.0, Principal).unwrap(), 1.0, epsilon = 1e-12);
        // R_2(1) = log2(e) W(ln 2).
        let expected = std::f64::consts::LOG2_E * bisect_w0(std::f64::consts::LN_2);
        assert_abs_diff_eq!(r_lambda(1.0, 2.0, Principal).unwrap(), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(r_lambda(1.0, 2.0, Principal).unwrap(), 0.641186, epsilon = 1e-6);
    }

    #[test]
    fn r2_branch_point() {
        // z_b = -1/(e ln 2), R_2(z_b) = -1/ln 2.
        let zb = -1.0 / (std::f64::consts::E * std::f64::consts::LN_2);
        let r = r_lambda(zb, 2.0, Principal).unwrap();
        assert_abs_diff_eq!(r, -1.0 / std::f64::consts::LN_2, epsilon = 1e-6);
        assert!(r_lambda(zb - 1e-6, 2.0, Principal).is_err());
    }

    #[test]
    fn r_lambda_defining_identity() {
        // For base < 1 the principal branch only reaches z = -1/(e ln base).
        for &(base, z_max) in &[
            (2.0, 10.0),
            (std::f64::consts::E, 10.0),
            (10.0, 10.0),
            (0.5, 0.52),
        ] {
            for i in 1..200 {
                let z = i as f64 * z_max / 200.0;
                let r = r_lambda(z, base, Principal).unwrap();
                assert!(
                    (r * base.powf(r) - z).abs() <= 1e-12 * z.abs().max(1.0),
                    "base {base}, z {z}"
                );
            }
        }
    }

    #[test]
    fn base_log_recursion() {
        // log2 z = R_2(z) + log2 R_2(z) for z > 0.
        for i in 1..500 {
            let z = i as f64 * 0.02;
            let r = r_lambda(z, 2.0, Principal).unwrap();
            assert_abs_diff_eq!(z.log2(), r + r.log2(), epsilon = 1e-9);
        }
    }

    #[test]
    fn invalid_base_rejected() {
        assert!(r_lambda(1.0, 1.0, Principal).is_err());
        assert!(r_lambda(1.0, -2.0, Principal).is_err());
        assert!(r_lambda(1.0, 0.0, Principal).is_err());
    }
}
