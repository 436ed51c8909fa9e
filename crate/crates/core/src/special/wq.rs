//! The Lambert-Tsallis function `W_q`, inverse of `w e_q^w`.

use super::solve::newton_bisect;
use super::{BranchId, BranchPoint};
use crate::error::{Error, Result};

const Q_EPS: f64 = 1e-12;

/// Branch point of `W_q`: `(e_q(1/(q-2))/(q-2), 1/(q-2))`.
///
/// Simplifies to `z_b = -(2-q)^{-(2-q)/(1-q)}`. For `q = 2` there is no
/// finite branch point; the returned value carries the domain infimum `-1`
/// with `finite = false`. Indices `q > 2` have no real principal branch
/// through the origin and are rejected.
pub fn wq_branch_point(q: f64) -> Result<BranchPoint> {
    if q > 2.0 + Q_EPS {
        return Err(Error::UnsupportedQ {
            q,
            reason: "no real principal branch for q > 2".into(),
        });
    }
    if (q - 2.0).abs() <= Q_EPS {
        return Ok(BranchPoint {
            z: -1.0,
            w: f64::NEG_INFINITY,
            finite: false,
        });
    }
    if (q - 1.0).abs() <= Q_EPS {
        return Ok(BranchPoint {
            z: super::lambert::W_BRANCH_Z,
            w: -1.0,
            finite: true,
        });
    }
    // ln(2-q) written as ln_1p(1-q) so the q -> 1 limit stays accurate.
    let z = -(-(2.0 - q) * (1.0 - q).ln_1p() / (1.0 - q)).exp();
    Ok(BranchPoint {
        z,
        w: 1.0 / (q - 2.0),
        finite: true,
    })
}

/// `e_q(w)` and `d(w e_q(w))/dw` without domain checks; the solver keeps
/// `w` inside the valid bracket.
fn eq_raw(w: f64, q: f64) -> (f64, f64) {
    let t = (1.0 + (1.0 - q) * w).max(0.0);
    let r = 1.0 / (1.0 - q);
    let e = t.powf(r);
    // d e_q/dw = e_q^q = t^{q/(1-q)}
    let de = t.powf(q * r);
    (e, e + w * de)
}

/// Evaluate `W_q(z)`, the solution of `w e_q^w = z`.
///
/// `q = 1` short-circuits to the classical Lambert function, `q = 2` to the
/// closed form `z/(z+1)`; every other index in `(-inf, 2)` is solved by
/// bracketed Newton between the branch point and a growth bound.
pub fn wq(z: f64, q: f64, branch: BranchId) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("wq of non-finite {z}")));
    }
    if (q - 1.0).abs() <= Q_EPS {
        return super::lambert::lambert_w(z, branch);
    }
    if q > 2.0 + Q_EPS {
        return Err(Error::UnsupportedQ {
            q,
            reason: "no real principal branch for q > 2".into(),
        });
    }
    if (q - 2.0).abs() <= Q_EPS {
        match branch {
            BranchId::Principal => {
                if z <= -1.0 {
                    return Err(Error::Domain(format!(
                        "wq: z = {z} outside the domain (-1, inf) at q = 2"
                    )));
                }
                return Ok(z / (z + 1.0));
            }
            BranchId::Lower => {
                return Err(Error::Domain(
                    "wq: q = 2 has a single real branch".into(),
                ))
            }
        }
    }

    let bp = wq_branch_point(q)?;
    let tol = 1e-12 * z.abs().max(1.0);
    if z < bp.z - tol {
        return Err(Error::Domain(format!(
            "wq: z = {z} below branch point {} for q = {q}",
            bp.z
        )));
    }
    if (z - bp.z).abs() <= tol && matches!(branch, BranchId::Principal | BranchId::Lower) {
        return Ok(bp.w);
    }
    if z == 0.0 && matches!(branch, BranchId::Principal) {
        return Ok(0.0);
    }

    let f = |w: f64| {
        let (e, df) = eq_raw(w, q);
        (w * e - z, df)
    };

    match branch {
        BranchId::Principal => {
            let mut hi;
            if q < 1.0 {
                hi = bp.w.abs().max(1.0);
                while f(hi).0 < 0.0 {
                    hi = hi * 2.0 + 1.0;
                    if hi > 1e300 {
                        return Err(Error::Domain(format!("wq: no bracket for z = {z}")));
                    }
                }
            } else {
                // Domain capped at w < 1/(q-1) where e_q blows up.
                let cap = 1.0 / (q - 1.0);
                let mut gap = cap - bp.w;
                hi = cap - 0.25 * gap;
                while f(hi).0 < 0.0 {
                    gap *= 0.25;
                    hi = cap - 0.25 * gap;
                    if gap < 1e-300 {
                        return Err(Error::Domain(format!("wq: no bracket for z = {z}")));
                    }
                }
            }
            Ok(newton_bisect(f, bp.w, hi, 1e-15))
        }
        BranchId::Lower => {
            if z >= 0.0 {
                return Err(Error::Domain(format!(
                    "wq: lower branch undefined for z = {z} >= 0"
                )));
            }
            let lo = if q < 1.0 {
                // e_q support boundary: w >= -1/(1-q).
                -1.0 / (1.0 - q)
            } else {
                let mut lo = bp.w - 1.0;
                while f(lo).0 < 0.0 {
                    lo = bp.w + (lo - bp.w) * 2.0;
                    if lo < -1e300 {
                        return Err(Error::Domain(format!("wq: no lower bracket for z = {z}")));
                    }
                }
                lo
            };
            Ok(newton_bisect(f, lo, bp.w, 1e-15))
        }
    }
}

/// Closed-form principal-branch values for `q` in `{1/2, 4/3, 3/2, 2}`.
///
/// Returns `None` when `q` is not one of the four special indices or `z`
/// lies outside the domain where the printed radical form is real
/// (`z > 0` for `q = 4/3`). Used as an independent cross-check of the
/// generic solver.
pub fn wq_closed_form(z: f64, q: f64) -> Option<f64> {
    if (q - 0.5).abs() <= Q_EPS {
        return w_half(z);
    }
    if (q - 4.0 / 3.0).abs() <= Q_EPS {
        return w_four_thirds(z);
    }
    if (q - 1.5).abs() <= Q_EPS {
        return w_three_halves(z);
    }
    if (q - 2.0).abs() <= Q_EPS {
        if z > -1.0 {
            return Some(z / (z + 1.0));
        }
        return None;
    }
    None
}

/// Principal root of `x(2+x)^2 = 4z` (depressed cubic via Cardano, trig
/// form inside the three-real-root window `z in (-8/27, 0)`).
fn w_half(z: f64) -> Option<f64> {
    if z < -8.0 / 27.0 {
        return None;
    }
    let neg_half_q0 = 8.0 / 27.0 + 2.0 * z;
    let disc = neg_half_q0 * neg_half_q0 - 64.0 / 729.0;
    let y = if disc >= 0.0 {
        let s = disc.sqrt();
        (neg_half_q0 + s).cbrt() + (neg_half_q0 - s).cbrt()
    } else {
        let u = (1.0 + 27.0 * z / 4.0).clamp(-1.0, 1.0);
        4.0 / 3.0 * (u.acos() / 3.0).cos()
    };
    Some(y - 4.0 / 3.0)
}

/// Principal root of `z(x-3)^3 + 27x = 0` for `z > 0`.
fn w_four_thirds(z: f64) -> Option<f64> {
    if z <= 0.0 {
        return None;
    }
    let neg_half_q0 = -81.0 / (2.0 * z);
    let disc = 6561.0 / (4.0 * z * z) + 729.0 / (z * z * z);
    let s = disc.sqrt();
    let y = (neg_half_q0 + s).cbrt() + (neg_half_q0 - s).cbrt();
    Some(y + 3.0)
}

/// `(2(z+1) - 2 sqrt(2z+1))/z` with a series fallback near zero.
fn w_three_halves(z: f64) -> Option<f64> {
    if z < -0.5 {
        return None;
    }
    if z.abs() < 1e-4 {
        return Some(z - z * z + 1.25 * z * z * z - 1.75 * z * z * z * z);
    }
    Some((2.0 * (z + 1.0) - 2.0 * (2.0 * z + 1.0).sqrt()) / z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::deformed::exp_q;
    use crate::special::BranchId::{Lower, Principal};
    use approx::assert_abs_diff_eq;

    fn residual(z: f64, q: f64, w: f64) -> f64 {
        (w * exp_q(w, q).unwrap() - z).abs() / z.abs().max(1.0)
    }

    #[test]
    fn known_values() {
        assert_abs_diff_eq!(wq(1.0, 2.0, Principal).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(
            wq(1.0, 1.5, Principal).unwrap(),
            4.0 - 2.0 * 3.0f64.sqrt(),
            epsilon = 1e-12
        );
        assert_eq!(wq(0.0, 0.5, Principal).unwrap(), 0.0);
        assert_eq!(wq(0.0, 1.7, Principal).unwrap(), 0.0);
        // Branch point of q = 3/2 sits at (-1/2, -2).
        assert_abs_diff_eq!(wq(-0.5, 1.5, Principal).unwrap(), -2.0, epsilon = 1e-6);
    }

    #[test]
    fn branch_points() {
        let b = wq_branch_point(1.0).unwrap();
        assert_abs_diff_eq!(b.z, -(-1.0f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(b.w, -1.0, epsilon = 1e-15);

        let b = wq_branch_point(0.5).unwrap();
        assert_abs_diff_eq!(b.z, -8.0 / 27.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b.w, -2.0 / 3.0, epsilon = 1e-15);

        let b = wq_branch_point(2.0).unwrap();
        assert!(!b.finite);

        assert!(wq_branch_point(2.5).is_err());
    }

    #[test]
    fn defining_identity_on_grids() {
        for &q in &[0.25, 0.5, 0.75, 4.0 / 3.0, 1.5, 1.9] {
            let zb = wq_branch_point(q).unwrap().z;
            for i in 0..400 {
                let z = zb + (i as f64 + 0.5) * 0.025;
                let w = wq(z, q, Principal).unwrap();
                assert!(
                    residual(z, q, w) <= 1e-9,
                    "q = {q}, z = {z}: residual {}",
                    residual(z, q, w)
                );
            }
            // Lower branch over (z_b, 0).
            for i in 1..100 {
                let z = zb * (i as f64) / 100.0;
                let w = wq(z, q, Lower).unwrap();
                assert!(w <= wq_branch_point(q).unwrap().w + 1e-9);
                assert!(residual(z, q, w) <= 1e-9, "lower q = {q}, z = {z}");
            }
        }
    }

    #[test]
    fn closed_forms_match_solver() {
        for &q in &[0.5, 4.0 / 3.0, 1.5, 2.0] {
            let z_lo = match q {
                x if x == 0.5 => -8.0 / 27.0,
                x if x == 1.5 => -0.5,
                x if x == 2.0 => -0.99,
                _ => 1e-3, // q = 4/3 closed form printed for z > 0
            };
            for i in 0..1000 {
                let z = z_lo + (i as f64 + 0.5) * 0.01;
                let cf = wq_closed_form(z, q).unwrap();
                let nv = wq(z, q, Principal).unwrap();
                assert!(
                    (cf - nv).abs() <= 1e-9 * nv.abs().max(1.0),
                    "q = {q}, z = {z}: closed {cf} vs solver {nv}"
                );
            }
        }
    }

    #[test]
    fn q_log_recursion() {
        use crate::special::deformed::ln_q;
        // ln_q x = W_q(x) + ln_q W_q(x) + (1-q) W_q(x) ln_q W_q(x)
        for &q in &[0.5, 1.5, 2.0] {
            for i in 1..=100 {
                let x = i as f64 / 100.0;
                let w = wq(x, q, Principal).unwrap();
                let lhs = ln_q(x, q).unwrap();
                let rhs = w + ln_q(w, q).unwrap() * (1.0 + (1.0 - q) * w);
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn principal_branch_monotone() {
        for &q in &[0.5, 1.25, 1.5, 2.0] {
            let mut prev = f64::NEG_INFINITY;
            for i in 0..500 {
                let z = -0.2 + i as f64 * 0.01;
                let w = wq(z, q, Principal).unwrap();
                assert!(w > prev, "q = {q} not increasing at z = {z}");
                prev = w;
            }
        }
    }

    #[test]
    fn q_to_one_limit() {
        for i in 0..100 {
            let z = -0.3 + i as f64 * 0.05;
            let w1 = wq(z, 1.0, Principal).unwrap();
            for &q in &[1.0 - 1e-6, 1.0 + 1e-6] {
                let w = wq(z, q, Principal).unwrap();
                assert!((w - w1).abs() <= 1e-5, "q = {q}, z = {z}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(wq(-1.0, 2.0, Principal).is_err());
        assert!(wq(-0.6, 1.5, Principal).is_err());
        assert!(wq(-0.4, 0.5, Principal).is_err());
        assert!(wq(0.5, 1.5, Lower).is_err());
        assert!(wq(1.0, 2.5, Principal).is_err());
        assert!(wq(1.0, 2.0, Lower).is_err());
    }
}
