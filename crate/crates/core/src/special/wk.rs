//! The Lambert-Kaniadakis function `W_κ`, inverse of `w e_κ^w`.

use super::solve::newton_bisect;
use super::{BranchId, BranchPoint};
use crate::error::{Error, Result};

/// Branch point of `W_κ` for `0 <= κ² < 1`:
/// `z_b = -(1-κ)^{(1-κ)/2κ} / (1+κ)^{(1+κ)/2κ}`, `w_b = -(1-κ²)^{-1/2}`.
pub fn wk_branch_point(kappa: f64) -> Result<BranchPoint> {
    if kappa * kappa >= 1.0 {
        return Err(Error::InvalidKappa(kappa));
    }
    let k = kappa.abs();
    if k == 0.0 {
        return Ok(BranchPoint {
            z: super::lambert::W_BRANCH_Z,
            w: -1.0,
            finite: true,
        });
    }
    let z = -((1.0 - k).ln() * (1.0 - k) / (2.0 * k) - (1.0 + k).ln() * (1.0 + k) / (2.0 * k)).exp();
    Ok(BranchPoint {
        z,
        w: -1.0 / (1.0 - k * k).sqrt(),
        finite: true,
    })
}

/// Evaluate `W_κ(z)`, the solution of `w e_κ^w = z`, for `κ² < 1`.
///
/// `κ = 0` reduces to the classical Lambert function. The κ-exponential is
/// even in `κ`, so only `|κ|` matters.
pub fn wk(z: f64, kappa: f64, branch: BranchId) -> Result<f64> {
    if kappa * kappa >= 1.0 {
        return Err(Error::InvalidKappa(kappa));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("wk of non-finite {z}")));
    }
    let k = kappa.abs();
    if k == 0.0 {
        return super::lambert::lambert_w(z, branch);
    }

    let bp = wk_branch_point(k)?;
    let tol = 1e-12 * z.abs().max(1.0);
    if z < bp.z - tol {
        return Err(Error::Domain(format!(
            "wk: z = {z} below branch point {} for kappa = {kappa}",
            bp.z
        )));
    }
    if (z - bp.z).abs() <= tol {
        return Ok(bp.w);
    }
    if z == 0.0 && matches!(branch, BranchId::Principal) {
        return Ok(0.0);
    }

    // e_k(w) = exp(asinh(k w)/k); d(w e_k)/dw = e_k (1 + w / sqrt(1 + k²w²)).
    let f = |w: f64| {
        let e = ((k * w).asinh() / k).exp();
        let fw = w * e - z;
        let df = e * (1.0 + w / (1.0 + k * k * w * w).sqrt());
        (fw, df)
    };

    match branch {
        BranchId::Principal => {
            let mut hi = bp.w.abs().max(1.0);
            while f(hi).0 < 0.0 {
                hi = hi * 2.0 + 1.0;
                if hi > 1e300 {
                    return Err(Error::Domain(format!("wk: no bracket for z = {z}")));
                }
            }
            Ok(newton_bisect(f, bp.w, hi, 1e-15))
        }
        BranchId::Lower => {
            if z >= 0.0 {
                return Err(Error::Domain(format!(
                    "wk: lower branch undefined for z = {z} >= 0"
                )));
            }
            let mut lo = bp.w - 1.0;
            while f(lo).0 < 0.0 {
                lo = bp.w + (lo - bp.w) * 2.0;
                if lo < -1e300 {
                    return Err(Error::Domain(format!("wk: no lower bracket for z = {z}")));
                }
            }
            Ok(newton_bisect(f, lo, bp.w, 1e-15))
        }
    }
}
