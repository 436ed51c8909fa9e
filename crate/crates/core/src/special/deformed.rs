//! Tsallis and Kaniadakis deformed exponentials and logarithms.

use super::DeformationParams;
use crate::error::{Error, Result};

/// Which deformed function to evaluate through [`deformed_exp_log`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformedKind {
    ExpQ,
    LnQ,
    ExpKappa,
}

/// Tsallis q-exponential `e_q(x) = [1 + (1-q) x]^{1/(1-q)}`.
///
/// For `q < 1` the cutoff `1 + (1-q) x >= 0` truncates the function to 0 at
/// the boundary; for `q > 1` the expression needs `1 + (1-q) x > 0`.
pub fn exp_q(x: f64, q: f64) -> Result<f64> {
    if (q - 1.0).abs() < 1e-14 {
        return Ok(x.exp());
    }
    let t = 1.0 + (1.0 - q) * x;
    if q < 1.0 {
        if t < -1e-14 * (1.0 + x.abs()) {
            return Err(Error::Domain(format!(
                "exp_q: 1 + (1-q)x = {t} < 0 for q = {q}, x = {x}"
            )));
        }
        Ok(t.max(0.0).powf(1.0 / (1.0 - q)))
    } else {
        if t <= 0.0 {
            return Err(Error::Domain(format!(
                "exp_q: 1 + (1-q)x = {t} <= 0 for q = {q}, x = {x}"
            )));
        }
        Ok(t.powf(1.0 / (1.0 - q)))
    }
}

/// Tsallis q-logarithm, inverse of [`exp_q`] on `x > 0`.
pub fn ln_q(x: f64, q: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("ln_q requires x > 0, got {x}")));
    }
    if (q - 1.0).abs() < 1e-14 {
        return Ok(x.ln());
    }
    Ok((x.powf(1.0 - q) - 1.0) / (1.0 - q))
}

/// Kaniadakis κ-exponential `e_κ(x) = [sqrt(1 + κ²x²) + κx]^{1/κ}`.
///
/// Evaluated as `exp(asinh(κx)/κ)`, which is the same expression in a form
/// stable for large negative `κx`. Requires `κ² < 1`.
pub fn exp_kappa(x: f64, kappa: f64) -> Result<f64> {
    if kappa * kappa >= 1.0 {
        return Err(Error::InvalidKappa(kappa));
    }
    if kappa == 0.0 {
        return Ok(x.exp());
    }
    Ok(((kappa * x).asinh() / kappa).exp())
}

/// Dispatch between the deformed exponentials/logarithms by kind.
pub fn deformed_exp_log(x: f64, params: &DeformationParams, kind: DeformedKind) -> Result<f64> {
    params.validate()?;
    match kind {
        DeformedKind::ExpQ => exp_q(x, params.q),
        DeformedKind::LnQ => ln_q(x, params.q),
        DeformedKind::ExpKappa => exp_kappa(x, params.kappa),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_values() {
        // 1/(1-x) form at q = 2.
        assert_abs_diff_eq!(exp_q(0.5, 2.0).unwrap(), 2.0, epsilon = 1e-14);
        // (1 + x/2)^2 at q = 1/2.
        assert_abs_diff_eq!(exp_q(2.0, 0.5).unwrap(), 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(exp_kappa(0.0, 0.3).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn inverse_pair() {
        // Keep x inside the q-exponential domain: x < 1/(q-1) for q > 1.
        for &(q, x_max) in &[(0.3, 7.0), (0.5, 7.0), (1.5, 1.9), (2.0, 0.95)] {
            for i in 1..100 {
                let x = i as f64 * x_max / 100.0;
                let y = exp_q(x, q).unwrap();
                assert_abs_diff_eq!(ln_q(y, q).unwrap(), x, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn classical_limits() {
        for i in -10..=10 {
            let x = i as f64 * 0.01;
            let e = x.exp();
            assert_abs_diff_eq!(exp_q(x, 1.0 + 1e-6).unwrap(), e, epsilon = 1e-8);
            assert_abs_diff_eq!(exp_q(x, 1.0 - 1e-6).unwrap(), e, epsilon = 1e-8);
            assert_abs_diff_eq!(exp_kappa(x, 1e-6).unwrap(), e, epsilon = 1e-8);
            let y = 1.0 + x;
            assert_abs_diff_eq!(ln_q(y, 1.0 + 1e-6).unwrap(), y.ln(), epsilon = 1e-8);
        }
    }

    #[test]
    fn cutoff_violations() {
        assert!(exp_q(-3.0, 0.5).is_err()); // 1 + x/2 < 0
        assert!(exp_q(1.0, 2.0).is_err()); // 1 - x = 0
        assert!(exp_q(2.0, 2.0).is_err()); // 1 - x < 0
        assert!(ln_q(0.0, 0.5).is_err());
        assert!(ln_q(-1.0, 1.0).is_err());
        assert!(exp_kappa(1.0, 1.0).is_err());
    }
}
