//! Lambert-type special functions and the deformed exponentials they invert.
//!
//! The classical Lambert function `W` inverts `w e^w`. Replacing the
//! exponential by a base-`λ` power, the Tsallis q-exponential, or the
//! Kaniadakis κ-exponential yields the generalized inverses `R_λ`, `W_q`
//! and `W_κ`. All of them have (at most) two real branches meeting at a
//! branch point; this module evaluates both branches with explicit domain
//! checks.

mod deformed;
mod lambert;
mod solve;
mod wk;
mod wq;

pub use deformed::{deformed_exp_log, exp_kappa, exp_q, ln_q, DeformedKind};
pub use lambert::{lambert_w, r_lambda};
pub use wk::{wk, wk_branch_point};
pub use wq::{wq, wq_branch_point, wq_closed_form};

use crate::error::{Error, Result};

/// Which real branch of a Lambert-type function to evaluate.
///
/// The principal branch is the connected real branch through `(0, 0)`;
/// the lower branch is the one with `w <= w_b` and exists only for
/// arguments in `[z_b, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchId {
    #[default]
    Principal,
    Lower,
}

/// Location of the branch point where the two real branches meet.
///
/// For `W` this is `(-1/e, -1)`. `W_2` has no finite branch point; its
/// `finite` flag is false and `z` then holds the domain infimum `-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPoint {
    /// Argument of the branch point.
    pub z: f64,
    /// Function value at the branch point.
    pub w: f64,
    /// False when the branch point lies at infinity.
    pub finite: bool,
}

/// Deformation indices selecting which member of the function family is used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParams {
    /// Tsallis index.
    pub q: f64,
    /// Kaniadakis index, `kappa^2 < 1`.
    pub kappa: f64,
    /// Logarithm base for the `R_λ` family, positive and != 1.
    pub lambda_base: f64,
    /// Order parameter of the integral disentropy `D_{q,α}`.
    pub alpha: f64,
}

impl Default for DeformationParams {
    fn default() -> Self {
        Self {
            q: 1.0,
            kappa: 0.0,
            lambda_base: 2.0,
            alpha: 2.0,
        }
    }
}

impl DeformationParams {
    /// Parameters for the Tsallis family at index `q`.
    pub fn tsallis(q: f64) -> Self {
        Self {
            q,
            ..Self::default()
        }
    }

    /// Parameters for the Kaniadakis family at index `kappa`.
    pub fn kaniadakis(kappa: f64) -> Self {
        Self {
            kappa,
            ..Self::default()
        }
    }

    /// `r = 1/(1-q)`; undefined at `q = 1`.
    pub fn r(&self) -> Option<f64> {
        if (self.q - 1.0).abs() < 1e-14 {
            None
        } else {
            Some(1.0 / (1.0 - self.q))
        }
    }

    /// Check the structural invariants (`kappa^2 < 1`, valid base).
    pub fn validate(&self) -> Result<()> {
        if self.kappa * self.kappa >= 1.0 {
            return Err(Error::InvalidKappa(self.kappa));
        }
        if !(self.lambda_base > 0.0) || self.lambda_base == 1.0 {
            return Err(Error::InvalidBase(self.lambda_base));
        }
        Ok(())
    }
}
