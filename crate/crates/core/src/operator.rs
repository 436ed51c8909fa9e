//! The matrix equation `A e_q^A = B` for Hermitian operands.
//!
//! Everything here is a spectral map: decompose, transform eigenvalues, and
//! reassemble in the same eigenbasis. The map is well defined when
//! `1/(1-q)` is an integer (or `q = 1`, where it degenerates to the
//! ordinary exponential) and every eigenvalue stays inside the scalar
//! domain.

use nalgebra::linalg::SymmetricEigen;

use crate::error::{Error, Result};
use crate::quantum::{quantum_disentropy, CMat, DensityMatrix, C64};
use crate::special::{exp_q, wq, BranchId};

/// Largest matrix dimension accepted by the spectral maps.
pub const MAX_DIM: usize = 64;

/// A Hermitian matrix with its eigen-decomposition cached.
#[derive(Debug, Clone)]
pub struct HermitianMatrix {
    m: CMat,
    evals: Vec<f64>,
    evecs: CMat,
}

impl HermitianMatrix {
    pub fn new(m: CMat) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::InvalidMatrix("matrix must be square".into()));
        }
        if m.nrows() > MAX_DIM {
            return Err(Error::InvalidMatrix(format!(
                "dimension {} exceeds the supported {MAX_DIM}",
                m.nrows()
            )));
        }
        let dev = {
            let adj = m.adjoint();
            (&m - adj).iter().map(|c| c.norm()).fold(0.0, f64::max)
        };
        if dev > 1e-12 * (1.0 + m.nrows() as f64) {
            return Err(Error::InvalidMatrix(format!(
                "matrix not Hermitian (deviation {dev:.3e})"
            )));
        }
        let eig = SymmetricEigen::new(m.clone());
        Ok(Self {
            m,
            evals: eig.eigenvalues.iter().copied().collect(),
            evecs: eig.eigenvectors,
        })
    }

    /// Real diagonal matrix.
    pub fn diagonal(d: &[f64]) -> Result<Self> {
        Self::new(CMat::from_fn(d.len(), d.len(), |i, j| {
            if i == j {
                C64::new(d[i], 0.0)
            } else {
                C64::default()
            }
        }))
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.evals
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// Reassemble `U f(D) U†` from mapped eigenvalues.
    fn respectral(&self, mapped: &[f64]) -> Result<HermitianMatrix> {
        let n = self.dim();
        let d = CMat::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(mapped[i], 0.0)
            } else {
                C64::default()
            }
        });
        let m = &self.evecs * d * self.evecs.adjoint();
        // Symmetrize round-off so the invariant constructor accepts it.
        let m = (&m + m.adjoint()) * C64::new(0.5, 0.0);
        HermitianMatrix::new(m)
    }
}

/// Require `1/(1-q)` integer (the spectral q-exponential precondition);
/// `q = 1` is admitted separately via the ordinary exponential.
fn check_integer_r(q: f64) -> Result<()> {
    if (q - 1.0).abs() < 1e-12 {
        return Ok(());
    }
    let r = 1.0 / (1.0 - q);
    if (r - r.round()).abs() > 1e-9 || r.round() == 0.0 {
        return Err(Error::NonIntegerR(q));
    }
    Ok(())
}

/// Which scalar eigenvalue map failed, for error reporting.
fn collect_offenders<F>(evals: &[f64], f: F) -> Vec<f64>
where
    F: Fn(f64) -> bool,
{
    evals.iter().copied().filter(|&l| f(l)).collect()
}

/// Per-condition solvability diagnostics for `A e_q^A = B`.
///
/// `hermitian_ok` and `commute_ok` are true by construction here: inputs
/// are validated Hermitian and the solution is assembled in the input's
/// own eigenbasis. A solve succeeds iff all four flags hold.
#[derive(Debug, Clone)]
pub struct SolvabilityReport {
    pub hermitian_ok: bool,
    pub commute_ok: bool,
    pub q_integer_r_ok: bool,
    pub eigen_domain_ok: bool,
    /// Eigenvalues outside the scalar `W_q` domain.
    pub failing_eigenvalues: Vec<f64>,
}

impl SolvabilityReport {
    pub fn solvable(&self) -> bool {
        self.hermitian_ok && self.commute_ok && self.q_integer_r_ok && self.eigen_domain_ok
    }
}

/// Diagnose whether `A e_q^A = B` is solvable for this `B` and `q`.
pub fn check_solvable(b: &HermitianMatrix, q: f64) -> SolvabilityReport {
    let q_integer_r_ok = check_integer_r(q).is_ok();
    let failing = collect_offenders(b.eigenvalues(), |l| {
        wq(l, q, BranchId::Principal).is_err()
    });
    SolvabilityReport {
        hermitian_ok: true,
        commute_ok: true,
        q_integer_r_ok,
        eigen_domain_ok: failing.is_empty(),
        failing_eigenvalues: failing,
    }
}

/// Matrix q-exponential `e_q^A = U e_q(D) U†`.
///
/// Needs `1/(1-q)` integer (or `q = 1`) and every eigenvalue inside the
/// scalar `e_q` domain.
pub fn matrix_q_exp(a: &HermitianMatrix, q: f64) -> Result<HermitianMatrix> {
    check_integer_r(q)?;
    let bad = collect_offenders(a.eigenvalues(), |l| exp_q(l, q).is_err());
    if !bad.is_empty() {
        return Err(Error::EigenDomain(bad));
    }
    let mapped: Vec<f64> = a
        .eigenvalues()
        .iter()
        .map(|&l| exp_q(l, q).expect("domain checked"))
        .collect();
    a.respectral(&mapped)
}

/// The full operator `A e_q^A`, evaluated spectrally.
pub fn lambert_tsallis_apply(a: &HermitianMatrix, q: f64) -> Result<HermitianMatrix> {
    check_integer_r(q)?;
    let bad = collect_offenders(a.eigenvalues(), |l| exp_q(l, q).is_err());
    if !bad.is_empty() {
        return Err(Error::EigenDomain(bad));
    }
    let mapped: Vec<f64> = a
        .eigenvalues()
        .iter()
        .map(|&l| l * exp_q(l, q).expect("domain checked"))
        .collect();
    a.respectral(&mapped)
}

/// Solve `A e_q^A = B` for `A`, mapping each eigenvalue through `W_q`.
///
/// The solution shares `B`'s eigenbasis, so `[A, B] = 0` automatically.
/// Returns the solution together with the solvability diagnostics; any
/// failed condition is also surfaced as an error.
pub fn solve_operator_equation(
    b: &HermitianMatrix,
    q: f64,
) -> Result<(HermitianMatrix, SolvabilityReport)> {
    let report = check_solvable(b, q);
    if !report.q_integer_r_ok {
        return Err(Error::NonIntegerR(q));
    }
    if !report.eigen_domain_ok {
        return Err(Error::EigenDomain(report.failing_eigenvalues));
    }
    let mapped: Vec<f64> = b
        .eigenvalues()
        .iter()
        .map(|&l| wq(l, q, BranchId::Principal).expect("domain checked"))
        .collect();
    Ok((b.respectral(&mapped)?, report))
}

/// Unitary gate `exp(i G e_q^G)` for an involutory Hermitian `G`.
///
/// The eigenvalues of `G` are ±1, so the eigenphases are `±e_q(±1)`.
/// `q = 2` fails at the `+1` eigenvalue where `e_2` diverges.
pub fn gate_family_uq(g: &HermitianMatrix, q: f64) -> Result<CMat> {
    let n = g.dim();
    let g2 = g.matrix() * g.matrix();
    let dev = (&g2 - CMat::identity(n, n))
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    if dev > 1e-10 * (1.0 + n as f64) {
        return Err(Error::NotInvolutory);
    }
    check_integer_r(q)?;
    let signs: Vec<f64> = g.eigenvalues().iter().map(|l| l.round()).collect();
    let bad = collect_offenders(&signs, |l| exp_q(l, q).is_err());
    if !bad.is_empty() {
        return Err(Error::EigenDomain(bad));
    }
    let eig_u = SymmetricEigen::new(g.matrix().clone());
    let phases = CMat::from_fn(n, n, |i, j| {
        if i == j {
            let s = signs[i];
            let phase = s * exp_q(s, q).expect("domain checked");
            C64::new(0.0, phase).exp()
        } else {
            C64::default()
        }
    });
    Ok(&eig_u.eigenvectors * phases * eig_u.eigenvectors.adjoint())
}

/// Disentropy through the operator route: `Tr(B^q A)` with `A = W_q(B)`
/// spectrally. Agrees with the spectral-sum definition.
pub fn disentropy_via_operator(b: &DensityMatrix, q: f64) -> Result<f64> {
    let herm = HermitianMatrix::new(b.matrix().clone())?;
    let (a, _) = solve_operator_equation(&herm, q)?;
    // B^q in B's eigenbasis.
    let mapped: Vec<f64> = herm
        .eigenvalues()
        .iter()
        .map(|&l| if l > 0.0 { l.powf(q) } else { 0.0 })
        .collect();
    let bq = herm.respectral(&mapped)?;
    let prod = bq.matrix() * a.matrix();
    Ok((0..prod.nrows()).map(|i| prod[(i, i)].re).sum())
}

/// The CNOT matrix, Hermitian and unitary.
pub fn cnot_matrix() -> CMat {
    let mut m = CMat::zeros(4, 4);
    m[(0, 0)] = 1.0.into();
    m[(1, 1)] = 1.0.into();
    m[(2, 3)] = 1.0.into();
    m[(3, 2)] = 1.0.into();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn max_dev(a: &CMat, b: &CMat) -> f64 {
        (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn q_exp_of_zero_is_identity() {
        let z = HermitianMatrix::diagonal(&[0.0; 4]).unwrap();
        let e = matrix_q_exp(&z, 0.5).unwrap();
        assert!(max_dev(e.matrix(), &CMat::identity(4, 4)) < 1e-12);
    }

    #[test]
    fn q_exp_number_operator() {
        // diag(0..5), q = 1/2: eigenvalues map to (1 + n/2)^2.
        let d: Vec<f64> = (0..6).map(|n| n as f64).collect();
        let a = HermitianMatrix::diagonal(&d).unwrap();
        let e = matrix_q_exp(&a, 0.5).unwrap();
        let mut vals: Vec<f64> = e.eigenvalues().to_vec();
        vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (n, v) in vals.iter().enumerate() {
            let expect = (1.0 + n as f64 / 2.0).powi(2);
            assert_abs_diff_eq!(*v, expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn q_exp_domain_violation() {
        let a = HermitianMatrix::diagonal(&[2.0]).unwrap();
        match matrix_q_exp(&a, 2.0) {
            Err(Error::EigenDomain(bad)) => assert_eq!(bad, vec![2.0]),
            other => panic!("expected EigenDomain, got {other:?}"),
        }
    }

    #[test]
    fn apply_number_operator() {
        // diag(0,1,2), q = 1/2 -> diag(0, 2.25, 8).
        let a = HermitianMatrix::diagonal(&[0.0, 1.0, 2.0]).unwrap();
        let b = lambert_tsallis_apply(&a, 0.5).unwrap();
        let mut vals: Vec<f64> = b.eigenvalues().to_vec();
        vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_abs_diff_eq!(vals[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 2.25, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[2], 8.0, epsilon = 1e-12);
        // Zero maps to zero.
        let z = HermitianMatrix::diagonal(&[0.0; 3]).unwrap();
        let bz = lambert_tsallis_apply(&z, 0.5).unwrap();
        assert!(max_dev(bz.matrix(), &CMat::zeros(3, 3)) < 1e-14);
    }

    #[test]
    fn apply_commutes_with_input() {
        let mut rng = crate::random::seeded(31);
        for _ in 0..10 {
            let rho = crate::random::random_density_matrix(&mut rng, 4);
            let a = HermitianMatrix::new(rho.matrix().clone()).unwrap();
            let b = lambert_tsallis_apply(&a, 2.0).unwrap();
            let comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
            assert!(comm.iter().map(|c| c.norm()).fold(0.0, f64::max) < 1e-10);
        }
    }

    #[test]
    fn solve_number_operator() {
        // B = diag(0..N), q = 2 -> A = diag(n/(n+1)).
        let d: Vec<f64> = (0..=10).map(|n| n as f64).collect();
        let b = HermitianMatrix::diagonal(&d).unwrap();
        let (a, report) = solve_operator_equation(&b, 2.0).unwrap();
        assert!(report.solvable());
        let mut vals: Vec<f64> = a.eigenvalues().to_vec();
        vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (n, v) in vals.iter().enumerate() {
            assert_abs_diff_eq!(*v, n as f64 / (n as f64 + 1.0), epsilon = 1e-10);
        }
        // Round trip.
        let back = lambert_tsallis_apply(&a, 2.0).unwrap();
        assert!(max_dev(back.matrix(), b.matrix()) < 1e-8);
    }

    #[test]
    fn solve_cnot_fails_at_q2() {
        let b = HermitianMatrix::new(cnot_matrix()).unwrap();
        let report = check_solvable(&b, 2.0);
        assert!(!report.solvable());
        assert!(report
            .failing_eigenvalues
            .iter()
            .any(|l| (l + 1.0).abs() < 1e-9));
        match solve_operator_equation(&b, 2.0) {
            Err(Error::EigenDomain(_)) => {}
            other => panic!("expected EigenDomain, got {other:?}"),
        }
    }

    #[test]
    fn solve_zero() {
        let b = HermitianMatrix::diagonal(&[0.0; 3]).unwrap();
        let (a, _) = solve_operator_equation(&b, 2.0).unwrap();
        assert!(max_dev(a.matrix(), &CMat::zeros(3, 3)) < 1e-14);
    }

    #[test]
    fn non_integer_r_rejected() {
        let b = HermitianMatrix::diagonal(&[0.5, 0.25]).unwrap();
        assert!(matches!(
            solve_operator_equation(&b, 1.7),
            Err(Error::NonIntegerR(_))
        ));
        // q = 1 admitted.
        assert!(solve_operator_equation(&b, 1.0).is_ok());
    }

    #[test]
    fn roundtrip_random_spectra() {
        let mut rng = crate::random::seeded(17);
        use rand::Rng;
        for &q in &[1.0, 2.0, 0.5] {
            for _ in 0..10 {
                let d: Vec<f64> = (0..5).map(|_| rng.gen_range(0.0..10.0)).collect();
                let u = crate::random::random_unitary(&mut rng, 5);
                let diag = CMat::from_fn(5, 5, |i, j| {
                    if i == j {
                        C64::new(d[i], 0.0)
                    } else {
                        C64::default()
                    }
                });
                let b = HermitianMatrix::new(&u * diag * u.adjoint()).unwrap();
                let (a, _) = solve_operator_equation(&b, q).unwrap();
                let back = lambert_tsallis_apply(&a, q).unwrap();
                assert!(
                    max_dev(back.matrix(), b.matrix()) < 1e-8,
                    "roundtrip at q = {q}"
                );
            }
        }
    }

    #[test]
    fn gate_family() {
        // CNOT at q = 1: eigenphases e^{±i e_1(±1)}.
        let g = HermitianMatrix::new(cnot_matrix()).unwrap();
        let u = gate_family_uq(&g, 1.0).unwrap();
        let id = &u * u.adjoint();
        assert!(max_dev(&id, &CMat::identity(4, 4)) < 1e-10);
        // Determinant magnitude 1.
        assert_abs_diff_eq!(u.determinant().norm(), 1.0, epsilon = 1e-10);

        // Pauli-X.
        let x = CMat::from_row_slice(
            2,
            2,
            &[C64::default(), 1.0.into(), 1.0.into(), C64::default()],
        );
        let gx = HermitianMatrix::new(x).unwrap();
        let ux = gate_family_uq(&gx, 1.0).unwrap();
        assert!(max_dev(&(&ux * ux.adjoint()), &CMat::identity(2, 2)) < 1e-10);

        // All-plus involution: scalar phase e^{i e}.
        let id2 = HermitianMatrix::diagonal(&[1.0, 1.0]).unwrap();
        let ui = gate_family_uq(&id2, 1.0).unwrap();
        let expect = C64::new(0.0, std::f64::consts::E).exp();
        assert!((ui[(0, 0)] - expect).norm() < 1e-12);

        // e_2(1) diverges.
        assert!(matches!(
            gate_family_uq(&g, 2.0),
            Err(Error::EigenDomain(_))
        ));
        // Non-involutory input rejected.
        let bad = HermitianMatrix::diagonal(&[0.5, 1.0]).unwrap();
        assert!(matches!(gate_family_uq(&bad, 1.0), Err(Error::NotInvolutory)));
    }

    #[test]
    fn operator_route_matches_spectral_route() {
        let pure = DensityMatrix::diagonal(&[1.0, 0.0]).unwrap();
        assert_abs_diff_eq!(disentropy_via_operator(&pure, 2.0).unwrap(), 0.5, epsilon = 1e-12);

        let mixed = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(
            disentropy_via_operator(&mixed, 1.0).unwrap(),
            quantum_disentropy(&mixed, 1.0).unwrap(),
            epsilon = 1e-10
        );

        let diag = DensityMatrix::diagonal(&[0.7, 0.3]).unwrap();
        let expect = 0.49 * wq(0.7, 2.0, BranchId::Principal).unwrap()
            + 0.09 * wq(0.3, 2.0, BranchId::Principal).unwrap();
        assert_abs_diff_eq!(disentropy_via_operator(&diag, 2.0).unwrap(), expect, epsilon = 1e-10);

        let mut rng = crate::random::seeded(23);
        for (i, &q) in [0.5, 1.0, 2.0].iter().cycle().take(30).enumerate() {
            let rho = crate::random::random_density_matrix(&mut rng, 3 + i % 3);
            assert_abs_diff_eq!(
                disentropy_via_operator(&rho, q).unwrap(),
                quantum_disentropy(&rho, q).unwrap(),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn dimension_cap() {
        let big = CMat::identity(65, 65);
        assert!(HermitianMatrix::new(big).is_err());
    }
}
