//! Quantum disentropy calculus on small density matrices.
//!
//! All functionals act on the eigen-spectrum, so states are validated once
//! (Hermitian, unit trace, PSD up to round-off) and carry their sorted
//! eigenvalues with them.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{Complex, DMatrix, DVector};

use crate::discrete::{mutual_disentropy, JointDist, ProbDist};
use crate::error::{Error, Result};
use crate::special::{wq, BranchId, DeformationParams};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

const HERM_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-10;
const PSD_TOL: f64 = 1e-10;

fn max_abs_dev_hermitian(m: &CMat) -> f64 {
    let adj = m.adjoint();
    (m - adj).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// A Hermitian, PSD, trace-one matrix with its eigen-spectrum cached.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    m: CMat,
    evals: Vec<f64>,
}

impl DensityMatrix {
    /// Validate and wrap a matrix. Eigenvalues in `[-1e-10, 0)` are clamped
    /// to zero; anything lower is rejected.
    pub fn new(m: CMat) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::InvalidMatrix("density matrix must be square".into()));
        }
        if max_abs_dev_hermitian(&m) > HERM_TOL * (1.0 + m.nrows() as f64) {
            return Err(Error::InvalidMatrix("density matrix not Hermitian".into()));
        }
        let tr: f64 = (0..m.nrows()).map(|i| m[(i, i)].re).sum();
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidMatrix(format!("trace {tr}, expected 1")));
        }
        let eig = SymmetricEigen::new(m.clone());
        let mut evals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        for l in &mut evals {
            if *l < 0.0 {
                if *l < -PSD_TOL {
                    return Err(Error::InvalidMatrix(format!("negative eigenvalue {l}")));
                }
                *l = 0.0;
            }
        }
        evals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(Self { m, evals })
    }

    /// Projector onto a normalized state vector.
    pub fn from_pure(psi: &CVec) -> Result<Self> {
        let n = psi.norm();
        if (n - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidMatrix(format!("state norm {n}, expected 1")));
        }
        Self::new(psi * psi.adjoint())
    }

    /// Diagonal density matrix from a spectrum summing to one.
    pub fn diagonal(spectrum: &[f64]) -> Result<Self> {
        let m = CMat::from_fn(spectrum.len(), spectrum.len(), |i, j| {
            if i == j {
                C64::new(spectrum[i], 0.0)
            } else {
                C64::default()
            }
        });
        Self::new(m)
    }

    /// `I/d`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self::diagonal(&vec![1.0 / dim as f64; dim]).expect("uniform spectrum")
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    /// Eigenvalues sorted in descending order, clamped to `[0, 1]`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.evals
    }
}

/// Quantum disentropy `D_q(ρ) = Σ λ^q W_q(λ)` over the spectrum.
pub fn quantum_disentropy(rho: &DensityMatrix, q: f64) -> Result<f64> {
    let mut acc = 0.0;
    for &l in rho.eigenvalues() {
        if l > 0.0 {
            acc += l.powf(q) * wq(l, q, BranchId::Principal)?;
        }
    }
    Ok(acc)
}

/// A joint state on `H_A ⊗ H_B` with its factor dimensions.
#[derive(Debug, Clone)]
pub struct BipartiteState {
    pub joint: DensityMatrix,
    pub dim_a: usize,
    pub dim_b: usize,
}

impl BipartiteState {
    pub fn new(joint: DensityMatrix, dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a * dim_b != joint.dim() {
            return Err(Error::InvalidMatrix(format!(
                "dimensions {dim_a}x{dim_b} do not factor {}",
                joint.dim()
            )));
        }
        Ok(Self {
            joint,
            dim_a,
            dim_b,
        })
    }

    /// Reduced state of subsystem A (trace over B).
    pub fn reduced_a(&self) -> Result<DensityMatrix> {
        let (da, db) = (self.dim_a, self.dim_b);
        let j = self.joint.matrix();
        let m = CMat::from_fn(da, da, |a1, a2| {
            (0..db).map(|b| j[(a1 * db + b, a2 * db + b)]).sum()
        });
        DensityMatrix::new(m)
    }

    /// Reduced state of subsystem B (trace over A).
    pub fn reduced_b(&self) -> Result<DensityMatrix> {
        let (da, db) = (self.dim_a, self.dim_b);
        let j = self.joint.matrix();
        let m = CMat::from_fn(db, db, |b1, b2| {
            (0..da).map(|a| j[(a * db + b1, a * db + b2)]).sum()
        });
        DensityMatrix::new(m)
    }
}

/// Marginal, joint, mutual and conditional quantum disentropies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipartiteReport {
    pub d_a: f64,
    pub d_b: f64,
    pub d_ab: f64,
    /// `D_q(A) + D_q(B) - D_q(AB)`, nonnegative.
    pub mutual: f64,
    /// `D_q(AB) - D_q(B)`, as defined; may be negative.
    pub cond_a_given_b: f64,
}

/// Evaluate the bipartite disentropy family on a joint state.
///
/// A mutual value below `-1e-12` aborts with diagnostics since the mutual
/// quantum disentropy is nonnegative.
pub fn bipartite_disentropies(st: &BipartiteState, q: f64) -> Result<BipartiteReport> {
    let d_a = quantum_disentropy(&st.reduced_a()?, q)?;
    let d_b = quantum_disentropy(&st.reduced_b()?, q)?;
    let d_ab = quantum_disentropy(&st.joint, q)?;
    let mutual = d_a + d_b - d_ab;
    if mutual < -1e-12 {
        return Err(Error::Domain(format!(
            "mutual quantum disentropy {mutual} negative beyond tolerance \
             (d_a = {d_a}, d_b = {d_b}, d_ab = {d_ab}, q = {q})"
        )));
    }
    Ok(BipartiteReport {
        d_a,
        d_b,
        d_ab,
        mutual,
        cond_a_given_b: d_ab - d_b,
    })
}

/// Relative quantum disentropy between two spectra, both sorted descending.
pub fn quantum_relative_disentropy(
    rho: &DensityMatrix,
    gamma: &DensityMatrix,
    q: f64,
    variant: crate::discrete::RelVariant,
) -> Result<f64> {
    if rho.dim() != gamma.dim() {
        return Err(Error::InvalidMatrix(format!(
            "dimension mismatch {} vs {}",
            rho.dim(),
            gamma.dim()
        )));
    }
    use crate::discrete::RelVariant as V;
    let mut acc = 0.0;
    for (&l, &g) in rho.eigenvalues().iter().zip(gamma.eigenvalues()) {
        if l <= 0.0 {
            continue;
        }
        let w = l.powf(q);
        let term = match variant {
            V::AbsDiff => (wq(l, q, BranchId::Principal)? - wq(g, q, BranchId::Principal)?).abs(),
            V::SignedDiff => wq(l, q, BranchId::Principal)? - wq(g, q, BranchId::Principal)?,
            V::OfDiff => wq(l - g, q, BranchId::Principal)?,
            V::OfAbsDiff => wq((l - g).abs(), q, BranchId::Principal)?,
        };
        acc += w * term;
    }
    Ok(acc)
}

/// Principal square root of a Hermitian PSD matrix.
fn psd_sqrt(m: &CMat) -> CMat {
    let eig = SymmetricEigen::new(m.clone());
    let d = CMat::from_fn(m.nrows(), m.nrows(), |i, j| {
        if i == j {
            C64::new(eig.eigenvalues[i].max(0.0).sqrt(), 0.0)
        } else {
            C64::default()
        }
    });
    &eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

/// Wootters concurrence of a two-qubit state.
///
/// `C = max(0, μ1 - μ2 - μ3 - μ4)` where the `μ` are the square roots of
/// the eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)` in decreasing order, computed
/// through the Hermitian form `sqrt(ρ) ρ̃ sqrt(ρ)`.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::InvalidMatrix(format!(
            "concurrence needs a two-qubit state, got dim {}",
            rho.dim()
        )));
    }
    // σy ⊗ σy is real with anti-diagonal entries (-1, 1, 1, -1).
    let mut yy = CMat::zeros(4, 4);
    yy[(0, 3)] = C64::new(-1.0, 0.0);
    yy[(1, 2)] = C64::new(1.0, 0.0);
    yy[(2, 1)] = C64::new(1.0, 0.0);
    yy[(3, 0)] = C64::new(-1.0, 0.0);
    let conj = rho.matrix().map(|c| c.conj());
    let rho_tilde = &yy * conj * &yy;
    let s = psd_sqrt(rho.matrix());
    let herm = &s * rho_tilde * &s;
    // Symmetrize away round-off before the eigen-solve.
    let herm = (&herm + herm.adjoint()) * C64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(herm);
    let mut mu: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|l| l.max(0.0).sqrt())
        .collect();
    mu.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((mu[0] - mu[1] - mu[2] - mu[3]).max(0.0))
}

/// Which correlation quantity feeds the closed-form disentanglement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisentanglementKind {
    /// Two-qubit concurrence `C(ρ)`.
    Concurrence,
    /// Three-tangle `τ3` for GHZ-class pure states.
    Tangle,
    /// Schmidt coefficient `λ0` of a pure two-qubit state.
    Schmidt,
}

/// Closed-form disentanglement from a scalar correlation in `[0, 1]`.
///
/// For the concurrence and tangle kinds the spectrum is
/// `(1 ± sqrt(1 - c))/2`; for the Schmidt kind the input is `λ0` itself.
/// Maximal `W_q(1)` at `c = 0` (or `λ0 ∈ {0, 1}`), minimal
/// `2 (1/2)^q W_q(1/2)` at `c = 1` (or `λ0 = 1/2`).
pub fn disentanglement(correlation: f64, q: f64, kind: DisentanglementKind) -> Result<f64> {
    if !(0.0..=1.0).contains(&correlation) {
        return Err(Error::OutOfRange(format!(
            "correlation {correlation} outside [0, 1]"
        )));
    }
    let (l0, l1) = match kind {
        DisentanglementKind::Concurrence | DisentanglementKind::Tangle => {
            let s = (1.0 - correlation).max(0.0).sqrt();
            (0.5 + 0.5 * s, 0.5 - 0.5 * s)
        }
        DisentanglementKind::Schmidt => (correlation, 1.0 - correlation),
    };
    let mut acc = 0.0;
    for l in [l0, l1] {
        if l > 0.0 {
            acc += l.powf(q) * wq(l, q, BranchId::Principal)?;
        }
    }
    Ok(acc)
}

/// Three-tangle of a normalized 3-qubit pure state (hyperdeterminant form).
pub fn three_tangle(psi: &CVec) -> Result<f64> {
    if psi.len() != 8 {
        return Err(Error::InvalidMatrix(format!(
            "three_tangle needs 8 amplitudes, got {}",
            psi.len()
        )));
    }
    let n = psi.norm();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidMatrix(format!("state norm {n}, expected 1")));
    }
    // Index abc -> a*4 + b*2 + c.
    let c = |a: usize, b: usize, cc: usize| psi[(a << 2) | (b << 1) | cc];
    let d1 = c(0, 0, 0).powi(2) * c(1, 1, 1).powi(2)
        + c(0, 0, 1).powi(2) * c(1, 1, 0).powi(2)
        + c(0, 1, 0).powi(2) * c(1, 0, 1).powi(2)
        + c(1, 0, 0).powi(2) * c(0, 1, 1).powi(2);
    let d2 = c(0, 0, 0) * c(1, 1, 1) * c(0, 1, 1) * c(1, 0, 0)
        + c(0, 0, 0) * c(1, 1, 1) * c(1, 0, 1) * c(0, 1, 0)
        + c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 0) * c(0, 0, 1)
        + c(0, 1, 1) * c(1, 0, 0) * c(1, 0, 1) * c(0, 1, 0)
        + c(0, 1, 1) * c(1, 0, 0) * c(1, 1, 0) * c(0, 0, 1)
        + c(1, 0, 1) * c(0, 1, 0) * c(1, 1, 0) * c(0, 0, 1);
    let d3 = c(0, 0, 0) * c(1, 1, 0) * c(1, 0, 1) * c(0, 1, 1)
        + c(1, 1, 1) * c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0);
    let tau = 4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm();
    Ok(tau.clamp(0.0, 1.0 + 1e-9).min(1.0))
}

/// Partial trace of an n-qubit density matrix onto the qubits in `keep`
/// (ascending order, qubit 0 is the most significant index bit).
pub fn partial_trace_qubits(m: &CMat, n_qubits: usize, keep: &[usize]) -> CMat {
    let traced: Vec<usize> = (0..n_qubits).filter(|i| !keep.contains(i)).collect();
    let kd = 1usize << keep.len();
    let td = 1usize << traced.len();
    let build = |bits_keep: usize, bits_traced: usize| -> usize {
        let mut idx = 0usize;
        for (pos, &qb) in keep.iter().enumerate() {
            if bits_keep >> (keep.len() - 1 - pos) & 1 == 1 {
                idx |= 1 << (n_qubits - 1 - qb);
            }
        }
        for (pos, &qb) in traced.iter().enumerate() {
            if bits_traced >> (traced.len() - 1 - pos) & 1 == 1 {
                idx |= 1 << (n_qubits - 1 - qb);
            }
        }
        idx
    };
    CMat::from_fn(kd, kd, |i, j| {
        (0..td).map(|t| m[(build(i, t), build(j, t))]).sum()
    })
}

/// Per-cut monogamy data for a pure 3-qubit state.
#[derive(Debug, Clone, Copy)]
pub struct MonogamyReport {
    /// Disentanglement of the one-vs-two cuts `A|BC`, `B|AC`, `C|AB`.
    pub lhs: [f64; 3],
    /// Sums of the matching pairwise disentanglements.
    pub rhs: [f64; 3],
    /// `lhs <= rhs` with `1e-9` slack.
    pub holds: [bool; 3],
}

/// Check the three disentanglement monogamy inequalities on a pure
/// 3-qubit state.
///
/// One-vs-two cuts evaluate the reduced single-qubit spectrum directly;
/// pairwise terms go through the concurrence closed form.
pub fn monogamy_check(psi: &CVec, q: f64) -> Result<MonogamyReport> {
    if psi.len() != 8 {
        return Err(Error::InvalidMatrix("monogamy needs 3 qubits".into()));
    }
    let rho = psi * psi.adjoint();
    let mut single = [0.0; 3];
    for (i, s) in single.iter_mut().enumerate() {
        let red = DensityMatrix::new(partial_trace_qubits(&rho, 3, &[i]))?;
        *s = quantum_disentropy(&red, q)?;
    }
    let pair_de = |a: usize, b: usize| -> Result<f64> {
        let red = DensityMatrix::new(partial_trace_qubits(&rho, 3, &[a, b]))?;
        disentanglement(concurrence(&red)?, q, DisentanglementKind::Concurrence)
    };
    let d_ab = pair_de(0, 1)?;
    let d_ac = pair_de(0, 2)?;
    let d_bc = pair_de(1, 2)?;
    let lhs = single;
    let rhs = [d_ab + d_ac, d_ab + d_bc, d_ac + d_bc];
    let holds = [
        lhs[0] <= rhs[0] + 1e-9,
        lhs[1] <= rhs[1] + 1e-9,
        lhs[2] <= rhs[2] + 1e-9,
    ];
    Ok(MonogamyReport { lhs, rhs, holds })
}

/// A classical-quantum ensemble `{p_i, ρ_i}`.
#[derive(Debug, Clone)]
pub struct Ensemble {
    pub probs: ProbDist,
    pub states: Vec<DensityMatrix>,
}

impl Ensemble {
    pub fn new(probs: ProbDist, states: Vec<DensityMatrix>) -> Result<Self> {
        if probs.support() != states.len() {
            return Err(Error::InvalidDistribution(
                "ensemble size mismatch".into(),
            ));
        }
        let dim = states[0].dim();
        if states.iter().any(|s| s.dim() != dim) {
            return Err(Error::InvalidMatrix("ensemble states of mixed dims".into()));
        }
        Ok(Self { probs, states })
    }

    /// The average state `Σ p_i ρ_i`.
    pub fn average(&self) -> Result<DensityMatrix> {
        let dim = self.states[0].dim();
        let mut m = CMat::zeros(dim, dim);
        for (p, s) in self.probs.weights().iter().zip(&self.states) {
            m += s.matrix() * C64::new(*p, 0.0);
        }
        DensityMatrix::new(m)
    }
}

/// A POVM given by PSD elements summing to the identity.
#[derive(Debug, Clone)]
pub struct Povm {
    elements: Vec<CMat>,
}

impl Povm {
    pub fn new(elements: Vec<CMat>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidMatrix("empty POVM".into()));
        }
        let dim = elements[0].nrows();
        let mut sum = CMat::zeros(dim, dim);
        for e in &elements {
            if e.nrows() != dim || !e.is_square() {
                return Err(Error::InvalidMatrix("POVM element shape mismatch".into()));
            }
            if max_abs_dev_hermitian(e) > HERM_TOL * (1.0 + dim as f64) {
                return Err(Error::InvalidMatrix("POVM element not Hermitian".into()));
            }
            let eig = SymmetricEigen::new(e.clone());
            if eig.eigenvalues.iter().any(|l| *l < -PSD_TOL) {
                return Err(Error::InvalidMatrix("POVM element not PSD".into()));
            }
            sum += e;
        }
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { 1.0 } else { 0.0 };
                if (sum[(i, j)].re - expect).abs() > TRACE_TOL || sum[(i, j)].im.abs() > TRACE_TOL
                {
                    return Err(Error::InvalidMatrix(
                        "POVM elements do not sum to identity".into(),
                    ));
                }
            }
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[CMat] {
        &self.elements
    }
}

/// Outcome of the disentropy analog of the Holevo bound.
#[derive(Debug, Clone, Copy)]
pub struct HolevoReport {
    /// Classical mutual disentropy of `p(i, j) = p_i Tr(Π_j ρ_i)`.
    pub lhs_mutual: f64,
    /// `Σ p_i D_q(ρ_i) - D_q(Σ p_i ρ_i)`.
    pub rhs_bound: f64,
    /// Whether `lhs <= rhs` held for this instance (recorded, not asserted).
    pub satisfied: bool,
}

/// Evaluate both sides of the disentropy Holevo-style bound and report the
/// outcome without asserting a direction.
pub fn holevo_disentropy_check(ens: &Ensemble, povm: &Povm, q: f64) -> Result<HolevoReport> {
    let dim = ens.states[0].dim();
    if povm.elements()[0].nrows() != dim {
        return Err(Error::InvalidMatrix("POVM dimension mismatch".into()));
    }
    let k = ens.states.len();
    let j = povm.elements().len();
    let mut joint = vec![0.0; k * j];
    for (i, (p, s)) in ens.probs.weights().iter().zip(&ens.states).enumerate() {
        for (jj, e) in povm.elements().iter().enumerate() {
            let prod = e * s.matrix();
            let tr: f64 = (0..dim).map(|d| prod[(d, d)].re).sum();
            joint[i * j + jj] = (p * tr).max(0.0);
        }
    }
    let total: f64 = joint.iter().sum();
    let joint = JointDist::new(joint.iter().map(|v| v / total).collect(), k, j)?;
    let params = DeformationParams::tsallis(q);
    let lhs = mutual_disentropy(&joint, &params)?;
    let mut rhs = -quantum_disentropy(&ens.average()?, q)?;
    for (p, s) in ens.probs.weights().iter().zip(&ens.states) {
        rhs += p * quantum_disentropy(s, q)?;
    }
    Ok(HolevoReport {
        lhs_mutual: lhs,
        rhs_bound: rhs,
        satisfied: lhs <= rhs + 1e-12,
    })
}

/// A completely positive trace-preserving map in Kraus form.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    kraus: Vec<CMat>,
}

impl KrausChannel {
    pub fn new(kraus: Vec<CMat>) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::InvalidMatrix("empty Kraus set".into()));
        }
        let dim = kraus[0].nrows();
        let mut sum = CMat::zeros(dim, dim);
        for k in &kraus {
            if k.nrows() != dim || !k.is_square() {
                return Err(Error::InvalidMatrix("Kraus shape mismatch".into()));
            }
            sum += k.adjoint() * k;
        }
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { 1.0 } else { 0.0 };
                if (sum[(i, j)].re - expect).abs() > TRACE_TOL || sum[(i, j)].im.abs() > TRACE_TOL
                {
                    return Err(Error::InvalidMatrix(
                        "Kraus operators are not trace preserving".into(),
                    ));
                }
            }
        }
        Ok(Self { kraus })
    }

    /// Identity channel on `dim` levels.
    pub fn identity(dim: usize) -> Self {
        Self {
            kraus: vec![CMat::identity(dim, dim)],
        }
    }

    /// Single-qubit depolarizing channel with error weight `p` (`p = 1`
    /// sends every state to `I/2`).
    pub fn depolarizing(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!("depolarizing p = {p}")));
        }
        let id = CMat::identity(2, 2);
        let x = CMat::from_row_slice(2, 2, &[C64::default(), 1.0.into(), 1.0.into(), C64::default()]);
        let y = CMat::from_row_slice(
            2,
            2,
            &[
                C64::default(),
                C64::new(0.0, -1.0),
                C64::new(0.0, 1.0),
                C64::default(),
            ],
        );
        let z = CMat::from_row_slice(2, 2, &[1.0.into(), C64::default(), C64::default(), (-1.0).into()]);
        let c0 = C64::new((1.0 - 0.75 * p).sqrt(), 0.0);
        let cp = C64::new((0.25 * p).sqrt(), 0.0);
        Self::new(vec![id * c0, x * cp, y * cp, z * cp])
    }

    /// Single-qubit bit-flip channel with flip probability `p`.
    pub fn bit_flip(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!("bit_flip p = {p}")));
        }
        let id = CMat::identity(2, 2);
        let x = CMat::from_row_slice(2, 2, &[C64::default(), 1.0.into(), 1.0.into(), C64::default()]);
        Self::new(vec![
            id * C64::new((1.0 - p).sqrt(), 0.0),
            x * C64::new(p.sqrt(), 0.0),
        ])
    }

    pub fn kraus(&self) -> &[CMat] {
        &self.kraus
    }

    pub fn dim(&self) -> usize {
        self.kraus[0].nrows()
    }

    /// Apply the channel to a density matrix.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let dim = rho.dim();
        let mut out = CMat::zeros(dim, dim);
        for k in &self.kraus {
            out += k * rho.matrix() * k.adjoint();
        }
        DensityMatrix::new(out)
    }
}

/// Outcome of the conjectured disentropy quantum Fano inequality.
#[derive(Debug, Clone, Copy)]
pub struct ChannelFanoReport {
    /// `D_q(ρ_o)` of the output state.
    pub d_exchange: f64,
    /// `D_q({F, 1-F}) + (1-F)^q W_q(d² - 1)`.
    pub rhs: f64,
    /// Entanglement fidelity `<ψ|ρ_o|ψ>`.
    pub fidelity: f64,
    /// Whether `lhs <= rhs` held (recorded, not asserted: conjecture).
    pub satisfied: bool,
}

/// Act with `ch ⊗ I` on half of a pure bipartite state and report both
/// sides of the conjectured Fano-style bound.
pub fn channel_fano_check(psi_ab: &CVec, ch: &KrausChannel, q: f64) -> Result<ChannelFanoReport> {
    let d = ch.dim();
    if d * d != psi_ab.len() || d < 2 {
        return Err(Error::InvalidMatrix(format!(
            "state of length {} is not d x d with d = {d} >= 2",
            psi_ab.len()
        )));
    }
    let rho = psi_ab * psi_ab.adjoint();
    let mut out = CMat::zeros(d * d, d * d);
    let id = CMat::identity(d, d);
    for k in ch.kraus() {
        let big = k.kronecker(&id);
        out += &big * &rho * big.adjoint();
    }
    let rho_o = DensityMatrix::new(out)?;
    let f = (psi_ab.adjoint() * rho_o.matrix() * psi_ab)[(0, 0)].re;
    let f = f.clamp(0.0, 1.0);
    let d_exchange = quantum_disentropy(&rho_o, q)?;
    let mut rhs = (1.0 - f).powf(q) * wq((d * d - 1) as f64, q, BranchId::Principal)?;
    for l in [f, 1.0 - f] {
        if l > 0.0 {
            rhs += l.powf(q) * wq(l, q, BranchId::Principal)?;
        }
    }
    Ok(ChannelFanoReport {
        d_exchange,
        rhs,
        fidelity: f,
        satisfied: d_exchange <= rhs + 1e-12,
    })
}

/// Discord search output.
#[derive(Debug, Clone, Copy)]
pub struct DiscordReport {
    /// Quantum mutual disentropy `D_q(A:B)`.
    pub mutual: f64,
    /// Best measurement-extracted correlation `max_Π J`.
    pub best_j: f64,
    /// `mutual - best_j`.
    pub discord: f64,
    /// Bloch angles `(θ, φ)` of the best projective measurement on B.
    pub best_angles: (f64, f64),
}

/// Post-measurement conditional disentropy `Σ_j p_j D_q(ρ_A^j)` for the
/// projective measurement along Bloch direction `(θ, φ)` on B.
fn measured_conditional(st: &BipartiteState, q: f64, theta: f64, phi: f64) -> Result<f64> {
    let (st_big, sb) = (theta.cos(), theta.sin());
    let n = [sb * phi.cos(), sb * phi.sin(), st_big];
    // Π± = (I ± n·σ)/2.
    let mut acc = 0.0;
    for sign in [1.0, -1.0] {
        let p00 = 0.5 * (1.0 + sign * n[2]);
        let p11 = 0.5 * (1.0 - sign * n[2]);
        let p01 = C64::new(sign * 0.5 * n[0], -sign * 0.5 * n[1]);
        let proj = CMat::from_row_slice(
            2,
            2,
            &[C64::new(p00, 0.0), p01, p01.conj(), C64::new(p11, 0.0)],
        );
        let big = CMat::identity(2, 2).kronecker(&proj);
        let updated = &big * st.joint.matrix() * big.adjoint();
        let pj: f64 = (0..4).map(|i| updated[(i, i)].re).sum();
        if pj < 1e-14 {
            continue;
        }
        // Reduced A state of the normalized post-measurement state.
        let m = CMat::from_fn(2, 2, |a1, a2| {
            (0..2)
                .map(|b| updated[(a1 * 2 + b, a2 * 2 + b)])
                .sum::<C64>()
                / C64::new(pj, 0.0)
        });
        let m = (&m + m.adjoint()) * C64::new(0.5, 0.0);
        acc += pj * quantum_disentropy(&DensityMatrix::new(m)?, q)?;
    }
    Ok(acc)
}

/// Disentropy discord of a two-qubit state under rank-1 projective
/// measurements on B, maximized on a Bloch-angle grid with local
/// refinement.
pub fn discord_disentropy(st: &BipartiteState, q: f64, grid: usize) -> Result<DiscordReport> {
    if st.dim_a != 2 || st.dim_b != 2 {
        return Err(Error::InvalidMatrix("discord needs a two-qubit state".into()));
    }
    let report = bipartite_disentropies(st, q)?;
    let d_a = report.d_a;
    let grid = grid.max(4);

    let j_of = |theta: f64, phi: f64| -> Result<f64> {
        Ok(d_a - measured_conditional(st, q, theta, phi)?)
    };

    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for it in 0..grid {
        let theta = std::f64::consts::PI * (it as f64 + 0.5) / grid as f64;
        for ip in 0..grid {
            let phi = std::f64::consts::TAU * ip as f64 / grid as f64;
            let j = j_of(theta, phi)?;
            if j > best.0 {
                best = (j, theta, phi);
            }
        }
    }
    // Local refinement: shrink a 5x5 stencil around the best point.
    let mut dt = std::f64::consts::PI / grid as f64;
    let mut dp = std::f64::consts::TAU / grid as f64;
    for _ in 0..12 {
        let (b, t0, p0) = best;
        let mut improved = (b, t0, p0);
        for i in -2i32..=2 {
            for k in -2i32..=2 {
                let t = (t0 + i as f64 * dt / 2.0).clamp(0.0, std::f64::consts::PI);
                let p = p0 + k as f64 * dp / 2.0;
                let j = j_of(t, p)?;
                if j > improved.0 {
                    improved = (j, t, p);
                }
            }
        }
        best = improved;
        dt /= 2.0;
        dp /= 2.0;
    }

    Ok(DiscordReport {
        mutual: report.mutual,
        best_j: best.0,
        discord: report.mutual - best.0,
        best_angles: (best.1, best.2),
    })
}
