//! Seeded random fixtures for Monte Carlo checks and tests.
//!
//! Everything here is deterministic given the seed; no hidden entropy.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::discrete::{JointDist, ProbDist};
use crate::quantum::DensityMatrix;

type C64 = Complex<f64>;

/// Deterministic RNG from a 64-bit seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian sample (Box-Muller).
fn gaussian_c(rng: &mut impl Rng) -> C64 {
    let u1: f64 = rng.gen_range(1e-12..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    C64::new(r * u2.cos(), r * u2.sin())
}

/// Random distribution over `k` symbols (normalized exponentials, flat on
/// the simplex).
pub fn random_dist(rng: &mut impl Rng, k: usize) -> ProbDist {
    let raw: Vec<f64> = (0..k).map(|_| -rng.gen_range(1e-12..1.0f64).ln()).collect();
    ProbDist::from_weights(&raw).expect("positive weights")
}

/// Random joint distribution over a `k x j` alphabet.
pub fn random_joint(rng: &mut impl Rng, k: usize, j: usize) -> JointDist {
    let raw: Vec<f64> = (0..k * j)
        .map(|_| -rng.gen_range(1e-12..1.0f64).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    JointDist::new(raw.iter().map(|w| w / total).collect(), k, j).expect("normalized")
}

/// Haar-like random pure state of dimension `dim`.
pub fn random_pure_state(rng: &mut impl Rng, dim: usize) -> DVector<C64> {
    let mut v = DVector::from_fn(dim, |_, _| gaussian_c(rng));
    let norm = v.norm();
    v /= C64::new(norm, 0.0);
    v
}

/// Random density matrix from a Ginibre draw, `G G† / Tr`.
pub fn random_density_matrix(rng: &mut impl Rng, dim: usize) -> DensityMatrix {
    let g = DMatrix::from_fn(dim, dim, |_, _| gaussian_c(rng));
    let m = &g * g.adjoint();
    let tr: f64 = (0..dim).map(|i| m[(i, i)].re).sum();
    DensityMatrix::new(m / C64::new(tr, 0.0)).expect("valid density matrix")
}

/// Random unitary via QR of a Ginibre draw.
pub fn random_unitary(rng: &mut impl Rng, dim: usize) -> DMatrix<C64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| gaussian_c(rng));
    g.qr().q()
}

/// Random projective POVM: eigenprojectors of a random unitary's columns,
/// partitioned into `parts` groups.
pub fn random_projective_povm(rng: &mut impl Rng, dim: usize, parts: usize) -> Vec<DMatrix<C64>> {
    let u = random_unitary(rng, dim);
    let mut elements = vec![DMatrix::zeros(dim, dim); parts.min(dim)];
    for i in 0..dim {
        let col = u.column(i);
        let proj = &col * col.adjoint();
        elements[i % parts.min(dim)] += proj;
    }
    elements
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinism() {
        let mut a = seeded(42);
        let mut b = seeded(42);
        let da = random_dist(&mut a, 5);
        let db = random_dist(&mut b, 5);
        assert_eq!(da.weights(), db.weights());
    }

    #[test]
    fn unitary_is_unitary() {
        let mut rng = seeded(1);
        let u = random_unitary(&mut rng, 4);
        let id = &u * u.adjoint();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((id[(i, j)].re - expect).abs() < 1e-12);
                assert!(id[(i, j)].im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn povm_completeness() {
        let mut rng = seeded(2);
        let povm = random_projective_povm(&mut rng, 4, 3);
        let mut sum: DMatrix<C64> = DMatrix::zeros(4, 4);
        for e in &povm {
            sum += e;
        }
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((sum[(i, j)].re - expect).abs() < 1e-10);
            }
        }
    }
}
