use nalgebra::{Complex, DMatrix};
use nalgebra::linalg::SymmetricEigen;
type C64 = Complex<f64>;
fn main() {
    // Bell projector
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = DMatrix::<C64>::zeros(4, 1);
    psi[(0,0)] = C64::new(s, 0.0);
    psi[(3,0)] = C64::new(s, 0.0);
    let rho = &psi * psi.adjoint();
    let eig = SymmetricEigen::new(rho.clone());
    println!("bell eigenvalues: {:?}", eig.eigenvalues.as_slice());
    // recomposition error
    let d = DMatrix::<C64>::from_fn(4,4,|i,j| if i==j {C64::new(eig.eigenvalues[i],0.0)} else {C64::default()});
    let rec = &eig.eigenvectors * d * eig.eigenvectors.adjoint();
    let err = (&rec - &rho).iter().map(|c| c.norm()).fold(0.0, f64::max);
    println!("recomposition max err: {err:.3e}");

    // random hermitian
    use rand::Rng;
    let mut rng = disentropy::random::seeded(1);
    let g = DMatrix::from_fn(4, 4, |_, _| C64::new(rng.gen::<f64>()-0.5, rng.gen::<f64>()-0.5));
    let h = (&g + g.adjoint()) * C64::new(0.5, 0.0);
    let e2 = SymmetricEigen::new(h.clone());
    let d2 = DMatrix::<C64>::from_fn(4,4,|i,j| if i==j {C64::new(e2.eigenvalues[i],0.0)} else {C64::default()});
    let rec2 = &e2.eigenvectors * d2 * e2.eigenvectors.adjoint();
    let err2 = (&rec2 - &h).iter().map(|c| c.norm()).fold(0.0, f64::max);
    println!("random hermitian recomposition err: {err2:.3e}");
}
