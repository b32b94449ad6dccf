//! Seeded random states for property checks.

use rand::Rng;

use crate::fano::DensityMatrix4;
use crate::linalg::{Complex64, Mat2, Mat4};

fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// ρ = AA†/tr(AA†) for a random complex A; full rank almost surely.
pub fn random_density<R: Rng>(rng: &mut R) -> DensityMatrix4 {
    let mut a = Mat4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            a[(i, j)] = random_complex(rng);
        }
    }
    let m = a * a.adjoint();
    let tr = m.trace().re;
    DensityMatrix4::from_matrix(m.scale(1.0 / tr))
}

/// Random one-qubit density matrix.
pub fn random_qubit<R: Rng>(rng: &mut R) -> Mat2 {
    let a = Mat2([[random_complex(rng), random_complex(rng)], [random_complex(rng), random_complex(rng)]]);
    let m = a * a.adjoint();
    let tr = (m.0[0][0] + m.0[1][1]).re;
    m.scale(1.0 / tr)
}

/// ρ_a ⊗ ρ_b with independent random factors.
pub fn random_product_state<R: Rng>(rng: &mut R) -> DensityMatrix4 {
    let a = random_qubit(rng);
    let b = random_qubit(rng);
    DensityMatrix4::from_matrix(a.kron(&b))
}
