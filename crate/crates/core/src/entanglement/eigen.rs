//! Cyclic Jacobi diagonalization of 4×4 Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot a_pq with a diagonal
//! unitary, then applies a real Givens rotation that zeroes it.

use crate::error::{Error, Result};
use crate::linalg::{Complex64, Mat4, ONE};

pub const MAX_SWEEPS: usize = 100;
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Four real eigenvalues in ascending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum4 {
    pub values: [f64; 4],
}

impl Spectrum4 {
    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Eigenvalues with their eigenvectors; column `k` of `vectors` belongs to
/// `spectrum.values[k]`.
#[derive(Debug, Clone, Copy)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum4,
    pub vectors: Mat4,
    pub sweeps: usize,
}

fn off_diagonal_norm(m: &Mat4) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Unitary U such that (U† A U)_pq = 0.
fn rotation(a: &Mat4, p: usize, q: usize) -> Mat4 {
    let apq = a[(p, q)];
    let r = apq.norm();
    let phase = if r > 0.0 { apq / r } else { ONE };
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // U = Φ·G with Φ = diag(.., 1 at p, .., e^{-iφ} at q, ..) and G the real
    // rotation with G_pp = G_qq = c, G_pq = s, G_qp = −s.
    let conj_phase = phase.conj();
    let mut u = Mat4::identity();
    u[(p, p)] = Complex64::new(c, 0.0);
    u[(p, q)] = Complex64::new(s, 0.0);
    u[(q, p)] = conj_phase * -s;
    u[(q, q)] = conj_phase * c;
    u
}

/// Full decomposition; `tol` bounds the accepted Hermiticity defect.
pub fn hermitian_eigen(m: &Mat4, tol: f64) -> Result<EigenDecomposition> {
    let defect = m.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian { defect });
    }
    let mut a = m.hermitian_part();
    let mut v = Mat4::identity();
    let threshold = OFF_DIAGONAL_TOL * a.frobenius().max(1.0);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::EigenBudgetExhausted { sweeps, off_norm: off_diagonal_norm(&a) });
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                if a[(p, q)].norm() == 0.0 {
                    continue;
                }
                let u = rotation(&a, p, q);
                a = u.adjoint() * a * u;
                v = v * u;
            }
        }
        sweeps += 1;
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let mut values = [0.0; 4];
    let mut vectors = Mat4::zeros();
    for (k, &i) in order.iter().enumerate() {
        values[k] = a[(i, i)].re;
        for row in 0..4 {
            vectors[(row, k)] = v[(row, i)];
        }
    }
    Ok(EigenDecomposition { spectrum: Spectrum4 { values }, vectors, sweeps })
}

pub fn hermitian_eigenvalues(m: &Mat4, tol: f64) -> Result<Spectrum4> {
    hermitian_eigen(m, tol).map(|d| d.spectrum)
}
