//! Fixed-size complex matrices for one and two qubits.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

pub use num_complex::Complex64;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Pauli matrices σx, σy, σz.
pub const PAULI: [Mat2; 3] = [
    Mat2([[ZERO, ONE], [ONE, ZERO]]),
    Mat2([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]]),
    Mat2([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]]),
];

pub const IDENTITY2: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

/// 4×4 complex matrix in the basis |00⟩, |01⟩, |10⟩, |11⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4(pub [[Complex64; 4]; 4]);

impl Mat2 {
    pub const fn zeros() -> Self {
        Mat2([[ZERO; 2]; 2])
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn scale(&self, k: f64) -> Self {
        Mat2(self.0.map(|row| row.map(|z| z * k)))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Tensor product `self ⊗ other`, first factor acting on the first qubit.
    pub fn kron(&self, other: &Mat2) -> Mat4 {
        let mut out = Mat4::zeros();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        out.0[2 * a + b][2 * c + d] = self.0[a][c] * other.0[b][d];
                    }
                }
            }
        }
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        out
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        self + rhs.scale(-1.0)
    }
}

impl Mat4 {
    pub const fn zeros() -> Self {
        Mat4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_real(m: [[f64; 4]; 4]) -> Self {
        Mat4(m.map(|row| row.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn diag(d: [f64; 4]) -> Self {
        let mut m = Self::zeros();
        for (i, x) in d.into_iter().enumerate() {
            m.0[i][i] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, k: f64) -> Self {
        Mat4(self.0.map(|row| row.map(|z| z * k)))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        (*self - *other).max_abs()
    }

    /// max |m_ij − conj(m_ji)|
    pub fn hermiticity_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in i..4 {
                d = d.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        d
    }

    /// (M + M†)/2
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale(0.5)
    }

    /// `U · self · U†`
    pub fn conjugate_by(&self, u: &Mat4) -> Self {
        *u * *self * u.adjoint()
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..4 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        // σx σy = i σz
        let xy = PAULI[0] * PAULI[1];
        let iz = Mat2(PAULI[2].0.map(|r| r.map(|z| z * I)));
        assert_eq!(xy, iz);
        for p in PAULI {
            assert_eq!(p * p, IDENTITY2);
            assert_eq!(p.adjoint(), p);
        }
    }

    #[test]
    fn kron_index_layout() {
        // |1⟩⟨0| ⊗ I maps |0b⟩ to |1b⟩: entries (2+b, b)
        let lower = Mat2::from_real([[0.0, 0.0], [1.0, 0.0]]);
        let k = lower.kron(&IDENTITY2);
        assert_eq!(k[(2, 0)], ONE);
        assert_eq!(k[(3, 1)], ONE);
        assert_eq!(k[(0, 2)], ZERO);
        assert_eq!(IDENTITY2.kron(&IDENTITY2), Mat4::identity());
    }
}
