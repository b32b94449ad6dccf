//! Two-qubit states in Fano form and as 4×4 density matrices.
//!
//! A state is ρ = ¼(I + Σ sᵢ σᵢ⊗I + Σ tᵢ I⊗σᵢ + Σ c_kl σ_k⊗σ_l) with Bloch
//! vectors `s`, `t` and the 3×3 correlation dyadic `c`. The basis order is
//! |00⟩, |01⟩, |10⟩, |11⟩ with σz|0⟩ = |0⟩.

use serde::{Deserialize, Serialize};

use crate::entanglement::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::linalg::{Mat4, IDENTITY2, PAULI};

/// Default tolerance for physicality checks.
pub const PHYSICAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitFano {
    pub s: [f64; 3],
    pub t: [f64; 3],
    pub c: [[f64; 3]; 3],
}

impl TwoQubitFano {
    /// Builds a state after checking every component lies in [−1, 1].
    pub fn new(s: [f64; 3], t: [f64; 3], c: [[f64; 3]; 3]) -> Result<Self> {
        let in_range = |name, x: f64| {
            if (-1.0..=1.0).contains(&x) {
                Ok(())
            } else {
                Err(Error::ParameterOutOfRange { name, value: x, range: "[-1, 1]" })
            }
        };
        for x in s {
            in_range("s", x)?;
        }
        for x in t {
            in_range("t", x)?;
        }
        for x in c.iter().flatten() {
            in_range("c", *x)?;
        }
        Ok(Self { s, t, c })
    }

    pub fn maximally_mixed() -> Self {
        Self { s: [0.0; 3], t: [0.0; 3], c: [[0.0; 3]; 3] }
    }

    pub fn singlet() -> Self {
        Self {
            s: [0.0; 3],
            t: [0.0; 3],
            c: [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]],
        }
    }

    pub fn correlation_diagonal(&self) -> [f64; 3] {
        [self.c[0][0], self.c[1][1], self.c[2][2]]
    }

    /// True for zero Bloch vectors and a diagonal correlation dyadic.
    pub fn is_bell_diagonal(&self) -> bool {
        self.s == [0.0; 3]
            && self.t == [0.0; 3]
            && (0..3).all(|k| (0..3).all(|l| k == l || self.c[k][l] == 0.0))
    }

    pub fn to_density(&self) -> DensityMatrix4 {
        fano_to_density(self)
    }
}

/// A two-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    pub m: Mat4,
}

impl DensityMatrix4 {
    /// Wraps a matrix without any checks; see [`validate_density`].
    pub fn from_matrix(m: Mat4) -> Self {
        Self { m }
    }

    pub fn maximally_mixed() -> Self {
        Self { m: Mat4::diag([0.25; 4]) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    pub hermiticity_defect: f64,
    pub trace_defect: f64,
    pub min_eigenvalue: f64,
    pub physical: bool,
}

pub fn fano_to_density(state: &TwoQubitFano) -> DensityMatrix4 {
    let mut m = Mat4::identity();
    for i in 0..3 {
        m = m + PAULI[i].kron(&IDENTITY2).scale(state.s[i]);
        m = m + IDENTITY2.kron(&PAULI[i]).scale(state.t[i]);
    }
    for k in 0..3 {
        for l in 0..3 {
            let ckl = state.c[k][l];
            if ckl != 0.0 {
                m = m + PAULI[k].kron(&PAULI[l]).scale(ckl);
            }
        }
    }
    DensityMatrix4 { m: m.scale(0.25) }
}

/// Recovers Fano parameters via sᵢ = tr(ρ σᵢ⊗I), tᵢ = tr(ρ I⊗σᵢ),
/// c_kl = tr(ρ σ_k⊗σ_l).
pub fn density_to_fano(rho: &DensityMatrix4, tol: f64) -> Result<TwoQubitFano> {
    let defect = rho.m.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian { defect });
    }
    let expect = |op: Mat4| (rho.m * op).trace().re;
    let mut out = TwoQubitFano::maximally_mixed();
    for i in 0..3 {
        out.s[i] = expect(PAULI[i].kron(&IDENTITY2));
        out.t[i] = expect(IDENTITY2.kron(&PAULI[i]));
        for l in 0..3 {
            out.c[i][l] = expect(PAULI[i].kron(&PAULI[l]));
        }
    }
    Ok(out)
}

/// Eigenvalues of the Bell-diagonal state with correlations (c1, c2, c3),
/// in the order |Φ+⟩, |Ψ+⟩, |Φ−⟩, |Ψ−⟩.
pub fn bell_basis_eigenvalues(c1: f64, c2: f64, c3: f64) -> [f64; 4] {
    [
        (1.0 + c1 - c2 + c3) / 4.0,
        (1.0 + c1 + c2 - c3) / 4.0,
        (1.0 - c1 + c2 + c3) / 4.0,
        (1.0 - c1 - c2 - c3) / 4.0,
    ]
}

/// Zero Bloch vectors with C = diag(c1, c2, c3).
pub fn make_bell_diagonal(c1: f64, c2: f64, c3: f64) -> Result<TwoQubitFano> {
    let c = [[c1, 0.0, 0.0], [0.0, c2, 0.0], [0.0, 0.0, c3]];
    let state = TwoQubitFano::new([0.0; 3], [0.0; 3], c)?;
    let lowest = bell_basis_eigenvalues(c1, c2, c3)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    if lowest < -PHYSICAL_TOL {
        return Err(Error::UnphysicalParameters { eigenvalue: lowest });
    }
    Ok(state)
}

/// Werner state c11 = c22 = c33 = x, physical for x ∈ [−1, 1/3].
pub fn make_werner(x: f64) -> Result<TwoQubitFano> {
    make_bell_diagonal(x, x, x)
}

pub fn validate_density(rho: &DensityMatrix4, tol: f64) -> ValidationReport {
    let hermiticity_defect = rho.m.hermiticity_defect();
    let trace = rho.m.trace();
    let trace_defect = (trace - 1.0).norm();
    // The spectrum of the Hermitian part is still informative when the
    // input itself fails the Hermiticity check.
    let min_eigenvalue = match hermitian_eigenvalues(&rho.m.hermitian_part(), f64::INFINITY) {
        Ok(spec) => spec.values[0],
        Err(_) => f64::NAN,
    };
    let physical =
        hermiticity_defect <= tol && trace_defect <= tol && min_eigenvalue >= -tol;
    ValidationReport { hermiticity_defect, trace_defect, min_eigenvalue, physical }
}

/// Fails with [`Error::NonPhysicalState`] unless `rho` passes validation.
pub fn ensure_physical(rho: &DensityMatrix4, tol: f64) -> Result<()> {
    let r = validate_density(rho, tol);
    if r.physical {
        Ok(())
    } else {
        Err(Error::NonPhysicalState {
            hermiticity_defect: r.hermiticity_defect,
            trace_defect: r.trace_defect,
            min_eigenvalue: r.min_eigenvalue,
        })
    }
}
