//! Partial transpose, spectra and negativity.

mod eigen;

pub use eigen::{
    hermitian_eigen, hermitian_eigenvalues, EigenDecomposition, Spectrum4, MAX_SWEEPS,
    OFF_DIAGONAL_TOL,
};

use crate::error::Result;
use crate::fano::{make_bell_diagonal, DensityMatrix4, PHYSICAL_TOL};
use crate::linalg::Mat4;

/// Negativity Σ|λ(ρ^T₂)| − 1, kept both raw and clamped at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityValue {
    pub raw: f64,
    pub clamped: f64,
}

impl NegativityValue {
    pub fn from_raw(raw: f64) -> Self {
        Self { raw, clamped: raw.max(0.0) }
    }

    fn from_spectrum(values: &[f64; 4]) -> Self {
        Self::from_raw(values.iter().map(|l| l.abs()).sum::<f64>() - 1.0)
    }
}

/// Transposes the second qubit: entry (2a+b, 2c+d) moves to (2a+d, 2c+b).
pub fn partial_transpose_second(m: &Mat4, tol: f64) -> Result<Mat4> {
    let defect = m.hermiticity_defect();
    if defect > tol {
        return Err(crate::Error::NotHermitian { defect });
    }
    let mut out = Mat4::zeros();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    out[(2 * a + d, 2 * c + b)] = m[(2 * a + b, 2 * c + d)];
                }
            }
        }
    }
    Ok(out)
}

/// Eigen-based negativity of a two-qubit state.
pub fn negativity(rho: &DensityMatrix4) -> Result<NegativityValue> {
    let pt = partial_transpose_second(&rho.m, PHYSICAL_TOL)?;
    let spectrum = hermitian_eigenvalues(&pt, PHYSICAL_TOL)?;
    Ok(NegativityValue::from_spectrum(&spectrum.values))
}

/// Closed-form spectrum of ρ^T₂ for a Bell-diagonal state. Transposing the
/// second qubit negates σy, so c2 changes sign in the Bell-basis eigenvalues.
pub fn bell_diagonal_pt_spectrum(c1: f64, c2: f64, c3: f64) -> [f64; 4] {
    [
        (1.0 + c1 + c2 + c3) / 4.0,
        (1.0 - c1 - c2 + c3) / 4.0,
        (1.0 + c1 - c2 - c3) / 4.0,
        (1.0 - c1 + c2 - c3) / 4.0,
    ]
}

pub fn negativity_closed_form_bell_diagonal(c1: f64, c2: f64, c3: f64) -> Result<NegativityValue> {
    make_bell_diagonal(c1, c2, c3)?;
    Ok(NegativityValue::from_spectrum(&bell_diagonal_pt_spectrum(c1, c2, c3)))
}

/// The closed form −½ + ½·tr(CᵀC), evaluated literally (diagnostic only; it
/// is quadratic in the correlations and disagrees with the eigen-based
/// value away from the Bell points).
pub fn negativity_paper_eq3(c: &[[f64; 3]; 3]) -> f64 {
    -0.5 + 0.5 * c.iter().flatten().map(|x| x * x).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::{fano_to_density, make_werner, TwoQubitFano};

    fn state(c1: f64, c2: f64, c3: f64) -> DensityMatrix4 {
        fano_to_density(&make_bell_diagonal(c1, c2, c3).unwrap())
    }

    #[test]
    fn partial_transpose_examples() {
        let mm = DensityMatrix4::maximally_mixed().m;
        assert_eq!(partial_transpose_second(&mm, 1e-12).unwrap(), mm);

        let singlet = state(-1.0, -1.0, -1.0).m;
        let pt = partial_transpose_second(&singlet, 1e-12).unwrap();
        assert_eq!(partial_transpose_second(&pt, 1e-12).unwrap(), singlet);
        assert_eq!(pt.trace(), singlet.trace());
        let spec = hermitian_eigenvalues(&pt, 1e-12).unwrap();
        for (a, b) in spec.values.iter().zip([-0.5, 0.5, 0.5, 0.5]) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn bell_states_have_unit_negativity() {
        for (c1, c2, c3) in [(-1.0, -1.0, -1.0), (1.0, -1.0, 1.0), (1.0, 1.0, -1.0), (-1.0, 1.0, 1.0)] {
            let n = negativity(&state(c1, c2, c3)).unwrap();
            assert!((n.clamped - 1.0).abs() < 1e-10, "{c1} {c2} {c3}: {n:?}");
        }
    }

    #[test]
    fn werner_line() {
        for k in 4..=10 {
            let x = -(k as f64) / 10.0;
            let n = negativity(&fano_to_density(&make_werner(x).unwrap())).unwrap();
            assert!((n.raw - (-0.5 + 1.5 * x.abs())).abs() < 1e-10);
        }
        let n = negativity(&DensityMatrix4::maximally_mixed()).unwrap();
        assert!(n.clamped.abs() < 1e-15);
    }

    #[test]
    fn closed_form_examples() {
        assert!((negativity_closed_form_bell_diagonal(-1.0, -1.0, -1.0).unwrap().raw - 1.0).abs() < 1e-15);
        assert_eq!(negativity_closed_form_bell_diagonal(0.0, 0.0, 0.0).unwrap().clamped, 0.0);
        let cf = negativity_closed_form_bell_diagonal(-0.1, -0.2, -0.7).unwrap();
        let eig = negativity(&state(-0.1, -0.2, -0.7)).unwrap();
        assert!((cf.raw - eig.raw).abs() < 1e-12);
        assert!(negativity_closed_form_bell_diagonal(-1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn trace_form_diagnostic_values() {
        let singlet = TwoQubitFano::singlet();
        assert_eq!(negativity_paper_eq3(&singlet.c), 1.0);
        assert_eq!(negativity_paper_eq3(&[[0.0; 3]; 3]), -0.5);
        let w = make_werner(-0.5).unwrap();
        assert!((negativity_paper_eq3(&w.c) + 0.125).abs() < 1e-15);
        let eig = negativity(&fano_to_density(&w)).unwrap();
        assert!((eig.raw - 0.25).abs() < 1e-12);
    }
}
