use gadent::analysis::{evolve, uniform_grid};
use gadent::channel::correlated_unnormalized;
use gadent::entanglement::{bell_diagonal_pt_spectrum, hermitian_eigen};
use gadent::fano::bell_basis_eigenvalues;
use gadent::linalg::{Complex64, Mat4};
use gadent::sampling::{random_density, random_product_state};
use gadent::*;
use nalgebra::Matrix4;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_nalgebra(m: &Mat4) -> Matrix4<Complex64> {
    Matrix4::from_fn(|i, j| m[(i, j)])
}

fn oracle_eigenvalues(m: &Mat4) -> Vec<f64> {
    let mut v: Vec<f64> = to_nalgebra(m).symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

fn state_from_seed(seed: u64) -> DensityMatrix4 {
    random_density(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn sorted(mut v: [f64; 4]) -> [f64; 4] {
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn uncorrelated_preserves_trace_and_positivity(seed in any::<u64>(), p in 0.0..=1.0f64, g in 0.0..=1.0f64) {
        let rho = state_from_seed(seed);
        let out = evolve(&rho, ChannelParams::new(p, g).unwrap(), NoiseMode::Uncorrelated).unwrap();
        prop_assert!((out.m.trace().re - 1.0).abs() < 1e-12);
        let v = validate_density(&out, 1e-9);
        prop_assert!(v.physical, "{v:?}");
    }

    #[test]
    fn correlated_output_is_physical(seed in any::<u64>(), p in 0.0..=1.0f64, g in 0.0..0.999f64) {
        let rho = state_from_seed(seed);
        let out = evolve(&rho, ChannelParams::new(p, g).unwrap(), NoiseMode::Correlated).unwrap();
        prop_assert!(validate_density(&out, 1e-9).physical);
    }

    #[test]
    fn fano_round_trip(seed in any::<u64>()) {
        let rho = state_from_seed(seed);
        let f = density_to_fano(&rho, 1e-9).unwrap();
        let back = fano_to_density(&f);
        prop_assert!(back.m.max_abs_diff(&rho.m) < 1e-12);
        let again = density_to_fano(&back, 1e-9).unwrap();
        for (a, b) in again.c.iter().flatten().zip(f.c.iter().flatten()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_hermiticity_and_unit_trace(seed in any::<u64>()) {
        let f = density_to_fano(&state_from_seed(seed), 1e-9).unwrap();
        let rho = fano_to_density(&f);
        prop_assert_eq!(rho.m.hermiticity_defect(), 0.0);
        prop_assert!((rho.m.trace().re - 1.0).abs() <= 1e-15);
        prop_assert_eq!(rho.m.trace().im, 0.0);
    }

    #[test]
    fn eigenvalues_match_nalgebra(seed in any::<u64>()) {
        let rho = state_from_seed(seed);
        let pt = partial_transpose_second(&rho.m, 1e-9).unwrap();
        for m in [rho.m, pt] {
            let ours = hermitian_eigenvalues(&m, 1e-9).unwrap().values;
            for (a, b) in ours.iter().zip(oracle_eigenvalues(&m)) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn product_states_are_separable(seed in any::<u64>()) {
        let rho = random_product_state(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(negativity(&rho).unwrap().clamped < 1e-10);
    }

    #[test]
    fn negativity_is_bounded(seed in any::<u64>()) {
        let n = negativity(&state_from_seed(seed)).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&n.clamped));
        if n.raw >= 0.0 {
            prop_assert_eq!(n.raw, n.clamped);
        }
    }

    #[test]
    fn identity_at_zero_damping(seed in any::<u64>(), p in 0.0..=1.0f64) {
        let rho = state_from_seed(seed);
        let params = ChannelParams::new(p, 0.0).unwrap();
        for mode in [NoiseMode::Correlated, NoiseMode::Uncorrelated] {
            prop_assert!(evolve(&rho, params, mode).unwrap().m.max_abs_diff(&rho.m) < 1e-12);
        }
        let k = gad_kraus_set(params).unwrap();
        let tr = correlated_unnormalized(&rho, &k).trace().re;
        prop_assert!((tr - (p * p + (1.0 - p) * (1.0 - p))).abs() < 1e-12);
    }

    #[test]
    fn completeness_of_canonical_set(p in 0.0..=1.0f64, g in 0.0..=1.0f64) {
        prop_assert!(gad_kraus_set(ChannelParams::new(p, g).unwrap()).unwrap().completeness_defect < 1e-12);
    }

    #[test]
    fn eigen_residuals(seed in any::<u64>()) {
        let m = partial_transpose_second(&state_from_seed(seed).m, 1e-9).unwrap();
        let d = hermitian_eigen(&m, 1e-9).unwrap();
        // M V = V Λ
        let lambda = Mat4::diag(d.spectrum.values);
        prop_assert!((m * d.vectors).max_abs_diff(&(d.vectors * lambda)) < 1e-9);
    }
}

#[test]
fn bell_diagonal_spectra_match_closed_forms() {
    // Both closed forms checked against nalgebra before they are relied on.
    for c1 in uniform_grid(21) {
        for c2 in uniform_grid(21) {
            for c3 in uniform_grid(21) {
                let (c1, c2, c3) = (2.0 * c1 - 1.0, 2.0 * c2 - 1.0, 2.0 * c3 - 1.0);
                let Ok(state) = make_bell_diagonal(c1, c2, c3) else { continue };
                let rho = fano_to_density(&state);
                let pt = partial_transpose_second(&rho.m, 1e-9).unwrap();
                let want = sorted(bell_basis_eigenvalues(c1, c2, c3));
                for (a, b) in oracle_eigenvalues(&rho.m).iter().zip(want) {
                    assert!((a - b).abs() < 1e-12);
                }
                let ours = hermitian_eigenvalues(&rho.m, 1e-9).unwrap().values;
                for (a, b) in ours.iter().zip(want) {
                    assert!((a - b).abs() < 1e-12);
                }
                let want_pt = sorted(bell_diagonal_pt_spectrum(c1, c2, c3));
                for (a, b) in oracle_eigenvalues(&pt).iter().zip(want_pt) {
                    assert!((a - b).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn unphysical_bell_parameters_have_negative_eigenvalue() {
    // (−1, −1, +1): brute-force diagonalization of the unchecked matrix.
    let f = TwoQubitFano::new([0.0; 3], [0.0; 3], [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]]).unwrap();
    let eig = oracle_eigenvalues(&fano_to_density(&f).m);
    assert!((eig[0] + 0.5).abs() < 1e-12);
    assert!(make_bell_diagonal(-1.0, -1.0, 1.0).is_err());
}

#[test]
fn closure_of_bell_diagonal_family() {
    // Uncorrelated and correlated outputs of Bell-diagonal inputs have no
    // off-diagonal correlations and equal Bloch vectors along z only.
    for &(c1, c2, c3) in &[(-0.1, -0.2, -0.7), (-1.0, -1.0, -1.0), (-0.5, -0.5, -0.5)] {
        let init = make_bell_diagonal(c1, c2, c3).unwrap();
        let rho = fano_to_density(&init);
        for p in uniform_grid(21) {
            for g in uniform_grid(21) {
                for mode in [NoiseMode::Correlated, NoiseMode::Uncorrelated] {
                    let Ok(out) = evolve(&rho, ChannelParams::new(p, g).unwrap(), mode) else { continue };
                    let f = density_to_fano(&out, 1e-9).unwrap();
                    assert!(f.s[0].abs() < 1e-10 && f.s[1].abs() < 1e-10);
                    assert!(f.t[0].abs() < 1e-10 && f.t[1].abs() < 1e-10);
                    assert!((f.s[2] - f.t[2]).abs() < 1e-10);
                    for k in 0..3 {
                        for l in 0..3 {
                            if k != l {
                                assert!(f.c[k][l].abs() < 1e-10);
                            }
                        }
                    }
                }
            }
        }
    }
}
