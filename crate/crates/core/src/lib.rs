//! Two-qubit entanglement under generalized amplitude damping.
//!
//! States are built in Fano form ([`fano`]), pushed through GAD Kraus
//! channels with correlated or uncorrelated noise ([`channel`]), measured
//! with the negativity ([`entanglement`]) and swept over the damping
//! strength to find sudden death, frozen intervals and sudden changes
//! ([`analysis`]). The [`cli`] module holds the configuration, CSV and plot
//! script support used by the `gadent` binary.

pub mod analysis;
pub mod channel;
pub mod cli;
pub mod entanglement;
pub mod error;
pub mod fano;
pub mod linalg;
pub mod sampling;

pub use analysis::{
    classify_phenomena, classify_with, detect_frozen_intervals, detect_sudden_changes,
    detect_sudden_death, sweep_gamma, sweep_grid, DetectorConfig, NoiseMode, PhenomenonReport,
    Sample, SweepResult, SweepSpec,
};
pub use channel::{
    apply_correlated, apply_uncorrelated, completeness_defect, gad_kraus_set, gamma_of_time,
    paper_correlated_coefficients, paper_uncorrelated_coefficients, ChannelParams, KrausSet,
    PaperCoefficients,
};
pub use entanglement::{
    hermitian_eigenvalues, negativity, negativity_closed_form_bell_diagonal, negativity_paper_eq3,
    partial_transpose_second, NegativityValue, Spectrum4,
};
pub use error::{Error, Result};
pub use fano::{
    density_to_fano, fano_to_density, make_bell_diagonal, make_werner, validate_density,
    DensityMatrix4, TwoQubitFano, ValidationReport,
};
