use thiserror::Error;

/// Errors produced by state construction, channel application and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {name} = {value} is outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("unphysical Bell-diagonal parameters: eigenvalue {eigenvalue:e} < 0")]
    UnphysicalParameters { eigenvalue: f64 },

    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("state is not physical (hermiticity {hermiticity_defect:e}, trace {trace_defect:e}, min eigenvalue {min_eigenvalue:e})")]
    NonPhysicalState {
        hermiticity_defect: f64,
        trace_defect: f64,
        min_eigenvalue: f64,
    },

    #[error("Kraus set is not complete (defect {defect:e})")]
    IncompleteKraus { defect: f64 },

    #[error("correlated channel annihilates the state (trace {trace:e})")]
    ChannelAnnihilation { trace: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    EigenBudgetExhausted { sweeps: usize, off_norm: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
