//! Run configuration: TOML file plus command-line overrides.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{uniform_grid, validate_grid, DetectorConfig, NoiseMode, DEFAULT_GAMMA_POINTS};
use crate::fano::{make_bell_diagonal, make_werner, TwoQubitFano};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Parse(String),
    #[error("invalid initial state spec '{spec}': {reason}")]
    InitialSpec { spec: String, reason: String },
    #[error("unphysical initial state: {0}")]
    Unphysical(#[source] crate::Error),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("invalid threshold {name} = {value}")]
    Threshold { name: &'static str, value: f64 },
    #[error("missing setting: {0}")]
    Missing(&'static str),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialState {
    BellDiagonal { c: [f64; 3] },
    Werner { x: f64 },
    Fano { s: [f64; 3], t: [f64; 3], c: [[f64; 3]; 3] },
}

impl InitialState {
    pub fn build(&self) -> Result<TwoQubitFano, ConfigError> {
        match *self {
            InitialState::BellDiagonal { c: [c1, c2, c3] } => make_bell_diagonal(c1, c2, c3),
            InitialState::Werner { x } => make_werner(x),
            InitialState::Fano { s, t, c } => TwoQubitFano::new(s, t, c),
        }
        .map_err(ConfigError::Unphysical)
    }

    /// Parses `bell:c1,c2,c3`, `werner:x` or `fano:s1,s2,s3/t1,t2,t3/c11,..,c33`.
    pub fn parse_spec(spec: &str) -> Result<Self, ConfigError> {
        let fail = |reason: &str| ConfigError::InitialSpec { spec: spec.to_string(), reason: reason.to_string() };
        let (kind, rest) = spec.split_once(':').ok_or_else(|| fail("expected KIND:VALUES"))?;
        let numbers = |s: &str| -> Result<Vec<f64>, ConfigError> {
            s.split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|_| fail("not a number")))
                .collect()
        };
        match kind {
            "bell" | "bell_diagonal" => {
                let v = numbers(rest)?;
                let c: [f64; 3] = v.try_into().map_err(|_| fail("expected three correlations"))?;
                Ok(InitialState::BellDiagonal { c })
            }
            "werner" => {
                let v = numbers(rest)?;
                match v.as_slice() {
                    [x] => Ok(InitialState::Werner { x: *x }),
                    _ => Err(fail("expected one value")),
                }
            }
            "fano" => {
                let parts: Vec<_> = rest.split('/').collect();
                let [s, t, c] = parts.as_slice() else {
                    return Err(fail("expected s/t/c groups"));
                };
                let s: [f64; 3] = numbers(s)?.try_into().map_err(|_| fail("s needs 3 values"))?;
                let t: [f64; 3] = numbers(t)?.try_into().map_err(|_| fail("t needs 3 values"))?;
                let c = numbers(c)?;
                if c.len() != 9 {
                    return Err(fail("c needs 9 values"));
                }
                let c = [[c[0], c[1], c[2]], [c[3], c[4], c[5]], [c[6], c[7], c[8]]];
                Ok(InitialState::Fano { s, t, c })
            }
            _ => Err(fail("unknown kind (bell, werner, fano)")),
        }
    }
}

/// Negativity surface of Bell-diagonal initial states over (c2, c3) at
/// fixed c1 and no channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialSurface {
    pub c1: f64,
    pub count: usize,
    #[serde(default = "default_c_min")]
    pub c_min: f64,
    #[serde(default)]
    pub c_max: f64,
}

fn default_c_min() -> f64 {
    -1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: NoiseMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plot_out: Option<PathBuf>,
    #[serde(default)]
    pub compare_formulas: bool,
    pub initial: InitialState,
    #[serde(default)]
    pub detector: DetectorConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial_surface: Option<InitialSurface>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: NoiseMode::Correlated,
            p: Some(vec![0.1, 0.2, 0.3]),
            p_count: None,
            gamma: None,
            gamma_count: Some(DEFAULT_GAMMA_POINTS),
            out: None,
            plot_out: None,
            compare_formulas: false,
            initial: InitialState::BellDiagonal { c: [-0.1, -0.2, -0.7] },
            detector: DetectorConfig::default(),
            initial_surface: None,
        }
    }
}

/// A validated configuration ready to run.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedRun {
    pub initial: TwoQubitFano,
    pub mode: NoiseMode,
    pub p_grid: Vec<f64>,
    pub gamma_grid: Vec<f64>,
    pub detector: DetectorConfig,
    pub compare_formulas: bool,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Parse(e.message().to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Read { path: path.to_path_buf(), source })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn p_grid(&self) -> Result<Vec<f64>, ConfigError> {
        let grid = match (&self.p, self.p_count) {
            (Some(list), _) => list.clone(),
            (None, Some(n)) => uniform_grid(n),
            (None, None) => return Err(ConfigError::Missing("p or p_count")),
        };
        validate_grid("p", &grid).map_err(|e| ConfigError::Grid(e.to_string()))?;
        Ok(grid)
    }

    pub fn gamma_grid(&self) -> Result<Vec<f64>, ConfigError> {
        let grid = match (&self.gamma, self.gamma_count) {
            (Some(list), _) => list.clone(),
            (None, Some(n)) => uniform_grid(n),
            (None, None) => uniform_grid(DEFAULT_GAMMA_POINTS),
        };
        validate_grid("gamma", &grid).map_err(|e| ConfigError::Grid(e.to_string()))?;
        Ok(grid)
    }

    fn check_thresholds(&self) -> Result<(), ConfigError> {
        let d = &self.detector;
        for (name, value) in [
            ("zero_tol", d.zero_tol),
            ("slope_eps", d.slope_eps),
            ("min_len", d.min_len),
            ("kink_threshold", d.kink_threshold),
        ] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(ConfigError::Threshold { name, value });
            }
        }
        Ok(())
    }

    pub fn resolve(&self) -> Result<ResolvedRun, ConfigError> {
        self.check_thresholds()?;
        Ok(ResolvedRun {
            initial: self.initial.build()?,
            mode: self.mode,
            p_grid: self.p_grid()?,
            gamma_grid: self.gamma_grid()?,
            detector: self.detector,
            compare_formulas: self.compare_formulas,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip_through_toml() {
        let cfg = RunConfig::default();
        let text = cfg.to_toml();
        assert_eq!(RunConfig::from_toml(&text).unwrap(), cfg);
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = "mode = \"correlated\"\np = [0.1]\nbogus = 1\n[initial]\nkind = \"werner\"\nx = -0.5\n";
        assert!(matches!(RunConfig::from_toml(text), Err(ConfigError::Parse(_))));
        let text = "mode = \"correlated\"\np = [0.1]\n[initial]\nkind = \"werner\"\nx = -0.5\ny = 2\n";
        assert!(matches!(RunConfig::from_toml(text), Err(ConfigError::Parse(_))));
        let text = "mode = \"correlated\"\np = [0.1]\n[initial]\nkind = \"werner\"\nx = -0.5\n[detector]\nfoo = 1\n";
        assert!(matches!(RunConfig::from_toml(text), Err(ConfigError::Parse(_))));
    }

    #[test]
    fn precondition_violations_are_named() {
        let mut cfg = RunConfig::default();
        cfg.gamma = Some(vec![]);
        assert!(matches!(cfg.resolve(), Err(ConfigError::Grid(_))));

        let mut cfg = RunConfig::default();
        cfg.initial = InitialState::Werner { x: 0.9 };
        assert!(matches!(cfg.resolve(), Err(ConfigError::Unphysical(_))));

        let mut cfg = RunConfig::default();
        cfg.initial = InitialState::BellDiagonal { c: [-1.0, -1.0, 1.0] };
        assert!(matches!(cfg.resolve(), Err(ConfigError::Unphysical(_))));

        let mut cfg = RunConfig::default();
        cfg.p = Some(vec![0.5, 1.5]);
        assert!(matches!(cfg.resolve(), Err(ConfigError::Grid(_))));

        let mut cfg = RunConfig::default();
        cfg.p = None;
        assert!(matches!(cfg.resolve(), Err(ConfigError::Missing(_))));

        let mut cfg = RunConfig::default();
        cfg.detector.slope_eps = -1.0;
        assert!(matches!(cfg.resolve(), Err(ConfigError::Threshold { name: "slope_eps", .. })));
    }

    #[test]
    fn initial_spec_strings() {
        assert_eq!(
            InitialState::parse_spec("bell:-1,-1,-1").unwrap(),
            InitialState::BellDiagonal { c: [-1.0; 3] }
        );
        assert_eq!(InitialState::parse_spec("werner:-0.03").unwrap(), InitialState::Werner { x: -0.03 });
        let f = InitialState::parse_spec("fano:0,0,0.1/0,0,0.1/-0.5,0,0,0,-0.5,0,0,0,-0.5").unwrap();
        assert!(f.build().is_ok());
        for bad in ["bell:1,2", "werner", "fano:1,2,3", "ghz:1", "werner:abc"] {
            assert!(matches!(InitialState::parse_spec(bad), Err(ConfigError::InitialSpec { .. })), "{bad}");
        }
    }
}
