//! Negativity sweeps over the damping strength and detection of sudden
//! death, frozen intervals and sudden changes (kinks).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{
    apply_correlated, apply_uncorrelated, gad_kraus_set, paper_correlated_coefficients,
    paper_uncorrelated_coefficients, ChannelParams,
};
use crate::entanglement::negativity;
use crate::error::{Error, Result};
use crate::fano::{density_to_fano, fano_to_density, DensityMatrix4, TwoQubitFano, PHYSICAL_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseMode {
    Correlated,
    Uncorrelated,
}

impl std::fmt::Display for NoiseMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NoiseMode::Correlated => "correlated",
            NoiseMode::Uncorrelated => "uncorrelated",
        })
    }
}

impl std::str::FromStr for NoiseMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "correlated" => Ok(NoiseMode::Correlated),
            "uncorrelated" => Ok(NoiseMode::Uncorrelated),
            other => Err(format!("unknown noise mode '{other}' (expected correlated|uncorrelated)")),
        }
    }
}

/// `n` evenly spaced points from 0 to 1 inclusive.
pub fn uniform_grid(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n).map(|i| i as f64 / (n - 1) as f64).collect(),
    }
}

pub const DEFAULT_GAMMA_POINTS: usize = 1001;

/// Checks that a grid is nonempty, strictly increasing and inside [0, 1].
pub fn validate_grid(name: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid(format!("{name} grid is empty")));
    }
    if let Some(x) = grid.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(Error::InvalidGrid(format!("{name} value {x} outside [0, 1]")));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!("{name} grid is not strictly increasing")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub initial: TwoQubitFano,
    pub p: f64,
    pub noise_mode: NoiseMode,
    pub gamma_grid: Vec<f64>,
}

impl SweepSpec {
    pub fn new(initial: TwoQubitFano, p: f64, noise_mode: NoiseMode) -> Self {
        Self { initial, p, noise_mode, gamma_grid: uniform_grid(DEFAULT_GAMMA_POINTS) }
    }

    pub fn with_gamma_grid(mut self, grid: Vec<f64>) -> Self {
        self.gamma_grid = grid;
        self
    }
}

/// One sweep point. `negativity` is `None` where the correlated map
/// annihilates the state and no normalized output exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub gamma: f64,
    pub negativity: Option<f64>,
    /// Max |cᵢ(operator sum) − cᵢ(closed-form coefficients)|; NaN at gaps.
    pub discrepancy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub samples: Vec<Sample>,
}

impl SweepResult {
    /// Builds a result directly from (γ, N) pairs, for synthetic curves.
    pub fn from_curve(spec: SweepSpec, points: &[(f64, f64)]) -> Self {
        let samples = points
            .iter()
            .map(|&(gamma, n)| Sample { gamma, negativity: Some(n), discrepancy: f64::NAN })
            .collect();
        Self { spec, samples }
    }

    pub fn gaps(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().filter(|s| s.negativity.is_none()).map(|s| s.gamma)
    }

    pub fn max_discrepancy(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.discrepancy)
            .filter(|d| d.is_finite())
            .fold(f64::NAN, f64::max)
    }
}

/// Applies the channel at (p, γ) in the given mode.
pub fn evolve(initial: &DensityMatrix4, params: ChannelParams, mode: NoiseMode) -> Result<DensityMatrix4> {
    let k = gad_kraus_set(params)?;
    match mode {
        NoiseMode::Correlated => apply_correlated(initial, &k),
        NoiseMode::Uncorrelated => apply_uncorrelated(initial, &k, &k),
    }
}

/// Max deviation between the operator-sum output correlations and the
/// closed-form coefficients at one point.
pub fn formula_discrepancy(initial: &TwoQubitFano, output: &DensityMatrix4, params: ChannelParams, mode: NoiseMode) -> Result<f64> {
    let oracle = density_to_fano(output, PHYSICAL_TOL)?.correlation_diagonal();
    let c = initial.correlation_diagonal();
    let formula = match mode {
        NoiseMode::Correlated => paper_correlated_coefficients(c, params),
        NoiseMode::Uncorrelated => paper_uncorrelated_coefficients(c, params),
    };
    Ok(formula.max_deviation(oracle))
}

pub fn sweep_gamma(spec: &SweepSpec) -> Result<SweepResult> {
    validate_grid("gamma", &spec.gamma_grid)?;
    let rho0 = fano_to_density(&spec.initial);
    let mut samples = Vec::with_capacity(spec.gamma_grid.len());
    for &gamma in &spec.gamma_grid {
        let params = ChannelParams::new(spec.p, gamma)?;
        let sample = match evolve(&rho0, params, spec.noise_mode) {
            Ok(out) => Sample {
                gamma,
                negativity: Some(negativity(&out)?.clamped),
                discrepancy: formula_discrepancy(&spec.initial, &out, params, spec.noise_mode)?,
            },
            Err(Error::ChannelAnnihilation { .. }) => {
                Sample { gamma, negativity: None, discrepancy: f64::NAN }
            }
            Err(e) => return Err(e),
        };
        samples.push(sample);
    }
    Ok(SweepResult { spec: spec.clone(), samples })
}

/// One sweep per `p`, in `p_grid` order. Rows are computed in parallel.
pub fn sweep_grid(initial: &TwoQubitFano, p_grid: &[f64], gamma_grid: &[f64], mode: NoiseMode) -> Result<Vec<SweepResult>> {
    validate_grid("p", p_grid)?;
    validate_grid("gamma", gamma_grid)?;
    p_grid
        .par_iter()
        .map(|&p| {
            let spec = SweepSpec { initial: *initial, p, noise_mode: mode, gamma_grid: gamma_grid.to_vec() };
            sweep_gamma(&spec)
        })
        .collect()
}

/// Detector thresholds; the defaults are echoed in every report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DetectorConfig {
    pub zero_tol: f64,
    /// Negativity units per unit γ.
    pub slope_eps: f64,
    pub min_len: f64,
    /// Negativity units per γ².
    pub kink_threshold: f64,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        Self { zero_tol: 1e-6, slope_eps: 0.02, min_len: 0.05, kink_threshold: 5.0 }
    }
}

/// Maximal runs of consecutive non-gap samples.
fn segments(result: &SweepResult) -> Vec<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for s in &result.samples {
        match s.negativity {
            Some(n) => current.push((s.gamma, n)),
            None => {
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

fn valid_points(result: &SweepResult) -> Vec<(f64, f64)> {
    result
        .samples
        .iter()
        .filter_map(|s| s.negativity.map(|n| (s.gamma, n)))
        .collect()
}

/// Smallest grid γ* from which negativity stays ≤ `zero_tol`, provided the
/// first sample is entangled. Gap samples are skipped.
pub fn detect_sudden_death(result: &SweepResult, zero_tol: f64) -> Option<f64> {
    let points = valid_points(result);
    let &(_, first) = points.first()?;
    if first <= zero_tol {
        return None;
    }
    let mut death = None;
    for &(gamma, n) in points.iter().rev() {
        if n > zero_tol {
            break;
        }
        death = Some(gamma);
    }
    death
}

/// Unions of consecutive cells with |ΔN/Δγ| < `slope_eps` and N > `zero_tol`
/// at both ends, kept when at least `min_len` long.
pub fn detect_frozen_intervals(result: &SweepResult, slope_eps: f64, min_len: f64, zero_tol: f64) -> Vec<(f64, f64)> {
    let mut intervals = Vec::new();
    for seg in segments(result) {
        let mut open: Option<(f64, f64)> = None;
        for w in seg.windows(2) {
            let ((g0, n0), (g1, n1)) = (w[0], w[1]);
            let flat = ((n1 - n0) / (g1 - g0)).abs() < slope_eps && n0 > zero_tol && n1 > zero_tol;
            open = match (open, flat) {
                (Some((lo, _)), true) => Some((lo, g1)),
                (None, true) => Some((g0, g1)),
                (Some(iv), false) => {
                    intervals.push(iv);
                    None
                }
                (None, false) => None,
            };
        }
        intervals.extend(open);
    }
    intervals.retain(|(lo, hi)| hi - lo >= min_len - 1e-12);
    intervals
}

/// Interior points whose divided second difference exceeds
/// `kink_threshold` and is a local maximum of that quantity.
pub fn detect_sudden_changes(result: &SweepResult, kink_threshold: f64) -> Vec<f64> {
    let mut changes = Vec::new();
    for seg in segments(result) {
        if seg.len() < 3 {
            continue;
        }
        // curvature[i] belongs to seg[i + 1]
        let curvature: Vec<f64> = seg
            .windows(3)
            .map(|w| {
                let ((g0, n0), (g1, n1), (g2, n2)) = (w[0], w[1], w[2]);
                let h0 = g1 - g0;
                let h1 = g2 - g1;
                (2.0 * ((n2 - n1) / h1 - (n1 - n0) / h0) / (h0 + h1)).abs()
            })
            .collect();
        for (i, &k) in curvature.iter().enumerate() {
            let left = if i > 0 { curvature[i - 1] } else { f64::NEG_INFINITY };
            let right = curvature.get(i + 1).copied().unwrap_or(f64::NEG_INFINITY);
            if k > kink_threshold && k > left && k >= right {
                changes.push(seg[i + 1].0);
            }
        }
    }
    changes
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhenomenonReport {
    pub sudden_death_gamma: Option<f64>,
    pub change_points: Vec<f64>,
    /// 1 is a single change, 2 a double change.
    pub change_count: usize,
    pub frozen_intervals: Vec<(f64, f64)>,
    pub monotone_decay: bool,
    /// γ values where the correlated map annihilated the state.
    pub gaps: Vec<f64>,
    pub thresholds: DetectorConfig,
}

impl PhenomenonReport {
    pub fn frozen_width(&self) -> f64 {
        self.frozen_intervals.iter().map(|(lo, hi)| hi - lo).fold(0.0, |a, b| a + b)
    }
}

impl std::fmt::Display for PhenomenonReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t = &self.thresholds;
        writeln!(
            f,
            "thresholds: zero_tol={:e} slope_eps={} min_len={} kink_threshold={}",
            t.zero_tol, t.slope_eps, t.min_len, t.kink_threshold
        )?;
        match self.sudden_death_gamma {
            Some(g) => writeln!(f, "sudden_death_gamma: {g}")?,
            None => writeln!(f, "sudden_death_gamma: none")?,
        }
        writeln!(f, "change_count: {}", self.change_count)?;
        writeln!(f, "change_points: {:?}", self.change_points)?;
        writeln!(f, "frozen_intervals: {:?}", self.frozen_intervals)?;
        writeln!(f, "monotone_decay: {}", self.monotone_decay)?;
        write!(f, "annihilation_gaps: {}", self.gaps.len())
    }
}

/// Non-increasing across valid samples (within `zero_tol`) with an overall
/// drop larger than `zero_tol`.
pub fn is_monotone_decay(result: &SweepResult, zero_tol: f64) -> bool {
    let points = valid_points(result);
    let (Some(first), Some(last)) = (points.first(), points.last()) else {
        return false;
    };
    points.windows(2).all(|w| w[1].1 <= w[0].1 + zero_tol) && first.1 - last.1 > zero_tol
}

pub fn classify_with(result: &SweepResult, cfg: &DetectorConfig) -> PhenomenonReport {
    let change_points = detect_sudden_changes(result, cfg.kink_threshold);
    PhenomenonReport {
        sudden_death_gamma: detect_sudden_death(result, cfg.zero_tol),
        change_count: change_points.len(),
        change_points,
        frozen_intervals: detect_frozen_intervals(result, cfg.slope_eps, cfg.min_len, cfg.zero_tol),
        monotone_decay: is_monotone_decay(result, cfg.zero_tol),
        gaps: result.gaps().collect(),
        thresholds: *cfg,
    }
}

pub fn classify_phenomena(result: &SweepResult) -> PhenomenonReport {
    classify_with(result, &DetectorConfig::default())
}
