//! Generalized amplitude damping (GAD) Kraus sets and their two-qubit
//! application with correlated and uncorrelated noise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fano::{ensure_physical, DensityMatrix4, PHYSICAL_TOL};
use crate::linalg::{Mat2, Mat4, IDENTITY2};

/// Maximum completeness defect accepted when applying a Kraus set.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Below this trace the correlated map cannot be renormalized.
pub const ANNIHILATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub p: f64,
    pub gamma: f64,
}

impl ChannelParams {
    pub fn new(p: f64, gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ParameterOutOfRange { name: "p", value: p, range: "[0, 1]" });
        }
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::ParameterOutOfRange { name: "gamma", value: gamma, range: "[0, 1]" });
        }
        Ok(Self { p, gamma })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    pub ops: Vec<Mat2>,
    pub params: ChannelParams,
    pub completeness_defect: f64,
}

impl KrausSet {
    pub fn from_ops(ops: Vec<Mat2>, params: ChannelParams) -> Self {
        let completeness_defect = completeness_defect(&ops);
        Self { ops, params, completeness_defect }
    }

    /// The uncorrected variant where the second operator lacks its √γ factor. Not trace preserving; kept for
    /// demonstrating the completeness check.
    pub fn paper_literal(params: ChannelParams) -> Self {
        let ChannelParams { p, gamma } = params;
        let mut ops = canonical_ops(p, gamma);
        ops[1] = Mat2::from_real([[0.0, 1.0], [0.0, 0.0]]).scale(p.sqrt());
        Self::from_ops(ops.to_vec(), params)
    }

    fn ensure_complete(&self) -> Result<()> {
        if self.completeness_defect < COMPLETENESS_TOL {
            Ok(())
        } else {
            Err(Error::IncompleteKraus { defect: self.completeness_defect })
        }
    }
}

fn canonical_ops(p: f64, gamma: f64) -> [Mat2; 4] {
    let sp = p.sqrt();
    let sq = (1.0 - p).sqrt();
    let keep = (1.0 - gamma).sqrt();
    let jump = gamma.sqrt();
    [
        Mat2::from_real([[1.0, 0.0], [0.0, keep]]).scale(sp),
        Mat2::from_real([[0.0, jump], [0.0, 0.0]]).scale(sp),
        Mat2::from_real([[keep, 0.0], [0.0, 1.0]]).scale(sq),
        Mat2::from_real([[0.0, 0.0], [jump, 0.0]]).scale(sq),
    ]
}

/// Canonical trace-preserving GAD set:
/// U0 = √p(|0⟩⟨0| + √(1−γ)|1⟩⟨1|), U1 = √(pγ)|0⟩⟨1|,
/// U2 = √(1−p)(√(1−γ)|0⟩⟨0| + |1⟩⟨1|), U3 = √((1−p)γ)|1⟩⟨0|.
pub fn gad_kraus_set(params: ChannelParams) -> Result<KrausSet> {
    let params = ChannelParams::new(params.p, params.gamma)?;
    Ok(KrausSet::from_ops(canonical_ops(params.p, params.gamma).to_vec(), params))
}

/// Max-norm of Σ U†U − I.
pub fn completeness_defect(ops: &[Mat2]) -> f64 {
    let sum = ops.iter().fold(Mat2::zeros(), |acc, u| acc + u.adjoint() * *u);
    (sum - IDENTITY2).max_abs()
}

/// γ = 1 − exp(−γ₀ t).
pub fn gamma_of_time(gamma0: f64, t: f64) -> f64 {
    -(-gamma0 * t).exp_m1()
}

fn check_inputs(rho: &DensityMatrix4, sets: &[&KrausSet]) -> Result<()> {
    ensure_physical(rho, PHYSICAL_TOL)?;
    sets.iter().try_for_each(|k| k.ensure_complete())
}

/// Σᵢⱼ (Uₐ⁽ⁱ⁾⊗U_b⁽ʲ⁾) ρ (Uₐ⁽ⁱ⁾⊗U_b⁽ʲ⁾)†.
pub fn apply_uncorrelated(rho: &DensityMatrix4, ka: &KrausSet, kb: &KrausSet) -> Result<DensityMatrix4> {
    check_inputs(rho, &[ka, kb])?;
    let mut out = Mat4::zeros();
    for ua in &ka.ops {
        for ub in &kb.ops {
            out = out + rho.m.conjugate_by(&ua.kron(ub));
        }
    }
    Ok(DensityMatrix4::from_matrix(out))
}

/// R = Σᵢ (U⁽ⁱ⁾⊗U⁽ⁱ⁾) ρ (U⁽ⁱ⁾⊗U⁽ⁱ⁾)† before renormalization.
pub fn correlated_unnormalized(rho: &DensityMatrix4, k: &KrausSet) -> Mat4 {
    k.ops
        .iter()
        .fold(Mat4::zeros(), |acc, u| acc + rho.m.conjugate_by(&u.kron(u)))
}

/// Same-index Kraus action on both qubits, renormalized by tr(R) since the
/// diagonal sum does not preserve the trace.
pub fn apply_correlated(rho: &DensityMatrix4, k: &KrausSet) -> Result<DensityMatrix4> {
    check_inputs(rho, &[k])?;
    let r = correlated_unnormalized(rho, k);
    let trace = r.trace().re;
    if trace <= ANNIHILATION_TOL {
        return Err(Error::ChannelAnnihilation { trace });
    }
    Ok(DensityMatrix4::from_matrix(r.scale(1.0 / trace)))
}

/// Output correlations from the closed-form coefficient formulas.
#[derive(Debug, Clone, PartialEq)]
pub struct PaperCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub aux: Vec<(&'static str, f64)>,
}

impl PaperCoefficients {
    fn assemble(b: [f64; 8], names: [&'static str; 8]) -> Self {
        let c1 = b[1] + b[2] + b[6] + b[7];
        Self {
            c1,
            c2: -c1,
            c3: (b[0] + b[5]) - (b[3] + b[4]),
            aux: names.into_iter().zip(b).collect(),
        }
    }

    pub fn triple(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Max |cᵢ − otherᵢ|.
    pub fn max_deviation(&self, other: [f64; 3]) -> f64 {
        self.triple()
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Correlated-noise coefficients B1..B8 transcribed literally, including
/// the additive `+ γ(1−p)` that closes B3. Assembled as c1 = B2+B3+B7+B8,
/// c2 = −c1, c3 = (B1+B6) − (B4+B5).
pub fn paper_correlated_coefficients(c: [f64; 3], params: ChannelParams) -> PaperCoefficients {
    let [cxx, cyy, czz] = c;
    let ChannelParams { p, gamma: g } = params;
    let q = 1.0 - p;
    let k = 1.0 - g;
    let b1 = (1.0 + czz) / 4.0 * (p * p + q * q * k * k);
    let b2 = (cxx - cyy) / 4.0 * (k * q * q + p * p * (2.0 - g));
    let b3 = (cxx - cyy) / 4.0 * k * (p * p + q * q) + g * q;
    let b4 = (1.0 - czz) / 4.0 * k * (p * p + q * q);
    let b5 = b4;
    let b6 = (1.0 + czz) / 4.0 * (p * p * k * k + q * q);
    let b7 = (czz + cyy) / 4.0 * (p * p * k * k + k * q * q);
    let b8 = b7;
    PaperCoefficients::assemble(
        [b1, b2, b3, b4, b5, b6, b7, b8],
        ["B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8"],
    )
}

/// Uncorrelated-noise coefficients B̃1..B̃8, transcribed literally and
/// assembled with the same recipe as the correlated case. The unbalanced
/// parenthesis in B̃5 is read as √(1−γ)·(γ + p(1−γ)); the `c1`, `c2` appearing
/// inside B̃7 and B̃8 are taken to be the input cxx, cyy.
pub fn paper_uncorrelated_coefficients(c: [f64; 3], params: ChannelParams) -> PaperCoefficients {
    let [cxx, cyy, czz] = c;
    let ChannelParams { p, gamma: g } = params;
    let q = 1.0 - p;
    let k = 1.0 - g;
    let rk = k.sqrt();
    let minus = (cxx - cyy) / 4.0;
    let plus = (cxx + cyy) / 4.0;
    let b1 = (1.0 + czz) / 4.0 * (p + q * k).powi(2);
    let b2 = (1.0 - czz) / 4.0 * (k * (p * p + q * q) + p * q * (1.0 + k * k));
    let b3 = b2;
    let b4 = (1.0 + czz) / 4.0 * (p * p * k * k + q * q + p * q * k) + minus * g * g * q * q;
    let b5 = minus * rk * (g + p * k) + plus * k * ((2.0 * p - 1.0) + p * q * (2.0 + g));
    let b6 = minus * rk * (p * p + g * q * q + p * q * (1.0 + g)) + plus * (k + g * p * q);
    let b7 = minus * k * (1.0 + p * p) + (cxx + cyy) / 2.0 * p * rk;
    let b8 = minus * k * (p * p + p - 1.0) + (cxx + cyy) / 2.0 * g * rk * q;
    PaperCoefficients::assemble(
        [b1, b2, b3, b4, b5, b6, b7, b8],
        ["~B1", "~B2", "~B3", "~B4", "~B5", "~B6", "~B7", "~B8"],
    )
}
