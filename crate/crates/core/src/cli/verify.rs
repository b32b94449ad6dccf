//! Self-check suite: CPTP, round trips, eigen/closed-form agreement, and an
//! informational census of the closed-form coefficient formulas.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{formula_discrepancy, uniform_grid, NoiseMode};
use crate::channel::{
    apply_correlated, apply_uncorrelated, correlated_unnormalized, gad_kraus_set, ChannelParams, KrausSet,
};
use crate::entanglement::{
    hermitian_eigenvalues, negativity, negativity_closed_form_bell_diagonal, negativity_paper_eq3,
    partial_transpose_second,
};
use crate::fano::{
    density_to_fano, fano_to_density, make_bell_diagonal, make_werner, validate_density, PHYSICAL_TOL,
};
use crate::sampling::{random_density, random_product_state};

pub const SEED: u64 = 0x6761_6465_6e74;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyLevel {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub level: VerifyLevel,
    /// Wire in the uncorrected Kraus set instead of the canonical one.
    pub paper_literal_kraus: bool,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    /// Informational checks never fail the suite.
    pub hard: bool,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub level: VerifyLevel,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn hard_failures(&self) -> usize {
        self.checks.iter().filter(|c| c.hard && !c.passed).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify level={:?} seed={:#x}", self.level, self.seed)?;
        for c in &self.checks {
            let tag = match (c.hard, c.passed) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, _) => "INFO",
            };
            writeln!(f, "[{tag}] {}: {}", c.name, c.detail)?;
        }
        write!(f, "hard failures: {}", self.hard_failures())
    }
}

struct Suite {
    opts: VerifyOptions,
    checks: Vec<Check>,
}

impl Suite {
    fn hard(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.into(), hard: true, passed, detail });
    }

    fn info(&mut self, name: &str, detail: String) {
        self.checks.push(Check { name: name.into(), hard: false, passed: true, detail });
    }

    fn kraus(&self, p: f64, gamma: f64) -> KrausSet {
        let params = ChannelParams::new(p, gamma).expect("grid parameters in range");
        if self.opts.paper_literal_kraus {
            KrausSet::paper_literal(params)
        } else {
            gad_kraus_set(params).expect("valid parameters")
        }
    }

    fn n(&self, fast: usize, full: usize) -> usize {
        match self.opts.level {
            VerifyLevel::Fast => fast,
            VerifyLevel::Full => full,
        }
    }
}

pub fn run_verify(opts: VerifyOptions) -> VerifyReport {
    let mut suite = Suite { opts, checks: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    // Kraus completeness
    let steps = suite.n(11, 101);
    let mut worst: f64 = 0.0;
    for p in uniform_grid(steps) {
        for g in uniform_grid(steps) {
            worst = worst.max(suite.kraus(p, g).completeness_defect);
        }
    }
    suite.hard("kraus completeness", worst < 1e-12, format!("max defect {worst:.3e} on {steps}x{steps} (p,gamma) grid"));

    // Channel properties on random physical states
    let cases = suite.n(100, 1000);
    let (mut trace_dev, mut min_eig, mut identity_dev, mut norm_dev) = (0.0f64, f64::INFINITY, 0.0f64, 0.0f64);
    let mut failures = 0usize;
    for i in 0..cases {
        let rho = random_density(&mut rng);
        let p = (i % 11) as f64 / 10.0;
        let g = ((i * 7) % 11) as f64 / 10.0;
        let k = suite.kraus(p, g);
        let k0 = suite.kraus(p, 0.0);
        match apply_uncorrelated(&rho, &k, &k) {
            Ok(out) => {
                trace_dev = trace_dev.max((out.m.trace().re - 1.0).abs());
                min_eig = min_eig.min(validate_density(&out, PHYSICAL_TOL).min_eigenvalue);
            }
            Err(_) => failures += 1,
        }
        match apply_correlated(&rho, &k) {
            Ok(out) => min_eig = min_eig.min(validate_density(&out, PHYSICAL_TOL).min_eigenvalue),
            Err(_) => failures += 1,
        }
        for out in [apply_uncorrelated(&rho, &k0, &k0), apply_correlated(&rho, &k0)] {
            match out {
                Ok(out) => identity_dev = identity_dev.max(out.m.max_abs_diff(&rho.m)),
                Err(_) => failures += 1,
            }
        }
        let tr = correlated_unnormalized(&rho, &k0).trace().re;
        norm_dev = norm_dev.max((tr - (p * p + (1.0 - p) * (1.0 - p))).abs());
    }
    suite.hard(
        "channel application",
        failures == 0,
        format!("{failures} rejected applications over {cases} random states"),
    );
    suite.hard("trace preservation (uncorrelated)", failures == 0 && trace_dev < 1e-12, format!("max |tr-1| {trace_dev:.3e}"));
    suite.hard("positivity preservation", failures == 0 && min_eig >= -1e-9, format!("min eigenvalue {min_eig:.3e}"));
    suite.hard("identity at gamma=0", failures == 0 && identity_dev < 1e-12, format!("max deviation {identity_dev:.3e}"));
    suite.hard("correlated trace at gamma=0", norm_dev < 1e-12, format!("max |tr R - p^2-(1-p)^2| {norm_dev:.3e}"));

    // Fano round trip
    let mut rt: f64 = 0.0;
    for _ in 0..cases {
        let rho = random_density(&mut rng);
        let f = density_to_fano(&rho, PHYSICAL_TOL).expect("Hermitian by construction");
        rt = rt.max(fano_to_density(&f).m.max_abs_diff(&rho.m));
    }
    suite.hard("fano round trip", rt < 1e-12, format!("max deviation {rt:.3e} over {cases} states"));

    // Eigen vs closed-form negativity on a Bell-diagonal grid
    let m = suite.n(11, 21);
    let (mut dev, mut count): (f64, usize) = (0.0, 0);
    for c1 in uniform_grid(m) {
        for c2 in uniform_grid(m) {
            for c3 in uniform_grid(m) {
                let (c1, c2, c3) = (2.0 * c1 - 1.0, 2.0 * c2 - 1.0, 2.0 * c3 - 1.0);
                let Ok(state) = make_bell_diagonal(c1, c2, c3) else { continue };
                let cf = negativity_closed_form_bell_diagonal(c1, c2, c3).expect("physical");
                let eig = negativity(&fano_to_density(&state)).expect("eigensolver");
                dev = dev.max((cf.raw - eig.raw).abs());
                count += 1;
            }
        }
    }
    suite.hard("closed-form negativity", dev < 1e-10, format!("max |closed - eigen| {dev:.3e} over {count} physical points of {m}^3"));

    // Eigensolver trace identity and partial transpose involution
    let mut tr_dev: f64 = 0.0;
    let mut involution = true;
    for _ in 0..cases {
        let rho = random_density(&mut rng);
        let pt = partial_transpose_second(&rho.m, PHYSICAL_TOL).expect("Hermitian");
        involution &= partial_transpose_second(&pt, PHYSICAL_TOL).expect("Hermitian") == rho.m;
        let s = hermitian_eigenvalues(&pt, PHYSICAL_TOL).expect("eigensolver");
        tr_dev = tr_dev.max((s.sum() - pt.trace().re).abs());
    }
    suite.hard("eigenvalue sum = trace", tr_dev < 1e-10, format!("max deviation {tr_dev:.3e}"));
    suite.hard("partial transpose involution", involution, "exact".into());

    let mut sep: f64 = 0.0;
    for _ in 0..cases {
        sep = sep.max(negativity(&random_product_state(&mut rng)).expect("eigensolver").clamped);
    }
    suite.hard("product states separable", sep < 1e-10, format!("max negativity {sep:.3e}"));

    // Informational census of the closed-form coefficient formulas.
    let xstate = make_bell_diagonal(-0.1, -0.2, -0.7).expect("physical");
    let rho = fano_to_density(&xstate);
    for mode in [NoiseMode::Correlated, NoiseMode::Uncorrelated] {
        let mut worst: f64 = 0.0;
        let mut points = 0;
        for p in uniform_grid(21) {
            for g in uniform_grid(21) {
                let params = ChannelParams::new(p, g).expect("grid");
                let k = gad_kraus_set(params).expect("grid");
                let out = match mode {
                    NoiseMode::Correlated => apply_correlated(&rho, &k),
                    NoiseMode::Uncorrelated => apply_uncorrelated(&rho, &k, &k),
                };
                if let Ok(out) = out {
                    if let Ok(d) = formula_discrepancy(&xstate, &out, params, mode) {
                        worst = worst.max(d);
                        points += 1;
                    }
                }
            }
        }
        suite.info(
            &format!("closed-form coefficients ({mode})"),
            format!("max |c_oracle - c_formula| {worst:.3e} over {points} points"),
        );
    }
    let w = make_werner(-0.5).expect("physical");
    suite.info(
        "quadratic negativity formula",
        format!(
            "werner x=-0.5: quadratic {:.4}, eigen {:.4}",
            negativity_paper_eq3(&w.c),
            negativity(&fano_to_density(&w)).expect("eigensolver").raw
        ),
    );
    let out = apply_correlated(&rho, &gad_kraus_set(ChannelParams::new(0.1, 0.5).expect("valid")).expect("valid"))
        .expect("physical");
    let f = density_to_fano(&out, PHYSICAL_TOL).expect("Hermitian");
    suite.info(
        "correlated Bloch closure",
        format!("p=0.1 gamma=0.5 output s_z={:.4} t_z={:.4}", f.s[2], f.t[2]),
    );

    VerifyReport { seed: SEED, level: opts.level, checks: suite.checks }
}
