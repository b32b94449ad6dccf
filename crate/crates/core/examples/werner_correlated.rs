use gadent::analysis::uniform_grid;
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    for &x in &[-1.0, -0.6, -0.34, -0.03] {
        let state = make_werner(x)?;
        let spec = SweepSpec::new(state, 0.3, NoiseMode::Correlated).with_gamma_grid(uniform_grid(101));
        let res = sweep_gamma(&spec)?;
        let report = classify_phenomena(&res);
        let at_half = res.samples[50].negativity;
        println!(
            "x={x:5.2}: N(0)={:.4} N(0.5)={:?} death={:?} gaps={}",
            res.samples[0].negativity.unwrap_or(f64::NAN),
            at_half,
            report.sudden_death_gamma,
            report.gaps.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
