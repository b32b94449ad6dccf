// The X state (-0.1, -0.2, -0.7) under correlated noise.
use gadent::analysis::uniform_grid;
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let state = make_bell_diagonal(-0.1, -0.2, -0.7)?;
    let rows = sweep_grid(&state, &uniform_grid(11), &uniform_grid(21), NoiseMode::Correlated)?;
    let mut peak: f64 = 0.0;
    for r in &rows {
        for s in &r.samples {
            peak = peak.max(s.negativity.unwrap_or(0.0));
        }
    }
    println!("initial N = {:.3e}", negativity(&fano_to_density(&state))?.clamped);
    println!("max N over 11x21 grid = {peak:.3e}");
    let report = classify_phenomena(&rows[5]);
    println!("p = {}\n{report}", rows[5].spec.p);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
