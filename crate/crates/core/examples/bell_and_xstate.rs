// Singlet and X state side by side, both noise models.
use gadent::analysis::uniform_grid;
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let states = [("singlet", make_werner(-1.0)?), ("x-state", make_bell_diagonal(-0.1, -0.2, -0.7)?)];
    for (name, state) in &states {
        for mode in [NoiseMode::Correlated, NoiseMode::Uncorrelated] {
            let rows = sweep_grid(state, &[0.1, 0.2, 0.3], &uniform_grid(51), mode)?;
            for r in &rows {
                let rep = classify_phenomena(r);
                println!(
                    "{name} {mode} p={}: death={:?} changes={} frozen={:.3} monotone={}",
                    r.spec.p,
                    rep.sudden_death_gamma,
                    rep.change_count,
                    rep.frozen_width(),
                    rep.monotone_decay
                );
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
