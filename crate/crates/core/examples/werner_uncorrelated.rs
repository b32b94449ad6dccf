use gadent::analysis::uniform_grid;
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let grid = uniform_grid(201);
    for &x in &[-1.0, -0.6, -0.34] {
        for &p in &[0.0, 0.5, 1.0] {
            let spec = SweepSpec::new(make_werner(x)?, p, NoiseMode::Uncorrelated).with_gamma_grid(grid.clone());
            let rep = classify_phenomena(&sweep_gamma(&spec)?);
            println!("x={x:5.2} p={p}: death at {:?}", rep.sudden_death_gamma);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
