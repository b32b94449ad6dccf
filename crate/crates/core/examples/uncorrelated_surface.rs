use gadent::analysis::uniform_grid;
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let state = make_werner(-0.8)?;
    let rows = sweep_grid(&state, &uniform_grid(21), &uniform_grid(41), NoiseMode::Uncorrelated)?;
    let mut deaths = 0;
    let mut frozen = 0;
    let mut double = 0;
    for r in &rows {
        let rep = classify_phenomena(r);
        deaths += rep.sudden_death_gamma.is_some() as usize;
        frozen += !rep.frozen_intervals.is_empty() as usize;
        double += (rep.change_count >= 2) as usize;
    }
    println!("{} curves: {deaths} with death, {frozen} with frozen parts, {double} with double changes", rows.len());
    let corner = &rows[0].samples;
    println!("p=0: N(0)={:.4} N(1)={:.4}", corner[0].negativity.unwrap(), corner[40].negativity.unwrap());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
