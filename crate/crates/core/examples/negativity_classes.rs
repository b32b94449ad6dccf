// Negativity across the Bell-diagonal family at c1 = -0.5.
use gadent::analysis::uniform_grid;
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let grid: Vec<f64> = uniform_grid(11).iter().map(|u| u - 1.0).collect();
    for &c2 in &grid {
        let row: Vec<String> = grid
            .iter()
            .map(|&c3| match make_bell_diagonal(-0.5, c2, c3) {
                Ok(s) => format!("{:5.2}", negativity(&fano_to_density(&s)).unwrap().clamped),
                Err(_) => "    .".to_string(),
            })
            .collect();
        println!("c2={c2:5.2} {}", row.join(" "));
    }
    let singlet = make_werner(-1.0)?;
    let n = negativity(&fano_to_density(&singlet))?;
    println!("singlet: N = {:.12}, trace-form = {:.12}", n.clamped, negativity_paper_eq3(&singlet.c));
    let mixed = make_werner(-0.2)?;
    println!("werner -0.2: N = {:.12}", negativity(&fano_to_density(&mixed))?.clamped);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
