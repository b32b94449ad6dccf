// Compare the closed-form coefficient expressions with the Kraus evolution.
use gadent::analysis::{evolve, uniform_grid};
use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let c = [-0.5, -0.5, -0.5];
    let rho = fano_to_density(&make_werner(-0.5)?);
    let mut worst = [0.0f64; 2];
    let mut agree = [0usize; 2];
    let grid = uniform_grid(11);
    for &p in &grid {
        for &g in &grid {
            let params = ChannelParams::new(p, g)?;
            for (i, mode) in [NoiseMode::Correlated, NoiseMode::Uncorrelated].into_iter().enumerate() {
                let formula = match mode {
                    NoiseMode::Correlated => paper_correlated_coefficients(c, params),
                    NoiseMode::Uncorrelated => paper_uncorrelated_coefficients(c, params),
                };
                let Ok(out) = evolve(&rho, params, mode) else { continue };
                let f = density_to_fano(&out, 1e-9)?;
                let d = formula.max_deviation([f.c[0][0], f.c[1][1], f.c[2][2]]);
                worst[i] = worst[i].max(d);
                agree[i] += (d < 1e-8) as usize;
            }
        }
    }
    println!("correlated: {}/121 agree, worst {:.3e}", agree[0], worst[0]);
    println!("uncorrelated: {}/121 agree, worst {:.3e}", agree[1], worst[1]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
