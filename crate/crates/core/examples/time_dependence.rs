use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let rho = fano_to_density(&make_werner(-0.8)?);
    for i in 0..=8 {
        let t = i as f64 * 0.5;
        let g = gamma_of_time(1.0, t);
        let k = gad_kraus_set(ChannelParams::new(0.4, g)?)?;
        let out = apply_uncorrelated(&rho, &k, &k)?;
        println!("t={t:.1} gamma={g:.4} N={:.5}", negativity(&out)?.clamped);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
