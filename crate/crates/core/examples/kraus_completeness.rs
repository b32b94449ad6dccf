use gadent::*;

pub fn run() -> std::result::Result<(), Box<dyn std::error::Error>> {
    for &(p, g) in &[(0.0, 0.0), (0.3, 0.5), (1.0, 1.0), (0.7, 0.25)] {
        let params = ChannelParams::new(p, g)?;
        let k = gad_kraus_set(params)?;
        let literal = KrausSet::paper_literal(params);
        println!(
            "p={p} gamma={g}: defect {:.2e}, without sqrt(gamma) in U1 {:.2e}",
            k.completeness_defect, literal.completeness_defect
        );
    }
    match ChannelParams::new(1.2, 0.5) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("accepted p=1.2?"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
