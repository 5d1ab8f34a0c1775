//! Candidate speed and distance scales built from fundamental constants,
//! classified against what an Earth–Moon experiment could observe.
//!
//! ```sh
//! cargo run -p cosmic-bell --example apriori_scales
//! ```

use std::error::Error;

use cosmic_bell::bounds::{apriori_scales, coupling_constant, mond_candidate, ObservationWindow};
use cosmic_bell::constants::PhysicalConstants;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k = PhysicalConstants::STANDARD;
    let window = ObservationWindow::earth_moon(&k);
    for (label, mass) in [("proton", k.m_proton), ("electron", k.m_electron)] {
        println!("{label}: κ = {:.4e}", coupling_constant(mass, &k));
        let mut rows = apriori_scales(&[-2, -1, 0, 1, 2], mass, &window, k.planck_length, &k)?;
        rows.push(mond_candidate(&window, &k));
        for r in rows {
            let v = match (r.v_infinite, r.v_over_c) {
                (true, _) => "inf".to_string(),
                (false, Some(v)) => format!("{v:.3e}"),
                (false, None) => "-".to_string(),
            };
            println!("  {:<10} V/c {:>11}  D {:>11.3e} m  {}", r.label, v, r.d_m, r.classification.as_str());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
