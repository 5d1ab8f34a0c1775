//! Link budget for an Earth–Moon Bell test: loss scaled from a 500 km
//! satellite link, required sample size, and integration time.
//!
//! ```sh
//! cargo run -p cosmic-bell --example link_budget
//! ```

use std::error::Error;
use std::f64::consts::SQRT_2;

use cosmic_bell::bounds::{cadence_threshold, earth_factor, moon_factor, ProperTimeFactor};
use cosmic_bell::constants::PhysicalConstants;
use cosmic_bell::link::{budget, geometric_loss_db, pairs_for_significance, LinkSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k = PhysicalConstants::STANDARD;
    let extra = geometric_loss_db(500e3, k.d_earth_moon_mean)?;
    println!("extra geometric loss 500 km -> {:.0} km: {extra:.2} dB", k.d_earth_moon_mean / 1e3);

    let plan = pairs_for_significance(2.0 * SQRT_2, 3.0)?;
    println!("3σ violation needs {} pairs per setting ({} total)", plan.pairs_per_setting, plan.total_pairs);

    let quoted = cadence_threshold(ProperTimeFactor::from_correction(0.08), ProperTimeFactor::from_correction(0.0031))?;
    let physical = cadence_threshold(earth_factor(&k), moon_factor(&k))?;
    println!("cadence threshold: {quoted} /s from quoted corrections, {physical:.3e} /s from constants");

    // A 30 dB satellite-class link at 500 km and a lossless local arm.
    let far = LinkSpec::new(k.d_earth_moon_mean, 500e3, 30.0, 0.6)?;
    let near = LinkSpec::new(1e3, 1e3, 1.0, 0.6)?;
    for pair_rate in [1e6, 1e8, 1e10] {
        let r = budget(pair_rate, [far, near], &plan, quoted)?;
        println!(
            "pair rate {pair_rate:>8.0e}/s: losses {:.1}/{:.1} dB, {:.3e} coincidences/s, {:.3e} s, cadence flag {}",
            r.losses_db[0], r.losses_db[1], r.coincidence_rate, r.integration_time_s, r.cadence_flag
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
