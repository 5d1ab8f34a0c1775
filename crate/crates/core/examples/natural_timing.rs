//! Why measurement timing matters: with a lunar source and detectors that
//! fire as soon as their photons arrive, the nearby measurement happens
//! 1.28 s before the terrestrial one, and even a light-speed influence gets
//! there in time. Equalising the start times restores the large bound.
//!
//! ```sh
//! cargo run -p cosmic-bell --example natural_timing
//! ```

use std::error::Error;

use cosmic_bell::bell::ChshSettings;
use cosmic_bell::sim::{arm_timings, critical_speed, simulate, CollapseModel, Departure, Fallback, Femtos, SimConfig};
use cosmic_bell::Preset;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let natural = Preset::EarthMoonCase3.build();
    let equalized = natural.with_equalized_starts();

    for s in [&natural, &equalized] {
        let t = arm_timings(s, Femtos(0));
        println!("{}", s.name());
        for (i, arm) in t.iter().enumerate() {
            println!("  arm {i}: start {:>22} fs  end {:>22} fs", arm.measure_start.0, arm.measure_end.0);
        }
        let v = critical_speed(s, Departure::MeasureStart);
        println!("  critical speed v*/c = {v:.12e}");
        let r = simulate(
            s,
            &CollapseModel::new(1.5, Fallback::Lhv)?,
            &ChshSettings::default(),
            &SimConfig::new(50_000, 3),
        )?;
        println!("  at v = 1.5c: connected {:.0}%  S = {:.3} ± {:.3}", 100.0 * r.fraction_connected, r.estimate.s_hat, r.estimate.stderr_s);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
