//! Sweeps the collapse speed across the critical value of a symmetric
//! Earth–Moon experiment and writes the S-versus-speed curve as CSV.
//!
//! ```sh
//! cargo run -p cosmic-bell --release --example speed_sweep [out.csv]
//! ```

use std::error::Error;

use cosmic_bell::bell::ChshSettings;
use cosmic_bell::sim::{critical_speed, sweep_speed, Departure, Fallback, SimConfig, SpeedGrid};
use cosmic_bell::Scenario;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let scenario = Scenario::symmetric("symmetric earth-moon", 3.844e8, 5e-12)?;
    let v_star = critical_speed(&scenario, Departure::MeasureStart);
    let grid = SpeedGrid { min: v_star / 10.0, max: v_star * 10.0, points: 12, log_spaced: true }.values()?;
    let curve = sweep_speed(
        &scenario,
        Fallback::Lhv,
        Departure::MeasureStart,
        &ChshSettings::default(),
        &grid,
        &SimConfig::new(20_000, 42),
    )?;

    println!("critical speed v*/c = {v_star:.4e}");
    for p in &curve.points {
        let marker = if p.fraction_connected == 1.0 { "quantum" } else { "fallback" };
        println!("v/c = {:>10.3e}  S = {:.3} ± {:.3}  ({marker})", p.v_over_c, p.s_hat, p.stderr_s);
    }
    if let Some((lo, hi)) = curve.transition_bracket() {
        println!("transition between {lo:.4e} and {hi:.4e}");
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, curve.to_csv())?;
        println!("wrote {path}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
