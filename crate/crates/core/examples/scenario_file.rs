//! Builds a custom geometry with a relay mirror, round-trips it through the
//! JSON scenario format and shows the validation errors for broken files.
//!
//! ```sh
//! cargo run -p cosmic-bell --example scenario_file
//! ```

use std::error::Error;

use cosmic_bell::scenario::{load_scenario, Arm, Point3, Site, TracePath, DEFAULT_FRAME_NOTE};
use cosmic_bell::{speed_bound, Scenario};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let source = Point3::ORIGIN;
    let mirror = Point3::new(20e3, 15e3, 0.0);
    let far = Point3::new(40e3, 0.0, 0.0);
    let near = Point3::new(-2e3, 0.0, 0.0);
    let scenario = Scenario::new(
        "relay",
        Site::new("source", source),
        [
            Arm::new(Site::new("near", near), TracePath::straight(source, near)?),
            Arm::new(Site::new("far", far), TracePath::new(vec![source, mirror, far])?).with_tau(8e-12),
        ],
        DEFAULT_FRAME_NOTE,
    )?;
    let json = scenario.to_json();
    println!("{json}");

    let reloaded = load_scenario(&json)?;
    println!("arm lengths after reload: {:?}", reloaded.arm_lengths());
    println!("v_min/c = {:.4e}", speed_bound(&reloaded, None)?.v_min_over_c);

    let broken = json.replace("8e-12", "0.0");
    match load_scenario(&broken) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    let misplaced = json.replacen("40000.0", "45000.0", 1);
    match load_scenario(&misplaced) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
