//! Speed-of-correlation bounds for every built-in geometry.
//!
//! ```sh
//! cargo run -p cosmic-bell --example bound_presets
//! ```

use std::error::Error;

use cosmic_bell::bounds::{gain_factor, speed_bound, straight_line_bound};
use cosmic_bell::discrepancy::claims_for;
use cosmic_bell::Preset;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cao = Preset::Cao2017.build();
    println!("{:<18} {:>12} {:>12} {:>14} {:>14} {:>10}", "preset", "arm0 [m]", "arm1 [m]", "v_min/c", "straight/c", "vs cao");
    for p in Preset::ALL {
        let s = p.build();
        let [l0, l1] = s.arm_lengths();
        let b = speed_bound(&s, None)?;
        println!(
            "{:<18} {:>12.4e} {:>12.4e} {:>14.4e} {:>14.4e} {:>10.2}",
            p.name(),
            l0,
            l1,
            b.v_min_over_c,
            straight_line_bound(&s, None)?,
            gain_factor(&s, &cao)?
        );
    }

    println!("\nquoted gain claims:");
    for p in Preset::ALL {
        for c in claims_for(p) {
            println!(
                "  {:<26} quoted {:>7} computed {:>9.2}  {}",
                c.claim_id,
                c.quoted,
                c.computed,
                if c.holds { "holds" } else { "does not hold" }
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
