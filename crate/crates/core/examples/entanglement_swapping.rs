//! Bound for an entanglement-swapping chain: twice the longer of the two
//! source-mediated trajectories, divided by τ·c.
//!
//! ```sh
//! cargo run -p cosmic-bell --example entanglement_swapping
//! ```

use std::error::Error;

use cosmic_bell::bounds::{swapping_bound, swapping_effective_length};
use cosmic_bell::constants::DEFAULT_TAU_S;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (ab, cd) in [(100e3, 100e3), (10.6e3, 21.2e3), (3.844e8, 1e3)] {
        println!(
            "A-B {:>10.3e} m, C-D {:>10.3e} m -> L_eff {:>10.3e} m, v_min/c {:.4e}",
            ab,
            cd,
            swapping_effective_length(ab, cd)?,
            swapping_bound(ab, cd, DEFAULT_TAU_S)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
