//! Prints every quoted figure next to the value the implemented formulas give.
//!
//! ```sh
//! cargo run -p cosmic-bell --example discrepancy_ledger > ledger.csv
//! ```

use std::error::Error;

use cosmic_bell::discrepancy::{ledger, to_csv};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    print!("{}", to_csv(&ledger()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
