//! Closed-form CHSH values for the quantum and hidden-variable models, and
//! a direct hidden-polarization sampler that reproduces the sawtooth.
//!
//! ```sh
//! cargo run -p cosmic-bell --example chsh_models
//! ```

use std::error::Error;
use std::f64::consts::PI;

use cosmic_bell::bell::{chsh_value, lhv_correlation, outcome_distribution, quantum_correlation, AnalyzerAngle, ChshSettings, CorrelationModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let settings = ChshSettings::default();
    println!("S quantum = {:.6}", chsh_value(quantum_correlation, &settings));
    println!("S lhv     = {:.6}", chsh_value(lhv_correlation, &settings));

    println!("\n{:>8} {:>10} {:>10} {:>12}", "Δ [deg]", "E quantum", "E lhv", "E sampled");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = AnalyzerAngle::new(0.0).ok_or("angle")?;
    for deg in (0..=90).step_by(15) {
        let b = AnalyzerAngle::from_degrees(deg as f64).ok_or("angle")?;
        // Each photon answers +1 iff the shared hidden polarization lies
        // within 45° of its analyzer.
        let answer = |axis: f64, lambda: f64| if (2.0 * (axis - lambda)).cos() >= 0.0 { 1.0 } else { -1.0 };
        let n = 200_000;
        let sampled: f64 = (0..n)
            .map(|_| {
                let lambda = rng.random_range(0.0..PI);
                answer(a.radians(), lambda) * answer(b.radians(), lambda)
            })
            .sum::<f64>()
            / n as f64;
        println!("{:>8} {:>10.4} {:>10.4} {:>12.4}", deg, quantum_correlation(a, b), lhv_correlation(a, b), sampled);
    }

    let d = outcome_distribution(CorrelationModel::Quantum, settings.a, settings.b);
    println!("\nquantum table at (0, π/8): ++ {:.5}  +- {:.5}  -+ {:.5}  -- {:.5}", d.p_pp, d.p_pm, d.p_mp, d.p_mm);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
