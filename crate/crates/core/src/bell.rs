//! Polarization correlation models and the CHSH combination.
//!
//! Two closed-form models are provided:
//!
//! * quantum: maximally entangled polarization pairs, `E(a, b) = cos 2(a − b)`;
//! * local hidden variable: both photons carry a shared hidden polarization
//!   λ, uniform on `[0, π)`, and each analyzer answers `+1` iff λ lies within
//!   π/4 of its axis. This yields the sawtooth `E = 1 − 4Δ/π`, Δ being the
//!   analyzer angle difference folded into `[0, π/2]`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Polarization analyzer orientation, radians, canonicalized into `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(into = "f64", try_from = "f64")]
pub struct AnalyzerAngle(f64);

impl AnalyzerAngle {
    /// Returns `None` for non-finite input.
    pub fn new(theta: f64) -> Option<Self> {
        if !theta.is_finite() {
            return None;
        }
        let mut t = theta.rem_euclid(PI);
        // rem_euclid can round up to exactly π for tiny negative inputs.
        if t >= PI {
            t = 0.0;
        }
        Some(AnalyzerAngle(t))
    }

    pub fn from_degrees(deg: f64) -> Option<Self> {
        Self::new(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl From<AnalyzerAngle> for f64 {
    fn from(a: AnalyzerAngle) -> f64 {
        a.0
    }
}

impl TryFrom<f64> for AnalyzerAngle {
    type Error = String;

    fn try_from(v: f64) -> Result<Self, Self::Error> {
        AnalyzerAngle::new(v).ok_or_else(|| format!("analyzer angle must be finite, got {v}"))
    }
}

/// The four analyzer orientations of a CHSH test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChshSettings {
    pub a: AnalyzerAngle,
    pub a_prime: AnalyzerAngle,
    pub b: AnalyzerAngle,
    pub b_prime: AnalyzerAngle,
}

impl ChshSettings {
    pub fn new(a: f64, a_prime: f64, b: f64, b_prime: f64) -> Option<Self> {
        Some(ChshSettings {
            a: AnalyzerAngle::new(a)?,
            a_prime: AnalyzerAngle::new(a_prime)?,
            b: AnalyzerAngle::new(b)?,
            b_prime: AnalyzerAngle::new(b_prime)?,
        })
    }

    /// The four `(alice, bob)` pairs, indexed as [`SettingPair`].
    pub fn pairs(&self) -> [(AnalyzerAngle, AnalyzerAngle); 4] {
        [
            (self.a, self.b),
            (self.a, self.b_prime),
            (self.a_prime, self.b),
            (self.a_prime, self.b_prime),
        ]
    }
}

impl Default for ChshSettings {
    /// a = 0, a′ = π/4, b = π/8, b′ = 3π/8.
    fn default() -> Self {
        ChshSettings::new(0.0, FRAC_PI_4, FRAC_PI_8, 3.0 * FRAC_PI_8).expect("finite")
    }
}

/// Index into [`ChshSettings::pairs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SettingPair {
    AB = 0,
    ABPrime = 1,
    APrimeB = 2,
    APrimeBPrime = 3,
}

impl SettingPair {
    pub const ALL: [SettingPair; 4] = [
        SettingPair::AB,
        SettingPair::ABPrime,
        SettingPair::APrimeB,
        SettingPair::APrimeBPrime,
    ];

    /// Sign of this pair's term in the CHSH sum.
    pub fn chsh_sign(self) -> f64 {
        match self {
            SettingPair::ABPrime => -1.0,
            _ => 1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SettingPair::AB => "a,b",
            SettingPair::ABPrime => "a,b'",
            SettingPair::APrimeB => "a',b",
            SettingPair::APrimeBPrime => "a',b'",
        }
    }
}

/// Joint probabilities of the outcome pairs `(++, +−, −+, −−)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDistribution {
    pub p_pp: f64,
    pub p_pm: f64,
    pub p_mp: f64,
    pub p_mm: f64,
}

impl OutcomeDistribution {
    /// Symmetric, unbiased table with correlation `e`.
    pub fn from_correlation(e: f64) -> Self {
        let same = (1.0 + e) / 4.0;
        let diff = (1.0 - e) / 4.0;
        OutcomeDistribution {
            p_pp: same,
            p_pm: diff,
            p_mp: diff,
            p_mm: same,
        }
    }

    /// Independent fair coins.
    pub const UNCORRELATED: OutcomeDistribution = OutcomeDistribution {
        p_pp: 0.25,
        p_pm: 0.25,
        p_mp: 0.25,
        p_mm: 0.25,
    };

    pub fn correlation(&self) -> f64 {
        self.p_pp + self.p_mm - self.p_pm - self.p_mp
    }

    pub fn total(&self) -> f64 {
        self.p_pp + self.p_pm + self.p_mp + self.p_mm
    }

    /// Maps a uniform draw `u ∈ [0, 1)` to an outcome pair.
    pub fn outcome_for(&self, u: f64) -> (i8, i8) {
        if u < self.p_pp {
            (1, 1)
        } else if u < self.p_pp + self.p_pm {
            (1, -1)
        } else if u < self.p_pp + self.p_pm + self.p_mp {
            (-1, 1)
        } else {
            (-1, -1)
        }
    }
}

/// Closed-form correlation models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrelationModel {
    Quantum,
    Lhv,
}

impl CorrelationModel {
    pub fn correlation(self, a: AnalyzerAngle, b: AnalyzerAngle) -> f64 {
        match self {
            CorrelationModel::Quantum => quantum_correlation(a, b),
            CorrelationModel::Lhv => lhv_correlation(a, b),
        }
    }
}

impl fmt::Display for CorrelationModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorrelationModel::Quantum => "quantum",
            CorrelationModel::Lhv => "lhv",
        })
    }
}

impl FromStr for CorrelationModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quantum" => Ok(CorrelationModel::Quantum),
            "lhv" => Ok(CorrelationModel::Lhv),
            other => Err(format!("unknown correlation model `{other}`")),
        }
    }
}

pub fn quantum_correlation(a: AnalyzerAngle, b: AnalyzerAngle) -> f64 {
    (2.0 * (a.0 - b.0)).cos()
}

/// Angle difference folded into `[0, π/2]` using the analyzer period π.
fn folded_difference(a: AnalyzerAngle, b: AnalyzerAngle) -> f64 {
    let d = (a.0 - b.0).abs().rem_euclid(PI);
    if d > FRAC_PI_2 {
        PI - d
    } else {
        d
    }
}

pub fn lhv_correlation(a: AnalyzerAngle, b: AnalyzerAngle) -> f64 {
    1.0 - 4.0 * folded_difference(a, b) / PI
}

pub fn outcome_distribution(model: CorrelationModel, a: AnalyzerAngle, b: AnalyzerAngle) -> OutcomeDistribution {
    match model {
        CorrelationModel::Quantum => {
            let d = a.0 - b.0;
            let same = d.cos().powi(2) / 2.0;
            let diff = d.sin().powi(2) / 2.0;
            OutcomeDistribution {
                p_pp: same,
                p_pm: diff,
                p_mp: diff,
                p_mm: same,
            }
        }
        CorrelationModel::Lhv => OutcomeDistribution::from_correlation(lhv_correlation(a, b)),
    }
}

/// `S = E(a,b) − E(a,b′) + E(a′,b) + E(a′,b′)`.
pub fn chsh_value<F>(correlation: F, settings: &ChshSettings) -> f64
where
    F: Fn(AnalyzerAngle, AnalyzerAngle) -> f64,
{
    SettingPair::ALL
        .iter()
        .zip(settings.pairs())
        .map(|(pair, (x, y))| pair.chsh_sign() * correlation(x, y))
        .sum()
}

/// The combination with the fourth term subtracted instead of added, as it
/// is sometimes printed. Kept only for the discrepancy ledger.
pub fn chsh_alternating_sign<F>(correlation: F, settings: &ChshSettings) -> f64
where
    F: Fn(AnalyzerAngle, AnalyzerAngle) -> f64,
{
    correlation(settings.a, settings.b) - correlation(settings.a, settings.b_prime)
        + correlation(settings.a_prime, settings.b)
        - correlation(settings.a_prime, settings.b_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::SQRT_2;

    fn ang(x: f64) -> AnalyzerAngle {
        AnalyzerAngle::new(x).unwrap()
    }

    #[test]
    fn canonicalization() {
        assert_eq!(ang(PI).radians(), 0.0);
        assert_abs_diff_eq!(ang(-FRAC_PI_4).radians(), 3.0 * FRAC_PI_4, epsilon = 1e-15);
        assert_abs_diff_eq!(AnalyzerAngle::from_degrees(22.5).unwrap().radians(), FRAC_PI_8, epsilon = 1e-15);
        assert!(AnalyzerAngle::new(f64::INFINITY).is_none());
        assert!(ang(-1e-300).radians() < PI);
    }

    #[test]
    fn quantum_examples() {
        assert_abs_diff_eq!(quantum_correlation(ang(0.0), ang(0.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(quantum_correlation(ang(0.0), ang(FRAC_PI_4)), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(quantum_correlation(ang(0.0), ang(FRAC_PI_8)), SQRT_2 / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn lhv_examples() {
        assert_abs_diff_eq!(lhv_correlation(ang(0.0), ang(0.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(lhv_correlation(ang(0.0), ang(FRAC_PI_8)), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(lhv_correlation(ang(0.0), ang(3.0 * FRAC_PI_8)), -0.5, epsilon = 1e-15);
        // Folding: π − π/8 behaves like π/8.
        assert_abs_diff_eq!(lhv_correlation(ang(0.0), ang(7.0 * FRAC_PI_8)), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn distribution_examples() {
        let q0 = outcome_distribution(CorrelationModel::Quantum, ang(0.0), ang(0.0));
        assert_abs_diff_eq!(q0.p_pp, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(q0.p_pm, 0.0, epsilon = 1e-15);
        let q = outcome_distribution(CorrelationModel::Quantum, ang(0.0), ang(FRAC_PI_8));
        assert_abs_diff_eq!(q.p_pp, 0.42678, epsilon = 1e-5);
        assert_abs_diff_eq!(q.p_pm, 0.07322, epsilon = 1e-5);
        let l = outcome_distribution(CorrelationModel::Lhv, ang(0.0), ang(FRAC_PI_8));
        assert_eq!((l.p_pp, l.p_pm, l.p_mp, l.p_mm), (0.375, 0.125, 0.125, 0.375));
    }

    #[test]
    fn chsh_examples() {
        let s = ChshSettings::default();
        assert_abs_diff_eq!(chsh_value(quantum_correlation, &s), 2.0 * SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(chsh_value(lhv_correlation, &s), 2.0, epsilon = 1e-12);
        assert_eq!(chsh_value(|_, _| 0.0, &s), 0.0);
        assert_abs_diff_eq!(chsh_alternating_sign(quantum_correlation, &s), SQRT_2, epsilon = 1e-12);
    }

    /// Quadrature over the hidden polarization: the sign-rule model must
    /// reproduce the closed-form sawtooth.
    #[test]
    fn lhv_sawtooth_matches_hidden_variable_quadrature() {
        let answer = |axis: f64, lambda: f64| if (2.0 * (axis - lambda)).cos() >= 0.0 { 1.0 } else { -1.0 };
        let steps = 200_000;
        for &(a, b) in &[(0.0, 0.0), (0.0, FRAC_PI_8), (0.0, 3.0 * FRAC_PI_8), (0.3, 2.9), (1.1, 0.2)] {
            let mean: f64 = (0..steps)
                .map(|i| {
                    let lambda = (i as f64 + 0.5) * PI / steps as f64;
                    answer(a, lambda) * answer(b, lambda)
                })
                .sum::<f64>()
                / steps as f64;
            assert_abs_diff_eq!(mean, lhv_correlation(ang(a), ang(b)), epsilon = 1e-4);
        }
    }

    #[test]
    fn random_settings_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let s = ChshSettings::new(
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
            )
            .unwrap();
            assert!(chsh_value(lhv_correlation, &s).abs() <= 2.0 + 1e-9);
            assert!(chsh_value(quantum_correlation, &s).abs() <= 2.0 * SQRT_2 + 1e-9);
        }
        for _ in 0..100_000 {
            let (a, b) = (ang(rng.random_range(-10.0..10.0)), ang(rng.random_range(-10.0..10.0)));
            assert!(quantum_correlation(a, b).abs() <= 1.0);
            assert!(lhv_correlation(a, b).abs() <= 1.0 + 1e-15);
        }
    }

    proptest! {
        #[test]
        fn tables_are_unbiased_and_consistent(a in -10.0f64..10.0, b in -10.0f64..10.0) {
            let (a, b) = (ang(a), ang(b));
            for model in [CorrelationModel::Quantum, CorrelationModel::Lhv] {
                let d = outcome_distribution(model, a, b);
                prop_assert!(d.p_pp >= 0.0 && d.p_pm >= 0.0 && d.p_mp >= 0.0 && d.p_mm >= 0.0);
                prop_assert!((d.total() - 1.0).abs() <= 1e-12);
                prop_assert!((d.p_pp + d.p_pm - 0.5).abs() <= 1e-12);
                prop_assert!((d.correlation() - model.correlation(a, b)).abs() <= 1e-12);
            }
        }
    }
}
