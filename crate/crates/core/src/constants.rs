//! Physical constants used throughout the crate (SI units).

/// Speed of light in vacuum, m/s (exact by definition of the metre).
pub const C: f64 = 299_792_458.0;

/// Default measurement duration: 2.5 ps timing uncertainty + 2.5 ps detector response.
pub const DEFAULT_TAU_S: f64 = 5.0e-12;

/// Timing-uncertainty half of [`DEFAULT_TAU_S`].
pub const TIMING_UNCERTAINTY_S: f64 = 2.5e-12;

/// Detector-response half of [`DEFAULT_TAU_S`].
pub const DETECTOR_RESPONSE_S: f64 = 2.5e-12;

/// Femtoseconds per second.
pub const FS_PER_S: f64 = 1.0e15;

/// The full set of constants a computation depends on.
///
/// All fields are strictly positive. [`PhysicalConstants::STANDARD`] carries
/// CODATA 2018 / IAU reference values; alternative sets can be built for
/// sensitivity studies, but `c` is fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub c: f64,
    pub g: f64,
    pub hbar: f64,
    pub gm_earth: f64,
    pub gm_moon: f64,
    pub r_earth: f64,
    pub r_moon: f64,
    pub m_proton: f64,
    pub m_electron: f64,
    /// Mean Earth–Moon centre distance.
    pub d_earth_moon_mean: f64,
    /// Rounded Earth–Moon distance quoted in the proposal abstract.
    pub d_earth_moon_quoted: f64,
    pub kpc: f64,
    pub planck_length: f64,
}

impl PhysicalConstants {
    pub const STANDARD: PhysicalConstants = PhysicalConstants {
        c: C,
        g: 6.674_30e-11,
        hbar: 1.054_571_817e-34,
        gm_earth: 3.986_004_418e14,
        gm_moon: 4.904_869_5e12,
        r_earth: 6.371_0e6,
        r_moon: 1.737_4e6,
        m_proton: 1.672_621_923_69e-27,
        m_electron: 9.109_383_701_5e-31,
        d_earth_moon_mean: 3.844e8,
        d_earth_moon_quoted: 3.9e8,
        kpc: 3.085_677_581_491_367e19,
        planck_length: 1.616_255e-35,
    };

    pub fn all_positive(&self) -> bool {
        [
            self.c,
            self.g,
            self.hbar,
            self.gm_earth,
            self.gm_moon,
            self.r_earth,
            self.r_moon,
            self.m_proton,
            self.m_electron,
            self.d_earth_moon_mean,
            self.d_earth_moon_quoted,
            self.kpc,
            self.planck_length,
        ]
        .iter()
        .all(|v| v.is_finite() && *v > 0.0)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::STANDARD
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_constants_are_positive() {
        assert!(PhysicalConstants::STANDARD.all_positive());
        assert_eq!(PhysicalConstants::STANDARD.c, 299_792_458.0);
    }

    #[test]
    fn planck_length_matches_its_definition() {
        let k = PhysicalConstants::STANDARD;
        let lp = (k.hbar * k.g / k.c.powi(3)).sqrt();
        assert!((lp - k.planck_length).abs() / lp < 1e-5);
    }

    #[test]
    fn default_tau_is_sum_of_components() {
        assert_eq!(TIMING_UNCERTAINTY_S + DETECTOR_RESPONSE_S, DEFAULT_TAU_S);
    }
}
