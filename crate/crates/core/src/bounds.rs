//! Lower bounds on the speed of quantum correlations, configuration gain
//! factors, gravitational proper-time corrections and the enumeration of
//! a-priori speed/distance scales.

use serde::Serialize;
use thiserror::Error;

use crate::constants::{PhysicalConstants, C};
use crate::scenario::Scenario;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("{what} must be > 0, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("both proper-time corrections are zero; no cadence threshold exists")]
    NoCorrection,
    #[error("the list of exponents N is empty")]
    EmptyExponents,
    #[error("observation window must satisfy 0 < D_min < D_max, got [{0}, {1}]")]
    InvalidWindow(f64, f64),
}

fn positive(what: &'static str, value: f64) -> Result<f64, BoundError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(BoundError::NonPositive { what, value })
    }
}

/// Operational lower bound `v_min / c = 2·L_max / (τ·c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpeedBound {
    pub l_max_m: f64,
    pub tau_s: f64,
    pub v_min_over_c: f64,
}

impl SpeedBound {
    pub fn from_length(l_max_m: f64, tau_s: f64) -> Result<Self, BoundError> {
        let l_max_m = positive("L_max", l_max_m)?;
        let tau_s = positive("tau", tau_s)?;
        Ok(SpeedBound {
            l_max_m,
            tau_s,
            v_min_over_c: 2.0 * l_max_m / (tau_s * C),
        })
    }
}

/// Bound for a scenario. `tau_override` replaces the scenario's (largest)
/// measurement duration.
pub fn speed_bound(scenario: &Scenario, tau_override: Option<f64>) -> Result<SpeedBound, BoundError> {
    let tau = tau_override.unwrap_or_else(|| scenario.max_tau());
    SpeedBound::from_length(scenario.max_arm_length(), tau)
}

/// The bound obtained by dividing the straight-line detector separation by
/// τ, without the factor 2 or the trace-path rule.
pub fn straight_line_bound(scenario: &Scenario, tau_override: Option<f64>) -> Result<f64, BoundError> {
    let tau = positive("tau", tau_override.unwrap_or_else(|| scenario.max_tau()))?;
    Ok(scenario.detector_separation() / (tau * C))
}

/// Effective length for entanglement swapping: twice the longer of the two
/// source-mediated trajectories (A→source→B and C→source→D).
pub fn swapping_effective_length(path_ab_m: f64, path_cd_m: f64) -> Result<f64, BoundError> {
    let ab = positive("A-B trajectory length", path_ab_m)?;
    let cd = positive("C-D trajectory length", path_cd_m)?;
    Ok(2.0 * ab.max(cd))
}

/// `v_min / c = L_eff / (τ·c)` for a swapping experiment.
pub fn swapping_bound(path_ab_m: f64, path_cd_m: f64, tau_s: f64) -> Result<f64, BoundError> {
    let l_eff = swapping_effective_length(path_ab_m, path_cd_m)?;
    Ok(l_eff / (positive("tau", tau_s)? * C))
}

/// Ratio of the bounds of two scenarios, each at its own measurement duration.
pub fn gain_factor(new: &Scenario, reference: &Scenario) -> Result<f64, BoundError> {
    Ok(speed_bound(new, None)?.v_min_over_c / speed_bound(reference, None)?.v_min_over_c)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProperTimeFactor {
    pub alpha: f64,
    /// `1 − alpha = GM / (R·c²)`.
    pub correction: f64,
}

impl ProperTimeFactor {
    /// Builds a factor directly from a quoted correction `1 − α`.
    pub fn from_correction(correction: f64) -> Self {
        ProperTimeFactor {
            alpha: 1.0 - correction,
            correction,
        }
    }
}

pub fn proper_time_factor(gm: f64, radius: f64) -> Result<ProperTimeFactor, BoundError> {
    let gm = positive("GM", gm)?;
    let radius = positive("R", radius)?;
    Ok(ProperTimeFactor::from_correction(gm / (radius * C * C)))
}

pub fn earth_factor(k: &PhysicalConstants) -> ProperTimeFactor {
    proper_time_factor(k.gm_earth, k.r_earth).expect("constants are positive")
}

pub fn moon_factor(k: &PhysicalConstants) -> ProperTimeFactor {
    proper_time_factor(k.gm_moon, k.r_moon).expect("constants are positive")
}

/// Detection rate above which the proper-time correction matters:
/// `1 / max(correction_a, correction_b)`, photons/s.
pub fn cadence_threshold(a: ProperTimeFactor, b: ProperTimeFactor) -> Result<f64, BoundError> {
    let worst = a.correction.abs().max(b.correction.abs());
    if worst == 0.0 {
        return Err(BoundError::NoCorrection);
    }
    Ok(1.0 / worst)
}

/// Dimensionless `κ = G·m² / (ħ·c)`.
pub fn coupling_constant(mass_kg: f64, k: &PhysicalConstants) -> f64 {
    k.g * mass_kg * mass_kg / (k.hbar * k.c)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ObservationWindow {
    pub d_min_m: f64,
    pub d_max_m: f64,
}

impl ObservationWindow {
    pub fn new(d_min_m: f64, d_max_m: f64) -> Result<Self, BoundError> {
        if !(d_min_m > 0.0 && d_min_m < d_max_m && d_max_m.is_finite()) {
            return Err(BoundError::InvalidWindow(d_min_m, d_max_m));
        }
        Ok(ObservationWindow { d_min_m, d_max_m })
    }

    /// 1 cm up to ten Earth–Moon distances.
    pub fn earth_moon(k: &PhysicalConstants) -> Self {
        ObservationWindow {
            d_min_m: 1.0e-2,
            d_max_m: 10.0 * k.d_earth_moon_mean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleClass {
    Excluded,
    UnobservableAtEarthMoon,
    Observable,
}

impl ScaleClass {
    pub fn classify(d_m: f64, window: &ObservationWindow, planck_length: f64) -> Self {
        if d_m <= planck_length || d_m < window.d_min_m {
            ScaleClass::Excluded
        } else if d_m > window.d_max_m {
            ScaleClass::UnobservableAtEarthMoon
        } else {
            ScaleClass::Observable
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ScaleClass::Excluded => "excluded",
            ScaleClass::UnobservableAtEarthMoon => "unobservable_at_earth_moon",
            ScaleClass::Observable => "observable",
        }
    }
}

/// One a-priori (V, D) scale candidate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AprioriCandidate {
    pub label: String,
    /// Exponent of κ; absent for scales not built from κ (MOND).
    pub n: Option<i32>,
    /// `V / c`; `None` when infinite or not defined by the construction.
    pub v_over_c: Option<f64>,
    pub v_infinite: bool,
    pub d_m: f64,
    pub classification: ScaleClass,
}

/// Scales built from `V ∈ {κᴺ·c, ∞}` and `D = κᴺ·base_length`.
///
/// The infinite-speed row is emitted once, with the `N = 0` entry, since
/// multiplying ∞ by κᴺ adds nothing new.
pub fn apriori_scales(
    exponents: &[i32],
    mass_kg: f64,
    window: &ObservationWindow,
    base_length_m: f64,
    k: &PhysicalConstants,
) -> Result<Vec<AprioriCandidate>, BoundError> {
    if exponents.is_empty() {
        return Err(BoundError::EmptyExponents);
    }
    positive("mass", mass_kg)?;
    positive("base length", base_length_m)?;
    let kappa = coupling_constant(mass_kg, k);
    let mut rows = Vec::new();
    for &n in exponents {
        let scale = kappa.powi(n);
        let d_m = scale * base_length_m;
        let classification = ScaleClass::classify(d_m, window, k.planck_length);
        rows.push(AprioriCandidate {
            label: format!("N={n}"),
            n: Some(n),
            v_over_c: Some(scale),
            v_infinite: false,
            d_m,
            classification,
        });
        if n == 0 {
            rows.push(AprioriCandidate {
                label: "N=0,V=inf".into(),
                n: Some(0),
                v_over_c: None,
                v_infinite: true,
                d_m,
                classification,
            });
        }
    }
    Ok(rows)
}

/// The MOND acceleration scale expressed as a distance, ~10 kpc.
pub fn mond_candidate(window: &ObservationWindow, k: &PhysicalConstants) -> AprioriCandidate {
    let d_m = 10.0 * k.kpc;
    AprioriCandidate {
        label: "MOND".into(),
        n: None,
        v_over_c: None,
        v_infinite: false,
        d_m,
        classification: ScaleClass::classify(d_m, window, k.planck_length),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{preset, Point3, Preset};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const K: PhysicalConstants = PhysicalConstants::STANDARD;

    #[test]
    fn preset_bounds() {
        // 2·L_max/(τ·c) evaluated by hand.
        let gisin = speed_bound(&preset("gisin1999").unwrap(), None).unwrap();
        assert_relative_eq!(gisin.v_min_over_c, 10_600.0 / 5e-12 / C, max_relative = 1e-12);
        assert_relative_eq!(gisin.v_min_over_c, 7.072e6, max_relative = 5e-3);
        let cao = speed_bound(&preset("cao2017").unwrap(), None).unwrap();
        assert_relative_eq!(cao.v_min_over_c, 9.34e8, max_relative = 5e-3);
        let moon = speed_bound(&preset("earth_moon_case3").unwrap(), None).unwrap();
        assert_relative_eq!(moon.v_min_over_c, 5.13e11, max_relative = 5e-3);
    }

    #[test]
    fn tau_override_halves_bound() {
        let s = preset("gisin1999").unwrap();
        let b = speed_bound(&s, Some(10e-12)).unwrap();
        assert_relative_eq!(b.v_min_over_c, 3.536e6, max_relative = 1e-3);
        assert!(speed_bound(&s, Some(0.0)).is_err());
    }

    #[test]
    fn swapping_examples() {
        assert_eq!(swapping_effective_length(100e3, 100e3).unwrap(), 200e3);
        assert_relative_eq!(swapping_effective_length(10.6e3, 21.2e3).unwrap(), 42.4e3);
        assert!(swapping_effective_length(0.0, 1.0).is_err());
        assert!(swapping_effective_length(1.0, -1.0).is_err());
        assert_relative_eq!(swapping_bound(5.3e3, 5.3e3, 5e-12).unwrap(), 7.072e6, max_relative = 5e-3);
    }

    #[test]
    fn gain_factors() {
        let case3 = Preset::EarthMoonCase3.build();
        let cao = Preset::Cao2017.build();
        assert_relative_eq!(gain_factor(&case3, &cao).unwrap(), 384_400.0 / 700.0, max_relative = 1e-9);
        assert_eq!(gain_factor(&cao, &cao).unwrap(), 1.0);
        let mars = gain_factor(&Preset::Mars.build(), &case3).unwrap();
        assert!((500.0..=2000.0).contains(&mars), "{mars}");
    }

    #[test]
    fn proper_time_examples() {
        let earth = proper_time_factor(3.986e14, 6.371e6).unwrap();
        assert_relative_eq!(earth.correction, 6.96e-10, max_relative = 1e-3);
        assert_relative_eq!(earth.alpha + earth.correction, 1.0);
        let moon = proper_time_factor(4.905e12, 1.737e6).unwrap();
        assert_relative_eq!(moon.correction, 3.14e-11, max_relative = 1e-3);
        let flat = proper_time_factor(1e-30, 1.0).unwrap();
        assert_relative_eq!(flat.alpha, 1.0);
        assert!(proper_time_factor(0.0, 1.0).is_err());
    }

    #[test]
    fn cadence_examples() {
        let quoted = cadence_threshold(ProperTimeFactor::from_correction(0.08), ProperTimeFactor::from_correction(0.0031)).unwrap();
        assert_relative_eq!(quoted, 12.5, max_relative = 1e-12);
        let computed = cadence_threshold(earth_factor(&K), moon_factor(&K)).unwrap();
        assert_relative_eq!(computed, 1.0 / 6.96e-10, max_relative = 2e-3);
        let x = ProperTimeFactor::from_correction(0.25);
        assert_eq!(cadence_threshold(x, x).unwrap(), 4.0);
        let zero = ProperTimeFactor::from_correction(0.0);
        assert_eq!(cadence_threshold(zero, zero), Err(BoundError::NoCorrection));
    }

    #[test]
    fn kappa_for_proton() {
        assert_relative_eq!(coupling_constant(K.m_proton, &K), 5.906e-39, max_relative = 1e-3);
    }

    #[test]
    fn apriori_default_rows() {
        let w = ObservationWindow::earth_moon(&K);
        let rows = apriori_scales(&[-1, 0, 1], K.m_proton, &w, K.planck_length, &K).unwrap();
        assert_eq!(rows.len(), 4);
        let n0 = &rows[1];
        assert_eq!(n0.v_over_c, Some(1.0));
        assert_eq!(n0.d_m, K.planck_length);
        assert_eq!(n0.classification, ScaleClass::Excluded);
        assert!(rows[2].v_infinite);
        assert_eq!(rows[3].classification, ScaleClass::Excluded);
        // κ⁻¹·ℓ_P lands at a few kilometres, inside the lunar window.
        assert_relative_eq!(rows[0].d_m, K.planck_length / coupling_constant(K.m_proton, &K), max_relative = 1e-12);
        assert_eq!(rows[0].classification, ScaleClass::Observable);
        assert_eq!(mond_candidate(&w, &K).classification, ScaleClass::UnobservableAtEarthMoon);
    }

    #[test]
    fn apriori_with_centimetre_base_matches_quoted_orders() {
        // D = κ^{±1} cm: both ends fall outside the lunar window.
        let w = ObservationWindow::earth_moon(&K);
        let rows = apriori_scales(&[-1, 1], K.m_proton, &w, 1e-2, &K).unwrap();
        assert_eq!(rows[0].classification, ScaleClass::UnobservableAtEarthMoon);
        assert_eq!(rows[1].classification, ScaleClass::Excluded);
        assert!(rows.iter().all(|r| r.classification != ScaleClass::Observable));
    }

    #[test]
    fn apriori_errors() {
        let w = ObservationWindow::earth_moon(&K);
        assert_eq!(apriori_scales(&[], K.m_proton, &w, K.planck_length, &K), Err(BoundError::EmptyExponents));
        assert!(ObservationWindow::new(1.0, 1.0).is_err());
        let electron = apriori_scales(&[1], K.m_electron, &w, K.planck_length, &K).unwrap();
        assert_relative_eq!(electron[0].v_over_c.unwrap(), coupling_constant(K.m_electron, &K));
    }

    proptest! {
        #[test]
        fn scaling_law(k in 1e-3f64..1e3, tau_k in 1e-3f64..1e3) {
            let s = Preset::Cao2017.build();
            let base = speed_bound(&s, None).unwrap().v_min_over_c;
            let scaled = s.map_points(|p| p.scaled(k)).unwrap();
            let sb = speed_bound(&scaled, None).unwrap().v_min_over_c;
            prop_assert!((sb / (base * k) - 1.0).abs() <= 1e-12);
            let st = speed_bound(&s, Some(s.max_tau() * tau_k)).unwrap().v_min_over_c;
            prop_assert!((st * tau_k / base - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn bound_dominates_sum_of_arms(x in 1.0f64..1e9, y in 1.0f64..1e9) {
            let s = crate::scenario::Scenario::new(
                "t",
                crate::scenario::Site::new("s", Point3::ORIGIN),
                [
                    crate::scenario::Arm::new(crate::scenario::Site::new("a", Point3::new(-x, 0.0, 0.0)),
                        crate::scenario::TracePath::straight(Point3::ORIGIN, Point3::new(-x, 0.0, 0.0)).unwrap()),
                    crate::scenario::Arm::new(crate::scenario::Site::new("b", Point3::new(0.0, y, 0.0)),
                        crate::scenario::TracePath::straight(Point3::ORIGIN, Point3::new(0.0, y, 0.0)).unwrap()),
                ],
                "",
            ).unwrap();
            let b = speed_bound(&s, None).unwrap();
            prop_assert!(2.0 * b.l_max_m >= s.arm_lengths().iter().sum::<f64>());
        }

        #[test]
        fn gain_is_reciprocal(i in 0usize..7, j in 0usize..7) {
            let a = Preset::ALL[i].build();
            let b = Preset::ALL[j].build();
            let prod = gain_factor(&a, &b).unwrap() * gain_factor(&b, &a).unwrap();
            prop_assert!((prod - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn correction_monotone(gm in 1e6f64..1e20, r in 1e3f64..1e9, f in 1.001f64..10.0) {
            let base = proper_time_factor(gm, r).unwrap().correction;
            prop_assert!(proper_time_factor(gm * f, r).unwrap().correction > base);
            prop_assert!(proper_time_factor(gm, r * f).unwrap().correction < base);
        }

        #[test]
        fn classification_total(d in -80.0f64..40.0) {
            let w = ObservationWindow::earth_moon(&K);
            let d_m = 10f64.powf(d);
            let c1 = ScaleClass::classify(d_m, &w, K.planck_length);
            let c2 = ScaleClass::classify(d_m, &w, K.planck_length);
            prop_assert_eq!(c1, c2);
            let in_window = d_m > K.planck_length && d_m >= w.d_min_m && d_m <= w.d_max_m;
            prop_assert_eq!(c1 == ScaleClass::Observable, in_window);
        }
    }
}
