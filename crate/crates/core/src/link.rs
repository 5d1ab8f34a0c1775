//! Free-space link budget and sample-size planning for a Bell violation.
//!
//! Only the geometric (beam divergence versus receiver aperture) loss is
//! scaled with distance, as L⁻²; everything else is folded into a single
//! reference loss measured at a reference length.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinkError {
    #[error("{what} must be > 0, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("{what} must be >= 0, got {value}")]
    Negative { what: &'static str, value: f64 },
    #[error("detector efficiency must lie in (0, 1], got {0}")]
    Efficiency(f64),
    #[error("expected S = {0} does not exceed the classical bound 2; nothing to detect")]
    NoViolation(f64),
    #[error("expected S = {0} exceeds the algebraic maximum 4")]
    Unphysical(f64),
}

fn positive(what: &'static str, value: f64) -> Result<f64, LinkError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(LinkError::NonPositive { what, value })
    }
}

fn non_negative(what: &'static str, value: f64) -> Result<f64, LinkError> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(LinkError::Negative { what, value })
    }
}

fn efficiency(value: f64) -> Result<f64, LinkError> {
    if value > 0.0 && value <= 1.0 {
        Ok(value)
    } else {
        Err(LinkError::Efficiency(value))
    }
}

/// Extra loss, dB, from stretching a link from `reference_length` to `length`.
pub fn geometric_loss_db(reference_length: f64, length: f64) -> Result<f64, LinkError> {
    let r = positive("reference length", reference_length)?;
    let l = positive("length", length)?;
    Ok(20.0 * (l / r).log10())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkSpec {
    pub length_m: f64,
    pub reference_length_m: f64,
    /// Total loss at the reference length, dB.
    pub reference_loss_db: f64,
    pub detector_efficiency: f64,
}

impl LinkSpec {
    pub fn new(length_m: f64, reference_length_m: f64, reference_loss_db: f64, detector_efficiency: f64) -> Result<Self, LinkError> {
        Ok(LinkSpec {
            length_m: positive("length", length_m)?,
            reference_length_m: positive("reference length", reference_length_m)?,
            reference_loss_db: non_negative("reference loss", reference_loss_db)?,
            detector_efficiency: efficiency(detector_efficiency)?,
        })
    }

    /// Reference loss plus the L⁻² scaling to `length_m`.
    pub fn total_loss_db(&self) -> f64 {
        self.reference_loss_db + 20.0 * (self.length_m / self.reference_length_m).log10()
    }
}

/// Sample size giving a `k_sigma` separation between the expected S and 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignificancePlan {
    pub s_expected: f64,
    pub classical_bound: f64,
    pub k_sigma: f64,
    pub pairs_per_setting: u64,
    pub total_pairs: u64,
    /// `(S − 2) / σ` at the chosen sample size.
    pub achieved_sigma: f64,
}

/// Standard error of Ŝ with `n` pairs per setting and `|E| = s/4` on each.
pub fn chsh_stderr(s_expected: f64, pairs_per_setting: u64) -> f64 {
    let e = s_expected / 4.0;
    (4.0 * (1.0 - e * e) / pairs_per_setting as f64).sqrt()
}

/// Smallest `n` per setting with `(S − 2) / sqrt(Σ (1 − Eᵢ²)/n) ≥ k_sigma`,
/// the four `|Eᵢ|` being `S/4` (√2/2 at the quantum maximum). Never below 1.
pub fn pairs_for_significance(s_expected: f64, k_sigma: f64) -> Result<SignificancePlan, LinkError> {
    if !(s_expected > 2.0) {
        return Err(LinkError::NoViolation(s_expected));
    }
    if s_expected > 4.0 {
        return Err(LinkError::Unphysical(s_expected));
    }
    let k = positive("k_sigma", k_sigma)?;
    let margin = s_expected - 2.0;
    let e = s_expected / 4.0;
    let variance_sum = 4.0 * (1.0 - e * e);
    let sigma_at = |n: u64| margin / chsh_stderr(s_expected, n);
    let mut n = ((variance_sum * k * k / (margin * margin)).ceil() as u64).max(1);
    // Guard the ceiling against rounding at exact integers.
    while n > 1 && sigma_at(n - 1) >= k {
        n -= 1;
    }
    while sigma_at(n) < k {
        n += 1;
    }
    Ok(SignificancePlan {
        s_expected,
        classical_bound: 2.0,
        k_sigma: k,
        pairs_per_setting: n,
        total_pairs: 4 * n,
        achieved_sigma: sigma_at(n),
    })
}

/// Coincidences/s after both arms' losses and detector efficiencies.
pub fn coincidence_rate(pair_rate: f64, loss_a_db: f64, loss_b_db: f64, eff_a: f64, eff_b: f64) -> Result<f64, LinkError> {
    let rate = positive("pair rate", pair_rate)?;
    let la = non_negative("loss A", loss_a_db)?;
    let lb = non_negative("loss B", loss_b_db)?;
    Ok(rate * 10f64.powf(-la / 10.0) * 10f64.powf(-lb / 10.0) * efficiency(eff_a)? * efficiency(eff_b)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegrationPlan {
    pub integration_time_s: f64,
    pub rate: f64,
    pub cadence_threshold: f64,
    /// The detection cadence is at or above the proper-time threshold.
    pub correction_applies: bool,
}

/// Time to collect `total_pairs` coincidences at `rate`, annotated against a
/// proper-time cadence threshold (photons/s).
pub fn integration_time(rate: f64, total_pairs: u64, cadence_threshold: f64) -> Result<IntegrationPlan, LinkError> {
    let rate = positive("rate", rate)?;
    Ok(IntegrationPlan {
        integration_time_s: total_pairs as f64 / rate,
        rate,
        cadence_threshold,
        correction_applies: rate >= cadence_threshold,
    })
}

/// Budget report payload.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BudgetReport {
    pub losses_db: [f64; 2],
    pub coincidence_rate: f64,
    pub pairs_required: u64,
    pub pairs_per_setting: u64,
    pub integration_time_s: f64,
    pub cadence_flag: bool,
    pub cadence_threshold: f64,
}

pub fn budget(
    pair_rate: f64,
    arms: [LinkSpec; 2],
    plan: &SignificancePlan,
    cadence_threshold: f64,
) -> Result<BudgetReport, LinkError> {
    let losses_db = arms.map(|a| a.total_loss_db());
    let rate = coincidence_rate(
        pair_rate,
        losses_db[0].max(0.0),
        losses_db[1].max(0.0),
        arms[0].detector_efficiency,
        arms[1].detector_efficiency,
    )?;
    let t = integration_time(rate, plan.total_pairs, cadence_threshold)?;
    Ok(BudgetReport {
        losses_db,
        coincidence_rate: rate,
        pairs_required: plan.total_pairs,
        pairs_per_setting: plan.pairs_per_setting,
        integration_time_s: t.integration_time_s,
        cadence_flag: t.correction_applies,
        cadence_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::SQRT_2;

    #[test]
    fn geometric_loss_examples() {
        assert!((geometric_loss_db(500e3, 384_400e3).unwrap() - 57.72).abs() <= 0.01);
        assert_eq!(geometric_loss_db(7.0, 7.0).unwrap(), 0.0);
        assert_relative_eq!(geometric_loss_db(3.0, 30.0).unwrap(), 20.0, max_relative = 1e-12);
        assert!(geometric_loss_db(0.0, 1.0).is_err());
        assert!(geometric_loss_db(1.0, -1.0).is_err());
    }

    #[test]
    fn significance_examples() {
        // ceil(2·k² / (2√2 − 2)²)
        let three = pairs_for_significance(2.0 * SQRT_2, 3.0).unwrap();
        assert_eq!(three.pairs_per_setting, 27);
        assert_eq!(three.total_pairs, 108);
        assert!(three.achieved_sigma >= 3.0);
        assert_eq!(pairs_for_significance(2.0 * SQRT_2, 1.0).unwrap().pairs_per_setting, 3);
        assert_eq!(pairs_for_significance(2.0 * SQRT_2, 1e-9).unwrap().pairs_per_setting, 1);
        assert_eq!(pairs_for_significance(2.0, 3.0).unwrap_err(), LinkError::NoViolation(2.0));
        assert!(pairs_for_significance(2.5, 0.0).is_err());
    }

    #[test]
    fn rate_examples() {
        assert_eq!(coincidence_rate(1e6, 0.0, 0.0, 1.0, 1.0).unwrap(), 1e6);
        assert_relative_eq!(coincidence_rate(1e6, 30.0, 30.0, 1.0, 1.0).unwrap(), 1.0, max_relative = 1e-12);
        let loss = geometric_loss_db(500e3, 384_400e3).unwrap();
        assert_relative_eq!(coincidence_rate(1e6, loss, 0.0, 1.0, 1.0).unwrap(), 1.69, max_relative = 2e-3);
        assert!(coincidence_rate(1e6, 0.0, 0.0, 1.5, 1.0).is_err());
        assert!(coincidence_rate(0.0, 0.0, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn integration_examples() {
        assert_eq!(integration_time(1.0, 108, 12.5).unwrap().integration_time_s, 108.0);
        let flagged = integration_time(12.5, 108, 12.5).unwrap();
        assert_relative_eq!(flagged.integration_time_s, 8.64);
        assert!(flagged.correction_applies);
        assert!(!integration_time(1.0, 108, 12.5).unwrap().correction_applies);
        assert_eq!(integration_time(1e6, 1_000_000, 12.5).unwrap().integration_time_s, 1.0);
        assert!(integration_time(0.0, 1, 12.5).is_err());
    }

    #[test]
    fn budget_report_combines_arms() {
        let far = LinkSpec::new(384_400e3, 500e3, 30.0, 0.5).unwrap();
        let near = LinkSpec::new(1e3, 1e3, 3.0, 0.5).unwrap();
        let plan = pairs_for_significance(2.0 * SQRT_2, 3.0).unwrap();
        let r = budget(1e9, [far, near], &plan, 12.5).unwrap();
        assert_relative_eq!(r.losses_db[0], 30.0 + 57.7165, max_relative = 1e-4);
        assert_relative_eq!(r.coincidence_rate, 1e9 * 10f64.powf(-(r.losses_db[0] + 3.0) / 10.0) * 0.25, max_relative = 1e-12);
        assert_eq!(r.pairs_required, 108);
    }

    /// Binomial replicates of the full estimator at the planned sample size.
    #[test]
    fn planned_sample_size_violates_in_most_replicates() {
        let plan = pairs_for_significance(2.0 * SQRT_2, 3.0).unwrap();
        let e = SQRT_2 / 2.0;
        let signs = [1.0, -1.0, 1.0, 1.0];
        let truth = [e, -e, e, e];
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let reps = 10_000;
        let mut rejected = 0;
        for _ in 0..reps {
            let s_hat: f64 = (0..4)
                .map(|k| {
                    let p_same = (1.0 + truth[k]) / 2.0;
                    let same = (0..plan.pairs_per_setting).filter(|_| rng.random::<f64>() < p_same).count() as f64;
                    signs[k] * (2.0 * same - plan.pairs_per_setting as f64) / plan.pairs_per_setting as f64
                })
                .sum();
            if s_hat > 2.0 {
                rejected += 1;
            }
        }
        assert!(rejected as f64 >= 0.99 * reps as f64, "{rejected}");
    }

    proptest! {
        #[test]
        fn loss_is_additive(a in 1.0f64..1e9, b in 1.0f64..1e9, c in 1.0f64..1e9) {
            let lhs = geometric_loss_db(a, b).unwrap() + geometric_loss_db(b, c).unwrap();
            prop_assert!((lhs - geometric_loss_db(a, c).unwrap()).abs() <= 1e-9);
        }

        #[test]
        fn plan_is_monotone(s in 2.05f64..2.9, ds in 0.0f64..0.5, k in 0.1f64..6.0, dk in 0.0f64..3.0) {
            let base = pairs_for_significance(s, k).unwrap().pairs_per_setting;
            prop_assert!(pairs_for_significance(s, k + dk).unwrap().pairs_per_setting >= base);
            let s2 = (s + ds).min(4.0);
            prop_assert!(pairs_for_significance(s2, k).unwrap().pairs_per_setting <= base);
        }

        #[test]
        fn rate_is_multiplicative(x in 1.0f64..1e9, a in 0.0f64..60.0, b in 0.0f64..60.0) {
            let once = coincidence_rate(x, a + b, 0.0, 1.0, 1.0).unwrap();
            let twice = coincidence_rate(coincidence_rate(x, a, 0.0, 1.0, 1.0).unwrap(), b, 0.0, 1.0, 1.0).unwrap();
            prop_assert!((once / twice - 1.0).abs() <= 1e-9);
        }
    }
}
