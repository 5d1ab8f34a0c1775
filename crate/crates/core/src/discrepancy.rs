//! Published figures that disagree with what the implemented formulas give.
//!
//! Every entry pairs a quoted value with the value this crate computes for
//! the same quantity. Entries are built in a fixed order from the library's
//! own functions, so the rendered table is byte-stable.

use serde::Serialize;

use crate::bell::{chsh_alternating_sign, chsh_value, quantum_correlation, ChshSettings};
use crate::bounds::{
    apriori_scales, cadence_threshold, coupling_constant, earth_factor, gain_factor, moon_factor, speed_bound,
    ObservationWindow, ProperTimeFactor,
};
use crate::constants::PhysicalConstants;
use crate::scenario::{Preset, CAO_STATION_SEPARATION_M, GISIN_BASELINE_M};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Topic {
    Chsh,
    Bound,
    Gain,
    ProperTime,
    Scales,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub claim_id: &'static str,
    pub paper_location: &'static str,
    pub paper_value: f64,
    pub computed_value: f64,
    pub relative_difference: f64,
    #[serde(skip)]
    pub topic: Topic,
}

impl Discrepancy {
    fn new(topic: Topic, claim_id: &'static str, paper_location: &'static str, paper_value: f64, computed_value: f64) -> Self {
        Discrepancy {
            claim_id,
            paper_location,
            paper_value,
            computed_value,
            relative_difference: (computed_value - paper_value).abs() / paper_value.abs(),
            topic,
        }
    }
}

/// The full ledger, in a fixed order.
pub fn ledger() -> Vec<Discrepancy> {
    let k = PhysicalConstants::STANDARD;
    let settings = ChshSettings::default();
    let bound = |p: Preset| speed_bound(&p.build(), None).expect("preset bound").v_min_over_c;
    let gisin = bound(Preset::Gisin1999);
    let cao = bound(Preset::Cao2017);
    let case3 = Preset::EarthMoonCase3.build();
    let gain = |a: Preset, b: &crate::scenario::Scenario| gain_factor(&a.build(), b).expect("preset gain");
    let kappa = coupling_constant(k.m_proton, &k);
    let window = ObservationWindow::earth_moon(&k);
    let n_minus_one = apriori_scales(&[-1], k.m_proton, &window, k.planck_length, &k).expect("non-empty")[0].d_m;

    use Topic::*;
    vec![
        Discrepancy::new(Chsh, "chsh_quantum_value", "quantum CHSH prediction", 2.2, chsh_value(quantum_correlation, &settings)),
        Discrepancy::new(
            Chsh,
            "chsh_printed_sign_combination",
            "quantum CHSH prediction",
            2.2,
            chsh_alternating_sign(quantum_correlation, &settings),
        ),
        Discrepancy::new(Bound, "gisin_bound_quoted_32e7", "fibre bound, quoted", 32.0e7, gisin),
        Discrepancy::new(Bound, "gisin_bound_7e6", "fibre bound, text", 7.0e6, gisin),
        Discrepancy::new(Bound, "gisin_bound_700000", "fibre bound, text", 7.0e5, gisin),
        Discrepancy::new(Bound, "gisin_distance_10km", "fibre bound, text", 10_000.0, GISIN_BASELINE_M),
        Discrepancy::new(Bound, "cao_bound_order_1e7", "satellite bound", 1.0e7, cao),
        Discrepancy::new(Bound, "cao_over_gisin_15", "satellite bound", 15.0, cao / gisin),
        Discrepancy::new(Gain, "earth_moon_distance_390000km", "Earth-Moon distance", k.d_earth_moon_quoted, k.d_earth_moon_mean),
        Discrepancy::new(Gain, "gain_case3_vs_cao_bound", "Earth-Moon gain", 300.0, gain(Preset::EarthMoonCase3, &Preset::Cao2017.build())),
        Discrepancy::new(Gain, "gain_distance_vs_1203km", "Earth-Moon gain", 300.0, k.d_earth_moon_mean / CAO_STATION_SEPARATION_M),
        Discrepancy::new(Gain, "gain_lagrange_vs_case3", "Lagrange gain", 20.0, gain(Preset::LagrangeL4L5, &case3)),
        Discrepancy::new(Gain, "gain_mars_vs_case3", "Mars gain", 1000.0, gain(Preset::Mars, &case3)),
        Discrepancy::new(ProperTime, "alpha_correction_earth", "proper-time correction", 0.08, earth_factor(&k).correction),
        Discrepancy::new(ProperTime, "alpha_correction_moon", "proper-time correction", 0.0031, moon_factor(&k).correction),
        Discrepancy::new(
            ProperTime,
            "cadence_threshold_quoted_inputs",
            "cadence threshold",
            12.0,
            cadence_threshold(ProperTimeFactor::from_correction(0.08), ProperTimeFactor::from_correction(0.0031))
                .expect("non-zero"),
        ),
        Discrepancy::new(
            ProperTime,
            "cadence_threshold_constants",
            "cadence threshold",
            12.0,
            cadence_threshold(earth_factor(&k), moon_factor(&k)).expect("non-zero"),
        ),
        Discrepancy::new(Scales, "kappa_proton", "a-priori scales", 1.0e-39, kappa),
        Discrepancy::new(Scales, "planck_length_1e-33cm", "a-priori scales", 1.0e-35, k.planck_length),
        Discrepancy::new(Scales, "apriori_d_n_minus_1_1e39cm", "a-priori scales", 1.0e37, n_minus_one),
    ]
}

/// Ledger entries touching any of `topics`, in ledger order.
pub fn for_topics(topics: &[Topic]) -> Vec<Discrepancy> {
    ledger().into_iter().filter(|d| topics.contains(&d.topic)).collect()
}

/// CSV with columns `claim_id,paper_location,paper_value,computed_value,relative_difference`.
pub fn to_csv(entries: &[Discrepancy]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim_id", "paper_location", "paper_value", "computed_value", "relative_difference"])
        .expect("in-memory write");
    for d in entries {
        w.write_record([
            d.claim_id.to_string(),
            d.paper_location.to_string(),
            format!("{:e}", d.paper_value),
            format!("{:e}", d.computed_value),
            format!("{:e}", d.relative_difference),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// How a quoted claim is compared with the computed value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum ClaimTolerance {
    /// `|computed − quoted| ≤ value·|quoted|`.
    Relative(f64),
    /// `computed / quoted` within `[1/value, value]`.
    Factor(f64),
}

/// A quoted configuration claim checked against this crate's geometry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimCheck {
    pub claim_id: &'static str,
    pub paper_location: &'static str,
    pub reference: &'static str,
    pub quoted: f64,
    pub computed: f64,
    pub tolerance: ClaimTolerance,
    pub holds: bool,
}

impl ClaimCheck {
    fn new(
        claim_id: &'static str,
        paper_location: &'static str,
        reference: &'static str,
        quoted: f64,
        computed: f64,
        tolerance: ClaimTolerance,
    ) -> Self {
        let holds = match tolerance {
            ClaimTolerance::Relative(r) => (computed - quoted).abs() <= r * quoted.abs(),
            ClaimTolerance::Factor(f) => {
                let ratio = computed / quoted;
                ratio >= 1.0 / f && ratio <= f
            }
        };
        ClaimCheck {
            claim_id,
            paper_location,
            reference,
            quoted,
            computed,
            tolerance,
            holds,
        }
    }
}

/// Gain claims attached to a preset's bound report.
pub fn claims_for(preset: Preset) -> Vec<ClaimCheck> {
    let k = PhysicalConstants::STANDARD;
    let case3 = Preset::EarthMoonCase3.build();
    let gain = |a: Preset, b: &crate::scenario::Scenario| gain_factor(&a.build(), b).expect("preset gain");
    match preset {
        Preset::Cao2017 => vec![ClaimCheck::new(
            "cao_over_gisin_15",
            "satellite bound",
            "gisin1999",
            15.0,
            gain(Preset::Cao2017, &Preset::Gisin1999.build()),
            ClaimTolerance::Factor(2.0),
        )],
        Preset::EarthMoonCase3 => vec![
            ClaimCheck::new(
                "gain_distance_vs_1203km",
                "Earth-Moon gain",
                "cao2017 station separation",
                300.0,
                k.d_earth_moon_mean / CAO_STATION_SEPARATION_M,
                ClaimTolerance::Relative(0.10),
            ),
            ClaimCheck::new(
                "gain_case3_vs_cao_bound",
                "Earth-Moon gain",
                "cao2017",
                300.0,
                gain(Preset::EarthMoonCase3, &Preset::Cao2017.build()),
                ClaimTolerance::Factor(2.0),
            ),
        ],
        Preset::LagrangeL4L5 => vec![ClaimCheck::new(
            "gain_lagrange_vs_case3",
            "Lagrange gain",
            "earth_moon_case3",
            20.0,
            gain(Preset::LagrangeL4L5, &case3),
            ClaimTolerance::Factor(2.0),
        )],
        Preset::Mars => vec![ClaimCheck::new(
            "gain_mars_vs_case3",
            "Mars gain",
            "earth_moon_case3",
            1000.0,
            gain(Preset::Mars, &case3),
            ClaimTolerance::Factor(2.0),
        )],
        _ => Vec::new(),
    }
}
