//! Event-timed Monte Carlo of entangled photon pairs under a finite
//! collapse-speed model.
//!
//! Each pair is emitted at an integer-femtosecond time, its photons arrive
//! after the light time of their trace paths, and each measurement occupies
//! `[start, start + τ]`. The collapse influence leaves the earlier
//! measurement, retraces both photon paths through the source, and must
//! reach the partner before its measurement ends. Connected pairs are
//! sampled from the quantum distribution, the rest from the fallback.
//!
//! Randomness for pair `i` comes from a ChaCha8 stream keyed by the seed
//! with stream number `i`, and counts are reduced with integer addition, so
//! results do not depend on how pairs are split across worker threads.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bell::{outcome_distribution, AnalyzerAngle, ChshSettings, CorrelationModel, OutcomeDistribution, SettingPair};
use crate::constants::{C, FS_PER_S};
use crate::scenario::Scenario;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("need at least 4 pairs, got {0}")]
    TooFewPairs(u64),
    #[error("collapse speed must be > 0 (or infinite), got {0}")]
    InvalidSpeed(f64),
    #[error("speed grid is empty")]
    EmptyGrid,
    #[error("speed grid must be strictly ascending and positive")]
    GridNotAscending,
    #[error("invalid grid specification: {0}")]
    InvalidGridSpec(String),
    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
}

/// Integer femtoseconds in the privileged frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Femtos(pub i64);

impl Femtos {
    pub fn from_seconds(s: f64) -> Femtos {
        Femtos((s * FS_PER_S).round() as i64)
    }

    /// Light travel time over `length_m`, rounded to the nearest femtosecond.
    pub fn light_time(length_m: f64) -> Femtos {
        Femtos((length_m / C * FS_PER_S).round() as i64)
    }

    pub fn as_seconds(self) -> f64 {
        self.0 as f64 / FS_PER_S
    }
}

impl std::ops::Add for Femtos {
    type Output = Femtos;
    fn add(self, rhs: Femtos) -> Femtos {
        Femtos(self.0 + rhs.0)
    }
}

/// Statistics used for pairs the collapse influence fails to connect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Fallback {
    /// Independent fair ±1 outcomes.
    Uncorrelated,
    /// Deterministic hidden-polarization model.
    Lhv,
}

impl Fallback {
    fn distribution(self, a: AnalyzerAngle, b: AnalyzerAngle) -> OutcomeDistribution {
        match self {
            Fallback::Uncorrelated => OutcomeDistribution::UNCORRELATED,
            Fallback::Lhv => outcome_distribution(CorrelationModel::Lhv, a, b),
        }
    }
}

impl fmt::Display for Fallback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fallback::Uncorrelated => "uncorrelated",
            Fallback::Lhv => "lhv",
        })
    }
}

impl FromStr for Fallback {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uncorrelated" => Ok(Fallback::Uncorrelated),
            "lhv" => Ok(Fallback::Lhv),
            other => Err(format!("unknown fallback `{other}` (expected uncorrelated or lhv)")),
        }
    }
}

/// When the influence leaves the first measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Departure {
    #[default]
    MeasureStart,
    MeasureEnd,
}

impl fmt::Display for Departure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Departure::MeasureStart => "start",
            Departure::MeasureEnd => "end",
        })
    }
}

impl FromStr for Departure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "start" => Ok(Departure::MeasureStart),
            "end" => Ok(Departure::MeasureEnd),
            other => Err(format!("unknown departure `{other}` (expected start or end)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollapseModel {
    /// Speed of the collapse influence in units of c; `f64::INFINITY` allowed.
    pub v_over_c: f64,
    pub fallback: Fallback,
    pub departure: Departure,
}

impl CollapseModel {
    pub fn new(v_over_c: f64, fallback: Fallback) -> Result<Self, SimError> {
        if !(v_over_c > 0.0) {
            return Err(SimError::InvalidSpeed(v_over_c));
        }
        Ok(CollapseModel {
            v_over_c,
            fallback,
            departure: Departure::default(),
        })
    }

    pub fn with_departure(mut self, departure: Departure) -> Self {
        self.departure = departure;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArmTiming {
    pub arrival: Femtos,
    pub measure_start: Femtos,
    pub measure_end: Femtos,
}

/// Timings of both arms for a pair emitted at `emission`.
pub fn arm_timings(scenario: &Scenario, emission: Femtos) -> [ArmTiming; 2] {
    let arms = scenario.arms();
    let arrivals = arms.clone().map(|arm| emission + Femtos::light_time(arm.length()));
    let latest = arrivals[0].max(arrivals[1]);
    std::array::from_fn(|i| {
        let measure_start = if scenario.aligned_starts() {
            latest
        } else {
            arrivals[i] + Femtos::from_seconds(arms[i].offset_s)
        };
        ArmTiming {
            arrival: arrivals[i],
            measure_start,
            measure_end: measure_start + Femtos::from_seconds(arms[i].tau_s),
        }
    })
}

/// Index of the arm whose measurement starts first (ties go to arm 0).
fn first_arm(timing: &[ArmTiming; 2]) -> usize {
    usize::from(timing[1].measure_start < timing[0].measure_start)
}

/// Femtoseconds between the influence's departure and the end of the
/// partner measurement.
fn available_window(timing: &[ArmTiming; 2], departure: Departure) -> i64 {
    let first = first_arm(timing);
    let depart = match departure {
        Departure::MeasureStart => timing[first].measure_start,
        Departure::MeasureEnd => timing[first].measure_end,
    };
    timing[1 - first].measure_end.0 - depart.0
}

/// Whether an influence travelling the trace path `L₀ + L₁` at `v_over_c·c`
/// reaches the second measurement before it ends.
pub fn connected(timing: &[ArmTiming; 2], lengths: [f64; 2], v_over_c: f64, departure: Departure) -> bool {
    if v_over_c == f64::INFINITY {
        return true;
    }
    let travel_fs = (lengths[0] + lengths[1]) / (v_over_c * C) * FS_PER_S;
    travel_fs <= available_window(timing, departure) as f64
}

/// Exact connect/disconnect boundary: `(L₀ + L₁) / (c·Δ)`, Δ being the time
/// from departure to the end of the partner measurement. Infinite when the
/// partner has already finished.
pub fn critical_speed(scenario: &Scenario, departure: Departure) -> f64 {
    let window = available_window(&arm_timings(scenario, Femtos(0)), departure);
    if window <= 0 {
        return f64::INFINITY;
    }
    let [l0, l1] = scenario.arm_lengths();
    (l0 + l1) / (C * window as f64 / FS_PER_S)
}

/// One simulated pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairRecord {
    pub index: u64,
    pub emission_fs: Femtos,
    pub arms: [ArmTiming; 2],
    pub connected: bool,
    pub setting: usize,
    pub angle_a: f64,
    pub angle_b: f64,
    pub outcome_a: i8,
    pub outcome_b: i8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub n_pairs: u64,
    pub seed: u64,
    /// Worker threads; `None` uses the global rayon pool. Never affects results.
    pub workers: Option<usize>,
    pub emission_interval_fs: i64,
    /// Number of leading pairs whose full records are returned.
    pub trace_cap: usize,
}

impl SimConfig {
    pub fn new(n_pairs: u64, seed: u64) -> Self {
        SimConfig {
            n_pairs,
            seed,
            workers: None,
            emission_interval_fs: 1_000_000_000,
            trace_cap: 0,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_trace(mut self, cap: usize) -> Self {
        self.trace_cap = cap;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SettingEstimate {
    pub setting: &'static str,
    pub angle_a: f64,
    pub angle_b: f64,
    pub e_hat: f64,
    pub n: u64,
}

/// Finite-sample CHSH estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationEstimate {
    pub per_setting: Vec<SettingEstimate>,
    pub s_hat: f64,
    /// `sqrt(Σ (1 − Ê²) / n)`; infinite if a setting received no pairs.
    pub stderr_s: f64,
}

impl CorrelationEstimate {
    fn from_counts(counts: &Counts, settings: &ChshSettings) -> Self {
        let pairs = settings.pairs();
        let mut per_setting = Vec::with_capacity(4);
        let mut s_hat = 0.0;
        let mut var = 0.0;
        for (k, pair) in SettingPair::ALL.iter().enumerate() {
            let n = counts.n[k];
            let e_hat = if n > 0 { counts.product_sum[k] as f64 / n as f64 } else { 0.0 };
            s_hat += pair.chsh_sign() * e_hat;
            var += if n > 0 { (1.0 - e_hat * e_hat) / n as f64 } else { f64::INFINITY };
            per_setting.push(SettingEstimate {
                setting: pair.label(),
                angle_a: pairs[k].0.radians(),
                angle_b: pairs[k].1.radians(),
                e_hat,
                n,
            });
        }
        CorrelationEstimate {
            per_setting,
            s_hat,
            stderr_s: var.sqrt(),
        }
    }

    pub fn n_total(&self) -> u64 {
        self.per_setting.iter().map(|s| s.n).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationResult {
    pub estimate: CorrelationEstimate,
    pub n_pairs: u64,
    pub n_connected: u64,
    pub fraction_connected: f64,
    pub critical_speed_over_c: f64,
    /// Straight-line detector distance, m (comparison only).
    pub detector_separation_m: f64,
    /// Influence path `L₀ + L₁`, m.
    pub trace_path_m: f64,
    #[serde(skip)]
    pub trace: Vec<PairRecord>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Counts {
    n: [u64; 4],
    product_sum: [i64; 4],
    connected: u64,
}

impl Counts {
    fn merge(mut self, other: Counts) -> Counts {
        for k in 0..4 {
            self.n[k] += other.n[k];
            self.product_sum[k] += other.product_sum[k];
        }
        self.connected += other.connected;
        self
    }
}

struct PairContext<'a> {
    base_rng: ChaCha8Rng,
    timing0: [ArmTiming; 2],
    lengths: [f64; 2],
    model: &'a CollapseModel,
    angles: [(AnalyzerAngle, AnalyzerAngle); 4],
    quantum: [OutcomeDistribution; 4],
    fallback: [OutcomeDistribution; 4],
    interval: i64,
}

impl PairContext<'_> {
    fn pair(&self, index: u64) -> PairRecord {
        let mut rng = self.base_rng.clone();
        rng.set_stream(index);
        let emission = Femtos(index as i64 * self.interval);
        let arms = self.timing0.map(|t| ArmTiming {
            arrival: t.arrival + emission,
            measure_start: t.measure_start + emission,
            measure_end: t.measure_end + emission,
        });
        let is_connected = connected(&arms, self.lengths, self.model.v_over_c, self.model.departure);
        let setting = rng.random_range(0..4usize);
        let table = if is_connected { &self.quantum[setting] } else { &self.fallback[setting] };
        let (outcome_a, outcome_b) = table.outcome_for(rng.random::<f64>());
        PairRecord {
            index,
            emission_fs: emission,
            arms,
            connected: is_connected,
            setting,
            angle_a: self.angles[setting].0.radians(),
            angle_b: self.angles[setting].1.radians(),
            outcome_a,
            outcome_b,
        }
    }
}

const CHUNK: u64 = 16_384;

/// Runs the Monte Carlo for one collapse model.
pub fn simulate(
    scenario: &Scenario,
    model: &CollapseModel,
    settings: &ChshSettings,
    config: &SimConfig,
) -> Result<SimulationResult, SimError> {
    if config.n_pairs < 4 {
        return Err(SimError::TooFewPairs(config.n_pairs));
    }
    if !(model.v_over_c > 0.0) {
        return Err(SimError::InvalidSpeed(model.v_over_c));
    }
    let angles = settings.pairs();
    let ctx = PairContext {
        base_rng: ChaCha8Rng::seed_from_u64(config.seed),
        timing0: arm_timings(scenario, Femtos(0)),
        lengths: scenario.arm_lengths(),
        model,
        angles,
        quantum: angles.map(|(a, b)| outcome_distribution(CorrelationModel::Quantum, a, b)),
        fallback: angles.map(|(a, b)| model.fallback.distribution(a, b)),
        interval: config.emission_interval_fs,
    };

    let n = config.n_pairs;
    let run_chunks = || {
        (0..n.div_ceil(CHUNK))
            .into_par_iter()
            .map(|chunk| {
                let mut counts = Counts::default();
                for index in chunk * CHUNK..((chunk + 1) * CHUNK).min(n) {
                    let rec = ctx.pair(index);
                    counts.n[rec.setting] += 1;
                    counts.product_sum[rec.setting] += i64::from(rec.outcome_a * rec.outcome_b);
                    counts.connected += u64::from(rec.connected);
                }
                counts
            })
            .reduce(Counts::default, Counts::merge)
    };
    let counts = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| SimError::WorkerPool(e.to_string()))?
            .install(run_chunks),
        None => run_chunks(),
    };

    let trace = (0..n.min(config.trace_cap as u64)).map(|i| ctx.pair(i)).collect();
    let [l0, l1] = ctx.lengths;
    Ok(SimulationResult {
        estimate: CorrelationEstimate::from_counts(&counts, settings),
        n_pairs: n,
        n_connected: counts.connected,
        fraction_connected: counts.connected as f64 / n as f64,
        critical_speed_over_c: critical_speed(scenario, model.departure),
        detector_separation_m: scenario.detector_separation(),
        trace_path_m: l0 + l1,
        trace,
    })
}

/// `{min, max, points}` grid, log- or linearly spaced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpeedGrid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log_spaced: bool,
}

impl SpeedGrid {
    pub fn values(&self) -> Result<Vec<f64>, SimError> {
        let bad = |m: &str| Err(SimError::InvalidGridSpec(m.to_string()));
        if self.points == 0 {
            return bad("points must be >= 1");
        }
        if !(self.min > 0.0 && self.min.is_finite() && self.max.is_finite()) {
            return bad("min and max must be finite and > 0");
        }
        if self.points == 1 {
            return Ok(vec![self.min]);
        }
        if !(self.max > self.min) {
            return bad("max must exceed min");
        }
        let last = (self.points - 1) as f64;
        let mut v: Vec<f64> = (0..self.points)
            .map(|i| {
                let t = i as f64 / last;
                if self.log_spaced {
                    self.min * (self.max / self.min).powf(t)
                } else {
                    self.min + (self.max - self.min) * t
                }
            })
            .collect();
        v[self.points - 1] = self.max;
        Ok(v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub v_over_c: f64,
    pub s_hat: f64,
    pub stderr_s: f64,
    pub n_pairs: u64,
    pub fraction_connected: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCurve {
    pub points: Vec<SweepPoint>,
    pub critical_speed_over_c: f64,
}

impl SweepCurve {
    /// Adjacent grid speeds `(below, above)` between which the fraction of
    /// connected pairs first reaches 1.
    pub fn transition_bracket(&self) -> Option<(f64, f64)> {
        self.points
            .windows(2)
            .find(|w| w[0].fraction_connected < 1.0 && w[1].fraction_connected >= 1.0)
            .map(|w| (w[0].v_over_c, w[1].v_over_c))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["v_over_c", "S_hat", "stderr_S", "n_pairs", "fraction_connected"])
            .expect("in-memory write");
        for p in &self.points {
            w.write_record([
                p.v_over_c.to_string(),
                p.s_hat.to_string(),
                p.stderr_s.to_string(),
                p.n_pairs.to_string(),
                p.fraction_connected.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to Vec")).expect("ascii csv")
    }
}

/// SplitMix64 finaliser over `(seed, index)`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One [`simulate`] run per grid speed, each with a seed derived from
/// `(config.seed, point index)`.
pub fn sweep_speed(
    scenario: &Scenario,
    fallback: Fallback,
    departure: Departure,
    settings: &ChshSettings,
    grid: &[f64],
    config: &SimConfig,
) -> Result<SweepCurve, SimError> {
    if grid.is_empty() {
        return Err(SimError::EmptyGrid);
    }
    if grid.iter().any(|v| !(*v > 0.0)) || grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(SimError::GridNotAscending);
    }
    let mut points = Vec::with_capacity(grid.len());
    for (i, &v) in grid.iter().enumerate() {
        let model = CollapseModel::new(v, fallback)?.with_departure(departure);
        let cfg = SimConfig {
            seed: derive_seed(config.seed, i as u64),
            trace_cap: 0,
            ..config.clone()
        };
        let r = simulate(scenario, &model, settings, &cfg)?;
        points.push(SweepPoint {
            v_over_c: v,
            s_hat: r.estimate.s_hat,
            stderr_s: r.estimate.stderr_s,
            n_pairs: r.n_pairs,
            fraction_connected: r.fraction_connected,
        });
    }
    Ok(SweepCurve {
        points,
        critical_speed_over_c: critical_speed(scenario, departure),
    })
}
