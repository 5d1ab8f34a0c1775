//! Experiment geometry: sites, photon trace paths, two-arm scenarios, the
//! built-in presets and the JSON scenario file format.
//!
//! All coordinates are a static snapshot in a single inertial frame at rest
//! with the laboratory (the privileged frame in which collapse speeds are
//! defined). Lengths are metres, durations seconds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constants::{PhysicalConstants, C, DEFAULT_TAU_S};

/// Maximum allowed gap between a path's endpoints and the sites it joins.
pub const ENDPOINT_TOLERANCE_M: f64 = 1.0e-3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("schema violation at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("geometric violation at `{path}`: {message}")]
    Geometry { path: String, message: String },
    #[error("invalid value at `{path}`: {message}")]
    Validation { path: String, message: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("arm index {0} out of range (scenarios have arms 0 and 1)")]
    ArmIndex(usize),
}

impl ScenarioError {
    fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        ScenarioError::Validation {
            path: path.into(),
            message: message.into(),
        }
    }

    fn geometry(path: impl Into<String>, message: impl Into<String>) -> Self {
        ScenarioError::Geometry {
            path: path.into(),
            message: message.into(),
        }
    }
}

/// A Cartesian point in metres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point3(pub [f64; 3]);

impl Point3 {
    pub const ORIGIN: Point3 = Point3([0.0, 0.0, 0.0]);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3([x, y, z])
    }

    pub fn distance(&self, other: &Point3) -> f64 {
        let [a, b, c] = self.0;
        let [x, y, z] = other.0;
        ((a - x).powi(2) + (b - y).powi(2) + (c - z).powi(2)).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn scaled(&self, k: f64) -> Point3 {
        Point3(self.0.map(|v| v * k))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Site {
    pub name: String,
    pub position: Point3,
}

impl Site {
    pub fn new(name: impl Into<String>, position: Point3) -> Self {
        Site {
            name: name.into(),
            position,
        }
    }
}

/// Ordered straight segments a photon follows from the source to its
/// detector. Intermediate vertices are mirrors or relays.
#[derive(Debug, Clone, PartialEq)]
pub struct TracePath {
    vertices: Vec<Point3>,
}

impl TracePath {
    pub fn new(vertices: Vec<Point3>) -> Result<Self, ScenarioError> {
        Self::checked(vertices, "path")
    }

    fn checked(vertices: Vec<Point3>, field: &str) -> Result<Self, ScenarioError> {
        if vertices.len() < 2 {
            return Err(ScenarioError::validation(
                field,
                format!("needs at least 2 vertices, got {}", vertices.len()),
            ));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(ScenarioError::validation(
                    format!("{field}[{i}]"),
                    "coordinates must be finite",
                ));
            }
        }
        for (i, w) in vertices.windows(2).enumerate() {
            if w[0].distance(&w[1]) == 0.0 {
                return Err(ScenarioError::geometry(
                    format!("{field}[{}]", i + 1),
                    "consecutive vertices coincide",
                ));
            }
        }
        Ok(TracePath { vertices })
    }

    pub fn straight(from: Point3, to: Point3) -> Result<Self, ScenarioError> {
        Self::new(vec![from, to])
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn start(&self) -> Point3 {
        self.vertices[0]
    }

    pub fn end(&self) -> Point3 {
        *self.vertices.last().expect("path has at least two vertices")
    }

    /// Sum of segment lengths, m.
    pub fn length(&self) -> f64 {
        self.vertices.windows(2).map(|w| w[0].distance(&w[1])).sum()
    }
}

/// One detector arm of a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Arm {
    pub detector: Site,
    pub path: TracePath,
    /// Measurement duration, s.
    pub tau_s: f64,
    /// Extra delay between photon arrival and measurement start, s.
    pub offset_s: f64,
}

impl Arm {
    pub fn new(detector: Site, path: TracePath) -> Self {
        Arm {
            detector,
            path,
            tau_s: DEFAULT_TAU_S,
            offset_s: 0.0,
        }
    }

    pub fn with_tau(mut self, tau_s: f64) -> Self {
        self.tau_s = tau_s;
        self
    }

    pub fn with_offset(mut self, offset_s: f64) -> Self {
        self.offset_s = offset_s;
        self
    }

    pub fn length(&self) -> f64 {
        self.path.length()
    }
}

/// A named two-arm experiment geometry. Immutable once validated.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    name: String,
    source: Site,
    arms: [Arm; 2],
    frame_note: String,
    /// Set by [`Scenario::with_equalized_starts`]. Simulation then aligns the
    /// starts in integer femtoseconds, since `offset_s` cannot hold that
    /// precision once arrivals exceed a few seconds.
    aligned_starts: bool,
}

pub const DEFAULT_FRAME_NOTE: &str = "privileged frame at rest relative to the laboratory";

impl Scenario {
    pub fn new(
        name: impl Into<String>,
        source: Site,
        arms: [Arm; 2],
        frame_note: impl Into<String>,
    ) -> Result<Self, ScenarioError> {
        let scenario = Scenario {
            name: name.into(),
            source,
            arms,
            frame_note: frame_note.into(),
            aligned_starts: false,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    fn validate(&self) -> Result<(), ScenarioError> {
        if !self.source.position.is_finite() {
            return Err(ScenarioError::validation(
                "source.position",
                "coordinates must be finite",
            ));
        }
        for (i, arm) in self.arms.iter().enumerate() {
            if !arm.detector.position.is_finite() {
                return Err(ScenarioError::validation(
                    format!("arms[{i}].detector.position"),
                    "coordinates must be finite",
                ));
            }
            let start_gap = arm.path.start().distance(&self.source.position);
            if start_gap > ENDPOINT_TOLERANCE_M {
                return Err(ScenarioError::geometry(
                    format!("arms[{i}].path[0]"),
                    format!("path starts {start_gap:.6e} m from the source"),
                ));
            }
            let end_gap = arm.path.end().distance(&arm.detector.position);
            if end_gap > ENDPOINT_TOLERANCE_M {
                return Err(ScenarioError::geometry(
                    format!("arms[{i}].path[{}]", arm.path.vertices().len() - 1),
                    format!("path ends {end_gap:.6e} m from its detector"),
                ));
            }
            if !(arm.tau_s.is_finite() && arm.tau_s > 0.0) {
                return Err(ScenarioError::validation(
                    format!("arms[{i}].tau_s"),
                    format!("measurement duration must be > 0, got {}", arm.tau_s),
                ));
            }
            if !(arm.offset_s.is_finite() && arm.offset_s >= 0.0) {
                return Err(ScenarioError::validation(
                    format!("arms[{i}].offset_s"),
                    format!("offset must be >= 0, got {}", arm.offset_s),
                ));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Site {
        &self.source
    }

    pub fn arms(&self) -> &[Arm; 2] {
        &self.arms
    }

    /// Whether both measurements are defined to start together.
    pub fn aligned_starts(&self) -> bool {
        self.aligned_starts
    }

    pub fn frame_note(&self) -> &str {
        &self.frame_note
    }

    pub fn arm(&self, index: usize) -> Result<&Arm, ScenarioError> {
        self.arms.get(index).ok_or(ScenarioError::ArmIndex(index))
    }

    /// Path length of one arm, m.
    pub fn arm_length(&self, index: usize) -> Result<f64, ScenarioError> {
        Ok(self.arm(index)?.length())
    }

    pub fn arm_lengths(&self) -> [f64; 2] {
        [self.arms[0].length(), self.arms[1].length()]
    }

    pub fn max_arm_length(&self) -> f64 {
        let [a, b] = self.arm_lengths();
        a.max(b)
    }

    pub fn max_tau(&self) -> f64 {
        self.arms[0].tau_s.max(self.arms[1].tau_s)
    }

    /// Straight-line distance between the two detectors, m. Reported for
    /// comparison only; verdicts use trace paths.
    pub fn detector_separation(&self) -> f64 {
        self.arms[0]
            .detector
            .position
            .distance(&self.arms[1].detector.position)
    }

    /// Same geometry with both measurement durations replaced.
    pub fn with_tau(&self, tau_s: f64) -> Result<Scenario, ScenarioError> {
        let mut arms = self.arms.clone();
        for arm in &mut arms {
            arm.tau_s = tau_s;
        }
        let mut s = Scenario::new(self.name.clone(), self.source.clone(), arms, self.frame_note.clone())?;
        s.aligned_starts = self.aligned_starts;
        Ok(s)
    }

    /// Offsets chosen so both measurements start at the same instant: the arm
    /// whose photon arrives first waits for the other.
    pub fn with_equalized_starts(&self) -> Scenario {
        let arrivals = self.arm_lengths().map(|l| l / C);
        let latest = arrivals[0].max(arrivals[1]);
        let mut arms = self.arms.clone();
        for (arm, arrival) in arms.iter_mut().zip(arrivals) {
            arm.offset_s = latest - arrival;
        }
        Scenario {
            name: format!("{}+equalized", self.name),
            arms,
            aligned_starts: true,
            ..self.clone()
        }
    }

    /// Applies `f` to every coordinate (source, detectors, path vertices).
    pub fn map_points(&self, f: impl Fn(Point3) -> Point3) -> Result<Scenario, ScenarioError> {
        let source = Site::new(self.source.name.clone(), f(self.source.position));
        let mut arms = self.arms.clone();
        for arm in &mut arms {
            arm.detector.position = f(arm.detector.position);
            arm.path = TracePath::new(arm.path.vertices().iter().copied().map(&f).collect())?;
        }
        let mut s = Scenario::new(self.name.clone(), source, arms, self.frame_note.clone())?;
        s.aligned_starts = self.aligned_starts;
        Ok(s)
    }

    /// Symmetric scenario: source at the origin, detectors at ±`arm_length`
    /// along x, both arms with the same `tau_s`.
    pub fn symmetric(name: impl Into<String>, arm_length: f64, tau_s: f64) -> Result<Scenario, ScenarioError> {
        let source = Site::new("source", Point3::ORIGIN);
        let left = Point3::new(-arm_length, 0.0, 0.0);
        let right = Point3::new(arm_length, 0.0, 0.0);
        let arms = [
            Arm::new(Site::new("detector A", left), TracePath::straight(Point3::ORIGIN, left)?)
                .with_tau(tau_s),
            Arm::new(Site::new("detector B", right), TracePath::straight(Point3::ORIGIN, right)?)
                .with_tau(tau_s),
        ];
        Scenario::new(name, source, arms, DEFAULT_FRAME_NOTE)
    }

    pub fn to_document(&self) -> ScenarioDocument {
        ScenarioDocument {
            name: self.name.clone(),
            source: self.source.clone(),
            arms: self
                .arms
                .iter()
                .map(|arm| ArmDocument {
                    detector: arm.detector.clone(),
                    path: arm.path.vertices().to_vec(),
                    tau_s: arm.tau_s,
                    offset_s: arm.offset_s,
                })
                .collect(),
            frame_note: Some(self.frame_note.clone()),
        }
    }

    /// Pretty-printed scenario file.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("scenario document serializes")
    }
}

/// Light travel time over `length` metres, s.
pub fn light_time(length: f64) -> Result<f64, ScenarioError> {
    if !(length >= 0.0) || !length.is_finite() {
        return Err(ScenarioError::validation(
            "length",
            format!("length must be finite and >= 0, got {length}"),
        ));
    }
    Ok(length / C)
}

/// On-disk scenario schema. Unknown fields are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    pub name: String,
    pub source: Site,
    pub arms: Vec<ArmDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame_note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArmDocument {
    pub detector: Site,
    pub path: Vec<Point3>,
    pub tau_s: f64,
    #[serde(default)]
    pub offset_s: f64,
}

impl TryFrom<ScenarioDocument> for Scenario {
    type Error = ScenarioError;

    fn try_from(doc: ScenarioDocument) -> Result<Self, Self::Error> {
        if doc.arms.len() != 2 {
            return Err(ScenarioError::Schema {
                path: "arms".into(),
                message: format!("expected exactly 2 arms, got {}", doc.arms.len()),
            });
        }
        let mut arms = Vec::with_capacity(2);
        for (i, arm) in doc.arms.into_iter().enumerate() {
            let path = TracePath::checked(arm.path, &format!("arms[{i}].path"))?;
            arms.push(Arm {
                detector: arm.detector,
                path,
                tau_s: arm.tau_s,
                offset_s: arm.offset_s,
            });
        }
        let arms: [Arm; 2] = arms.try_into().expect("length checked above");
        Scenario::new(
            doc.name,
            doc.source,
            arms,
            doc.frame_note.unwrap_or_else(|| DEFAULT_FRAME_NOTE.to_string()),
        )
    }
}

/// Parses and validates a scenario file.
pub fn load_scenario(document: &str) -> Result<Scenario, ScenarioError> {
    let de = &mut serde_json::Deserializer::from_str(document);
    let doc: ScenarioDocument = serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        ScenarioError::Schema {
            path: if path == "." { "<root>".into() } else { path },
            message: err.into_inner().to_string(),
        }
    })?;
    Scenario::try_from(doc)
}

/// Built-in geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Fibre experiment: detectors 10.6 km apart, source at the midpoint.
    Gisin1999,
    /// Satellite source 700 km from each of two ground stations 1203 km apart.
    Cao2017,
    /// Source on Earth, one local arm, one arm to a detector on the Moon.
    EarthMoonCase1,
    /// Source on Earth, one local arm, one arm bounced off a lunar mirror back to Earth.
    EarthMoonCase2,
    /// Source on the Moon, one local arm, one arm to Earth.
    EarthMoonCase3,
    /// Three-spacecraft triangular constellation with 5×10⁹ m sides.
    LagrangeL4L5,
    /// Source on Earth, one local arm, one arm to a Martian base.
    Mars,
}

impl Preset {
    pub const ALL: [Preset; 7] = [
        Preset::Gisin1999,
        Preset::Cao2017,
        Preset::EarthMoonCase1,
        Preset::EarthMoonCase2,
        Preset::EarthMoonCase3,
        Preset::LagrangeL4L5,
        Preset::Mars,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Gisin1999 => "gisin1999",
            Preset::Cao2017 => "cao2017",
            Preset::EarthMoonCase1 => "earth_moon_case1",
            Preset::EarthMoonCase2 => "earth_moon_case2",
            Preset::EarthMoonCase3 => "earth_moon_case3",
            Preset::LagrangeL4L5 => "lagrange_l4l5",
            Preset::Mars => "mars",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Preset::Gisin1999 => "fibre link, detectors 10.6 km apart, source at the midpoint",
            Preset::Cao2017 => "satellite source, 700 km to each of two stations 1203 km apart",
            Preset::EarthMoonCase1 => "source on Earth, local arm + arm to a lunar detector",
            Preset::EarthMoonCase2 => "source on Earth, local arm + Earth-Moon-Earth mirror bounce",
            Preset::EarthMoonCase3 => "source on the Moon, co-located local arm + arm to Earth",
            Preset::LagrangeL4L5 => "spacecraft triangle, 5e9 m sides, source on one vertex",
            Preset::Mars => "source on Earth, local arm + arm to a Martian base",
        }
    }

    pub fn build(self) -> Scenario {
        self.build_with(&PresetOptions::default())
            .expect("default preset geometry is valid")
    }

    pub fn build_with(self, options: &PresetOptions) -> Result<Scenario, ScenarioError> {
        let d = options.earth_moon_distance_m;
        let tau = options.tau_s;
        let local = |default: f64| options.local_arm_m.unwrap_or(default);
        let scenario = match self {
            Preset::Gisin1999 => {
                let half = GISIN_BASELINE_M / 2.0;
                two_straight_arms(self, Point3::ORIGIN, Point3::new(-half, 0.0, 0.0), Point3::new(half, 0.0, 0.0), tau)?
            }
            Preset::Cao2017 => {
                let half = CAO_STATION_SEPARATION_M / 2.0;
                let height = (CAO_ARM_M.powi(2) - half.powi(2)).sqrt();
                two_straight_arms(
                    self,
                    Point3::new(0.0, height, 0.0),
                    Point3::new(-half, 0.0, 0.0),
                    Point3::new(half, 0.0, 0.0),
                    tau,
                )?
            }
            Preset::EarthMoonCase1 => two_straight_arms(
                self,
                Point3::ORIGIN,
                Point3::new(0.0, local(LOCAL_ARM_M), 0.0),
                Point3::new(d, 0.0, 0.0),
                tau,
            )?,
            Preset::EarthMoonCase2 => {
                let local_det = Point3::new(0.0, local(LOCAL_ARM_M), 0.0);
                let mirror = Point3::new(d, 0.0, 0.0);
                let return_det = Point3::ORIGIN;
                let arms = [
                    Arm::new(
                        Site::new("local detector", local_det),
                        TracePath::straight(Point3::ORIGIN, local_det)?,
                    )
                    .with_tau(tau),
                    Arm::new(
                        Site::new("earth return detector", return_det),
                        TracePath::new(vec![Point3::ORIGIN, mirror, return_det])?,
                    )
                    .with_tau(tau),
                ];
                Scenario::new(self.name(), Site::new("earth source", Point3::ORIGIN), arms, DEFAULT_FRAME_NOTE)?
            }
            Preset::EarthMoonCase3 => two_straight_arms(
                self,
                Point3::new(d, 0.0, 0.0),
                Point3::new(d, local(CASE3_LOCAL_ARM_M), 0.0),
                Point3::ORIGIN,
                tau,
            )?,
            Preset::LagrangeL4L5 => {
                let s = LAGRANGE_SIDE_M;
                two_straight_arms(
                    self,
                    Point3::ORIGIN,
                    Point3::new(s, 0.0, 0.0),
                    Point3::new(s / 2.0, s * 3f64.sqrt() / 2.0, 0.0),
                    tau,
                )?
            }
            Preset::Mars => two_straight_arms(
                self,
                Point3::ORIGIN,
                Point3::new(0.0, local(LOCAL_ARM_M), 0.0),
                Point3::new(options.mars_distance_m, 0.0, 0.0),
                tau,
            )?,
        };
        Ok(scenario)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| ScenarioError::UnknownPreset(s.to_string()))
    }
}

pub const GISIN_BASELINE_M: f64 = 10_600.0;
pub const CAO_ARM_M: f64 = 700_000.0;
pub const CAO_STATION_SEPARATION_M: f64 = 1_203_000.0;
pub const CAO_ORBIT_ALTITUDE_M: f64 = 500_000.0;
/// Ground-station arm for Earth-based presets.
pub const LOCAL_ARM_M: f64 = 1_000.0;
/// Lunar-source local arm: the detector sits at the source output, closer
/// than c·τ/2 so that natural arrival timing is distinguishable from
/// equalised timing.
pub const CASE3_LOCAL_ARM_M: f64 = 1.0e-4;
pub const LAGRANGE_SIDE_M: f64 = 5.0e9;
pub const MARS_DISTANCE_M: f64 = 2.25e11;

/// Tunables for preset construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetOptions {
    pub earth_moon_distance_m: f64,
    pub mars_distance_m: f64,
    /// Overrides the local (short) arm of the Earth–Moon and Mars presets.
    pub local_arm_m: Option<f64>,
    pub tau_s: f64,
}

impl Default for PresetOptions {
    fn default() -> Self {
        PresetOptions {
            earth_moon_distance_m: PhysicalConstants::STANDARD.d_earth_moon_mean,
            mars_distance_m: MARS_DISTANCE_M,
            local_arm_m: None,
            tau_s: DEFAULT_TAU_S,
        }
    }
}

fn two_straight_arms(
    preset: Preset,
    source: Point3,
    det_a: Point3,
    det_b: Point3,
    tau_s: f64,
) -> Result<Scenario, ScenarioError> {
    let arms = [
        Arm::new(Site::new("detector A", det_a), TracePath::straight(source, det_a)?).with_tau(tau_s),
        Arm::new(Site::new("detector B", det_b), TracePath::straight(source, det_b)?).with_tau(tau_s),
    ];
    Scenario::new(preset.name(), Site::new("source", source), arms, DEFAULT_FRAME_NOTE)
}

/// Looks up a preset by name with default options.
pub fn preset(name: &str) -> Result<Scenario, ScenarioError> {
    Ok(name.parse::<Preset>()?.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn two_arm_doc(tau: f64, end_x: f64) -> String {
        format!(
            r#"{{
              "name": "lab",
              "source": {{"name": "s", "position": [0, 0, 0]}},
              "arms": [
                {{"detector": {{"name": "a", "position": [-10000, 0, 0]}},
                  "path": [[0,0,0],[-10000,0,0]], "tau_s": {tau}, "offset_s": 0}},
                {{"detector": {{"name": "b", "position": [10000, 0, 0]}},
                  "path": [[0,0,0],[{end_x},0,0]], "tau_s": 5e-12}}
              ]
            }}"#
        )
    }

    #[test]
    fn loads_valid_two_arm_document() {
        let s = load_scenario(&two_arm_doc(5e-12, 10000.0)).unwrap();
        assert_eq!(s.arms().len(), 2);
        assert_eq!(s.arm_length(0).unwrap(), 10_000.0);
        assert_eq!(s.arms()[1].offset_s, 0.0);
        assert_eq!(s.frame_note(), DEFAULT_FRAME_NOTE);
    }

    #[test]
    fn path_ending_away_from_detector_is_geometric_violation() {
        let err = load_scenario(&two_arm_doc(5e-12, 15000.0)).unwrap_err();
        match err {
            ScenarioError::Geometry { path, .. } => assert_eq!(path, "arms[1].path[1]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_tau_is_rejected_with_field_path() {
        let err = load_scenario(&two_arm_doc(0.0, 10000.0)).unwrap_err();
        assert!(matches!(err, ScenarioError::Validation { ref path, .. } if path == "arms[0].tau_s"));
    }

    #[test]
    fn missing_and_unknown_fields_are_schema_errors() {
        let missing = two_arm_doc(5e-12, 10000.0).replace(r#", "tau_s": 5e-12"#, "");
        let err = load_scenario(&missing).unwrap_err();
        assert!(matches!(err, ScenarioError::Schema { ref message, .. } if message.contains("tau_s")), "{err}");

        let extra = two_arm_doc(5e-12, 10000.0).replace(r#""name": "lab","#, r#""name": "lab", "colour": 1,"#);
        assert!(matches!(load_scenario(&extra), Err(ScenarioError::Schema { .. })));

        let wrong_type = two_arm_doc(5e-12, 10000.0).replace(r#""tau_s": 5e-12"#, r#""tau_s": "fast""#);
        match load_scenario(&wrong_type).unwrap_err() {
            ScenarioError::Schema { path, .. } => assert_eq!(path, "arms[1].tau_s"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn three_arms_rejected() {
        let doc = r#"{"name":"x","source":{"name":"s","position":[0,0,0]},"arms":[]}"#;
        assert!(matches!(load_scenario(doc), Err(ScenarioError::Schema { ref path, .. }) if path == "arms"));
    }

    #[test]
    fn trace_path_invariants() {
        assert!(TracePath::new(vec![Point3::ORIGIN]).is_err());
        assert!(TracePath::new(vec![Point3::ORIGIN, Point3::ORIGIN]).is_err());
        let p = TracePath::new(vec![Point3::ORIGIN, Point3::new(3.0, 4.0, 0.0), Point3::new(3.0, 4.0, 12.0)]).unwrap();
        assert_eq!(p.length(), 17.0);
    }

    #[test]
    fn gisin_arms_are_half_the_baseline() {
        let s = preset("gisin1999").unwrap();
        assert_eq!(s.arm_lengths(), [5_300.0, 5_300.0]);
        assert_eq!(s.detector_separation(), 10_600.0);
    }

    #[test]
    fn cao_geometry() {
        let s = preset("cao2017").unwrap();
        for l in s.arm_lengths() {
            assert_relative_eq!(l, 700_000.0, max_relative = 1e-12);
        }
        assert_relative_eq!(s.detector_separation(), 1_203_000.0, max_relative = 1e-12);
    }

    #[test]
    fn earth_moon_long_arms() {
        assert_relative_eq!(preset("earth_moon_case1").unwrap().arm_length(1).unwrap(), 3.844e8);
        assert_relative_eq!(preset("earth_moon_case2").unwrap().arm_length(1).unwrap(), 7.688e8);
        assert_relative_eq!(preset("earth_moon_case3").unwrap().arm_length(1).unwrap(), 3.844e8);
        assert_eq!(preset("earth_moon_case1").unwrap().arm_length(0).unwrap(), 1_000.0);
    }

    #[test]
    fn local_arm_override() {
        let opts = PresetOptions {
            local_arm_m: Some(1_000.0),
            ..PresetOptions::default()
        };
        let s = Preset::EarthMoonCase3.build_with(&opts).unwrap();
        assert_relative_eq!(s.arm_length(0).unwrap(), 1_000.0, max_relative = 1e-9);
    }

    #[test]
    fn unknown_preset() {
        assert_eq!(preset("nosuch").unwrap_err(), ScenarioError::UnknownPreset("nosuch".into()));
    }

    #[test]
    fn arm_index_out_of_range() {
        let s = preset("gisin1999").unwrap();
        assert_eq!(s.arm_length(2).unwrap_err(), ScenarioError::ArmIndex(2));
    }

    #[test]
    fn light_time_examples() {
        assert_relative_eq!(light_time(3.844e8).unwrap(), 1.2822, max_relative = 1e-4);
        assert_eq!(light_time(0.0).unwrap(), 0.0);
        assert_eq!(light_time(299_792_458.0).unwrap(), 1.0);
        assert!(light_time(-1.0).is_err());
        assert!(light_time(f64::NAN).is_err());
    }

    #[test]
    fn equalized_starts_cancel_arrival_difference() {
        let s = preset("earth_moon_case3").unwrap().with_equalized_starts();
        let starts: Vec<f64> = s.arms().iter().map(|a| a.length() / C + a.offset_s).collect();
        assert_relative_eq!(starts[0], starts[1], max_relative = 1e-15);
    }
}
