//! Parsing of quantities with explicit unit suffixes (`5ps`, `384400km`,
//! `22.5deg`). Everything is normalised to SI.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}` as {kind}: {reason}")]
pub struct UnitError {
    pub input: String,
    pub kind: &'static str,
    pub reason: String,
}

fn split(input: &str, kind: &'static str, units: &[(&str, f64)]) -> Result<f64, UnitError> {
    let s = input.trim();
    let err = |reason: String| UnitError {
        input: input.to_string(),
        kind,
        reason,
    };
    // Longest suffix first so `ms` is not read as `s`.
    let mut sorted: Vec<_> = units.to_vec();
    sorted.sort_by_key(|(u, _)| std::cmp::Reverse(u.len()));
    let (number, factor) = sorted
        .iter()
        .find_map(|(unit, factor)| s.strip_suffix(unit).map(|n| (n.trim(), *factor)))
        .ok_or_else(|| {
            let names: Vec<_> = units.iter().map(|(u, _)| *u).collect();
            err(format!("missing unit suffix (one of {})", names.join(", ")))
        })?;
    let value: f64 = number.parse().map_err(|_| err(format!("`{number}` is not a number")))?;
    if !value.is_finite() {
        return Err(err("value must be finite".into()));
    }
    Ok(value * factor)
}

/// Duration in seconds; accepts `fs`, `ps`, `ns`, `us`, `ms`, `s`.
pub fn parse_duration(input: &str) -> Result<f64, UnitError> {
    split(
        input,
        "duration",
        &[("fs", 1e-15), ("ps", 1e-12), ("ns", 1e-9), ("us", 1e-6), ("ms", 1e-3), ("s", 1.0)],
    )
}

/// Length in metres; accepts `m` and `km`.
pub fn parse_length(input: &str) -> Result<f64, UnitError> {
    split(input, "length", &[("km", 1e3), ("m", 1.0)])
}

/// Angle in radians; requires `deg` or `rad`.
pub fn parse_angle(input: &str) -> Result<f64, UnitError> {
    split(input, "angle", &[("deg", std::f64::consts::PI / 180.0), ("rad", 1.0)])
}

/// Speed in units of c; `inf` for instantaneous.
pub fn parse_speed(input: &str) -> Result<f64, UnitError> {
    let s = input.trim();
    if matches!(s, "inf" | "infinity" | "∞") {
        return Ok(f64::INFINITY);
    }
    let v: f64 = s.parse().map_err(|_| UnitError {
        input: input.to_string(),
        kind: "speed (units of c)",
        reason: "not a number".into(),
    })?;
    if !(v > 0.0) {
        return Err(UnitError {
            input: input.to_string(),
            kind: "speed (units of c)",
            reason: "must be > 0".into(),
        });
    }
    Ok(v)
}
