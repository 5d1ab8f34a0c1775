//! End-to-end runs of the `cosmic-bell` binary.

use std::path::Path;
use std::process::{Command, Output};

use cosmic_bell::{load_scenario, Preset};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosmic-bell"))
        .args(args)
        .env_remove("COSMIC_BELL_WORKERS")
        .output()
        .expect("binary runs")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("docs").join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let out = bin(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const SMALL_SIM: [&str; 5] = ["--fallback", "lhv", "--n", "2000", "--seed=7"];

fn every_command() -> Vec<Vec<String>> {
    let tmp = std::env::temp_dir().join(format!("cosmic-bell-cli-{}.json", std::process::id()));
    std::fs::write(&tmp, Preset::Gisin1999.build().to_json()).unwrap();
    let mut sim = vec!["simulate", "earth_moon_case3", "--v", "1e10"];
    sim.extend(SMALL_SIM);
    let mut sweep = vec!["sweep", "gisin1999", "--v-min", "1e5", "--v-max", "1e8", "--points", "4"];
    sweep.extend(SMALL_SIM);
    let cmds: Vec<Vec<&str>> = vec![
        vec!["bound", "cao2017"],
        sim,
        sweep,
        vec!["linkbudget", "--length", "384400km", "--reference-loss-db", "30", "--pair-rate", "1e9"],
        vec!["scales", "--n=-2,-1,0,1,2"],
        vec!["validate", tmp.to_str().unwrap()],
        vec!["presets"],
    ];
    cmds.into_iter().map(|c| c.into_iter().map(String::from).collect()).collect()
}

#[test]
fn json_reports_match_schema() {
    let validator = schema("report.schema.json");
    for cmd in every_command() {
        let args: Vec<&str> = cmd.iter().map(String::as_str).collect();
        let report = json_ok(&args);
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(report["command"], args[0]);
    }
}

#[test]
fn every_command_accepts_every_format() {
    for cmd in every_command() {
        for format in ["json", "csv", "text"] {
            let mut args: Vec<&str> = cmd.iter().map(String::as_str).collect();
            args.extend(["--format", format]);
            let out = bin(&args);
            assert_eq!(out.status.code(), Some(0), "{args:?}");
            assert!(!out.stdout.is_empty());
        }
    }
}

#[test]
fn exported_presets_match_scenario_schema_and_round_trip() {
    let validator = schema("scenario.schema.json");
    for p in Preset::ALL {
        let out = bin(&["presets", "--export", p.name()]);
        assert_eq!(out.status.code(), Some(0));
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(validator.is_valid(&doc), "{}", p.name());
        let reloaded = load_scenario(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
        for (a, b) in reloaded.arm_lengths().iter().zip(p.build().arm_lengths()) {
            assert!((a - b).abs() < 1e-6, "{}: {a} vs {b}", p.name());
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["bound", "earth_moon_case3"]).status.code(), Some(0));
    assert_eq!(bin(&["bound", "gisin1999", "--tau", "-5ps"]).status.code(), Some(2));
    assert_eq!(bin(&["bound", "gisin1999", "--tau", "5"]).status.code(), Some(2));
    assert_eq!(bin(&["linkbudget", "--length", "384400km"]).status.code(), Some(2));
    assert_eq!(bin(&["simulate", "gisin1999", "--fallback", "lhv", "--v", "0"]).status.code(), Some(2));
    assert_eq!(bin(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(bin(&["bound", "andromeda"]).status.code(), Some(3));
    assert_eq!(bin(&["presets", "--export", "andromeda"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let unwritable = dir.path().join("missing").join("curve.csv");
    let mut args = vec!["sweep", "gisin1999", "--v-min", "1e5", "--v-max", "1e8", "--points", "3", "--out"];
    args.push(unwritable.to_str().unwrap());
    args.extend(SMALL_SIM);
    assert_eq!(bin(&args).status.code(), Some(4));
}

#[test]
fn invalid_scenario_file_reports_field_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = Preset::Gisin1999.build().to_json().replacen("\"tau_s\": 5e-12", "\"tau_s\": -1.0", 1);
    std::fs::write(&path, text).unwrap();
    let out = bin(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("arms[0].tau_s"));

    let unknown = Preset::Gisin1999.build().to_json().replacen('{', "{\"colour\": 1,", 1);
    std::fs::write(&path, unknown).unwrap();
    let out = bin(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn discrepancies_flag_writes_ledger_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.csv");
    let out = bin(&["bound", "gisin1999", "--discrepancies", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("claim_id,paper_location,paper_value,computed_value,relative_difference\n"));
    assert!(csv.contains("gisin_bound_quoted_32e7"));
}

#[test]
fn simulate_trace_is_written_as_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.jsonl");
    let mut args = vec!["simulate", "gisin1999", "--trace-cap", "10", "--trace-out", path.to_str().unwrap()];
    args.extend(SMALL_SIM);
    json_ok(&args);
    let lines: Vec<Value> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[3]["index"], 3);
}

#[test]
fn sweep_is_identical_across_worker_counts_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, workers: Option<&str>, env: Option<&str>| {
        let path = dir.path().join(name);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_cosmic-bell"));
        cmd.args(["sweep", "earth_moon_case3", "--equalize", "--v-min", "1e10", "--v-max", "1e13", "--points", "6"])
            .args(SMALL_SIM)
            .arg("--out")
            .arg(&path)
            .env_remove("COSMIC_BELL_WORKERS");
        if let Some(w) = workers {
            cmd.args(["--workers", w]);
        }
        if let Some(w) = env {
            cmd.env("COSMIC_BELL_WORKERS", w);
        }
        assert_eq!(cmd.output().unwrap().status.code(), Some(0));
        std::fs::read(&path).unwrap()
    };
    let one = run("a.csv", Some("1"), None);
    assert_eq!(one, run("b.csv", Some("5"), None));
    assert_eq!(one, run("c.csv", None, Some("3")));
    assert_eq!(one, run("d.csv", None, None));
}

#[test]
fn presets_listing_names_every_preset() {
    let report = json_ok(&["presets"]);
    let names: Vec<&str> = report["results"]["presets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["name"].as_str().unwrap())
        .collect();
    let expected: Vec<&str> = Preset::ALL.iter().map(|p| p.name()).collect();
    assert_eq!(names, expected);
}
