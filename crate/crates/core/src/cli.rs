//! Command-line front end. The `cosmic-bell` binary is a thin wrapper
//! around [`run`].
//!
//! Exit codes: 0 success, 2 validation or usage error, 3 unknown preset or
//! scenario reference, 4 I/O failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use crate::bell::{chsh_value, lhv_correlation, quantum_correlation, ChshSettings};
use crate::bounds::{
    self, apriori_scales, cadence_threshold, coupling_constant, earth_factor, moon_factor, mond_candidate,
    speed_bound, straight_line_bound, ObservationWindow, ProperTimeFactor,
};
use crate::constants::PhysicalConstants;
use crate::discrepancy::{self, claims_for, Topic};
use crate::link::{budget, geometric_loss_db, pairs_for_significance, LinkSpec};
use crate::report::{num, Format, RunReport, Table};
use crate::scenario::{load_scenario, Preset, Scenario, ScenarioError};
use crate::sim::{simulate, sweep_speed, CollapseModel, Departure, Fallback, SimConfig, SpeedGrid};
use crate::units::{parse_angle, parse_duration, parse_length, parse_speed};

pub const WORKERS_ENV: &str = "COSMIC_BELL_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    UnknownReference(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::UnknownReference(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        match e {
            ScenarioError::UnknownPreset(_) => CliError::UnknownReference(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "cosmic-bell", version, about = "Bell-test bounds, simulations and link budgets at astronomical distances")]
pub struct Cli {
    /// Output format for the report on stdout.
    #[arg(long, global = true, default_value = "json")]
    pub format: Format,
    /// Also write the command's discrepancy ledger to this CSV file.
    #[arg(long, global = true)]
    pub discrepancies: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower bound on the speed of quantum correlations for a scenario.
    Bound(BoundArgs),
    /// Monte Carlo of a CHSH test under a finite collapse speed.
    Simulate(SimulateArgs),
    /// Monte Carlo over a grid of collapse speeds.
    Sweep(SweepArgs),
    /// Link losses, coincidence rate and integration time.
    Linkbudget(LinkArgs),
    /// A-priori speed and distance scales.
    Scales(ScalesArgs),
    /// Validate a scenario file.
    Validate(ValidateArgs),
    /// List presets or export one as a scenario file.
    Presets(PresetsArgs),
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Preset name or scenario file path.
    pub scenario: String,
    /// Measurement duration override, e.g. `10ps`.
    #[arg(long)]
    pub tau: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// Preset name or scenario file path.
    pub scenario: String,
    /// Statistics of pairs the influence does not connect.
    #[arg(long)]
    pub fallback: Fallback,
    /// Number of simulated pairs (per grid point for sweeps).
    #[arg(long, default_value_t = 100_000)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; changes wall time only.
    #[arg(long, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    /// Delay the earlier arm so both measurements start together.
    #[arg(long)]
    pub equalize: bool,
    /// Influence departs at the first measurement's start or end.
    #[arg(long, default_value = "start")]
    pub departure: Departure,
    #[arg(long, default_value = "0deg", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "45deg", allow_hyphen_values = true)]
    pub a_prime: String,
    #[arg(long, default_value = "22.5deg", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value = "67.5deg", allow_hyphen_values = true)]
    pub b_prime: String,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    /// Collapse speed in units of c, or `inf`.
    #[arg(long, default_value = "inf")]
    pub v: String,
    /// Write the leading pair records as JSON lines.
    #[arg(long)]
    pub trace_out: Option<PathBuf>,
    #[arg(long, default_value_t = 1_000)]
    pub trace_cap: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    /// Lowest speed, units of c.
    #[arg(long)]
    pub v_min: f64,
    /// Highest speed, units of c.
    #[arg(long)]
    pub v_max: f64,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    /// Linear instead of logarithmic spacing.
    #[arg(long)]
    pub linear: bool,
    /// CSV output path for the sweep curve.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    /// Long-arm length, e.g. `384400km`.
    #[arg(long)]
    pub length: String,
    /// Length at which the reference loss was measured.
    #[arg(long, default_value = "500km")]
    pub reference_length: String,
    #[arg(long, default_value_t = 0.0)]
    pub reference_loss_db: f64,
    /// Local-arm length.
    #[arg(long, default_value = "1km")]
    pub local_length: String,
    #[arg(long, default_value_t = 0.0)]
    pub local_loss_db: f64,
    /// Source pair rate, pairs/s (no default).
    #[arg(long)]
    pub pair_rate: f64,
    #[arg(long, default_value_t = 1.0)]
    pub eff_a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub eff_b: f64,
    /// Expected CHSH value; defaults to 2√2.
    #[arg(long)]
    pub s_expected: Option<f64>,
    #[arg(long, default_value_t = 3.0)]
    pub k_sigma: f64,
    /// Proper-time corrections used for the cadence flag: `quoted` (0.08, 0.0031) or `constants`.
    #[arg(long, default_value = "quoted")]
    pub cadence: CadenceSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CadenceSource {
    Quoted,
    Constants,
}

#[derive(Debug, Args)]
pub struct ScalesArgs {
    /// Comma-separated exponents N.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    pub n: Option<Vec<String>>,
    /// `proton`, `electron` or a mass in kg.
    #[arg(long, default_value = "proton")]
    pub mass: String,
    /// Base distance scale multiplied by κᴺ: `planck` or a length.
    #[arg(long, default_value = "planck")]
    pub base_length: String,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct PresetsArgs {
    /// Print this preset as a scenario file instead of listing.
    #[arg(long)]
    pub export: Option<String>,
}

/// Parses `args`, runs the command, writes the report to `stdout` and
/// diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.discrepancies {
                if let Some(report) = &output.report {
                    if let Err(e) = write_file(path, &discrepancy::to_csv(&report.discrepancies)) {
                        let _ = writeln!(stderr, "error: {e}");
                        return e.exit_code();
                    }
                }
            }
            let _ = stdout.write_all(output.stdout.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Output {
    stdout: String,
    report: Option<RunReport>,
}

impl Output {
    fn report(r: RunReport, format: Format) -> Self {
        Output {
            stdout: r.render(format),
            report: Some(r),
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Bound(a) => cmd_bound(a).map(|r| Output::report(r, cli.format)),
        Command::Simulate(a) => cmd_simulate(a).map(|r| Output::report(r, cli.format)),
        Command::Sweep(a) => cmd_sweep(a).map(|r| Output::report(r, cli.format)),
        Command::Linkbudget(a) => cmd_linkbudget(a).map(|r| Output::report(r, cli.format)),
        Command::Scales(a) => cmd_scales(a).map(|r| Output::report(r, cli.format)),
        Command::Validate(a) => cmd_validate(a).map(|r| Output::report(r, cli.format)),
        Command::Presets(a) => cmd_presets(a, cli.format),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Resolves a preset name or a scenario file path.
pub fn resolve_scenario(reference: &str) -> Result<(Scenario, Option<Preset>), CliError> {
    if let Ok(p) = reference.parse::<Preset>() {
        return Ok((p.build(), Some(p)));
    }
    let path = Path::new(reference);
    if !path.exists() {
        let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
        return Err(CliError::UnknownReference(format!(
            "`{reference}` is neither a preset ({}) nor an existing file",
            names.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok((load_scenario(&text)?, None))
}

fn cmd_bound(args: &BoundArgs) -> Result<RunReport, CliError> {
    let (scenario, preset) = resolve_scenario(&args.scenario)?;
    let tau = args.tau.as_deref().map(parse_duration).transpose().map_err(invalid)?;
    let bound = speed_bound(&scenario, tau).map_err(invalid)?;
    let gain_vs = |p: Preset| -> Result<f64, CliError> {
        let reference = speed_bound(&p.build(), Some(bound.tau_s)).map_err(invalid)?;
        Ok(bound.v_min_over_c / reference.v_min_over_c)
    };
    let claims = preset.map(claims_for).unwrap_or_default();
    let results = json!({
        "v_min_over_c": bound.v_min_over_c,
        "l_max_m": bound.l_max_m,
        "tau_s": bound.tau_s,
        "arm_lengths_m": scenario.arm_lengths(),
        "detector_separation_m": scenario.detector_separation(),
        "straight_line_v_over_c": straight_line_bound(&scenario, Some(bound.tau_s)).map_err(invalid)?,
        "gain_vs_gisin1999": gain_vs(Preset::Gisin1999)?,
        "gain_vs_cao2017": gain_vs(Preset::Cao2017)?,
        "claims": claims,
    });
    let mut table = Table::new(["quantity", "value"]);
    table.push(vec!["v_min_over_c".into(), num(bound.v_min_over_c)]);
    table.push(vec!["l_max_m".into(), num(bound.l_max_m)]);
    table.push(vec!["tau_s".into(), num(bound.tau_s)]);
    table.push(vec!["gain_vs_gisin1999".into(), num(results["gain_vs_gisin1999"].as_f64().unwrap_or(f64::NAN))]);
    table.push(vec!["gain_vs_cao2017".into(), num(results["gain_vs_cao2017"].as_f64().unwrap_or(f64::NAN))]);
    let inputs = json!({
        "scenario": args.scenario,
        "scenario_name": scenario.name(),
        "tau_s": bound.tau_s,
        "tau_overridden": tau.is_some(),
        "frame": scenario.frame_note(),
    });
    Ok(RunReport::new("bound", inputs, results)
        .with_table(table)
        .with_discrepancies(discrepancy::for_topics(&[Topic::Bound, Topic::Gain])))
}

struct Experiment {
    scenario: Scenario,
    settings: ChshSettings,
    config: SimConfig,
    inputs: serde_json::Value,
}

fn experiment(args: &ExperimentArgs) -> Result<Experiment, CliError> {
    let (mut scenario, _) = resolve_scenario(&args.scenario)?;
    if args.equalize {
        scenario = scenario.with_equalized_starts();
    }
    let angle = |s: &str| parse_angle(s).map_err(invalid);
    let settings = ChshSettings::new(angle(&args.a)?, angle(&args.a_prime)?, angle(&args.b)?, angle(&args.b_prime)?)
        .ok_or_else(|| invalid("analyzer angles must be finite"))?;
    if args.n < 4 {
        return Err(invalid(format!("--n must be at least 4, got {}", args.n)));
    }
    if args.workers == Some(0) {
        return Err(invalid("--workers must be at least 1"));
    }
    let mut config = SimConfig::new(args.n, args.seed);
    config.workers = args.workers;
    let inputs = json!({
        "scenario": args.scenario,
        "scenario_name": scenario.name(),
        "fallback": args.fallback,
        "n_pairs": args.n,
        "seed": args.seed,
        "equalize": args.equalize,
        "departure": args.departure,
        "settings_rad": {
            "a": settings.a.radians(),
            "a_prime": settings.a_prime.radians(),
            "b": settings.b.radians(),
            "b_prime": settings.b_prime.radians(),
        },
        "arm_lengths_m": scenario.arm_lengths(),
        "offsets_s": scenario.arms().iter().map(|a| a.offset_s).collect::<Vec<_>>(),
        "tau_s": scenario.arms().iter().map(|a| a.tau_s).collect::<Vec<_>>(),
    });
    Ok(Experiment {
        scenario,
        settings,
        config,
        inputs,
    })
}

fn cmd_simulate(args: &SimulateArgs) -> Result<RunReport, CliError> {
    let mut exp = experiment(&args.experiment)?;
    let v = parse_speed(&args.v).map_err(invalid)?;
    let model = CollapseModel::new(v, args.experiment.fallback)
        .map_err(invalid)?
        .with_departure(args.experiment.departure);
    if args.trace_out.is_some() {
        exp.config.trace_cap = args.trace_cap;
    }
    let result = simulate(&exp.scenario, &model, &exp.settings, &exp.config).map_err(invalid)?;
    if let Some(path) = &args.trace_out {
        let mut lines = String::new();
        for rec in &result.trace {
            lines.push_str(&serde_json::to_string(rec).expect("record serializes"));
            lines.push('\n');
        }
        write_file(path, &lines)?;
    }
    let mut table = Table::new(["setting", "angle_a_rad", "angle_b_rad", "E_hat", "n", "E_quantum", "E_lhv"]);
    for (est, (a, b)) in result.estimate.per_setting.iter().zip(exp.settings.pairs()) {
        table.push(vec![
            est.setting.to_string(),
            num(est.angle_a),
            num(est.angle_b),
            num(est.e_hat),
            est.n.to_string(),
            num(quantum_correlation(a, b)),
            num(lhv_correlation(a, b)),
        ]);
    }
    let mut inputs = exp.inputs;
    inputs["v_over_c"] = json!(if v.is_infinite() { "inf".to_string() } else { v.to_string() });
    let results = json!({
        "s_hat": result.estimate.s_hat,
        "stderr_s": result.estimate.stderr_s,
        "per_setting": result.estimate.per_setting,
        "n_pairs": result.n_pairs,
        "n_connected": result.n_connected,
        "fraction_connected": result.fraction_connected,
        "critical_speed_over_c": result.critical_speed_over_c,
        "trace_path_m": result.trace_path_m,
        "detector_separation_m": result.detector_separation_m,
        "s_quantum": chsh_value(quantum_correlation, &exp.settings),
        "s_lhv": chsh_value(lhv_correlation, &exp.settings),
    });
    Ok(RunReport::new("simulate", inputs, results)
        .with_seed(args.experiment.seed)
        .with_table(table)
        .with_discrepancies(discrepancy::for_topics(&[Topic::Chsh])))
}

fn cmd_sweep(args: &SweepArgs) -> Result<RunReport, CliError> {
    let exp = experiment(&args.experiment)?;
    let grid = SpeedGrid {
        min: args.v_min,
        max: args.v_max,
        points: args.points,
        log_spaced: !args.linear,
    };
    let values = grid.values().map_err(invalid)?;
    let curve = sweep_speed(
        &exp.scenario,
        args.experiment.fallback,
        args.experiment.departure,
        &exp.settings,
        &values,
        &exp.config,
    )
    .map_err(invalid)?;
    let csv = curve.to_csv();
    if let Some(path) = &args.out {
        write_file(path, &csv)?;
    }
    let bracket = curve.transition_bracket();
    let v_star = curve.critical_speed_over_c;
    let mut table = Table::new(["v_over_c", "S_hat", "stderr_S", "n_pairs", "fraction_connected"]);
    for p in &curve.points {
        table.push(vec![
            p.v_over_c.to_string(),
            p.s_hat.to_string(),
            p.stderr_s.to_string(),
            p.n_pairs.to_string(),
            p.fraction_connected.to_string(),
        ]);
    }
    let mut inputs = exp.inputs;
    inputs["grid"] = json!(grid);
    inputs["out"] = json!(args.out.as_ref().map(|p| p.display().to_string()));
    let results = json!({
        "points": curve.points.len(),
        "critical_speed_over_c": v_star,
        "transition_bracket": bracket.map(|(lo, hi)| [lo, hi]),
        "bracket_contains_critical_speed": bracket.map(|(lo, hi)| lo < v_star && v_star <= hi),
        "curve": curve.points,
    });
    Ok(RunReport::new("sweep", inputs, results)
        .with_seed(args.experiment.seed)
        .with_table(table)
        .with_discrepancies(discrepancy::for_topics(&[Topic::Chsh, Topic::Bound])))
}

fn cmd_linkbudget(args: &LinkArgs) -> Result<RunReport, CliError> {
    let k = PhysicalConstants::STANDARD;
    let length = parse_length(&args.length).map_err(invalid)?;
    let reference = parse_length(&args.reference_length).map_err(invalid)?;
    let local = parse_length(&args.local_length).map_err(invalid)?;
    let s_expected = args.s_expected.unwrap_or(2.0 * std::f64::consts::SQRT_2);
    let far = LinkSpec::new(length, reference, args.reference_loss_db, args.eff_a).map_err(invalid)?;
    let near = LinkSpec::new(local, local, args.local_loss_db, args.eff_b).map_err(invalid)?;
    let plan = pairs_for_significance(s_expected, args.k_sigma).map_err(invalid)?;
    let (earth, moon) = match args.cadence {
        CadenceSource::Quoted => (ProperTimeFactor::from_correction(0.08), ProperTimeFactor::from_correction(0.0031)),
        CadenceSource::Constants => (earth_factor(&k), moon_factor(&k)),
    };
    let threshold = cadence_threshold(earth, moon).map_err(invalid)?;
    let report = budget(args.pair_rate, [far, near], &plan, threshold).map_err(invalid)?;
    let inputs = json!({
        "length_m": length,
        "reference_length_m": reference,
        "reference_loss_db": args.reference_loss_db,
        "local_length_m": local,
        "local_loss_db": args.local_loss_db,
        "pair_rate": args.pair_rate,
        "eff_a": args.eff_a,
        "eff_b": args.eff_b,
        "s_expected": s_expected,
        "k_sigma": args.k_sigma,
        "cadence_source": match args.cadence { CadenceSource::Quoted => "quoted", CadenceSource::Constants => "constants" },
    });
    let results = json!({
        "losses_db": report.losses_db,
        "geometric_extra_db": geometric_loss_db(reference, length).map_err(invalid)?,
        "coincidence_rate": report.coincidence_rate,
        "pairs_required": report.pairs_required,
        "pairs_per_setting": report.pairs_per_setting,
        "integration_time_s": report.integration_time_s,
        "cadence_flag": report.cadence_flag,
        "cadence_threshold": report.cadence_threshold,
        "achieved_sigma": plan.achieved_sigma,
    });
    Ok(RunReport::new("linkbudget", inputs, results).with_discrepancies(discrepancy::for_topics(&[Topic::ProperTime])))
}

fn cmd_scales(args: &ScalesArgs) -> Result<RunReport, CliError> {
    let k = PhysicalConstants::STANDARD;
    let exponents: Vec<i32> = match &args.n {
        None => vec![-1, 0, 1],
        Some(items) => items
            .iter()
            .map(|s| s.trim().parse::<i32>().map_err(|_| invalid(format!("--n: `{s}` is not an integer"))))
            .collect::<Result<_, _>>()?,
    };
    if exponents.is_empty() {
        return Err(invalid("--n needs at least one exponent"));
    }
    let mass = match args.mass.as_str() {
        "proton" => k.m_proton,
        "electron" => k.m_electron,
        other => other.parse::<f64>().map_err(|_| invalid(format!("--mass: `{other}` is not proton, electron or kg")))?,
    };
    let base = match args.base_length.as_str() {
        "planck" => k.planck_length,
        other => parse_length(other).map_err(invalid)?,
    };
    let window = ObservationWindow::earth_moon(&k);
    let mut rows = apriori_scales(&exponents, mass, &window, base, &k).map_err(invalid)?;
    rows.push(mond_candidate(&window, &k));
    let mut table = Table::new(["label", "N", "V_over_c", "D_m", "classification"]);
    for r in &rows {
        table.push(vec![
            r.label.clone(),
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            if r.v_infinite { "inf".into() } else { r.v_over_c.map(num).unwrap_or_default() },
            num(r.d_m),
            r.classification.as_str().into(),
        ]);
    }
    let inputs = json!({
        "n": exponents,
        "mass_kg": mass,
        "base_length_m": base,
        "window": window,
    });
    let results = json!({
        "kappa": coupling_constant(mass, &k),
        "candidates": rows,
    });
    Ok(RunReport::new("scales", inputs, results)
        .with_table(table)
        .with_discrepancies(discrepancy::for_topics(&[Topic::Scales])))
}

fn cmd_validate(args: &ValidateArgs) -> Result<RunReport, CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.file.display())))?;
    let scenario = load_scenario(&text)?;
    let bound = bounds::speed_bound(&scenario, None).map_err(invalid)?;
    Ok(RunReport::new(
        "validate",
        json!({ "file": args.file.display().to_string() }),
        json!({
            "valid": true,
            "name": scenario.name(),
            "arm_lengths_m": scenario.arm_lengths(),
            "tau_s": scenario.arms().iter().map(|a| a.tau_s).collect::<Vec<_>>(),
            "v_min_over_c": bound.v_min_over_c,
        }),
    ))
}

fn cmd_presets(args: &PresetsArgs, format: Format) -> Result<Output, CliError> {
    if let Some(name) = &args.export {
        let preset: Preset = name.parse()?;
        let mut json = preset.build().to_json();
        json.push('\n');
        return Ok(Output {
            stdout: json,
            report: None,
        });
    }
    let mut table = Table::new(["name", "arm0_m", "arm1_m", "v_min_over_c", "description"]);
    let mut list = Vec::new();
    for p in Preset::ALL {
        let s = p.build();
        let [l0, l1] = s.arm_lengths();
        let v = speed_bound(&s, None).map_err(invalid)?.v_min_over_c;
        table.push(vec![p.name().into(), num(l0), num(l1), num(v), p.description().into()]);
        list.push(json!({
            "name": p.name(),
            "description": p.description(),
            "arm_lengths_m": [l0, l1],
            "v_min_over_c": v,
        }));
    }
    let report = RunReport::new("presets", json!({}), json!({ "presets": list })).with_table(table);
    Ok(Output::report(report, format))
}
