//! Command-line front end: `check`, `construct`, `verify`, `sweep`.
//!
//! Exit codes: 0 on success or match, 1 when a verification reports a
//! mismatch, 2 on invalid input. JSON output has sorted keys and no floats,
//! so parsing and re-serializing it reproduces the same bytes.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::construct::{
    construct_thm_e, construct_thm_r_gorenstein, lift_codimension, ConstructError, FamilyKind,
    FamilyResult, Parity, MIN_THM_E_SOCLE_DEGREE, MIN_THM_R_D,
};
use crate::exact::{FieldSpec, DEFAULT_PRIME, PRNG_NAME};
use crate::invsys::{sweep_characteristics, verify_construction, Verdict, VerificationReport};
use crate::seqcore::{
    differentiability_violation, first_growth_violation, si_violation, symmetry_violation,
    unimodality_violation, HVector,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

pub const DEFAULT_SEED: u64 = 20_151_109;
pub const DEFAULT_TRIALS: u64 = 5;
pub const DEFAULT_SWEEP_CHARS: [u64; 4] = [0, 101, 1009, 32003];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    InvSys(#[from] crate::invsys::InvSysError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    /// `--help` or `--version` output; not a failure.
    #[error("{0}")]
    Help(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

/// Inclusive integer range: `6`, `6..10` or `6..=10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub start: u64,
    pub end: u64,
}

impl ParamRange {
    pub fn single(v: u64) -> Self {
        Self { start: v, end: v }
    }

    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a nonnegative integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { start, end })
    }
}

/// Comma-separated characteristics for `sweep --chars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharList(pub Vec<u64>);

impl FromStr for CharList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("{t:?} is not a characteristic"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(CharList)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gorenstein",
    version,
    about = "Classify, construct and verify h-vectors of graded artinian algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Field characteristic for `verify`: 0 or a prime.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    field: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report O-sequence, symmetry, unimodality, differentiability and SI.
    Check {
        /// Comma-separated entries, e.g. 1,10,14,20,14,10,1
        vector: String,
    },
    /// Emit a family's level and Gorenstein h-vectors.
    Construct {
        #[command(subcommand)]
        family: FamilyArgs,
    },
    /// Compare a family's level h-vector with inverse-system ranks.
    Verify {
        #[command(subcommand)]
        family: FamilyArgs,
    },
    /// `verify` across several characteristics.
    Sweep {
        #[command(subcommand)]
        family: FamilyArgs,
        /// Characteristics to sweep, e.g. 0,101,1009,32003.
        #[arg(long, global = true)]
        chars: Option<CharList>,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyArgs {
    /// Socle degree e >= 6, codimension e + 4.
    ThmE {
        #[arg(long = "e")]
        e: ParamRange,
        /// Lift the codimension by this many variables.
        #[arg(long = "a")]
        a: Option<u64>,
    },
    /// Codimension 5, socle degree 2d + 1 (odd) or 2d (even), d >= 10.
    ThmR {
        #[arg(long = "d")]
        d: ParamRange,
        /// Omit to use both parities.
        #[arg(long)]
        parity: Option<Parity>,
        #[arg(long = "a")]
        a: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Check,
    Construct,
    Verify,
    Sweep,
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    /// For `check`.
    pub vector: Option<HVector>,
    /// `(kind, parameter)` pairs in output order.
    pub families: Vec<(FamilyKind, u64)>,
    pub lift: Option<u64>,
    pub field: FieldSpec,
    pub characteristics: Vec<u64>,
    pub seed: u64,
    pub trials: u64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Arguments after the program name, joined by spaces.
    pub command_line: String,
}

/// Requested families plus the optional `--a` lift.
type Expanded = (Vec<(FamilyKind, u64)>, Option<u64>);

fn expand_families(family: &FamilyArgs) -> Result<Expanded, CliError> {
    match family {
        FamilyArgs::ThmE { e, a } => {
            if e.start < MIN_THM_E_SOCLE_DEGREE {
                return Err(ConstructError::Nonexistent {
                    socle_degree: e.start,
                }
                .into());
            }
            Ok((e.iter().map(|v| (FamilyKind::ThmE, v)).collect(), *a))
        }
        FamilyArgs::ThmR { d, parity, a } => {
            if d.start < MIN_THM_R_D {
                return Err(ConstructError::DTooSmall(d.start).into());
            }
            let parities = match parity {
                Some(p) => vec![*p],
                None => Parity::BOTH.to_vec(),
            };
            let fams = d
                .iter()
                .flat_map(|v| parities.iter().map(move |&p| (FamilyKind::thm_r(p), v)))
                .collect();
            Ok((fams, *a))
        }
    }
}

impl RunConfig {
    /// Parses and validates; `args` includes the program name.
    pub fn from_args<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
        let command_line = args
            .iter()
            .skip(1)
            .map(|a| a.to_string_lossy().into_owned())
            .collect::<Vec<_>>()
            .join(" ");
        let cli = Cli::try_parse_from(&args).map_err(|e| match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Help(e.to_string()),
            ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                CliError::Usage("a subcommand is required; see --help".into())
            }
            _ => CliError::Usage(e.to_string()),
        })?;
        let c = cli.common;
        let field = FieldSpec::new(c.field).map_err(|e| CliError::Usage(e.to_string()))?;
        if c.trials == 0 {
            return Err(CliError::Usage("--trials must be at least 1".into()));
        }
        let mut config = RunConfig {
            command: CommandKind::Check,
            vector: None,
            families: Vec::new(),
            lift: None,
            field,
            characteristics: Vec::new(),
            seed: c.seed,
            trials: c.trials,
            format: c.format,
            out: c.out,
            command_line,
        };
        match cli.command {
            Command::Check { vector } => {
                let h = vector
                    .parse::<HVector>()
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                config.vector = Some(h);
            }
            Command::Construct { family } => {
                config.command = CommandKind::Construct;
                (config.families, config.lift) = expand_families(&family)?;
            }
            Command::Verify { family } => {
                config.command = CommandKind::Verify;
                (config.families, config.lift) = expand_families(&family)?;
            }
            Command::Sweep { family, chars } => {
                config.command = CommandKind::Sweep;
                (config.families, config.lift) = expand_families(&family)?;
                let chars = chars.map_or_else(|| DEFAULT_SWEEP_CHARS.to_vec(), |c| c.0);
                if chars.is_empty() {
                    return Err(CliError::Usage("--chars needs at least one entry".into()));
                }
                for &ch in &chars {
                    FieldSpec::new(ch).map_err(|e| CliError::Usage(e.to_string()))?;
                }
                config.characteristics = chars;
            }
        }
        if config.lift.is_some() && config.command != CommandKind::Construct {
            return Err(CliError::Usage("--a only applies to `construct`".into()));
        }
        Ok(config)
    }
}

/// Rendered output and exit status of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

fn envelope(config: &RunConfig, results: Value) -> Value {
    json!({
        "tool": "gorenstein",
        "version": env!("CARGO_PKG_VERSION"),
        "command": config.command_line,
        "field": config.field.characteristic(),
        "seed": config.seed,
        "prng": PRNG_NAME,
        "results": results,
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json(value: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn csv_row(kind: &str, param: u64, role: &str, h: &HVector) -> String {
    let mut row = format!("{kind},{param},{role}");
    for x in h.entries() {
        write!(row, ",{x}").unwrap();
    }
    row.push('\n');
    row
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

#[derive(Serialize)]
struct PredicateOutcome {
    holds: bool,
    violation: Option<String>,
}

impl PredicateOutcome {
    fn of<T: std::fmt::Display>(v: Option<T>) -> Self {
        Self {
            holds: v.is_none(),
            violation: v.map(|x| x.to_string()),
        }
    }
}

fn render_check(config: &RunConfig, h: &HVector) -> String {
    let predicates = [
        (
            "o_sequence",
            PredicateOutcome::of(first_growth_violation(h.entries())),
        ),
        (
            "symmetric",
            PredicateOutcome::of(symmetry_violation(h).map(|i| {
                format!(
                    "h_{i} = {} but h_{} = {}",
                    h.entries()[i],
                    h.socle_degree() - i,
                    h.entries()[h.socle_degree() - i]
                )
            })),
        ),
        (
            "unimodal",
            PredicateOutcome::of(
                unimodality_violation(h)
                    .map(|k| format!("increase into degree {k} after a decrease")),
            ),
        ),
        (
            "differentiable",
            PredicateOutcome::of(differentiability_violation(h)),
        ),
        ("si_sequence", PredicateOutcome::of(si_violation(h))),
    ];
    match config.format {
        OutputFormat::Json => {
            let mut preds = serde_json::Map::new();
            for (name, p) in &predicates {
                preds.insert(name.to_string(), serde_json::to_value(p).unwrap());
            }
            canonical_json(&envelope(
                config,
                json!({
                    "vector": h,
                    "socle_degree": h.socle_degree(),
                    "codimension": h.codimension(),
                    "predicates": preds,
                }),
            ))
        }
        OutputFormat::Csv => {
            let mut s = String::from("predicate,holds,violation\n");
            for (name, p) in &predicates {
                let v = p.violation.clone().unwrap_or_default().replace('"', "'");
                writeln!(s, "{name},{},\"{v}\"", p.holds).unwrap();
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = format!("h = {h}  (socle degree {}", h.socle_degree());
            if let Some(r) = h.codimension() {
                write!(s, ", codimension {r}").unwrap();
            }
            s.push_str(")\n");
            for (name, p) in &predicates {
                write!(s, "  {:<16}{}", name, mark(p.holds)).unwrap();
                if let Some(v) = &p.violation {
                    write!(s, "  ({v})").unwrap();
                }
                s.push('\n');
            }
            s
        }
    }
}

fn build_family(kind: FamilyKind, param: u64) -> Result<FamilyResult, ConstructError> {
    match kind {
        FamilyKind::ThmE => construct_thm_e(param),
        _ => construct_thm_r_gorenstein(param, kind.parity().expect("thm_r parity")),
    }
}

fn render_construct(config: &RunConfig) -> Result<String, CliError> {
    let mut rows = Vec::new();
    for &(kind, param) in &config.families {
        let fam = build_family(kind, param)?;
        let lifted = config
            .lift
            .map(|a| lift_codimension(&fam.gorenstein_hvector, a))
            .transpose()?;
        rows.push((fam, lifted));
    }
    Ok(match config.format {
        OutputFormat::Json => {
            let results: Vec<Value> = rows
                .iter()
                .map(|(fam, lifted)| {
                    let mut v = serde_json::to_value(fam).unwrap();
                    v["codimension"] = json!(fam.codimension());
                    v["socle_degree"] = json!(fam.socle_degree());
                    if let (Some(l), Some(a)) = (lifted, config.lift) {
                        v["lift"] = json!({ "a": a, "hvector": l });
                    }
                    v
                })
                .collect();
            canonical_json(&envelope(config, Value::Array(results)))
        }
        OutputFormat::Csv => {
            let mut s = String::new();
            for (fam, lifted) in &rows {
                let kind = fam.kind.to_string();
                s += &csv_row(&kind, fam.parameter, "level", &fam.level_hvector);
                s += &csv_row(&kind, fam.parameter, "gorenstein", &fam.gorenstein_hvector);
                if let Some(l) = lifted {
                    s += &csv_row(&kind, fam.parameter, "lifted", l);
                }
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = String::new();
            for (fam, lifted) in &rows {
                let (i, j) = fam.predicted_violation;
                writeln!(
                    s,
                    "{} {}={}: codimension {}, socle degree {}",
                    fam.kind,
                    fam.kind.parameter_name(),
                    fam.parameter,
                    fam.codimension(),
                    fam.socle_degree()
                )
                .unwrap();
                writeln!(s, "  level       {}", fam.level_hvector).unwrap();
                writeln!(s, "  gorenstein  {}", fam.gorenstein_hvector).unwrap();
                if let (Some(l), Some(a)) = (lifted, config.lift) {
                    writeln!(s, "  lifted a={a}  {l}").unwrap();
                }
                writeln!(s, "  SI fails at first-half difference step {i}->{j}").unwrap();
            }
            s
        }
    })
}

fn render_reports(config: &RunConfig, reports: &[VerificationReport]) -> String {
    match config.format {
        OutputFormat::Json => canonical_json(&envelope(
            config,
            serde_json::to_value(reports).expect("reports serialize"),
        )),
        OutputFormat::Csv => {
            let mut s = String::new();
            for r in reports {
                let kind = r.kind.to_string();
                let ch = r.characteristic;
                s += &csv_row(&kind, r.parameter, &format!("target:{ch}"), &r.target);
                if let Some(c) = &r.computed {
                    s += &csv_row(
                        &kind,
                        r.parameter,
                        &format!("computed:{ch}:{}", r.verdict),
                        c,
                    );
                }
                for (t, h) in r.per_trial.iter().enumerate() {
                    s += &csv_row(&kind, r.parameter, &format!("trial{t}:{ch}"), h);
                }
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = String::new();
            for r in reports {
                let field = match r.characteristic {
                    0 => "Q".to_string(),
                    p => format!("GF({p})"),
                };
                writeln!(
                    s,
                    "{} {}={} over {field}: {}",
                    r.kind,
                    r.kind.parameter_name(),
                    r.parameter,
                    r.verdict
                )
                .unwrap();
                writeln!(s, "  target    {}", r.target).unwrap();
                if let Some(c) = &r.computed {
                    writeln!(
                        s,
                        "  computed  {c}  (best of {} trials, seed {})",
                        r.trials, r.seed
                    )
                    .unwrap();
                }
                if let Some(n) = &r.note {
                    writeln!(s, "  note      {n}").unwrap();
                }
                let times = r.time_per_degree();
                if !times.is_empty() {
                    let ms: Vec<String> = times
                        .iter()
                        .map(|t| format!("{}", t.as_micros() / 1000))
                        .collect();
                    writeln!(s, "  ms/degree {}", ms.join(",")).unwrap();
                }
            }
            s
        }
    }
}

fn exit_for(reports: &[VerificationReport]) -> i32 {
    if reports
        .iter()
        .any(|r| matches!(r.verdict, Verdict::Mismatch | Verdict::Error))
    {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

/// Executes a validated configuration.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let (output, exit_code) = match config.command {
        CommandKind::Check => {
            let h = config.vector.as_ref().expect("check carries a vector");
            (render_check(config, h), EXIT_OK)
        }
        CommandKind::Construct => (render_construct(config)?, EXIT_OK),
        CommandKind::Verify => {
            let reports = config
                .families
                .iter()
                .map(|&(kind, param)| {
                    verify_construction(kind, param, config.field, config.seed, config.trials)
                })
                .collect::<Result<Vec<_>, _>>()?;
            (render_reports(config, &reports), exit_for(&reports))
        }
        CommandKind::Sweep => {
            let mut reports = Vec::new();
            for &(kind, param) in &config.families {
                reports.extend(sweep_characteristics(
                    kind,
                    param,
                    &config.characteristics,
                    config.seed,
                    config.trials,
                )?);
            }
            (render_reports(config, &reports), exit_for(&reports))
        }
    };
    Ok(Outcome { exit_code, output })
}

/// Parses, runs and writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(CliError::Help(msg)) => {
            let _ = write!(stdout, "{msg}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", first_line(&e.to_string()));
            return EXIT_INVALID;
        }
    };
    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", first_line(&e.to_string()));
            return EXIT_INVALID;
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => stdout.write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INVALID;
    }
    outcome.exit_code
}

fn first_line(msg: &str) -> &str {
    let msg = msg.trim_start_matches("error: ");
    msg.lines().next().unwrap_or(msg)
}
