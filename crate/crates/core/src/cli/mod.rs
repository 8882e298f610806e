//! Command-line front end.

mod cache;
mod output;
pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{build_algebra, Algebra, FieldMode, DEFAULT_LENGTH_CAP};
use crate::census::{enumerate_indecomposables, Caps, Census, DEFAULT_COUNT_CAP, DEFAULT_DIM_CAP};
use crate::error::{Error, Result};
use crate::verify::DEFAULT_SEED;

pub use output::{hasse_covers, hasse_dot};
pub use parse::{normalise, parse_presentation};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Census,
    Tors,
    Wide,
    Silting,
    Localise,
    Verify,
    Hasse,
    Report,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Census => "census",
            Command::Tors => "tors",
            Command::Wide => "wide",
            Command::Silting => "silting",
            Command::Localise => "localise",
            Command::Verify => "verify",
            Command::Hasse => "hasse",
            Command::Report => "report",
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn field_mode(s: &str) -> std::result::Result<FieldMode, String> {
    if s == "q" {
        return Ok(FieldMode::Rational);
    }
    let p = s
        .strip_prefix("p:")
        .ok_or_else(|| format!("expected q or p:<prime>, got {s}"))?
        .parse::<u64>()
        .map_err(|e| e.to_string())?;
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(format!("{p} is not prime"));
    }
    Ok(FieldMode::Prime(p))
}

#[derive(Debug, Parser)]
#[command(
    name = "tauscope",
    version,
    about = "Torsion classes, wide subcategories and localisations of quiver algebras"
)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Presentation file.
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_DIM_CAP, value_parser = positive)]
    dim_cap: usize,
    #[arg(long, default_value_t = DEFAULT_COUNT_CAP, value_parser = positive)]
    count_cap: usize,
    #[arg(long, default_value_t = DEFAULT_LENGTH_CAP, value_parser = positive)]
    length_cap: usize,
    /// `q` for the rationals or `p:<prime>`.
    #[arg(long, default_value = "q", value_parser = field_mode)]
    field: FieldMode,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the torsion-class lattice as DOT here.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Census cache directory; defaults to `$TAUSCOPE_CACHE`.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Seed for the sampled checks of `verify`.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub input: PathBuf,
    pub command: Command,
    pub caps: Caps,
    pub length_cap: usize,
    pub field: FieldMode,
    pub out: Option<PathBuf>,
    pub dot: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
}

impl From<Args> for SessionConfig {
    fn from(a: Args) -> Self {
        SessionConfig {
            input: a.input,
            command: a.command,
            caps: Caps {
                dim_cap: a.dim_cap,
                count_cap: a.count_cap,
            },
            length_cap: a.length_cap,
            field: a.field,
            out: a.out,
            dot: a.dot,
            cache_dir: a
                .cache
                .or_else(|| std::env::var_os("TAUSCOPE_CACHE").map(PathBuf::from)),
            seed: a.seed,
        }
    }
}

/// What a command produced: the JSON document, an optional DOT graph, and
/// whether every invariant held.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: String,
    pub dot: Option<String>,
    pub passed: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::MalformedRelation(_) | Error::UnsupportedCharacteristic => 2,
        Error::RepInfiniteAtCap { .. } => 3,
        Error::NonSplitEndomorphism(_) => 4,
        _ => 1,
    }
}

fn field_name(f: FieldMode) -> String {
    match f {
        FieldMode::Rational => "q".into(),
        FieldMode::Prime(p) => format!("p:{p}"),
    }
}

fn load(cfg: &SessionConfig) -> Result<(Arc<Algebra>, String)> {
    let text = std::fs::read_to_string(&cfg.input).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", cfg.input.display()),
    })?;
    let p = parse_presentation(&text)?;
    let alg = Arc::new(build_algebra(&p, cfg.length_cap, cfg.field)?);
    Ok((alg, normalise(&p)))
}

fn census(cfg: &SessionConfig, alg: &Arc<Algebra>, normal: &str) -> Result<Census> {
    if let FieldMode::Prime(_) = cfg.field {
        return Err(Error::UnsupportedCharacteristic);
    }
    let Some(dir) = &cfg.cache_dir else {
        return enumerate_indecomposables(alg, cfg.caps);
    };
    let key = cache::key(normal, cfg.caps, cfg.length_cap, &field_name(cfg.field));
    if let Some(c) = cache::load(dir, &key, alg, cfg.caps)? {
        return Ok(c);
    }
    let c = enumerate_indecomposables(alg, cfg.caps)?;
    cache::store(dir, &key, &c)?;
    Ok(c)
}

pub fn run(cfg: &SessionConfig) -> Result<Outcome> {
    let (alg, normal) = load(cfg)?;
    let c = census(cfg, &alg, &normal)?;
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA_VERSION));
    doc.insert("command".into(), json!(cfg.command.name()));
    doc.insert("algebra".into(), output::algebra_json(&alg, &field_name(cfg.field)));
    doc.insert("labels".into(), output::labels_json(&c));
    let mut passed = true;
    let mut dot = None;
    let want = |k: Command| cfg.command == k || cfg.command == Command::Report;
    if want(Command::Census) {
        doc.insert("census".into(), output::census_json(&c));
    }
    if want(Command::Tors) {
        doc.insert("torsion_classes".into(), output::tors_json(&c));
    }
    if want(Command::Wide) {
        doc.insert("wide_subcategories".into(), output::wide_json(&c)?);
    }
    if want(Command::Silting) {
        doc.insert("silting".into(), output::silting_json(&c)?);
    }
    if want(Command::Localise) {
        doc.insert("localisations".into(), output::localise_json(&c)?);
    }
    if want(Command::Verify) {
        let report = crate::verify::verify(&c, cfg.seed);
        passed = report.passed();
        doc.insert(
            "verify".into(),
            serde_json::to_value(&report).expect("report serialises"),
        );
    }
    if want(Command::Hasse) {
        let (summary, graph) = output::hasse_json(&c);
        doc.insert("hasse".into(), summary);
        dot = Some(graph);
    }
    let json = serde_json::to_string_pretty(&Value::Object(doc)).expect("json") + "\n";
    Ok(Outcome { json, dot, passed })
}

fn write(path: &std::path::Path, text: &str) -> std::result::Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Parse arguments, run, write outputs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = SessionConfig::from(args);
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let mut result = Ok(());
    let hasse_only = cfg.command == Command::Hasse;
    if let Some(graph) = &outcome.dot {
        match &cfg.dot {
            Some(p) => result = result.and(write(p, graph)),
            None if hasse_only => print!("{graph}"),
            None => {}
        }
    }
    match &cfg.out {
        Some(p) => result = result.and(write(p, &outcome.json)),
        None if hasse_only && cfg.dot.is_none() => {}
        None => print!("{}", outcome.json),
    }
    if let Err(e) = result {
        eprintln!("error: {e}");
        return 1;
    }
    if !outcome.passed {
        eprintln!("error: invariant failures, see the verify section");
        return 1;
    }
    0
}
