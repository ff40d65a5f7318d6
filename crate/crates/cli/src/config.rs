//! Flags, the key=value config file and the resolved run configuration.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use broken_stick::predicates::{EventDescriptor, Interpretation, Predicate};
use broken_stick::probability::Method;
use broken_stick::SamplerKind;
use clap::Parser;
use thiserror::Error;

pub const DEFAULT_N: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_RESOLUTION: usize = 512;
pub const SEED_VARIABLE: &str = "BROKEN_STICK_SEED";

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read config file {path}: {reason}")]
    File { path: String, reason: String },
    #[error("config file line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

const CONFIG_HELP: &str = "\
CONFIG FILE:
  A flat text file of `key = value` lines; `#` starts a comment. Keys are the
  long flag names without dashes: events, methods, n, seed, sampler, format,
  plot, resolution, out, verify-paper, limit. Flags given on the command line
  override the file; the file overrides BROKEN_STICK_SEED.

  events = sides, medians:acute
  n = 200000
  seed = 7

OUTPUT:
  --out names the SVG file when --plot is given, otherwise the report file.

EXIT STATUS:
  0 all cross-validation checks passed, 1 some check failed (values are still
  printed), 2 invalid configuration or unwritable output.";

/// Geometric probabilities for triangles built from a broken stick.
#[derive(Debug, Default, Parser)]
#[command(name = "broken-stick", version, after_help = CONFIG_HELP)]
pub struct Flags {
    /// Comma-separated cases (`sides`, `medians`, ..., or `all`); a case may
    /// be narrowed with `:exists` or `:acute`.
    #[arg(long)]
    pub events: Option<String>,
    /// Comma-separated subset of closed-form, quadrature, monte-carlo, or `all`.
    #[arg(long)]
    pub methods: Option<String>,
    /// Monte Carlo sample count.
    #[arg(long)]
    pub n: Option<u64>,
    /// Monte Carlo seed [env: BROKEN_STICK_SEED, default 42].
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sampler: direct or parallelogram.
    #[arg(long)]
    pub sampler: Option<String>,
    /// Report format: json, csv or text.
    #[arg(long)]
    pub format: Option<String>,
    /// Write an SVG of the region of EVENT (e.g. `medians:acute`).
    #[arg(long, value_name = "EVENT")]
    pub plot: Option<String>,
    /// Plot width in pixels, 64 to 4096.
    #[arg(long)]
    pub resolution: Option<usize>,
    /// Output path (the SVG with --plot, otherwise the report).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Read settings from a key=value file.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Search integer circumcentre distances and check the tabulated ones.
    #[arg(long)]
    pub verify_paper: bool,
    /// Bound on R for the integer search.
    #[arg(long)]
    pub limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One requested summary row: a case and the predicates wanted for it.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRequest {
    pub interpretation: Interpretation,
    pub predicates: Vec<Predicate>,
}

impl CaseRequest {
    pub fn events(&self) -> impl Iterator<Item = EventDescriptor> + '_ {
        self.predicates.iter().map(|p| EventDescriptor::new(self.interpretation, *p))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotRequest {
    pub event: EventDescriptor,
    pub resolution: usize,
    pub path: PathBuf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Empty when only a plot or the integer search was asked for.
    pub cases: Vec<CaseRequest>,
    pub n: u64,
    pub seed: u64,
    pub sampler: SamplerKind,
    pub methods: Vec<Method>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub plot: Option<PlotRequest>,
    /// Upper bound of the integer search, when requested.
    pub limit: Option<u64>,
    pub verify_paper: bool,
}

pub fn parse_cases(spec: &str) -> Result<Vec<CaseRequest>, ConfigError> {
    let mut cases: Vec<CaseRequest> = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, predicate) = match item.split_once(':') {
            Some((i, p)) => (i, Some(p)),
            None => (item, None),
        };
        let interpretations: Vec<Interpretation> = if name == "all" {
            Interpretation::ALL.to_vec()
        } else {
            vec![name.parse().map_err(|e: String| invalid(e))?]
        };
        let predicates = match predicate {
            None => vec![Predicate::Exists, Predicate::Acute],
            Some("exists") => vec![Predicate::Exists],
            Some("acute") => vec![Predicate::Acute],
            Some(other) => return Err(invalid(format!("unknown predicate `{other}`"))),
        };
        for interpretation in interpretations {
            match cases.iter_mut().find(|c| c.interpretation == interpretation) {
                Some(c) => {
                    for p in &predicates {
                        if !c.predicates.contains(p) {
                            c.predicates.push(*p);
                        }
                    }
                    c.predicates.sort();
                }
                None => cases.push(CaseRequest {
                    interpretation,
                    predicates: predicates.clone(),
                }),
            }
        }
    }
    if cases.is_empty() {
        return Err(invalid("no events requested"));
    }
    Ok(cases)
}

pub fn parse_methods(spec: &str) -> Result<Vec<Method>, ConfigError> {
    let mut methods = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            methods.extend(Method::ALL);
        } else {
            methods.push(item.parse().map_err(|e: String| invalid(e))?);
        }
    }
    methods.sort();
    methods.dedup();
    if methods.is_empty() {
        return Err(invalid("no methods requested"));
    }
    Ok(methods)
}

fn parse_sampler(s: &str) -> Result<SamplerKind, ConfigError> {
    match s {
        "direct" => Ok(SamplerKind::DirectUniform),
        "parallelogram" => Ok(SamplerKind::Parallelogram),
        other => Err(invalid(format!("unknown sampler `{other}` (direct or parallelogram)"))),
    }
}

fn parse_format(s: &str) -> Result<Format, ConfigError> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "text" => Ok(Format::Text),
        other => Err(invalid(format!("unknown format `{other}` (json, csv or text)"))),
    }
}

fn parse_number<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value
        .parse()
        .map_err(|_| invalid(format!("`{key}` expects a non-negative integer, got `{value}`")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool, ConfigError> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(invalid(format!("`{key}` expects true or false, got `{value}`"))),
    }
}

const KEYS: [&str; 11] = [
    "events",
    "methods",
    "n",
    "seed",
    "sampler",
    "format",
    "plot",
    "resolution",
    "out",
    "verify-paper",
    "limit",
];

/// Parses the key=value config format.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(ConfigError::Syntax {
                line: i + 1,
                reason: "expected `key = value`".into(),
            });
        };
        let key = k.trim().replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(ConfigError::Syntax {
                line: i + 1,
                reason: format!("unknown key `{key}`"),
            });
        }
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::File {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_config_file(&text)
}

impl RunConfig {
    /// Merges flags, the config file and `BROKEN_STICK_SEED` (in that
    /// order of precedence) over the defaults.
    pub fn resolve(flags: Flags, env_seed: Option<String>) -> Result<Self, ConfigError> {
        let file = match &flags.config {
            Some(p) => read_config_file(p)?,
            None => BTreeMap::new(),
        };
        let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).cloned());

        let seed = match (flags.seed, file.get("seed"), env_seed) {
            (Some(s), _, _) => s,
            (None, Some(v), _) => parse_number("seed", v)?,
            (None, None, Some(v)) => parse_number(SEED_VARIABLE, v.trim())?,
            (None, None, None) => DEFAULT_SEED,
        };
        let n = match flags.n {
            Some(n) => n,
            None => file.get("n").map(|v| parse_number("n", v)).transpose()?.unwrap_or(DEFAULT_N),
        };
        if n < 1 {
            return Err(invalid("n must be at least 1"));
        }
        let resolution = match flags.resolution {
            Some(r) => r,
            None => file
                .get("resolution")
                .map(|v| parse_number("resolution", v))
                .transpose()?
                .unwrap_or(DEFAULT_RESOLUTION),
        };
        if !(64..=4096).contains(&resolution) {
            return Err(invalid(format!("resolution {resolution} outside [64, 4096]")));
        }
        let limit = match flags.limit {
            Some(l) => Some(l),
            None => file.get("limit").map(|v| parse_number("limit", v)).transpose()?,
        };
        if limit.is_some_and(|l| l > 10_000) {
            return Err(invalid("limit must be at most 10000"));
        }
        let verify_paper = flags.verify_paper
            || file.get("verify-paper").map(|v| parse_bool("verify-paper", v)).transpose()?.unwrap_or(false);
        let sampler = parse_sampler(&pick(flags.sampler, "sampler").unwrap_or_else(|| "direct".into()))?;
        let format = parse_format(&pick(flags.format, "format").unwrap_or_else(|| "text".into()))?;
        let methods = parse_methods(&pick(flags.methods, "methods").unwrap_or_else(|| "all".into()))?;
        let out = flags.out.or_else(|| file.get("out").map(PathBuf::from));

        let plot = match pick(flags.plot, "plot") {
            Some(spec) => {
                let event: EventDescriptor = spec.trim().parse().map_err(|e: String| invalid(e))?;
                let path = out
                    .clone()
                    .unwrap_or_else(|| PathBuf::from(format!("{}-{}.svg", event.interpretation.name(), event.predicate.name())));
                Some(PlotRequest { event, resolution, path })
            }
            None => None,
        };
        let events = pick(flags.events, "events");
        let integer_search = limit.is_some() || verify_paper;
        // without an explicit case list the table runs only when nothing
        // else was asked for
        let cases = match events {
            Some(spec) => parse_cases(&spec)?,
            None if plot.is_none() && !integer_search => parse_cases("all")?,
            None => Vec::new(),
        };
        let limit = if integer_search { Some(limit.unwrap_or(42)) } else { None };
        Ok(RunConfig {
            cases,
            n,
            seed,
            sampler,
            methods,
            format,
            out: if plot.is_some() { None } else { out },
            plot,
            limit,
            verify_paper,
        })
    }
}
