//! Command-line front end: the summary table, region plots and the integer
//! circumcentre search.

pub mod config;
pub mod integers;
pub mod plot;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;

use config::{Flags, Format, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

fn emit(report: &report::Report, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => report::write_json(report, out),
        Format::Csv => report::write_csv(report, out),
        Format::Text => report::write_text(report, out),
    }
}

/// Executes a resolved configuration.
pub fn execute(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut status = EXIT_OK;
    if !config.cases.is_empty() {
        let report = report::build(config);
        let written = match &config.out {
            Some(path) => File::create(path).and_then(|f| {
                let mut w = BufWriter::new(f);
                emit(&report, config.format, &mut w)?;
                w.flush()
            }),
            None => emit(&report, config.format, stdout),
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "error: cannot write report: {e}");
            return EXIT_CONFIG;
        }
        if !report.passed() {
            for d in &report.disagreements {
                let _ = writeln!(stderr, "cross-validation failed: {d}");
            }
            status = EXIT_CHECK_FAILED;
        }
    }
    if let Some(p) = &config.plot {
        match plot::plot_region(p.event, p.resolution, &p.path) {
            Ok(ratio) => {
                let _ = writeln!(stdout, "{}: area/sqrt(3) = {ratio} -> {}", p.event, p.path.display());
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", p.path.display());
                return EXIT_CONFIG;
            }
        }
    }
    if let Some(limit) = config.limit {
        match integers::integer_solutions(limit, config.verify_paper, stdout) {
            Ok(true) => {}
            Ok(false) => status = EXIT_CHECK_FAILED,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_CONFIG;
            }
        }
    }
    status
}

/// Parses `args` (including the program name) and runs; returns the exit
/// status.
pub fn run<I, T>(args: I, env_seed: Option<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let flags = match Flags::try_parse_from(args) {
        Ok(f) => f,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return EXIT_CONFIG;
        }
    };
    match RunConfig::resolve(flags, env_seed) {
        Ok(config) => execute(&config, stdout, stderr),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_CONFIG
        }
    }
}
