//! Running the engines for the requested cases and rendering the results.
//!
//! Every estimate becomes a flat [`Record`]; the summary table is a view
//! over the records with one [`SummaryRow`] per case.

use std::io::Write;

use broken_stick::predicates::{EventDescriptor, Interpretation, Predicate};
use broken_stick::probability::{
    closed_form, compare, has_integral, monte_carlo_many, obtuse_acute_ratio, quadrature, Method,
    ProbabilityEstimate,
};
use broken_stick::{SampleStream, SamplerKind};
use serde::{Deserialize, Serialize};

use crate::config::{CaseRequest, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

/// One estimate of one event by one method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub case: String,
    pub predicate: String,
    pub method: String,
    pub value: f64,
    pub uncertainty: f64,
    pub n: Option<u64>,
    pub seed: Option<u64>,
    pub failures: u64,
}

impl From<&ProbabilityEstimate> for Record {
    fn from(e: &ProbabilityEstimate) -> Self {
        Record {
            case: e.event.interpretation.name().to_string(),
            predicate: e.event.predicate.name().to_string(),
            method: e.method.name().to_string(),
            value: e.value,
            uncertainty: e.uncertainty,
            n: e.n,
            seed: e.seed,
            failures: e.failures,
        }
    }
}

/// A row of the summary table. `p_exists` and `p_acute` are the most
/// accurate available values (closed form, then quadrature, then Monte
/// Carlo); the per-method columns are empty where a method does not apply
/// or was not requested.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub schema_version: u32,
    pub case: String,
    pub label: String,
    pub p_exists: Option<f64>,
    pub p_acute: Option<f64>,
    pub ratio: Option<f64>,
    pub exists_closed_form: Option<f64>,
    pub exists_quadrature: Option<f64>,
    pub exists_quadrature_error: Option<f64>,
    pub exists_monte_carlo: Option<f64>,
    pub exists_monte_carlo_stderr: Option<f64>,
    pub acute_closed_form: Option<f64>,
    pub acute_quadrature: Option<f64>,
    pub acute_quadrature_error: Option<f64>,
    pub acute_monte_carlo: Option<f64>,
    pub acute_monte_carlo_stderr: Option<f64>,
    pub n: Option<u64>,
    pub seed: Option<u64>,
    pub monte_carlo_failures: Option<u64>,
    pub exists_agrees: Option<bool>,
    pub acute_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub sampler: String,
    pub records: Vec<Record>,
    pub summary: Vec<SummaryRow>,
    pub disagreements: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn sampler_name(kind: SamplerKind) -> &'static str {
    match kind {
        SamplerKind::DirectUniform => "direct",
        SamplerKind::Parallelogram => "parallelogram",
    }
}

/// Ratio as printed in the table, `None` unless both probabilities are known.
pub fn summary_ratio(interpretation: Interpretation, exists: Option<f64>, acute: Option<f64>) -> Option<f64> {
    Some(obtuse_acute_ratio(interpretation, exists?, acute?))
}

fn best(estimates: &[ProbabilityEstimate]) -> Option<f64> {
    Method::ALL
        .iter()
        .find_map(|m| estimates.iter().find(|e| e.method == *m))
        .map(|e| e.value)
}

fn pick(estimates: &[ProbabilityEstimate], method: Method) -> Option<&ProbabilityEstimate> {
    estimates.iter().find(|e| e.method == method)
}

/// Runs the requested engines. Monte Carlo evaluates every requested event
/// on one shared pass over the samples.
pub fn build(config: &RunConfig) -> Report {
    let stream = SampleStream::new(config.seed, config.sampler);
    let events: Vec<EventDescriptor> = config.cases.iter().flat_map(CaseRequest::events).collect();
    let mut disagreements = Vec::new();

    let mc = if config.methods.contains(&Method::MonteCarlo) && !events.is_empty() {
        match monte_carlo_many(&events, config.n, &stream) {
            Ok(v) => v,
            Err(e) => {
                disagreements.push(format!("monte carlo failed: {e}"));
                Vec::new()
            }
        }
    } else {
        Vec::new()
    };

    let mut records = Vec::new();
    let mut summary = Vec::new();
    for case in &config.cases {
        let mut per_predicate: [(Vec<ProbabilityEstimate>, Option<bool>); 2] = Default::default();
        for event in case.events() {
            let mut estimates = Vec::new();
            let mut absent = Vec::new();
            for method in &config.methods {
                match method {
                    Method::ClosedForm => match closed_form(event) {
                        Ok(e) => estimates.push(e),
                        Err(_) => absent.push(Method::ClosedForm),
                    },
                    Method::Quadrature if has_integral(event) => match quadrature(event) {
                        Ok(e) => estimates.push(e),
                        Err(err) => disagreements.push(format!("{event}: quadrature failed: {err}")),
                    },
                    Method::Quadrature => absent.push(Method::Quadrature),
                    Method::MonteCarlo => estimates.extend(mc.iter().find(|e| e.event == event).copied()),
                }
            }
            let check = compare(event, estimates, absent);
            disagreements.extend(check.disagreements.iter().cloned());
            records.extend(check.estimates.iter().map(Record::from));
            let slot = match event.predicate {
                Predicate::Exists => 0,
                Predicate::Acute => 1,
            };
            let passed = check.passed();
            per_predicate[slot] = (check.estimates, Some(passed));
        }
        let [(exists, exists_agrees), (acute, acute_agrees)] = per_predicate;
        let i = case.interpretation;
        let (p_exists, p_acute) = (best(&exists), best(&acute));
        let value = |es: &[ProbabilityEstimate], m| pick(es, m).map(|e| e.value);
        let error = |es: &[ProbabilityEstimate], m| pick(es, m).map(|e| e.uncertainty);
        let mc_any = pick(&exists, Method::MonteCarlo).or_else(|| pick(&acute, Method::MonteCarlo));
        let failures = [&exists, &acute]
            .iter()
            .filter_map(|es| pick(es, Method::MonteCarlo))
            .map(|e| e.failures)
            .reduce(|a, b| a + b);
        summary.push(SummaryRow {
            schema_version: SCHEMA_VERSION,
            case: i.name().to_string(),
            label: i.label().to_string(),
            p_exists,
            p_acute,
            ratio: summary_ratio(i, p_exists, p_acute),
            exists_closed_form: value(&exists, Method::ClosedForm),
            exists_quadrature: value(&exists, Method::Quadrature),
            exists_quadrature_error: error(&exists, Method::Quadrature),
            exists_monte_carlo: value(&exists, Method::MonteCarlo),
            exists_monte_carlo_stderr: error(&exists, Method::MonteCarlo),
            acute_closed_form: value(&acute, Method::ClosedForm),
            acute_quadrature: value(&acute, Method::Quadrature),
            acute_quadrature_error: error(&acute, Method::Quadrature),
            acute_monte_carlo: value(&acute, Method::MonteCarlo),
            acute_monte_carlo_stderr: error(&acute, Method::MonteCarlo),
            n: mc_any.and_then(|e| e.n),
            seed: mc_any.and_then(|e| e.seed),
            monte_carlo_failures: failures,
            exists_agrees,
            acute_agrees,
        });
    }
    Report {
        schema_version: SCHEMA_VERSION,
        sampler: sampler_name(config.sampler).to_string(),
        records,
        summary,
        disagreements,
    }
}

pub fn write_json(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, report)?;
    writeln!(out)
}

/// The summary view, one line per case under a fixed header.
pub fn write_csv(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in &report.summary {
        w.serialize(row)?;
    }
    w.flush()
}

fn cell(v: Option<f64>, digits: usize) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.digits$}"))
}

pub fn write_text(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<18} {:>12} {:>12} {:>12}   methods",
        "case", "P(exists)", "P(acute)", "obtuse/acute"
    )?;
    for row in &report.summary {
        let used: Vec<&str> = Method::ALL
            .iter()
            .map(|m| m.name())
            .filter(|m| report.records.iter().any(|r| r.case == row.case && r.method == *m))
            .collect();
        writeln!(
            out,
            "{:<18} {:>12} {:>12} {:>12}   {}",
            row.label,
            cell(row.p_exists, 8),
            cell(row.p_acute, 8),
            cell(row.ratio, 6),
            used.join(", ")
        )?;
    }
    if let Some(r) = report.records.iter().find(|r| r.n.is_some()) {
        writeln!(out, "\nmonte carlo: n = {}, seed = {}, sampler = {}", r.n.unwrap(), r.seed.unwrap_or(0), report.sampler)?;
    }
    for d in &report.disagreements {
        writeln!(out, "DISAGREEMENT {d}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{parse_cases, parse_methods, Format};

    fn config(events: &str, methods: &str, n: u64) -> RunConfig {
        RunConfig {
            cases: parse_cases(events).unwrap(),
            n,
            seed: 42,
            sampler: SamplerKind::DirectUniform,
            methods: parse_methods(methods).unwrap(),
            format: Format::Json,
            out: None,
            plot: None,
            limit: None,
            verify_paper: false,
        }
    }

    #[test]
    fn sides_row() {
        let r = build(&config("sides", "all", 20_000));
        assert!(r.passed(), "{:?}", r.disagreements);
        let row = &r.summary[0];
        assert_eq!(row.label, "classical case");
        assert_eq!(row.p_exists, Some(0.25));
        assert!((row.p_acute.unwrap() - 0.079_441_541_7).abs() < 1e-9);
        // the medial triangle needs no integral
        assert_eq!(r.records.len(), 5);
    }

    #[test]
    fn single_sample_has_zero_stderr() {
        let r = build(&config("exradii", "monte-carlo", 1));
        for rec in &r.records {
            assert!(rec.value == 0.0 || rec.value == 1.0);
            assert_eq!(rec.uncertainty, 0.0);
        }
    }

    #[test]
    fn narrowed_case_has_no_ratio() {
        let r = build(&config("medians:acute", "closed-form", 10));
        assert_eq!(r.summary[0].p_exists, None);
        assert_eq!(r.summary[0].ratio, None);
        assert_eq!(r.records.len(), 1);
    }

    #[test]
    fn monte_carlo_only_case() {
        let r = build(&config("incenter-distances", "closed-form,quadrature", 10));
        // exists has a closed form, acute has none
        assert_eq!(r.summary[0].p_exists, Some(1.0));
        assert_eq!(r.summary[0].p_acute, None);
        assert!(r.passed());
    }
}
