use std::fs;
use std::process::Command;

use broken_stick::predicates::Interpretation;
use broken_stick::probability::closed_form;
use broken_stick_cli::report::{Report, SummaryRow};
use broken_stick_cli::{run, EXIT_CHECK_FAILED, EXIT_CONFIG, EXIT_OK};

fn cli(args: &[&str], env_seed: Option<&str>) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("broken-stick").chain(args.iter().copied()),
        env_seed.map(str::to_string),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_broken-stick");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["--events", "sides", "--n", "20000"]), Some(EXIT_OK));
    assert_eq!(status(&["--events", "nonsense"]), Some(EXIT_CONFIG));
    assert_eq!(status(&["--n", "0"]), Some(EXIT_CONFIG));
    assert_eq!(status(&["--bogus"]), Some(EXIT_CONFIG));
    assert_eq!(status(&["--help"]), Some(EXIT_OK));
}

#[test]
fn bad_configuration_is_rejected() {
    for args in [
        &["--format", "xml"][..],
        &["--methods", "guess"],
        &["--sampler", "other"],
        &["--plot", "sides:exists", "--resolution", "10"],
        &["--config", "/nonexistent/file"],
    ] {
        let (code, _, err) = cli(args, None);
        assert_eq!(code, EXIT_CONFIG, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn single_sample_fails_cross_validation() {
    // one sample cannot agree with 3 ln 2 − 2; the values are still printed
    let (code, out, err) = cli(&["--events", "sides:acute", "--n", "1", "--format", "json"], None);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(err.contains("cross-validation failed"));
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(!report.passed());
    assert!(report.records.iter().any(|r| r.method == "monte-carlo"));
}

#[test]
fn json_round_trip_and_ratio() {
    let (code, out, _) = cli(&["--events", "all", "--n", "50000", "--format", "json"], None);
    assert_eq!(code, EXIT_OK);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.summary.len(), 9);
    let again = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(again.trim_end(), out.trim_end());
    for row in &report.summary {
        let (pe, pa, r) = (row.p_exists.unwrap(), row.p_acute.unwrap(), row.ratio.unwrap());
        if row.case == "circumcenter-distances" {
            assert_eq!(r, 1.0);
        } else {
            assert!(((pe - pa) / pa - r).abs() < 1e-9, "{}", row.case);
        }
        assert!(0.0 <= pa && pa <= pe && pe <= 1.0);
    }
}

#[test]
fn csv_matches_json_summary() {
    let args = ["--events", "sides,medians,altitudes", "--n", "20000", "--seed", "3"];
    let (_, json, _) = cli(&[&args[..], &["--format", "json"]].concat(), None);
    let (_, csv, _) = cli(&[&args[..], &["--format", "csv"]].concat(), None);
    let report: Report = serde_json::from_str(&json).unwrap();
    let rows: Vec<SummaryRow> = csv::Reader::from_reader(csv.as_bytes()).deserialize().map(Result::unwrap).collect();
    assert_eq!(rows, report.summary);
}

#[test]
fn text_report_lists_rows() {
    let (code, out, _) = cli(&["--events", "sides", "--n", "1000", "--format", "text"], None);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("classical case"));
    assert!(out.contains("0.07944154"));
    assert!(out.contains("seed = 42"));
}

#[test]
fn report_goes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["--events", "sides", "--n", "1000", "--format", "csv", "--out", p], None);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert!(fs::read_to_string(&path).unwrap().starts_with("schema_version,"));

    let missing = dir.path().join("no/such/dir.csv");
    let (code, _, _) = cli(&["--events", "sides", "--n", "10", "--out", missing.to_str().unwrap()], None);
    assert_eq!(code, EXIT_CONFIG);
}

fn seed_of(out: &str) -> u64 {
    let report: Report = serde_json::from_str(out).unwrap();
    report.records.iter().find_map(|r| r.seed).unwrap()
}

#[test]
fn seed_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("run.conf");
    fs::write(&file, "# settings\nevents = exradii:acute\nmethods = monte-carlo\nn = 100\nseed = 7\nformat = json\n").unwrap();
    let f = file.to_str().unwrap();

    let (_, out, _) = cli(&["--events", "exradii", "--methods", "monte-carlo", "--n", "100", "--format", "json"], None);
    assert_eq!(seed_of(&out), 42);
    let (_, out, _) = cli(&["--events", "exradii", "--methods", "monte-carlo", "--n", "100", "--format", "json"], Some("9"));
    assert_eq!(seed_of(&out), 9);
    let (_, out, _) = cli(&["--config", f], Some("9"));
    assert_eq!(seed_of(&out), 7);
    let (_, out, _) = cli(&["--config", f, "--seed", "5"], Some("9"));
    assert_eq!(seed_of(&out), 5);
    let (code, _, _) = cli(&["--events", "sides"], Some("not a number"));
    assert_eq!(code, EXIT_CONFIG);
}

#[test]
fn config_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.conf");
    fs::write(&file, "colour = red\n").unwrap();
    let (code, _, err) = cli(&["--config", file.to_str().unwrap()], None);
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn plotted_area_matches_probability() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("sides:exists", 0.25),
        ("tangent-circles:exists", 5.0 / 27.0),
        ("medians:acute", closed_form(Interpretation::Medians.acute()).unwrap().value),
    ];
    for (event, exact) in cases {
        let path = dir.path().join(format!("{}.svg", event.replace(':', "-")));
        let (code, out, _) = cli(&["--plot", event, "--resolution", "512", "--out", path.to_str().unwrap()], None);
        assert_eq!(code, EXIT_OK);
        let area: f64 = out.trim().split(" = ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
        assert!((area - exact).abs() < 0.01 * exact, "{event}: {area} vs {exact}");
        let svg = fs::read_to_string(&path).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }
}

#[test]
fn integer_search_verification() {
    let (code, out, _) = cli(&["--verify-paper"], None);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("    12     22     28     42"));
    assert!(out.ends_with("verify: pass\n"));
    let (code, out, _) = cli(&["--verify-paper", "--limit", "20"], None);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("verify: FAIL"));
    let (code, out, _) = cli(&["--limit", "16"], None);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("     2      9     12     16"));
}
