use std::io::Write;
use std::process::{Command, Output};

use spectra_core::search::canonical_cycle_graph6;

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .env_remove("SPECTRA_WORKERS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_of_a_cycle() {
    let o = spectra(&["spectrum", "--cycle", "13"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{5,6}\nt=2\n");
}

#[test]
fn spectrum_json() {
    let o = spectra(&["spectrum", "--multipartite", "2,4,5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"][0]["spectrum"], serde_json::json!([2, 4, 5]));
    assert_eq!(v["results"][0]["t"], 3);
}

#[test]
fn classify_triangle() {
    let o = spectra(&["classify", "--graph6", "Bw"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["spectrum={1}", "t=1", "girth=3"] {
        assert!(text.lines().any(|l| l == line), "{text}");
    }
}

#[test]
fn classify_file_skips_bad_lines() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"Bw\n???bad\nBg\n").unwrap();
    let path = f.path().to_str().unwrap();
    let o = spectra(&["--format", "json", "classify", "--file", path]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    assert_eq!(v["results"][1]["report"]["girth"], "acyclic");
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let strict = spectra(&["classify", "--file", path, "--strict"]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn verify_commands_pass() {
    for args in [
        &["verify", "prop1", "--n-max", "30"][..],
        &["verify", "cycle-leaf", "--n", "3-24"],
        &["verify", "construction", "--g", "3-5", "--t", "2-3"],
        &["verify", "components"],
        &["verify", "witness", "--t", "2", "--cycle", "14"],
        &["verify", "leftover", "--graph6", "Fhdhw", "--set", "0"],
    ] {
        let o = spectra(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"), "{args:?}");
    }
}

#[test]
fn failing_check_exits_one() {
    // Leaves at distance 5 on C_12 give a different spectrum.
    let o = spectra(&["verify", "components", "--twelve-distance", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("FAIL\n"));
    let v: serde_json::Value = serde_json::from_slice(
        &spectra(&["verify", "components", "--twelve-distance", "5", "--format", "json"]).stdout,
    )
    .unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["checks"][0]["pass"], false);
}

#[test]
fn usage_and_input_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["spectrum"],
        &["spectrum", "--cycle", "2"],
        &["spectrum", "--graph6", "B!"],
        &["spectrum", "--cycle", "5", "--path", "5"],
        &["verify", "witness", "--t", "1", "--cycle", "7"],
        &["verify", "leftover", "--graph6", "Bw", "--set", "0,1"],
        &["construct", "--family", "H", "--g", "3"],
        &["--workers", "0", "spectrum", "--cycle", "5"],
        &["spectrum", "--file", "/nonexistent/graphs.g6"],
    ] {
        let o = spectra(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn construct_round_trips_through_spectrum() {
    let o = spectra(&["construct", "--family", "H", "--g", "4", "--t", "3"]);
    let g6 = stdout(&o);
    let s = spectra(&["spectrum", "--graph6", g6.trim()]);
    assert_eq!(stdout(&s), "{7,8,9}\nt=3\n");
    let p = spectra(&["construct", "--cycle-plus-path", "19,5"]);
    let s = spectra(&["spectrum", "--graph6", stdout(&p).trim()]);
    assert_eq!(stdout(&s), "{8,9,10,11,12}\nt=5\n");
}

#[test]
fn table_cell_and_hunt() {
    let o = spectra(&["search", "table-cell", "--t", "1", "--girth", "7", "--n-max", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let found: Vec<String> = stdout(&o)
        .lines()
        .filter_map(|l| l.strip_prefix("found "))
        .map(String::from)
        .collect();
    assert_eq!(found, [canonical_cycle_graph6(7)]);
    let o = spectra(&[
        "--format",
        "json",
        "search",
        "hunt-delta",
        "--t",
        "1",
        "--girth",
        "3",
        "--n-max",
        "7",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["found"].as_array().unwrap().is_empty());
}

#[test]
fn node_budget_is_reported() {
    let o = spectra(&[
        "--max-nodes",
        "10",
        "search",
        "table-cell",
        "--t",
        "2",
        "--girth",
        "8",
        "--n-max",
        "12",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("more than 10 augmentation nodes"));
}

#[test]
fn help_exits_zero() {
    let o = spectra(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("table-cell") || stdout(&o).contains("search"));
}
