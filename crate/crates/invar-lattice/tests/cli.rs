//! End-to-end runs of the installed binary: exit codes, output formats,
//! and agreement between the JSON surface and the library types.

use invar_lattice::{verify_all, BoundsReport, CharSupport, REPORT_SCHEMA};
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_invar-lattice"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bounds_table_reports_the_golden_instance() {
    let (code, stdout, stderr) = run(&["bounds", "--modulus", "7", "--chars", "1,2,4"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    for needle in [
        "group                 Z/7",
        "effective order       7",
        "gamma_r               3",
        "beta_r                3",
        "gamma_poly            4",
        "beta_poly             4",
        "successive minima     3 3 3",
        "index at degree 3     1",
        "x2/x1^2",
        "x1*x2*x4",
    ] {
        assert!(stdout.contains(needle), "missing {needle:?} in:\n{stdout}");
    }
}

#[test]
fn bounds_json_round_trips_through_the_library_type() {
    let (code, stdout, _) = run(&[
        "bounds",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let parsed: BoundsReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(parsed.schema, REPORT_SCHEMA);
    let direct = verify_all(&CharSupport::cyclic(7, &[1, 2, 4]).unwrap()).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn bounds_csv_is_one_row() {
    let (code, stdout, _) = run(&[
        "bounds",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "group,effective_order,gamma_r,beta_r,gamma_poly,beta_poly,minima,extremal"
    );
    assert_eq!(lines[1], "Z/7,7,3,3,4,4,3 3 3,false");
}

#[test]
fn negative_residues_reduce() {
    let (code, a, _) = run(&[
        "bounds",
        "--modulus",
        "9",
        "--chars",
        "1,-1",
        "--format",
        "csv",
    ]);
    let (_, b, _) = run(&[
        "bounds",
        "--modulus",
        "9",
        "--chars",
        "1,8",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert!(a.contains("Z/9,9,9,9,"));
}

#[test]
fn product_group_tuples_parse() {
    let (code, stdout, _) = run(&[
        "bounds",
        "--factors",
        "3,3",
        "--chars",
        "1:0,0:1",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.lines().nth(1).unwrap(),
        "Z/3 x Z/3,9,3,3,3,3,3 3,true"
    );
}

#[test]
fn simplex_index_prints_infinite() {
    let (code, stdout, _) = run(&[
        "index",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--degree",
        "3",
        "--geometry",
        "simplex",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "infinite");
    let (_, json, _) = run(&[
        "index",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--degree",
        "3",
        "--geometry",
        "simplex",
        "--format",
        "json",
    ]);
    assert!(json.contains("\"index\": \"infinite\""));
    let (_, at4, _) = run(&[
        "index",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--degree",
        "4",
        "--geometry",
        "simplex",
    ]);
    assert_eq!(at4.trim(), "1");
}

#[test]
fn minima_csv_lists_each_minimum() {
    let (code, stdout, _) = run(&[
        "minima",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "i,lambda\n1,3\n2,3\n3,3\n");
}

#[test]
fn verify_passes_on_a_sound_instance() {
    let (code, stdout, _) = run(&["verify", "--modulus", "12", "--chars", "1,5,8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("all checks passed"));
    assert!(stdout.lines().filter(|l| l.starts_with("ok ")).count() >= 8);
}

#[test]
fn family_csv_header_and_rows() {
    let (code, stdout, _) = run(&["family", "--n", "7", "--m", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n,m,predicted,beta_r,gamma_r,match\n7,3,4,4,4,true\n"
    );
}

#[test]
fn family_output_is_worker_count_independent() {
    let base = run(&[
        "family",
        "--n",
        "3:20",
        "--m",
        "1:4",
        "--workers",
        "1",
        "--format",
        "csv",
    ]);
    for workers in ["2", "5", "8"] {
        let other = run(&[
            "family",
            "--n",
            "3:20",
            "--m",
            "1:4",
            "--workers",
            workers,
            "--format",
            "csv",
        ]);
        assert_eq!(base, other, "workers={workers}");
    }
    assert_eq!(base.0, 0);
}

#[test]
fn witness_lists_generators_at_the_sharp_degree() {
    let (code, stdout, _) = run(&[
        "witness",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--degree",
        "3",
    ]);
    assert_eq!(code, 0);
    for needle in ["x2/x1^2", "1/(x1*x2*x4)", "x4^2/x1"] {
        assert!(stdout.contains(needle), "missing {needle:?} in:\n{stdout}");
    }
}

#[test]
fn insufficient_degree_is_a_computation_failure() {
    let (code, _, stderr) = run(&[
        "witness",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--degree",
        "2",
    ]);
    assert_eq!(code, 1);
    assert!(
        stderr.starts_with("error[insufficient-degree]:"),
        "{stderr}"
    );
}

#[test]
fn blown_budget_is_a_computation_failure() {
    let (code, _, stderr) = run(&[
        "bounds",
        "--modulus",
        "97",
        "--chars",
        "1,96",
        "--budget",
        "5",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error[budget-exceeded]:"), "{stderr}");
}

#[test]
fn usage_errors_exit_two() {
    // no group at all
    let (code, _, stderr) = run(&["bounds", "--chars", "1,2"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[usage]:"), "{stderr}");
    // unparsable characters
    let (code, _, stderr) = run(&["bounds", "--modulus", "7", "--chars", "1,x"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[usage]:"), "{stderr}");
    // tuple shape disagrees with the factor list
    let (code, _, stderr) = run(&["bounds", "--factors", "3,3", "--chars", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[character-shape]:"), "{stderr}");
    // all characters trivial
    let (code, _, stderr) = run(&["bounds", "--modulus", "5", "--chars", "0,5"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[trivial-support]:"), "{stderr}");
    // clap-level: unknown flag
    let (code, _, _) = run(&["bounds", "--modulus", "7", "--chars", "1", "--frobnicate"]);
    assert_eq!(code, 2);
    // negative degree
    let (code, _, stderr) = run(&[
        "index",
        "--modulus",
        "7",
        "--chars",
        "1,2,4",
        "--degree",
        "-2",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error[negative-degree]:"), "{stderr}");
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["bounds", "family", "minima", "witness", "index", "verify"] {
        assert!(stdout.contains(sub));
    }
}
