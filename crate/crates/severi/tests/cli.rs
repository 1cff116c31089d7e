//! End-to-end checks of the binary: exit codes, output formats, and the
//! dump round-trip through real process boundaries.

use std::process::{Command, Output};

use severi::dump::{document_data, document_polynomial, DumpDocument};
use severi::residue::bott_sum;
use severi::{severi_polynomial, Cogenus, WeightTriple};

fn severi_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_severi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn symbolic_run_prints_the_polynomial() {
    let out = severi_cmd(&["--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("f_1(d) = 3*d^2 - 6*d + 3"));
}

#[test]
fn symbolic_run_with_value() {
    let out = severi_cmd(&["--n", "3", "--d", "4", "--weights", "0,1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f_3(4) = 675"));
    assert!(text.contains("d >= 3"));
}

#[test]
fn negative_weights_are_accepted() {
    let out = severi_cmd(&["--n", "2", "--weights", "-7,1,12"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("f_2(d) ="));
}

#[test]
fn degenerate_weights_exit_two() {
    let out = severi_cmd(&["--n", "3", "--weights", "0,1,2", "--mode", "dump"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0+2 = 2*1"));
}

#[test]
fn repeated_weights_exit_two() {
    let out = severi_cmd(&["--n", "1", "--weights", "5,5,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("repeated weight"));
}

#[test]
fn bad_arguments_exit_four() {
    assert_eq!(severi_cmd(&["--n", "7"]).status.code(), Some(4));
    assert_eq!(severi_cmd(&["--n", "2", "--weights", "1,2"]).status.code(), Some(4));
    assert_eq!(severi_cmd(&["--mode", "symbolic"]).status.code(), Some(4), "missing --n");
    assert_eq!(severi_cmd(&["--n", "2", "--mode", "nonsense"]).status.code(), Some(4));
}

#[test]
fn help_exits_zero() {
    let out = severi_cmd(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("--weights"));
}

#[test]
fn verify_mode_reports_every_point() {
    let out = severi_cmd(&["--n", "3", "--mode", "verify", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.matches("PASS").count() >= 31, "one line per point:\n{}", text);
    assert!(text.contains("P(2;0,3)"));
    assert!(text.contains("seed 7"));
}

#[test]
fn interpolate_mode_passes() {
    for n in ["1", "2", "3"] {
        let out = severi_cmd(&["--n", n, "--mode", "interpolate"]);
        assert_eq!(out.status.code(), Some(0), "n = {}", n);
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn structured_dump_round_trips() {
    let out = severi_cmd(&["--n", "3", "--mode", "dump", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: DumpDocument = serde_json::from_str(&stdout(&out)).expect("valid census json");
    assert_eq!(doc.n, 3);
    assert_eq!(doc.weights, [0, 1, 3]);
    assert_eq!(doc.fixed_points.len(), 31);

    // re-run the residue sum from the parsed document
    let n = Cogenus::Three;
    let w = WeightTriple::new(doc.weights[0], doc.weights[1], doc.weights[2]);
    let resummed = bott_sum(&document_data(&doc), &w, n).unwrap();
    assert_eq!(resummed, document_polynomial(&doc).unwrap());
    assert_eq!(resummed, severi_polynomial(n, &w).unwrap());
}

#[test]
fn text_dump_lists_labels_and_weights() {
    let out = severi_cmd(&["--n", "2", "--mode", "dump"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("9 fixed points"));
    assert!(text.contains("z0 + z1"));
    assert!(text.contains("D(1,2)"));
    assert!(text.contains("-(d - 3)*w0 - 3*w1"));
}

#[test]
fn reference_subcommand_prints_all_six() {
    let out = severi_cmd(&["reference"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for n in 1..=6 {
        assert!(text.contains(&format!("f_{}(d) =", n)));
    }
    assert!(text.contains("Vainsencher"));

    let out = severi_cmd(&["reference", "--format", "structured"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["reference"].as_array().unwrap().len(), 6);
}
