//! End-to-end runs of the `apolar` binary.

use std::process::{Command, Output};

use apolar_cli::report::PencilJson;

fn apolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(args)
        .env_remove("APOLAR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hf_prints_sequences() {
    let o = apolar(&["hf", "--r", "2", "X^4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 1 1 1\n");
    let o = apolar(&["hf", "--r", "3", "X^8+Y^4*Z^4"]);
    assert_eq!(stdout(&o), "1 3 4 5 6 5 4 3 1\n");
}

#[test]
fn hf_rejects_inhomogeneous_input() {
    let o = apolar(&["hf", "--r", "2", "X^2+Y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not homogeneous"));
}

#[test]
fn config_errors_exit_3() {
    assert_eq!(
        apolar(&["--field", "gf:9", "hf", "--r", "2", "X^4"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        apolar(&["--field", "gf:3", "--action", "diff", "hf", "--r", "2", "X^4"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        apolar(&["--field", "gf:3", "hf", "--r", "2", "X^4"])
            .status
            .code(),
        Some(0),
        "auto falls back to contraction"
    );
    assert_eq!(
        apolar(&[
            "--field",
            "gf:13",
            "--sampled",
            "pencil",
            "--r",
            "2",
            "X^4",
            "X*Y^3"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        apolar(&["--field", "gf:2", "verify", "paperbook"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn dependent_forms_exit_4() {
    let o = apolar(&["pencil", "--r", "2", "X^3", "2*X^3"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn pencil_table_and_json() {
    let o = apolar(&["pencil", "--r", "2", "X^4", "X*Y^3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("H_A                   1 2 3 3 2"));
    assert!(text.contains("H_gen                 1 2 3 2 1"));
    assert!(text.contains("special               0: 1 1 1 1 1"));
    assert!(text.contains("special               inf: 1 2 2 2 1"));

    let o = apolar(&["--json", "pencil", "--r", "2", "X^4", "X*Y^3"]);
    let text = stdout(&o);
    let parsed: PencilJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.h_gen, vec![1, 2, 3, 2, 1]);
    assert_eq!(parsed.special_lambdas, vec!["0", "inf"]);
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    let order = [
        "\"H_F\"",
        "\"H_G\"",
        "\"H_A\"",
        "\"d\"",
        "\"t\"",
        "\"H_gen\"",
        "\"special_lambdas\"",
        "\"verdicts\"",
        "\"sampling\"",
    ];
    let positions: Vec<usize> = order.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn compressed_flags_in_json() {
    let f = "X^3*Y + X^2*Z^2 + X*Z^3 + Y*Z^3";
    let g = "X^3*Z + X^2*Y^2 + X^2*Y*Z + 3*X*Y^2*Z + Y^3*Z";
    let o = apolar(&["--json", "pencil", "--r", "3", f, g]);
    let parsed: PencilJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed.h_a, vec![1, 3, 6, 6, 2]);
    assert!(parsed.verdicts.compressed);
    assert_eq!(parsed.h_gen, vec![1, 3, 5, 3, 1]);
    assert!(!parsed.verdicts.compressed_gorenstein);
}

#[test]
fn output_is_deterministic_and_seeded() {
    let args = [
        "--json",
        "--samples",
        "5",
        "pencil",
        "--r",
        "2",
        "X^4",
        "X*Y^3",
    ];
    assert_eq!(stdout(&apolar(&args)), stdout(&apolar(&args)));
    let with_env = Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(args)
        .env("APOLAR_SEED", "17")
        .output()
        .unwrap();
    let with_flag = apolar(&[
        "--json",
        "--samples",
        "5",
        "--seed",
        "17",
        "pencil",
        "--r",
        "2",
        "X^4",
        "X*Y^3",
    ]);
    assert_eq!(stdout(&with_env), stdout(&with_flag));
    assert_ne!(stdout(&with_env), stdout(&apolar(&args)));
}

#[test]
fn exhaustive_default_for_small_primes() {
    let o = apolar(&[
        "--json", "--field", "gf:11", "pencil", "--r", "2", "X^4", "X*Y^3",
    ]);
    let parsed: PencilJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(parsed.sampling.exhaustive);
    assert_eq!(parsed.fibers.len(), 12);
}

#[test]
fn osequence_verdicts() {
    let o = apolar(&["osequence", "1,3,6,8,6,4,2"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("true\n", Some(0)));
    let o = apolar(&["osequence", "1,1,2"]);
    assert_eq!(
        (stdout(&o).as_str(), o.status.code()),
        ("false at index 2\n", Some(1))
    );
    assert_eq!(apolar(&["osequence", "1"]).status.code(), Some(0));
}

#[test]
fn level_command() {
    let o = apolar(&["level", "--r", "3", "X*Z^3", "Y*Z^3", "X^2*Y^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("socle_type  0 0 0 0 3"));
}

#[test]
fn paperbook_passes() {
    let o = apolar(&["verify", "paperbook"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.ends_with("pass")).count(),
        8
    );
}
