//! End-to-end checks of the command-line surface: exit codes, output
//! determinism, and the structure-constant file schema.

use std::process::Command;

fn tkklab(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tkklab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn verify_passes_and_fails_with_exit_codes() {
    let (_, _, code) = tkklab(&["verify", "tkk", "--kind", "hermR", "--n", "3"]);
    assert_eq!(code, 0);

    // invalid size: usage error
    let (_, err, code) = tkklab(&["verify", "tkk", "--kind", "hermR", "--n", "0"]);
    assert_eq!(code, 2, "stderr: {err}");

    // unknown kind: usage error
    let (_, _, code) = tkklab(&["verify", "tkk", "--kind", "nope", "--n", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn weight_check_exit_codes() {
    let (_, _, code) = tkklab(&[
        "weights",
        "check",
        "--kind",
        "e7",
        "--weight",
        "[0,0,0,0,0,-4,2,-2]",
        "--a",
        "18",
    ]);
    assert_eq!(code, 0);

    // wrong constant: checks fail
    let (_, _, code) = tkklab(&[
        "weights",
        "check",
        "--kind",
        "e7",
        "--weight",
        "[0,0,0,0,0,-4,2,-2]",
        "--a",
        "17",
    ]);
    assert_eq!(code, 1);

    // rational entries as strings
    let (_, _, code) = tkklab(&[
        "weights",
        "check",
        "--kind",
        "hermR",
        "--n",
        "3",
        "--weight",
        "[\"-1/2\",\"-1/2\",\"-3/2\"]",
        "--a",
        "15/16",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn output_is_deterministic() {
    let run = || {
        tkklab(&[
            "jordan",
            "verify",
            "--kind",
            "hermC",
            "--n",
            "2",
            "--samples",
            "10",
            "--seed",
            "5",
        ])
    };
    let (out1, _, code1) = run();
    let (out2, _, code2) = run();
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(out1, out2);
    assert!(out1.ends_with('\n'));
    assert!(!out1.contains('\r'));
}

#[test]
fn structure_constants_schema() {
    let dir = std::env::temp_dir().join("tkklab_sc_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sc.json");
    let (_, _, code) = tkklab(&[
        "tkk",
        "build",
        "--kind",
        "hermR",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let payload: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let basis = payload["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 10); // co of the rank-2 symmetric case
    let brackets = payload["brackets"].as_object().unwrap();
    assert!(!brackets.is_empty());
    // keys are "a,b" with a < b, values are {generator: scalar} objects
    for (key, row) in brackets {
        let (a, b) = key.split_once(',').unwrap();
        let (a, b): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
        assert!(a < b);
        for (g, scalar) in row.as_object().unwrap() {
            let _: usize = g.parse().unwrap();
            assert!(scalar.is_object());
        }
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn tables_and_roots_emit() {
    let (out, _, code) = tkklab(&["weights", "tables", "--format", "md"]);
    assert_eq!(code, 0);
    assert!(out.contains("| rho | 2 | n | n | n | 3 |"));

    let (out, _, code) = tkklab(&["cartan", "roots", "--kind", "hermO3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 126);
}

#[test]
fn solver_cli_smoke() {
    let (out, _, code) = tkklab(&[
        "weights", "solve", "--kind", "hermR", "--n", "3", "--k-max", "2", "--bound", "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("15/16"));
}

#[test]
fn hw_cli_smoke() {
    let (out, _, code) = tkklab(&[
        "ueval",
        "hw",
        "--kind",
        "hermR",
        "--n",
        "3",
        "--weight",
        "[\"-1/2\",\"-1/2\",\"-1/2\"]",
        "--a",
        "15/16",
        "--relation",
        "Q1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"scalar_is_zero\":true"));
}
