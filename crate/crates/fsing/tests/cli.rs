//! CLI contract tests: exit codes per error class, golden JSON files, and
//! the plain-text surface.

use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_fsing")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(bin())
        .args(args)
        .env("FSING_SEED", "424242")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn golden_reports_are_stable() {
    let cases: &[(&str, &[&str])] = &[
        ("zero-ideal-classify.json", &["classify", "fixtures/zero-ideal.fring", "--json"]),
        (
            "stanley-reisner-p2-classify.json",
            &["classify", "fixtures/stanley-reisner-p2.fring", "--json"],
        ),
        (
            "fedder-singh-classify.json",
            &["classify", "fixtures/fedder-singh.fring", "--json"],
        ),
        (
            "fedder-singh-deform.json",
            &[
                "deform",
                "fixtures/fedder-singh.fring",
                "--element",
                "y",
                "--target",
                "anti-nilpotent",
                "--json",
            ],
        ),
        (
            "semigroup-oracle.json",
            &[
                "oracle-check",
                "fixtures/semigroup.fring",
                "--index",
                "1",
                "--window=-1..2",
                "--stage",
                "8",
                "--json",
            ],
        ),
        ("nonperfect-reproduce.json", &["reproduce", "ex-nonperfect", "--json"]),
    ];
    for (golden, args) in cases {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, 0, "{:?}: {}", args, stderr);
        let expected = std::fs::read_to_string(format!("{}/tests/golden/{}", env!("CARGO_MANIFEST_DIR"), golden))
            .expect("golden file present");
        assert_eq!(stdout, expected, "golden drift for {}", golden);
    }
}

#[test]
fn exit_code_zero_on_success() {
    let (code, stdout, _) = run(&["classify", "fixtures/stanley-reisner-p2.fring"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("F-pure"));
}

#[test]
fn exit_code_two_on_input_errors() {
    // non-prime characteristic
    let dir = std::env::temp_dir().join("fsing-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad_char = dir.join("bad-char.fring");
    std::fs::write(&bad_char, "char 4\nvars x:1\norder grevlex\nideal\n").unwrap();
    let (code, _, stderr) = run(&["classify", bad_char.to_str().unwrap()]);
    assert_eq!(code, 2, "{}", stderr);
    assert!(stderr.contains("not prime"));

    // syntax error with position
    let bad_syntax = dir.join("bad-syntax.fring");
    std::fs::write(&bad_syntax, "char 5\nvars x:1 y:1\norder grevlex\nideal\n  x $ y\n").unwrap();
    let (code, _, stderr) = run(&["classify", bad_syntax.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 5"));

    // inhomogeneous generator
    let inhom = dir.join("inhom.fring");
    std::fs::write(&inhom, "char 5\nvars x:1 y:1\norder grevlex\nideal\n  x + y^2\n").unwrap();
    let (code, _, stderr) = run(&["classify", inhom.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not homogeneous"));

    // unknown fixture
    let (code, _, _) = run(&["reproduce", "ex-unknown"]);
    assert_eq!(code, 2);

    // non-regular element
    let nonreg = dir.join("nonreg.fring");
    std::fs::write(
        &nonreg,
        "char 2\nvars u:1 v:1 z:1\norder grevlex\nideal\n  u*v\n  u*z\n  v*z\nelement u = u\n",
    )
    .unwrap();
    let (code, _, stderr) = run(&["deform", nonreg.to_str().unwrap(), "--element", "u", "--target", "f-full"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not regular"));
}

#[test]
fn exit_code_three_on_cap_abort() {
    // a pair cap of zero aborts the foundational Groebner run
    let (code, _, stderr) = run(&[
        "classify",
        "fixtures/fedder-singh.fring",
        "--pair-cap",
        "0",
    ]);
    assert_eq!(code, 3, "{}", stderr);
    assert!(stderr.contains("cap"));
}

#[test]
fn classify_single_index_filters_report() {
    let (code, stdout, _) = run(&["classify", "fixtures/stanley-reisner-p2.fring", "--index", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let per_index = v["classification"]["per_index"].as_array().unwrap();
    assert_eq!(per_index.len(), 1);
    assert_eq!(per_index[0]["i"], 1);
    assert_eq!(v["index"], 1);
}

#[test]
fn reproduce_segre_p7_skips_without_slow() {
    let (code, stdout, _) = run(&["reproduce", "ex-segre-p7", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["all_passed"], true);
    let detail = v["assertions"][0]["detail"].as_str().unwrap();
    assert!(detail.contains("--slow"));
}

#[test]
fn deform_unprovable_on_segre() {
    let (code, stdout, _) = run(&[
        "deform",
        "fixtures/segre-p2.fring",
        "--element",
        "x",
        "--target",
        "f-full",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["outcome"], "unprovable");
}
