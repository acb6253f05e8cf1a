use std::process::Command;

fn gschur(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gschur"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn compute_sp_one_variable() {
    let (code, out, _) = gschur(&[
        "compute", "--preset", "sp", "--n", "1", "--lambda", "2", "--method", "bialternant",
        "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1^2 - 1\n");
}

#[test]
fn compute_giambelli_json() {
    let (code, out, _) = gschur(&[
        "compute", "--preset", "schur", "--n", "2", "--lambda", "2,1", "--method", "giambelli",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "[{\"c\":\"1\",\"e\":[2,1]},{\"c\":\"1\",\"e\":[1,2]}]\n");
}

#[test]
fn methods_agree() {
    let mut outputs = Vec::new();
    for method in ["bialternant", "jt", "giambelli", "fh"] {
        let (code, out, err) = gschur(&[
            "compute", "--preset", "so_odd", "--n", "3", "--lambda", "2,2,1", "--method", method,
            "--format", "latex",
        ]);
        assert_eq!(code, 0, "{err}");
        outputs.push(out);
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn latex_tokens() {
    let (_, out, _) = gschur(&[
        "compute", "--preset", "schur", "--n", "2", "--lambda", "2", "--format", "latex",
    ]);
    assert_eq!(out, "x_{1}^{2} + x_{1}^{1}x_{2}^{1} + x_{2}^{2}\n");
}

#[test]
fn verify_jt_sweep_passes() {
    let (code, out, _) = gschur(&[
        "verify", "--property", "jt", "--trials", "20", "--seed", "42", "--max-weight", "6",
        "--max-vars", "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "jt: trials=20 checks=1460 failures=0\n");
}

#[test]
fn verify_output_is_deterministic() {
    let args = [
        "verify", "--property", "giambelli", "--trials", "3", "--seed", "5", "--max-weight", "4",
        "--max-vars", "3",
    ];
    let first = gschur(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, gschur(&args));
}

#[test]
fn verify_small_suites() {
    for property in ["lemma", "triangularity", "extension", "fh", "alternation", "stable"] {
        let (code, out, err) = gschur(&[
            "verify", "--property", property, "--trials", "2", "--seed", "1", "--max-weight", "3",
            "--max-vars", "3",
        ]);
        assert_eq!(code, 0, "{property}: {out}{err}");
        assert!(out.ends_with("failures=0\n"), "{out}");
    }
}

#[test]
fn expand_in_both_bases() {
    let (code, out, _) = gschur(&["expand", "--preset", "schur", "--n", "3", "--lambda", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "m(2,1) + 2*m(1,1,1)\n");
    let (code, out, _) = gschur(&[
        "expand", "--preset", "factorial", "--shifts", "1,2,3", "--n", "2", "--lambda", "1",
        "--basis", "schur", "--format", "json",
    ]);
    assert_eq!(code, 0);
    // S_(1)(x|a) = s_(1) - a(0) - a(1) in two variables.
    assert_eq!(out, "[{\"c\":\"1\",\"mu\":[1]},{\"c\":\"-3\",\"mu\":[]}]\n");
}

#[test]
fn stable_factorial_single_box() {
    let (code, out, _) = gschur(&[
        "stable", "--preset", "factorial", "--offset", "0", "--slope", "1", "--lambda", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "c(1)(d) = 1\nc()(d) = -1/2*d^2 + 1/2*d\n");
    let (code, out, _) = gschur(&[
        "stable", "--preset", "factorial", "--offset", "0", "--slope", "1", "--lambda", "1",
        "--d", "1/2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "S(1) + 1/8*S()\n");
}

#[test]
fn stable_jt_check() {
    let (code, out, err) = gschur(&[
        "stable", "--preset", "bc_jacobi", "--p", "1/3", "--q", "2/5", "--lambda", "2,1", "--d",
        "7/2", "--n-eval", "3", "--check-jt",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("jt identity holds"));
}

#[test]
fn super_one_box() {
    let (code, out, _) = gschur(&[
        "super", "--preset", "schur", "--n", "2", "--m", "1", "--lambda", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1 + x2 - y1\n");
}

#[test]
fn sequence_file() {
    let dir = std::env::temp_dir().join(format!("gschur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.json");
    std::fs::write(&path, r#"{"a": ["0", "0", "0"], "b": ["0", "1", "1"]}"#).unwrap();
    let (code, out, err) = gschur(&[
        "compute", "--seq-file", path.to_str().unwrap(), "--n", "1", "--lambda", "2",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "x1^2 - 1\n");
    let (code, _, err) = gschur(&[
        "compute", "--seq-file", path.to_str().unwrap(), "--n", "1", "--lambda", "5",
    ]);
    assert_eq!(code, 2, "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(gschur(&["compute", "--n", "1", "--lambda", "1"]).0, 2);
    assert_eq!(gschur(&["compute", "--preset", "nope", "--n", "1", "--lambda", "1"]).0, 2);
    assert_eq!(gschur(&["compute", "--preset", "sp", "--n", "1", "--lambda", "1,2"]).0, 2);
    assert_eq!(gschur(&["compute", "--preset", "schur", "--n", "1", "--lambda", "1,1"]).0, 2);
    assert_eq!(
        gschur(&["compute", "--preset", "schur", "--n", "2", "--lambda", "1", "--method", "fh"]).0,
        2
    );
    assert_eq!(gschur(&["frobnicate"]).0, 2);
    // singular coefficient index
    let (code, _, err) = gschur(&[
        "compute", "--preset", "bc_jacobi", "--p", "1", "--q", "1", "--n", "2", "--lambda", "2,1",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("pole"), "{err}");
    assert_eq!(gschur(&["--help"]).0, 0);
}
