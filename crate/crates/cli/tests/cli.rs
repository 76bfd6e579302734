use std::process::{Command, Output};

fn dedekind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dedekind"))
        .args(args)
        .env_remove("DEDEKIND_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    dedekind(args).status.code().expect("exited normally")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(out).trim()).unwrap()
}

fn last_line(out: &Output) -> String {
    stdout(out).lines().last().unwrap_or_default().to_string()
}

#[test]
fn sum_prints_literals() {
    let out = dedekind(&["sum", "classical", "-a", "2", "-b", "3"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "-1/18\n"));
    let out = dedekind(&[
        "sum", "hwz", "-m", "0", "-n", "0", "-a", "1", "-b", "1", "-c", "4", "-x", "0", "-y", "0", "-z", "0",
    ]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "4\n"));
    let out = dedekind(&["sum", "rademacher", "-a", "-1", "-b", "3", "-x", "-1/2", "-y", "2/3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sum_domain_errors_name_the_precondition() {
    let out = dedekind(&["sum", "classical", "-a", "1", "-b", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("b ≠ 0"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn sum_formats() {
    let out = dedekind(&["sum", "classical", "-a", "2", "-b", "3", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"family\":\"classical\",\"params\":{\"a\":2,\"b\":3},\"value\":\"-1/18\"}\n"
    );
    let plain = dedekind(&[
        "sum", "carlitz", "-n", "2", "-a", "1", "-b", "2", "-x", "1/3", "-y", "0",
    ]);
    let out = dedekind(&[
        "sum", "carlitz", "-n", "2", "-a", "1", "-b", "2", "-x", "1/3", "-y", "0", "--format", "csv",
    ]);
    let expected = format!("family,n,a,b,x,y,value\ncarlitz,2,1,2,1/3,0,{}", stdout(&plain));
    assert_eq!(stdout(&out), expected);
}

#[test]
fn verify_examples() {
    let out = dedekind(&["verify", "dedekind", "-a", "2", "-b", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"identity\":\"dedekind\",\"params\":{\"a\":2,\"b\":3},\"lhs\":\"-1/18\",\"rhs\":\"-1/18\",\"residual\":\"0\",\"pass\":true}\n"
    );

    let out = dedekind(&["verify", "apostol", "-n", "2", "-a", "2", "-b", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n odd"));

    let out = dedekind(&[
        "verify", "thm31", "-m", "2", "-n", "3", "-a", "2", "-b", "-3", "-x", "1/3", "-y", "1/5", "-z", "1/7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["residual"], "0");
    assert_eq!(report["params"]["b"], -3);
}

#[test]
fn verify_reports_counters_and_conventions() {
    let out = dedekind(&["verify", "cor43", "-p", "3", "-r", "1", "-a", "2", "-b", "4", "-c", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["counter"].is_u64());

    for convention in ["strong", "dieter"] {
        let args = [
            "verify",
            "rademacher-three",
            "-a",
            "3",
            "-b",
            "5",
            "-c",
            "7",
            "--convention",
            convention,
        ];
        let out = dedekind(&args);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert_eq!(json(&out)["params"]["convention"], convention);
    }
    let defaulted = dedekind(&["verify", "rademacher-three", "-a", "3", "-b", "5", "-c", "7"]);
    assert_eq!(json(&defaulted)["params"]["convention"], "strong");
}

#[test]
fn verify_plain_and_csv() {
    let out = dedekind(&["verify", "dedekind", "-a", "5", "-b", "7", "--format", "plain"]);
    let line = stdout(&out);
    assert!(line.starts_with("dedekind a=5 b=7: "), "{line}");
    assert!(line.trim_end().ends_with("residual=0 PASS"), "{line}");
    let out = dedekind(&["verify", "dedekind", "-a", "5", "-b", "7", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "identity,a,b,lhs,rhs,residual,pass,counter");
    assert!(
        lines[1].starts_with("dedekind,5,7,") && lines[1].ends_with(",0,true,"),
        "{}",
        lines[1]
    );
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["sum", "nonsense", "-a", "1", "-b", "2"],
        &["sum", "classical", "-a", "1"],
        &["sum", "classical", "-a", "1", "-b", "2", "-x", "1/2"],
        &["sum", "classical", "-a", "1.5", "-b", "2"],
        &["sum", "rademacher", "-a", "1", "-b", "2", "-x", "0.5", "-y", "0"],
        &["sum", "rademacher", "-a", "1", "-b", "2", "-x", "1/0", "-y", "0"],
        &["sum", "apostol", "-n", "-1", "-a", "1", "-b", "2"],
        &["sum", "classical", "-a", "2", "-b", "3", "--format", "xml"],
        &["verify", "dedekind", "-a", "2", "-b", "4"],
        &["verify", "dedekind", "-a", "0", "-b", "4"],
        &[
            "verify",
            "rademacher-three",
            "-a",
            "3",
            "-b",
            "5",
            "-c",
            "7",
            "--convention",
            "weak",
        ],
        &["verify", "cor43", "-p", "2", "-r", "0", "-a", "1", "-b", "1", "-c", "1"],
        &["verify", "cor43", "-p", "3", "-r", "3", "-a", "1", "-b", "1", "-c", "1"],
        &[
            "verify", "carlitz", "-n", "-1", "-a", "1", "-b", "2", "-x", "0", "-y", "0",
        ],
        &["sweep", "dedekind", "-a", "1..3"],
        &["sweep", "dedekind", "-a", "3..1", "-b", "1"],
        &["sweep", "dedekind", "-a", "1..3", "--set", "a=1", "-b", "1"],
        &["sweep", "dedekind", "--set", "q=1", "-a", "1", "-b", "1"],
        &["sweep", "dedekind", "--set", "a", "-b", "1"],
        &["sweep", "nonsense", "-a", "1", "-b", "1"],
        &["sweep", "dedekind", "--seed", "3", "-a", "1", "-b", "1"],
        &["sweep", "dedekind", "--random", "3", "--jobs", "0"],
        &["analytic", "fourier", "-n", "1", "-x", "1/4", "-K", "10"],
        &["analytic", "fourier", "-n", "2", "-x", "1/4"],
        &["analytic", "zeta-even", "-j", "0", "-K", "10"],
        &["analytic", "lemma24", "-j", "1", "-b", "0", "-r", "1", "-K", "10"],
        &["analytic", "lemma24", "-j", "2", "-b", "1", "-r", "20", "-K", "10"],
        &["analytic", "zeta-even", "-j", "1", "-K", "10", "--tolerance", "-1"],
    ];
    for args in cases {
        let out = dedekind(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn failures_exit_one() {
    let out = dedekind(&[
        "analytic",
        "lemma24",
        "-j",
        "2",
        "-b",
        "3",
        "-r",
        "1",
        "-K",
        "10000",
        "--tolerance",
        "1e-4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
    assert_eq!(
        code(&["analytic", "zeta-even", "-j", "2", "-K", "10", "--tolerance", "0"]),
        1
    );
}

#[test]
fn analytic_examples() {
    for args in [
        &["analytic", "zeta-even", "-j", "1", "-K", "1000000"][..],
        &["analytic", "lemma24", "-j", "2", "-b", "3", "-r", "1", "-K", "10000"],
        &["analytic", "fourier", "-n", "2", "-x", "1/4", "-K", "1000"],
        &[
            "analytic", "lemma27", "-j", "1", "-b", "3", "-r", "1", "-x", "1/4", "-K", "1000",
        ],
    ] {
        let out = dedekind(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report = json(&out);
        assert_eq!(report["pass"], true);
        assert!(report["abs_error"].as_f64().unwrap() <= report["tolerance"].as_f64().unwrap());
    }
    let out = dedekind(&["analytic", "fourier", "-n", "2", "-x", "1/4", "-K", "1000"]);
    let report = json(&out);
    assert_eq!(report["K"], 1000);
    assert!((report["reference"]["re"].as_f64().unwrap() + 1.0 / 48.0).abs() < 1e-15);
    let keys: Vec<&str> = [
        "\"target\"",
        "\"params\"",
        "\"K\"",
        "\"approx\"",
        "\"reference\"",
        "\"abs_error\"",
        "\"tolerance\"",
        "\"pass\"",
    ]
    .to_vec();
    let text = stdout(&out);
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn sweep_thm31_grid_passes() {
    let out = dedekind(&[
        "sweep",
        "thm31",
        "-m",
        "1..3",
        "-n",
        "1..3",
        "-a",
        "-3,-2,-1,1,2,3",
        "-b",
        "-3,-2,-1,1,2,3",
        "-x",
        "0,1/2,1/3",
        "-y",
        "0,1/2,1/3",
        "-z",
        "0,1/2,1/3",
        "--format",
        "plain",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(last_line(&out), "cases=8748 passes=8748 failures=0 skipped=0");
}

#[test]
fn sweep_cor43_grid_passes() {
    let out = dedekind(&[
        "sweep", "cor43", "-p", "1,3", "-r", "0..2", "-a", "1..6", "-b", "1..6", "-c", "1..6",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // p = 1 admits r = 0 only; p = 3 admits r = 0, 1, 2
    assert_eq!(lines.len(), 4 * 216 + 1);
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["cases"], 864);
    assert_eq!(summary["summary"]["failures"], 0);
    assert_eq!(summary["summary"]["skipped"], 2 * 216);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(
        first["params"],
        serde_json::json!({"p": 1, "r": 0, "a": 1, "b": 1, "c": 1})
    );
}

#[test]
fn sweep_random_is_byte_deterministic() {
    let args = ["sweep", "carlitz", "--random", "500", "--seed", "2024"];
    let first = dedekind(&args);
    let second = dedekind(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first).lines().count(), 501);

    let serial = dedekind(&["sweep", "carlitz", "--random", "500", "--seed", "2024", "--jobs", "1"]);
    let parallel = dedekind(&["sweep", "carlitz", "--random", "500", "--seed", "2024", "--jobs", "4"]);
    assert_eq!(serial.stdout, first.stdout);
    assert_eq!(parallel.stdout, first.stdout);

    let other = dedekind(&["sweep", "carlitz", "--random", "500", "--seed", "2025"]);
    assert_ne!(other.stdout, first.stdout);
}

#[test]
fn sweep_worker_env_does_not_change_output() {
    let args = ["sweep", "thm41", "--random", "60", "--seed", "9"];
    let base = dedekind(&args);
    let env = Command::new(env!("CARGO_BIN_EXE_dedekind"))
        .args(args)
        .env("DEDEKIND_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(env.stdout, base.stdout);
}

#[test]
fn sweep_sums_and_csv() {
    let out = dedekind(&[
        "sweep",
        "classical",
        "--sum",
        "-a",
        "1..3",
        "-b",
        "-1..1",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,a,b,value");
    assert_eq!(lines[1], "classical,1,-1,0");
    assert_eq!(*lines.last().unwrap(), "# cases=6 passes=6 failures=0 skipped=3");
    assert_eq!(lines.len(), 8);
}

#[test]
fn sweep_set_flag_matches_param_flags() {
    let a = dedekind(&["sweep", "dedekind", "-a", "1..5", "-b", "1..5"]);
    let b = dedekind(&["sweep", "dedekind", "--set", "a=1..5", "--set", "b=1..5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
