use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxplus-walk"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn evolve_lambda_rows() {
    let out = run(&["evolve", "--coin", "a=1,b=2,c=-2,d=-1", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "n,k,lambda");
    assert_eq!(lines.len(), 7);
    for line in &lines[1..] {
        let cols: Vec<i64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cols[2], -cols[1]);
    }
}

#[test]
fn evolve_zero_steps_echoes_seed() {
    let out = run(&[
        "evolve",
        "--coin",
        "a=1,b=2,c=-2,d=-1",
        "--n",
        "0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cells"], serde_json::json!({"0": [0, 0]}));
}

#[test]
fn quantum_distribution_sums_to_one() {
    let out = run(&["evolve", "--qw", "--hadamard", "--n", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let total: f64 = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((total - 1.0).abs() <= 1e-12);
}

#[test]
fn sdm_cells_and_check() {
    let out = run(&["sdm", "--coin", "a=1,b=2,c=3,d=4", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["closed_form"]["1"], serde_json::json!([[9, 10], [8, 9]]));
    assert_eq!(v["all_equal"], serde_json::json!(true));
    let out = run(&["sdm", "--coin", "a=-3,b=7,c=0,d=5", "--n", "12", "--check"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "thm4-1", "--trials", "200", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("200/200 coins classified correctly"));
    let out = run(&["verify", "table1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1600/1600 products"));
    let out = run(&["verify", "thm5-1", "--K", "5", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.txt");
    let second = dir.path().join("second.txt");
    for path in [&first, &second] {
        let out = run(&[
            "verify",
            "thm3-1",
            "--trials",
            "20",
            "--seed",
            "11",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
    let a = run(&["ud", "--coin", "a=2,b=-1,c=1,d=-2", "--n", "6"]);
    let b = run(&["ud", "--coin", "a=2,b=-1,c=1,d=-2", "--n", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "# reference coin\ncoin=a=1,b=2,c=-2,d=-1\nn=3\nformat=csv\n",
    )
    .unwrap();
    let out = run(&["evolve", "--config", cfg.to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().count(), 5);
    let out = run(&["evolve", "--config", cfg.to_str().unwrap(), "--n", "1"]);
    assert_eq!(stdout(&out).lines().count(), 3);
    let coin_file = dir.path().join("coin.json");
    std::fs::write(&coin_file, r#"{"a": 0, "b": 1, "c": 1, "d": 0}"#).unwrap();
    let out = run(&[
        "eig",
        "--config",
        cfg.to_str().unwrap(),
        "--coin-file",
        coin_file.to_str().unwrap(),
        "--n",
        "2",
    ]);
    assert!(
        stdout(&out).contains("2,0,2,2,1,delta>=0"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn float_mode_accepts_decimals() {
    let out = run(&[
        "eig",
        "--coin",
        "a=0.5,b=1,c=1,d=0",
        "--n",
        "2",
        "--mode",
        "float",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["eig", "--coin", "a=0.5,b=1,c=1,d=0", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["evolve", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm9"]).status.code(), Some(2));
    assert_eq!(
        run(&["evolve", "--coin-file", "/definitely/not/here"])
            .status
            .code(),
        Some(3)
    );
    let out = run(&[
        "evolve",
        "--coin",
        "a=1,b=2,c=-2,d=-1",
        "--out",
        "/definitely/not/here/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn spectrum_and_weak_limit_outputs() {
    let out = run(&["spectrum", "--coin", "a=1,b=2,c=-2,d=-1", "--K", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["max_cycle_mean"], serde_json::json!(0));
    assert_eq!(v["K"], serde_json::json!(3));
    assert_eq!(v["eigenvector"].as_array().unwrap().len(), 7);
    let out = run(&["qw", "--n", "200"]);
    assert!(stdout(&out).starts_with("u,empirical_cdf,limit_cdf,abs_diff\n-0.6,"));
    assert_eq!(run(&["qw", "--mode", "exact"]).status.code(), Some(2));
}
