use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use trace_horizon_cli::report::{ResultKind, RunReport};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trace-horizon"));
    cmd.env_remove("TRACE_HORIZON_MAX_NU");
    cmd
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn report(out: &Output) -> RunReport {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    RunReport::from_json(&text).unwrap_or_else(|e| panic!("{e}: {text}"))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn find_nu_identity() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let out = run(&["find-nu", "--matrix", path(&m), "--B", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.command, "find-nu");
    assert_eq!(r.result.kind, ResultKind::Certificate);
    assert_eq!(r.result.data["nu"], 1);
    assert_eq!(r.result.data["trace"], "3");
    assert_eq!(r.result.data["case"], "direct_scan");
}

#[test]
fn find_nu_rotation_fails_periodically() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "rot.txt", "2\n0 -1\n1 0\n");
    let out = run(&["find-nu", "--matrix", path(&m)]);
    assert_eq!(out.status.code(), Some(4));
    let r = report(&out);
    assert_eq!(r.result.kind, ResultKind::Failure);
    assert_eq!(r.result.data["periodic"], true);
    assert_eq!(r.result.data["period"], 4);
    assert_eq!(r.result.data["max_trace_seen"], "2");
}

#[test]
fn find_nu_rejects_det_two() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "d2.txt", "2\n2 0\n0 1\n");
    assert_eq!(
        run(&["find-nu", "--matrix", path(&m)]).status.code(),
        Some(3)
    );
}

#[test]
fn find_nu_parse_and_io_errors() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "bad.txt", "2\n1 2\n3\n");
    let out = run(&["find-nu", "--matrix", path(&m)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        run(&["find-nu", "--matrix", path(&missing)]).status.code(),
        Some(2)
    );
}

#[test]
fn find_nu_modes() {
    let dir = TempDir::new().unwrap();
    let id4 = write(&dir, "id4.txt", "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    let out = run(&["find-nu", "--matrix", path(&id4), "--mode", "auto"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.result.data["nu"], 720);
    assert_eq!(r.result.data["case"], "cyclotomic_small_kl");

    let cat = write(&dir, "cat.txt", "2\n2 1\n1 1\n");
    let out = run(&[
        "find-nu",
        "--matrix",
        path(&cat),
        "--mode",
        "expanding",
        "--c",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).result.data["case"], "expanding");

    let out = run(&["find-nu", "--matrix", path(&cat), "--mode", "cyclotomic"]);
    assert_eq!(out.status.code(), Some(3));

    let rot = write(&dir, "rot.txt", "2\n0 -1\n1 0\n");
    let out = run(&["find-nu", "--matrix", path(&rot), "--mode", "cyclotomic"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn max_nu_env_caps_the_scan() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "rot.txt", "2\n0 -1\n1 0\n");
    let out = bin()
        .args(["find-nu", "--matrix", path(&m)])
        .env("TRACE_HORIZON_MAX_NU", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let r = report(&out);
    assert_eq!(r.result.data["horizon"], 3);
    assert_eq!(r.params["max_nu"], 3);

    let out = bin()
        .args(["find-nu", "--matrix", path(&m)])
        .env("TRACE_HORIZON_MAX_NU", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_values() {
    let out = run(&[
        "bounds", "--g", "2", "--n", "0", "--alpha", "1", "--C", "auto", "--N", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.result.kind, ResultKind::Bounds);
    let d = &r.result.data;
    assert!((d["penner_lower"].as_f64().unwrap() - 2f64.ln() / 12.0).abs() < 1e-12);
    let tsai = d["tsai_lower"]["value"].as_f64().unwrap();
    assert!((tsai - 2f64.ln() / 622080.0).abs() < 1e-18);
    assert_eq!(d["c_main"].as_f64().unwrap(), 1.0 / 384.0);

    assert_eq!(
        run(&["bounds", "--g", "1", "--n", "0"]).status.code(),
        Some(3)
    );
}

#[test]
fn lefschetz_examples() {
    let dir = TempDir::new().unwrap();
    let block = write(&dir, "block.txt", "4\n2 1 0 0\n1 1 0 0\n0 0 1 0\n0 0 0 1\n");
    let out = run(&[
        "lefschetz",
        "--matrix",
        path(&block),
        "--g",
        "2",
        "--n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out).result.data["dilatation_log_lower"]
        .as_f64()
        .unwrap();
    assert!((v - 9f64.ln() / 18.0).abs() < 1e-12);

    let j = write(&dir, "j.txt", "4\n0 1 0 0\n-1 0 0 0\n0 0 0 1\n0 0 -1 0\n");
    let out = run(&["lefschetz", "--matrix", path(&j), "--g", "2", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.result.data["nu"], 4);
    let v = r.result.data["dilatation_log_lower"].as_f64().unwrap();
    assert!((v - 6f64.ln() / 48.0).abs() < 1e-12);

    let odd = write(&dir, "odd.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let out = run(&["lefschetz", "--matrix", path(&odd), "--g", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn penner_table() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("table.csv");
    let out = run(&[
        "penner",
        "--g",
        "2..4",
        "--n",
        "0..5",
        "--out",
        path(&csv_path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "g,n,k,l,max_entry,entry_bound,rho,row_sum_bound,rho_bound,ok"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    let r = report(&out);
    assert_eq!(r.result.kind, ResultKind::Table);
    assert_eq!(r.result.data["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn penner_empty_range_and_bad_path() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("empty.csv");
    let out = run(&[
        "penner",
        "--g",
        "3..2",
        "--n",
        "0..5",
        "--out",
        path(&csv_path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&csv_path).unwrap().trim(),
        "g,n,k,l,max_entry,entry_bound,rho,row_sum_bound,rho_bound,ok"
    );

    let bad = dir.path().join("no/such/dir/t.csv");
    assert_eq!(
        run(&["penner", "--g", "2", "--n", "0", "--out", path(&bad)])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["penner", "--g", "two", "--n", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn lemma_commands() {
    let out = run(&["lemmas", "dirichlet", "--zs", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).result.data["nu"], 2);

    let out = run(&["lemmas", "dirichlet", "--zs", "0+1i, 0-1i"]);
    assert_eq!(report(&out).result.data["nu"], 4);

    let out = run(&[
        "lemmas",
        "dirichlet",
        "--m",
        "3",
        "--trials",
        "20",
        "--seed",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).result.data["violations"], 0);

    let out = run(&["lemmas", "newton", "--coeffs", "1 3 3 1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(
        (r.result.data["nu"].clone(), r.result.data["S"].clone()),
        (Value::from(2), Value::from("3"))
    );

    let out = run(&["lemmas", "newton", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["lemmas", "fejer", "--K", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r.result.data["min_re"].as_f64().unwrap() >= -1e-10);
    assert_eq!(r.result.data["p_at_one"], "11/2");

    assert_eq!(
        run(&["lemmas", "dirichlet", "--zs", "1,1,1,1,1,1,1,1,1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["lemmas", "newton", "--coeffs", "4"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["lemmas", "fejer", "--K", "0"]).status.code(), Some(3));
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let out = run(&["lemmas", "dirichlet", "--trials", "10", "--seed", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let r = RunReport::from_json(&text).unwrap();
    assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    let raw: Value = serde_json::from_str(&text).unwrap();
    let obj = raw.as_object().unwrap();
    for k in ["command", "version", "params", "result", "timing_ms"] {
        assert!(obj.contains_key(k), "missing {k}");
    }

    let again = report(&run(&[
        "lemmas",
        "dirichlet",
        "--trials",
        "10",
        "--seed",
        "3",
    ]));
    assert_eq!(again.result, r.result);
}
