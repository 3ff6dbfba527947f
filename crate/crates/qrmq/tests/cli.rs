use std::fs;
use std::process::Command;

fn qrmq(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qrmq")).args(args).output().expect("spawn qrmq")
}

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_passes_and_mutation_fails() {
    let ok = qrmq(&["verify", "--trials", "20", "--n-max", "256", "--seed", "3"]);
    assert!(ok.status.success(), "{}", stdout(&ok));
    assert!(stdout(&ok).trim_end().ends_with("PASS"));

    let bad = qrmq(&["verify", "--trials", "20", "--n-max", "256", "--seed", "3", "--mutate"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).trim_end().ends_with("FAIL"));
}

#[test]
fn bench_then_fit() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("q.csv");
    let csv = csv.to_str().unwrap();
    let out = qrmq(&["bench", "--n", "4096", "--q", "16,32,64,128,256", "--seeds", "2", "--out", csv]);
    assert!(out.status.success());
    let text = fs::read_to_string(csv).unwrap();
    assert!(text.starts_with("n,q,eps,seed,quantum_queries,"));
    assert_eq!(text.lines().count(), 1 + 10);

    let out = qrmq(&["fit", "--in", csv, "--axis", "q"]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(line.starts_with("axis=q slope="), "{line}");
    assert!(line.contains("points=5"));
}

#[test]
fn trace_of_a_cold_query_pair() {
    let dir = tempfile::tempdir().unwrap();
    let ops = dir.path().join("ops.txt");
    let out = dir.path().join("trace.txt");
    fs::write(&ops, "# two queries\nQ 1 8\nQ 2 5\n").unwrap();
    let res = qrmq(&[
        "trace",
        "--n",
        "8",
        "--ops",
        ops.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["op=1 topdown=1 lazy=", "op=2 topdown=2 lazy=3,4,5,6,7,8,9,12,13"]);
}

#[test]
fn kmin_on_a_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let arr = dir.path().join("arr.txt");
    fs::write(&arr, "n=8\n3\n1\n4\n1\n5\n9\n2\n6\n").unwrap();
    let res = qrmq(&["kmin", "--in", arr.to_str().unwrap(), "--k", "3"]);
    assert!(res.status.success());
    assert!(stdout(&res).starts_with("indices=2,4,7\n"));
}

#[test]
fn errors_exit_with_two() {
    let res = qrmq(&["bench", "--n", "16", "--q", "32", "--out", "/dev/null"]);
    assert_eq!(res.status.code(), Some(2));
    let res = qrmq(&["trace", "--n", "8", "--ops", "/nonexistent/ops", "--out", "/dev/null"]);
    assert_eq!(res.status.code(), Some(2));
}
