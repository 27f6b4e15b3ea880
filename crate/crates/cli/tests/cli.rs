//! End-to-end runs of the `kdense` binary: documented examples, exit codes,
//! schema conformance and byte-for-byte determinism.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn kdense(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdense"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kdense_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdense"))
        .args(args)
        .env("KDENSE_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn kdense_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kdense"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let o = kdense(args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn assert_schema(name: &str, doc: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(doc)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn octahedron_g6() -> String {
    stdout(&kdense(&["construct", "octahedron"])).trim().to_string()
}

#[test]
fn analyze_examples() {
    let tri = ok_json(&["analyze", "--g6", "Bw"]);
    assert_eq!(tri["k_star"], 3);
    assert_schema("analyze", &tri);

    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.el");
    std::fs::write(&tree, "# a spider\n6 5\n0 1\n0 2\n0 3\n3 4\n4 5\n").unwrap();
    assert_eq!(ok_json(&["analyze", tree.to_str().unwrap()])["k_star"], 2);
    assert_eq!(ok_json(&["analyze", "--el", tree.to_str().unwrap()])["k_star"], 2);

    let oct = ok_json(&["analyze", "--g6", &octahedron_g6()]);
    assert_eq!(oct["k_star"], 4);
    assert_eq!(oct["hierarchy"]["omega"], 3);
    assert_schema("analyze", &oct);
}

#[test]
fn input_from_stdin() {
    let o = kdense_stdin(&["analyze"], "Bw\n");
    assert_eq!(code(&o), 0);
    let o = kdense_stdin(&["verify", "propositions", "-"], "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k_star"], 2);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&kdense(&["analyze", "--g6", "!!"])), 2);
    assert_eq!(code(&kdense_stdin(&["analyze"], "")), 2);
    assert_eq!(code(&kdense_stdin(&["analyze"], "3 1\n0 3\n")), 2);
    assert_eq!(code(&kdense_stdin(&["analyze"], "3 2\n0 1\n")), 2);
    assert_eq!(code(&kdense(&["analyze", "/nonexistent/g.g6"])), 2);
    assert_eq!(code(&kdense(&["analyze", "--g6", "Bw", "--bogus"])), 2);
    assert_eq!(code(&kdense(&[])), 2);
    assert_eq!(code(&kdense(&["analyze", "--g6", "Bw", "--format", "csv"])), 2);
    assert_eq!(code(&kdense(&["decompose", "--g6", "Bw", "--k", "1"])), 2);
}

#[test]
fn construct_examples() {
    let w = ok_json(&["construct", "max-edge", "--k", "3", "--n", "6", "--format", "json"]);
    assert_eq!(w["certificate"]["m"], 12);
    assert_eq!(w["recipe"]["name"], "max-edge");
    assert_schema("construct", &w);

    let el = stdout(&kdense(&[
        "construct",
        "clique-chain",
        "--k",
        "4",
        "--n",
        "10",
        "--format",
        "text",
    ]));
    assert_eq!(el.lines().next(), Some("10 18"));
    assert_eq!(el.lines().count(), 19);

    let o = kdense(&["construct", "realization", "--k", "3", "--n", "7", "--a", "20"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("17"));

    assert_eq!(code(&kdense(&["construct", "no-such-recipe", "--k", "3"])), 2);
    assert_eq!(code(&kdense(&["construct", "max-edge", "--k", "3"])), 2);
}

#[test]
fn construct_outputs_round_trip() {
    let g6 = stdout(&kdense(&["construct", "glued-cliques", "--k", "5", "--r", "2"]));
    let a = ok_json(&["analyze", "--g6", g6.trim()]);
    assert_eq!(
        (a["n"].as_u64(), a["m"].as_u64(), a["k_star"].as_u64()),
        (Some(7), Some(17), Some(5))
    );

    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let o = kdense(&[
        "construct",
        "torus",
        "--a",
        "2",
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["edge_connectivity"], 4);
    assert_schema("certificate", &c);
}

#[test]
fn dot_marks_peeled_edges() {
    // K4 and a triangle sharing vertex 0: the triangle's edges drop below k = 4.
    let el = "6 9\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n0 5\n4 5\n";
    let o = kdense_stdin(&["decompose", "--k", "4", "--format", "dot"], el);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("color=red").count(), 3);
    assert!(dot.contains("0 -- 1 [label=2];"));
}

#[test]
fn decompose_levels() {
    let el = "6 9\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n0 5\n4 5\n";
    let o = kdense_stdin(&["decompose"], el);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_schema("decompose", &v);
    assert_eq!(v["k_max"], 4);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 4);
    assert_eq!(levels[2]["vertices"], serde_json::json!([0, 1, 2, 3]));
    assert!(levels[3]["vertices"].as_array().unwrap().is_empty());
}

#[test]
fn search_examples() {
    let r = ok_json(&["search", "min", "--k", "4", "--n", "7"]);
    assert_eq!(r["value"], 12);
    assert_eq!(r["seconds"], Value::Null);
    assert_schema("record", &r);

    let r = ok_json(&["search", "max", "--k", "3", "--n", "6"]);
    assert_eq!(r["value"], 12);
    assert_schema("record", &r);

    let r = ok_json(&["scan", "--k", "4", "--n", "7"]);
    assert_eq!(r["values"], serde_json::json!([12, 14, 15, 16, 17, 18]));
    assert_schema("record", &r);

    let timed = ok_json(&["scan", "--k", "3", "--n", "5", "--timings"]);
    assert!(timed["seconds"].is_number());
}

#[test]
fn search_guards_and_budgets() {
    assert_eq!(code(&kdense(&["search", "min", "--k", "3", "--n", "10"])), 2);
    assert_eq!(code(&kdense(&["search", "min", "--k", "3", "--n", "10", "--force"])), 2);
    assert_eq!(
        code(&kdense(&[
            "search", "min", "--k", "3", "--n", "11", "--force", "--budget", "10"
        ])),
        2
    );
    assert_eq!(code(&kdense(&["search", "min", "--k", "3..4", "--n", "7"])), 2);
    assert_eq!(
        code(&kdense(&["search", "min", "--k", "3", "--n", "7", "--budget", "soon"])),
        2
    );
    assert_eq!(code(&kdense_env(&["search", "min", "--k", "3", "--n", "7"], "zero")), 2);

    let o = kdense(&["search", "min", "--k", "3", "--n", "8", "--budget", "50"]);
    assert_eq!(code(&o), 4);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["status"], "inconclusive");
    assert_schema("record", &r);

    let o = kdense(&["tables", "--k", "3", "--n", "8", "--budget", "50"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("exhaustive:inconclusive"));
}

#[test]
fn verify_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.g6");
    std::fs::write(&g, format!("{}\n", octahedron_g6())).unwrap();
    let r = ok_json(&["verify", "propositions", "--input", g.to_str().unwrap()]);
    assert_schema("propositions", &r);
    assert_eq!(r["checks"].as_array().unwrap().len(), 5);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let c = ok_json(&["verify", "classification", "--g6", "Bw"]);
    assert_schema("classification", &c);
    assert_eq!(c["labels"], serde_json::json!(["complete"]));

    let text = stdout(&kdense(&["verify", "propositions", "--g6", "Bw", "--format", "text"]));
    assert!(text.lines().skip(1).all(|l| l.starts_with("PASS ")));
}

#[test]
fn tables_match_closed_forms_and_shipped_artifact() {
    let o = kdense(&["tables", "--k", "2..4", "--n", "4..8"]);
    assert_eq!(code(&o), 0);
    let csv = stdout(&o);
    let shipped = std::fs::read_to_string(root().join("artifacts/tables_k2-4_n4-8.csv")).unwrap();
    assert_eq!(csv, shipped);
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (k, n): (usize, usize) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        let value: usize = match f[2] {
            "realization-set" => continue,
            _ => f[3].parse().unwrap(),
        };
        let want = match (f[2], k) {
            ("min", 2) => n - 1,
            ("min", 3) => (3 * (n - 1)).div_ceil(2),
            ("min", 4) if n % 3 == 1 => 2 * n - 2,
            ("min", 4) => 2 * n - 1,
            ("max", _) => n + k - 3 + (n - 2) * (n - 3) / 2,
            _ => unreachable!(),
        };
        assert_eq!(value, want, "{line}");
    }

    let json = ok_json(&["tables", "--k", "2..4", "--n", "4..8", "--format", "json"]);
    assert_schema("tables", &json);
    let shipped: Value =
        serde_json::from_str(&std::fs::read_to_string(root().join("artifacts/tables_k2-4_n4-8.json")).unwrap())
            .unwrap();
    assert_eq!(json, shipped);
}

#[test]
fn conjecture_report_schema() {
    let shipped: Value =
        serde_json::from_str(&std::fs::read_to_string(root().join("artifacts/conjecture_report.json")).unwrap())
            .unwrap();
    assert_schema("conjecture", &shipped);
    let fresh = ok_json(&["search", "conjecture", "--k", "5..8", "--n", "5..9"]);
    assert_eq!(fresh, shipped);
}

#[test]
fn output_independent_of_worker_count() {
    let args = ["tables", "--k", "3..4", "--n", "5..8"];
    let one = kdense_env(&args, "1");
    assert_eq!(code(&one), 0);
    for t in ["2", "8"] {
        assert_eq!(kdense_env(&args, t).stdout, one.stdout, "KDENSE_THREADS={t}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.g6");
    let o = kdense(&[
        "construct",
        "clique-copies",
        "--k",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "EwCW\n");
}
