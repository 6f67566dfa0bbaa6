use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_distclust"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const HARD: &str = r#"{"schema_version": 1, "kind": "hard", "frame": ["w1", "w2"], "objects": ["w1", "w1", "w2"]}"#;

const EVIDENTIAL: &str = r#"{
  "schema_version": 1, "kind": "evidential", "frame": ["w1", "w2"],
  "objects": [
    [{"set": ["w1"], "mass": 0.6}, {"set": ["w1", "w2"], "mass": 0.4}],
    "w1",
    "w2"
  ]
}"#;

const ROUGH_WIDE: &str = r#"{"schema_version": 1, "kind": "rough", "frame": ["a", "b", "c"], "objects": []}"#;

fn pair(v: &Value) -> (f64, f64) {
    (v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

#[test]
fn identical_hard_files_have_similarity_one() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", HARD);
    let b = write(dir.path(), "b.json", HARD);
    let out = run(&["compare", a.to_str().unwrap(), b.to_str().unwrap(), "--output", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["type"], "value");
    assert_eq!(v["result"]["distance"], 0.0);
    assert_eq!(v["result"]["similarity"], 1.0);
    assert!(v["seconds"].as_f64().unwrap() >= 0.0);
    assert_eq!(v["inputs"][0]["sha256"], v["inputs"][1]["sha256"]);
}

#[test]
fn evidential_fixture_reports_swapped_similarity_pair() {
    let dir = TempDir::new().unwrap();
    let e = write(dir.path(), "e.json", EVIDENTIAL);
    let h = write(dir.path(), "h.json", HARD);
    let out = run(&[
        "compare",
        e.to_str().unwrap(),
        h.to_str().unwrap(),
        "--measure",
        "rand",
        "--mode",
        "exact",
        "--output",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    let (dl, du) = pair(&v["result"]["distance"]);
    let (sl, su) = pair(&v["result"]["similarity"]);
    assert!(dl.abs() < 1e-12 && (du - 4.0 / 15.0).abs() < 1e-12);
    assert!((sl - 11.0 / 15.0).abs() < 1e-12 && (su - 1.0).abs() < 1e-12);

    let forced = run(&[
        "compare",
        e.to_str().unwrap(),
        h.to_str().unwrap(),
        "--view",
        "evidential",
        "--output",
        "json",
    ]);
    assert_eq!(stdout_json(&forced)["result"], v["result"]);
}

#[test]
fn budget_error_is_machine_readable_and_suggests_sampling() {
    let dir = TempDir::new().unwrap();
    let objects: Vec<&str> = (0..30).map(|_| r#"["a","b","c"]"#).collect();
    let wide = ROUGH_WIDE.replace("[]", &format!("[{}]", objects.join(",")));
    let other = ROUGH_WIDE.replace("[]", &format!("[{}]", vec![r#"["a","b"]"#; 30].join(",")));
    let a = write(dir.path(), "a.json", &wide);
    let b = write(dir.path(), "b.json", &other);
    let out = run(&["compare", a.to_str().unwrap(), b.to_str().unwrap(), "--output", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["code"], "BudgetExceeded");
    assert!(v["message"].as_str().unwrap().contains("--mode sample --samples 4612"));

    let labels = vec![r#""a""#; 30].join(",");
    let hard = format!(r#"{{"schema_version": 1, "kind": "hard", "frame": ["a", "b", "c"], "objects": [{labels}]}}"#);
    let h = write(dir.path(), "h.json", &hard);
    let (a_s, h_s) = (a.to_str().unwrap(), h.to_str().unwrap());
    let refused = run(&["compare", a_s, h_s, "--output", "json"]);
    assert_eq!(stdout_json(&refused)["code"], "BudgetExceeded");
    let dp = run(&["compare", a_s, h_s, "--bounds", "contingency", "--output", "json"]);
    assert!(dp.status.success(), "{}", String::from_utf8_lossy(&dp.stdout));
    let v = stdout_json(&dp);
    assert_eq!(v["parameters"]["bounds"], "contingency");
    let (lo, hi) = pair(&v["result"]["distance"]);
    assert!(0.0 <= lo && lo <= hi && hi <= 1.0);

    let sampled = run(&[
        "compare",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--mode",
        "sample",
        "--samples",
        "300",
        "--output",
        "json",
    ]);
    assert!(sampled.status.success());
    assert_eq!(stdout_json(&sampled)["sampling"]["samples"], 300);
}

#[test]
fn errors_exit_nonzero_with_codes() {
    let dir = TempDir::new().unwrap();
    let h = write(dir.path(), "h.json", HARD);
    let h = h.to_str().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"schema_version": 2, "kind": "hard", "frame": ["a"], "objects": ["a"]}"#);
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["compare", h, h, "--tnorm", "lukasiewicz"], "UnknownTNorm"),
        (vec!["compare", h, "/nonexistent/file.json"], "IoError"),
        (vec!["compare", h, bad.to_str().unwrap()], "SchemaError"),
        (vec!["compare", h, h, "--measure", "jaccard"], "UnknownKind"),
        (vec!["compare", h, h, "--samples", "many"], "UsageError"),
    ];
    for (args, code) in cases {
        let mut full = args.clone();
        full.extend(["--output", "json"]);
        let out = run(&full);
        assert!(!out.status.success(), "{args:?}");
        assert_eq!(stdout_json(&out)["code"], code, "{args:?}");
    }
    let table = run(&["compare", h, h, "--tnorm", "lukasiewicz"]);
    assert!(!table.status.success());
    assert!(String::from_utf8_lossy(&table.stderr).contains("UnknownTNorm"));
}

#[test]
fn cluster_writes_a_file_that_compares_against_labels() {
    let dir = TempDir::new().unwrap();
    let out_file = dir.path().join("km.json");
    let csv = write(
        dir.path(),
        "pts.csv",
        "x,y,label\n0,0,a\n0.1,0,a\n0,0.2,a\n5,5,b\n5.1,5,b\n5,5.2,b\n",
    );
    let out = run(&[
        "cluster",
        "--data",
        csv.to_str().unwrap(),
        "--label-col",
        "label",
        "--algorithm",
        "km",
        "-k",
        "2",
        "--out",
        out_file.to_str().unwrap(),
        "--output",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = stdout_json(&out);
    assert_eq!(summary["kind"], "hard");
    assert_eq!(summary["n"], 6);
    let cmp = run(&[
        "compare",
        out_file.to_str().unwrap(),
        "--labels",
        csv.to_str().unwrap(),
        "--label-col",
        "label",
        "--output",
        "json",
    ]);
    assert!(cmp.status.success());
    assert_eq!(stdout_json(&cmp)["result"]["distance"], 0.0);
}

#[test]
fn cluster_without_out_prints_the_clustering() {
    let out = run(&["--seed", "4", "cluster", "--algorithm", "fcm"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["kind"], "fuzzy");
    assert_eq!(v["objects"].as_array().unwrap().len(), 150);
}

#[test]
fn sampled_compare_reproduces_across_thread_counts() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("fcm.json");
    assert!(run(&["cluster", "--algorithm", "fcm", "--out", f.to_str().unwrap()]).status.success());
    let iris = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/iris.csv");
    let go = |threads: &str| {
        let out = run(&[
            "--threads",
            threads,
            "--seed",
            "9",
            "compare",
            f.to_str().unwrap(),
            "--labels",
            iris,
            "--label-col",
            "species",
            "--mode",
            "sample",
            "--samples",
            "2000",
            "--output",
            "json",
        ]);
        assert!(out.status.success());
        let mut v = stdout_json(&out);
        v.as_object_mut().unwrap().remove("seconds");
        v["sampling"].as_object_mut().unwrap().remove("seconds");
        v
    };
    assert_eq!(go("1"), go("3"));
}

#[test]
fn axioms_partition_distance_is_a_metric_on_four_objects() {
    let out = run(&["axioms", "--measure", "partition", "--n", "4", "--exhaustive", "--output", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "metric");
    assert_eq!(v["points"].as_array().unwrap().len(), 15);
}

#[test]
fn axioms_lower_bound_prints_a_triangle_counterexample() {
    let out = run(&["axioms", "--family", "lower", "--measure", "rand", "--n", "3", "--exhaustive"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("M4  triangle inequality      FAILS"));
    assert!(text.contains("M4: "));
}

#[test]
fn reproduce_iris_single_algorithm() {
    let out = run(&["reproduce-iris", "--algorithms", "KM", "--samples", "200", "--output", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let row = &v["rows"][0];
    assert_eq!(row["algorithm"], "KM");
    let s = row["d_ri"]["report"]["result"]["similarity"].as_f64().unwrap();
    assert!((s - 0.877).abs() <= 0.02, "{s}");

    let table = run(&["reproduce-iris", "--algorithms", "KM,RKM", "--samples", "200"]);
    let text = String::from_utf8_lossy(&table.stdout);
    assert!(text.contains("D-RI") && text.contains("RKM"));
}

#[test]
fn bench_emits_records() {
    let out = run(&[
        "bench",
        "--fuzzy-sizes",
        "50",
        "--ambiguous",
        "3",
        "--samples",
        "100",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["workload"].as_str().unwrap()).collect();
    assert!(names.contains(&"fuzzy-rand-closed-form"));
    assert!(names.contains(&"rough-interval-partition"));
}

#[test]
fn help_documents_the_similarity_convention() {
    let out = run(&["compare", "--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1 - distance"));
    assert!(text.contains("(1 - b, 1 - a)"));
}
