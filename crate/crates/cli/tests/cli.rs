use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn dualcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const P3: &str = "p dwc 3 2 1\nw 1 1\nw 2 2\nw 3 1\ne 1 2\ne 2 3\n";
const K2: &str = "p dwc 2 1 1\nw 1 3\nw 2 5\ne 1 2\n";

#[test]
fn solve_examples() {
    let p3 = file(P3);
    let out = dualcolor(&["solve", path(&p3), "--fpt", "--emit-certificate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["sigma"], 3);
    assert_eq!(v["weight_sum"], 4);
    assert_eq!(v["certificate"], serde_json::json!([[1, 3], [2]]));
    assert_eq!(v["stats"]["antimatching_size"], 1);

    let k2 = file(K2);
    for flag in ["--fpt", "--oracle", "--both"] {
        let out = dualcolor(&["solve", path(&k2), flag]);
        assert_eq!(out.status.code(), Some(1), "{flag}");
        let v = json(&out);
        assert_eq!(v["answer"], "no");
        assert_eq!(v["sigma"], 8);
        assert_eq!(v["certificate"], Value::Null);
    }
}

#[test]
fn malformed_input_exits_2() {
    let bad = file("p dwc 2 1 1\nw 1 x\nw 2 5\ne 1 2\n");
    let out = dualcolor(&["solve", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(dualcolor(&["solve", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(dualcolor(&["solve", path(&bad), "--fpt", "--oracle"]).status.code(), Some(2));
}

#[test]
fn oracle_cap_is_enforced() {
    let big = String::from_utf8(dualcolor(&["generate", "tight-general", "--k", "4"]).stdout).unwrap();
    let f = file(&big);
    assert_eq!(dualcolor(&["solve", path(&f), "--oracle", "--cap", "10"]).status.code(), Some(2));
}

#[test]
fn kernelize_tight_and_complete() {
    let tight = dualcolor(&["generate", "tight-general", "--k", "3"]);
    let f = file(std::str::from_utf8(&tight.stdout).unwrap());
    let v = json(&dualcolor(&["kernelize", path(&f), "--emit-trace"]));
    assert_eq!(v["reduced"]["n"], 10);
    assert_eq!(v["log"], serde_json::json!([]));
    assert_eq!(v["bound"]["limit"], 10);
    assert_eq!(v["shortcut"], Value::Null);

    let mut k5 = String::from("p dwc 5 10 1\n");
    for v in 1..=5 {
        k5 += &format!("w {v} 2\n");
    }
    for u in 1..=5 {
        for v in u + 1..=5 {
            k5 += &format!("e {u} {v}\n");
        }
    }
    let f = file(&k5);
    let v = json(&dualcolor(&["kernelize", path(&f), "--emit-trace"]));
    assert_eq!(v["shortcut"], "no");
    assert_eq!(v["reduced"]["n"], 1);
    assert_eq!(v["reduced"]["weights"], serde_json::json!([1]));
    assert_eq!(v["log"][0]["rule"], 1);
    let without_trace = json(&dualcolor(&["kernelize", path(&f)]));
    assert_eq!(without_trace["log"], Value::Null);
}

#[test]
fn kernel_round_trip_keeps_the_decision() {
    for seed in 0..6 {
        let seed = seed.to_string();
        let gen = dualcolor(&[
            "generate", "random-split", "--clique", "7", "--stable", "5", "--d", "2", "--k", "3", "--max-weight", "3",
            "--seed", &seed,
        ]);
        let original = file(std::str::from_utf8(&gen.stdout).unwrap());
        let v = json(&dualcolor(&["kernelize", path(&original)]));
        let reduced = file(v["reduced"]["file"].as_str().unwrap());
        let a = dualcolor(&["solve", path(&original), "--oracle"]).status.code();
        let b = dualcolor(&["solve", path(&reduced), "--oracle"]).status.code();
        assert_eq!(a, b, "seed {seed}");
    }
}

#[test]
fn generate_examples() {
    let out = dualcolor(&["generate", "tight-general", "--k", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("p dwc 27 ")));
    assert_eq!(text.lines().filter(|l| l.starts_with("w ")).count(), 27);

    let out = dualcolor(&["generate", "tight-interval", "--k", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p interval 14 3"));

    let sc = file("p setcover 3 3 2\ns 1 1 2\ns 2 2 3\ns 3 3\n");
    let out = dualcolor(&["generate", "setcover", "--input", path(&sc)]);
    let text = String::from_utf8(out.stdout).unwrap();
    // k' = 3 * (2 + 1) - 2
    assert!(text.lines().any(|l| l.starts_with("p dwc 6 ") && l.ends_with(" 7")), "{text}");

    let args = ["generate", "random", "--n", "50", "--p", "0.5", "--seed", "7", "--k", "4"];
    assert_eq!(dualcolor(&args).stdout, dualcolor(&args).stdout);
}

#[test]
fn generated_files_round_trip() {
    let cases: [&[&str]; 4] = [
        &["generate", "random", "--n", "12", "--p", "0.3", "--k", "2", "--max-weight", "9", "--seed", "3"],
        &["generate", "random-interval", "--n", "9", "--k", "2", "--seed", "3"],
        &["generate", "planted", "--n", "15", "--pairs", "3", "--k", "4", "--seed", "3"],
        &["generate", "tight-interval", "--k", "2"],
    ];
    for args in cases {
        let text = String::from_utf8(dualcolor(args).stdout).unwrap();
        let inst = dualcolor_cli::parse(&text).unwrap();
        let canonical = dualcolor_cli::format::write(&inst);
        let body: String = text.lines().filter(|l| !l.starts_with("c ")).map(|l| format!("{l}\n")).collect();
        assert_eq!(canonical, body);
    }
}

#[test]
fn audits() {
    let tight = dualcolor(&["generate", "tight-general", "--k", "4"]);
    let f = file(std::str::from_utf8(&tight.stdout).unwrap());
    let out = dualcolor(&["audit", path(&f), "--claims"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["claims"]["normal_classes"], 7);
    assert_eq!(v["claims"]["checks"].as_array().unwrap().len(), 4);

    let iv = dualcolor(&["generate", "tight-interval", "--k", "2"]);
    let f = file(std::str::from_utf8(&iv.stdout).unwrap());
    assert_eq!(dualcolor(&["audit", path(&f), "--interval"]).status.code(), Some(0));

    // three disjoint intervals break the clique-count claim
    let f = file("p interval 3 2\ni 1 0 0 1\ni 2 2 2 1\ni 3 4 4 1\n");
    let out = dualcolor(&["audit", path(&f), "--interval"]);
    assert_eq!(out.status.code(), Some(1));

    let sc = file("p setcover 3 3 2\ns 1 1 2\ns 2 2 3\ns 3 3\n");
    let v = json(&dualcolor(&["audit", path(&sc), "--split"]));
    assert_eq!(v["split"]["d"], 2);

    let c5 = file("p dwc 5 5 2\nw 1 1\nw 2 1\nw 3 1\nw 4 1\nw 5 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
    assert_eq!(dualcolor(&["audit", path(&c5), "--split"]).status.code(), Some(2));
    assert_eq!(dualcolor(&["audit", path(&c5)]).status.code(), Some(2));
}

#[test]
fn bench_is_independent_of_pool_size() {
    let strip = |out: Output| -> Vec<String> {
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    let one = strip(dualcolor(&["bench", "kernel", "--jobs", "1", "--seed", "5", "--reps", "1"]));
    let four = strip(dualcolor(&["bench", "kernel", "--jobs", "4", "--seed", "5", "--reps", "1"]));
    assert_eq!(one, four);
    assert!(one[0].starts_with("suite,index,seed,n,m,k"));
    assert_eq!(one.len(), 49);
}
