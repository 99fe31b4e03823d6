use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

use ringmat::json::{decode_charpoly, decode_matrix_over};
use ringmat::{adjugate_via_charpoly, charpoly_direct, RingDescriptor};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ringmat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const Z_1234: &str = r#"{"ring":{"kind":"int"},"entries":[[1,2],[3,4]]}"#;

#[test]
fn charpoly_examples() {
    let out = run(&["charpoly", "--matrix", Z_1234]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_out(&out);
    assert_eq!(v["c"], json!(["1", "-5", "-2"]));
    assert_eq!(v["chi"], json!({"coeffs": ["-2", "-5", "1"]}));

    let zero = r#"{"ring":{"kind":"int"},"entries":[[0,0,0],[0,0,0],[0,0,0]]}"#;
    assert_eq!(json_out(&run(&["charpoly", "--matrix", zero]))["chi"]["coeffs"], json!(["0", "0", "0", "1"]));

    let two = r#"{"ring":{"kind":"mod","m":8},"entries":[["2"]]}"#;
    assert_eq!(json_out(&run(&["charpoly", "--matrix", two]))["chi"]["coeffs"], json!(["6", "1"]));
}

#[test]
fn newton_and_direct_agree_through_the_cli() {
    let q = r#"{"ring":{"kind":"rat"},"entries":[[1,2,0],[3,4,{"num":"1","den":"3"}],[0,-1,5]]}"#;
    let direct = run(&["charpoly", "--matrix", q]);
    let newton = run(&["charpoly", "--matrix", q, "--newton"]);
    assert_eq!(newton.status.code(), Some(0));
    assert_eq!(direct.stdout, newton.stdout);
    let fallback = run(&["charpoly", "--matrix", Z_1234, "--newton"]);
    assert_eq!(fallback.status.code(), Some(0));
    assert_eq!(fallback.stdout, run(&["charpoly", "--matrix", Z_1234]).stdout);
}

#[test]
fn adjugate_examples() {
    let out = run(&["adjugate", "--matrix", Z_1234]);
    assert_eq!(json_out(&out)["entries"], json!([["4", "-2"], ["-3", "1"]]));
    let via = run(&["adjugate", "--matrix", Z_1234, "--via-charpoly"]);
    assert_eq!(out.stdout, via.stdout);
    let id = r#"{"ring":{"kind":"int"},"entries":[[1,0,0],[0,1,0],[0,0,1]]}"#;
    assert_eq!(json_out(&run(&["adjugate", "--matrix", id]))["entries"], json!([["1","0","0"],["0","1","0"],["0","0","1"]]));
    let five = run(&["adjugate", "--matrix", r#"{"entries":[[5]]}"#, "--ring", "int"]);
    assert_eq!(json_out(&five)["entries"], json!([["1"]]));
}

#[test]
fn emitted_json_round_trips() {
    let inputs = [
        Z_1234,
        r#"{"ring":{"kind":"mod","m":6},"entries":[["1","5","2"],["0","3","4"],["2","2","1"]]}"#,
        r#"{"ring":{"kind":"rat"},"entries":[[{"num":"1","den":"2"},"3"],["-1",{"num":"2","den":"7"}]]}"#,
        r#"{"ring":{"kind":"poly","base":{"kind":"int"}},"entries":[[{"coeffs":["1","1"]},"2"],["0",{"coeffs":["0","-1"]}]]}"#,
        r#"{"ring":{"kind":"int"},"rows":0,"cols":0,"entries":[]}"#,
    ];
    for text in inputs {
        let v: Value = serde_json::from_str(text).unwrap();
        let ring = RingDescriptor::from_json(&v["ring"]).unwrap();
        let a = decode_matrix_over(&ring, &v).unwrap();

        let cp = json_out(&run(&["charpoly", "--matrix", text]));
        assert_eq!(decode_charpoly(&ring, &cp).unwrap(), charpoly_direct(&a).unwrap(), "{text}");

        for flag in [None, Some("--via-charpoly")] {
            let mut args = vec!["adjugate", "--matrix", text];
            args.extend(flag);
            let adj = json_out(&run(&args));
            assert_eq!(RingDescriptor::from_json(&adj["ring"]).unwrap(), ring);
            assert_eq!(decode_matrix_over(&ring, &adj).unwrap(), adjugate_via_charpoly(&a).unwrap());
        }
    }
}

#[test]
fn matrix_from_stdin_and_file_and_out() {
    let dir = std::env::temp_dir().join(format!("ringmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("a.json");
    std::fs::write(&input, Z_1234).unwrap();
    let from_file = run(&["charpoly", "--matrix", input.to_str().unwrap()]);
    let from_stdin = run_stdin(&["charpoly", "--matrix", "-"], Z_1234);
    assert_eq!(from_file.stdout, from_stdin.stdout);
    let out = dir.join("out.json");
    let written = run(&["charpoly", "--matrix", Z_1234, "--out", out.to_str().unwrap()]);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), from_file.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_examples() {
    let all = run(&["verify", "--suite", "all", "--matrix", Z_1234]);
    assert_eq!(all.status.code(), Some(0));
    let reports = json_out(&all);
    let passed = reports.as_array().unwrap().iter().filter(|r| r["passed"] == true).count();
    assert!(passed >= 12, "{passed}");
    assert!(stderr(&all).contains("0 failed"));

    let z8 = r#"{"ring":{"kind":"mod","m":8},"entries":[["2"]]}"#;
    let alm = run(&["verify", "--suite", "almkvist", "--k", "2", "--matrix", z8]);
    assert_eq!(alm.status.code(), Some(0));
    assert_eq!(json_out(&alm)[0]["status"], "pass");

    let frob = run(&["verify", "--suite", "frobenius", "--p", "2", "--matrix", Z_1234]);
    assert_eq!(frob.status.code(), Some(0));
    assert_eq!(json_out(&frob)[0]["status"], "hypothesis-not-met");
    assert!(stderr(&frob).contains("1 hypothesis not met"), "{}", stderr(&frob));
}

#[test]
fn fuzz_examples() {
    let args = ["fuzz", "--seed", "42", "--count", "100", "--size", "4", "--ring", "mod:8", "--suite", "core"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, run(&args).stdout);
    let empty = run(&["fuzz", "--seed", "42", "--count", "0", "--size", "4", "--ring", "mod:8"]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(json_out(&empty), json!([]));
    let other_seed = run(&["fuzz", "--seed", "43", "--count", "100", "--size", "4", "--ring", "mod:8", "--suite", "core"]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn exit_code_contract() {
    let int1 = r#"{"ring":{"kind":"int"},"entries":[[1]]}"#;
    let cases: &[(&[&str], i32)] = &[
        // success
        (&["charpoly", "--matrix", Z_1234], 0),
        (&["verify", "--suite", "core", "--matrix", Z_1234], 0),
        // identity violation
        (&["verify", "--suite", "adj-inverse", "--corrupt", "adj-inverse", "--matrix", Z_1234], 1),
        (&["fuzz", "--ring", "int", "--seed", "1", "--count", "2", "--size", "2", "--suite", "ddet", "--corrupt", "ddet"], 1),
        // parse and configuration errors
        (&["charpoly", "--matrix", "{nope", "--ring", "int"], 2),
        (&["charpoly", "--matrix", r#"{"ring":{"kind":"int"},"entries":[[1,"x"],[1,1]]}"#], 2),
        (&["charpoly", "--matrix", r#"{"ring":{"kind":"int"},"rows":3,"cols":2,"entries":[[1,2]]}"#], 2),
        (&["charpoly", "--matrix", r#"{"entries":[[1]]}"#], 2),
        (&["charpoly", "--matrix", int1, "--ring", "mod:0"], 2),
        (&["charpoly", "--matrix", "/nonexistent/matrix.json"], 2),
        (&["verify", "--suite", "nope", "--matrix", int1], 2),
        (&["verify", "--suite", "", "--matrix", int1], 2),
        (&["verify", "--suite", "frobenius", "--p", "4", "--matrix", int1], 2),
        (&["fuzz", "--ring", "int", "--seed", "1", "--count", "1", "--size", "7", "--suite", "block"], 2),
        (&["fuzz", "--ring", "int", "--count", "1", "--size", "2"], 2),
        (&["fuzz", "--ring", "int", "--seed", "1", "--count", "1", "--size", "2", "--corrupt", "nope"], 2),
        (&["frobnicate"], 2),
        // shape and ring errors
        (&["charpoly", "--matrix", r#"{"ring":{"kind":"int"},"entries":[[1,2]]}"#], 3),
        (&["adjugate", "--matrix", r#"{"ring":{"kind":"int"},"entries":[[1,2]]}"#], 3),
        (&["verify", "--suite", "all", "--matrix", r#"{"ring":{"kind":"int"},"entries":[[1,2]]}"#], 3),
        (&["charpoly", "--ring", "rat", "--matrix", int1], 3),
    ];
    for (args, code) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}: {}", stderr(&out));
        if *code >= 2 {
            assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
            assert!(!stderr(&out).is_empty());
        }
    }
}

#[test]
fn violation_report_carries_a_witness() {
    let out = run(&["verify", "--suite", "cayley-hamilton", "--corrupt", "cayley-hamilton", "--matrix", Z_1234]);
    assert_eq!(out.status.code(), Some(1));
    let rep = &json_out(&out)[0];
    assert_eq!(rep["passed"], false);
    assert_eq!(rep["status"], "fail");
    assert_eq!(rep["residual"], json!([["1", "0"], ["0", "0"]]));
    assert!(stderr(&out).contains("1 failed"));
}

#[test]
fn error_messages_name_the_field() {
    let out = run(&["charpoly", "--matrix", r#"{"ring":{"kind":"int"},"entries":[[1,2],[3,"q"]]}"#]);
    assert!(stderr(&out).contains("entries[1][1]"), "{}", stderr(&out));
    let out = run(&["charpoly", "--matrix", r#"{"ring":{"kind":"mod"},"entries":[[1]]}"#]);
    assert!(stderr(&out).contains("ring"), "{}", stderr(&out));
}
