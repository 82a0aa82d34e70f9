use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn braidlink(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braidlink"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: stdout {:?}, stderr {:?}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn borromean_report() {
    let out = braidlink(&["invariants", "--format", "loop", "-e", "[x,y]"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with(r#"{"lk":0,"lk_tilde":0,"brunn":true,"hopf":1,"hopf_raw":"#), "{text}");
}

#[test]
fn empty_word_has_zero_hopf() {
    let v = json(&braidlink(&["invariants", "--format", "loop", "-e", ""], None));
    assert_eq!(v["hopf"], 0);
}

#[test]
fn gate_omits_hopf() {
    let out = braidlink(&["invariants", "--format", "loop", "-e", "x"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["brunn"], false);
    assert!(v.get("hopf").is_none() && v.get("hopf_raw").is_none());
}

#[test]
fn artin_input() {
    let lk = |w: &str| {
        let v = json(&braidlink(&["invariants", "--format", "artin", "-e", w, "--samples", "32"], None));
        assert_eq!(v["brunn"], false);
        (v["lk"].as_i64().unwrap(), v["lk_tilde"].as_i64().unwrap())
    };
    // On the sphere a full twist of strands 1, 2 and one of strands 3, 4 agree.
    assert_eq!(lk("s1^2"), lk("s3^2"));
    assert_eq!(lk("s1^2"), (-1, -1));
    assert_eq!(lk("s2^2"), (1, 0));
}

#[test]
fn syntax_error_exits_two_with_json_diagnostic() {
    let out = braidlink(&["invariants", "-e", "[x,"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["error"], "validation");
    assert!(diag["message"].as_str().unwrap().contains("offset 3"));
}

#[test]
fn nonconvergence_exits_three() {
    // An absurd tolerance cannot be met by the refinement check.
    let out = braidlink(&["invariants", "-e", "[x,y] [x,Y]", "--samples", "32", "--tol", "1e-300"], None);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["error"], "convergence");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(braidlink(&["verify", "--count", "0"], None).status.code(), Some(2));
    assert_eq!(braidlink(&["invariants", "--format", "braid", "-e", "x"], None).status.code(), Some(2));
    assert_eq!(braidlink(&["bogus"], None).status.code(), Some(2));
}

#[test]
fn report_is_deterministic() {
    let args = ["invariants", "-e", "[x,y]^2 [Y,x]", "--samples", "64"];
    assert_eq!(braidlink(&args, None).stdout, braidlink(&args, None).stdout);
}

#[test]
fn start_lambda_only_changes_the_echo() {
    let a = json(&braidlink(&["invariants", "-e", "[x,y]", "--samples", "64"], None));
    let b = json(&braidlink(&["invariants", "-e", "[x,y]", "--samples", "64", "--start-lambda", "-3"], None));
    assert_eq!(a["hopf"], b["hopf"]);
    assert!((a["hopf_raw"].as_f64().unwrap() - b["hopf_raw"].as_f64().unwrap()).abs() < 1e-6);
    assert_eq!(b["diagnostics"]["start_lambda"], -3.0);
}

#[test]
fn word_and_explicit_samples_agree() {
    let word = braidlink(&["invariants", "-e", "[x,y] [y,X]", "--samples", "48"], None);
    let f = braidlink::realize_loop(&braidlink::parse_loop("[x,y] [y,X]").unwrap(), 48).unwrap();
    let doc = serde_json::to_string(&braidlink::cli::document::BraidDocument::from_braid(&f)).unwrap();
    let explicit = braidlink(&["invariants"], Some(&doc));
    assert_eq!(explicit.status.code(), Some(0));
    assert_eq!(word.stdout, explicit.stdout);
}

#[test]
fn json_word_payload() {
    let doc = r#"{"version":1,"name":"borromean","loop":"[x,y]"}"#;
    let v = json(&braidlink(&["invariants", "--samples", "64"], Some(doc)));
    assert_eq!(v["hopf"], 1);
}

#[test]
fn input_file() {
    let dir = std::env::temp_dir().join(format!("braidlink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("word.txt");
    std::fs::write(&path, "[y,x]").unwrap();
    let v = json(&braidlink(&["invariants", "--format", "loop", "--input", path.to_str().unwrap(), "--samples", "64"], None));
    assert_eq!(v["hopf"], -1);
    let missing = braidlink(&["invariants", "--input", dir.join("nope.json").to_str().unwrap()], None);
    assert_eq!(missing.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn normalize_constant_braid() {
    let mut strands = Vec::new();
    for s in [r#"[0,0]"#, r#"[1,0]"#, r#""inf""#, r#"[2,0]"#] {
        strands.push(format!("[{}]", [s; 8].join(",")));
    }
    let doc = format!(r#"{{"version":1,"strands":[{}]}}"#, strands.join(","));
    let v = json(&braidlink(&["normalize"], Some(&doc)));
    let gamma = v["strands"][3].as_array().unwrap();
    assert_eq!(gamma.len(), 8);
    assert!(gamma.iter().all(|p| p[0] == 2.0 && p[1] == 0.0));
    assert_eq!(v["winding"], serde_json::json!([0, 0]));
}

#[test]
fn normalize_borromean_has_zero_windings() {
    let v = json(&braidlink(&["normalize", "-e", "[x,y]", "--samples", "32"], None));
    assert_eq!(v["winding"], serde_json::json!([0, 0]));
    assert_eq!(v["strands"][2][0], "inf");
}

#[test]
fn normalize_rejects_coincident_strands() {
    let mut strands = Vec::new();
    for s in [r#"[0,0]"#, r#"[0,0]"#, r#""inf""#, r#"[2,0]"#] {
        strands.push(format!("[{}]", [s; 8].join(",")));
    }
    let doc = format!(r#"{{"version":1,"strands":[{}]}}"#, strands.join(","));
    let out = braidlink(&["normalize"], Some(&doc));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normalize_round_trips_through_invariants() {
    for (format, word) in [("loop", "[x,y]^2 [x,Y]"), ("loop", "x^2 y"), ("artin", "s2 s1^2 s2^-1 s3^-2")] {
        let args = ["--format", format, "-e", word, "--samples", "64"];
        let normalized = braidlink(&[&["normalize"][..], &args].concat(), None);
        assert_eq!(normalized.status.code(), Some(0));
        let direct = braidlink(&[&["invariants"][..], &args].concat(), None);
        let again = braidlink(&["invariants"], Some(&stdout(&normalized)));
        assert_eq!(direct.stdout, again.stdout, "{word}");
    }
}

#[test]
fn verify_passes() {
    let out = braidlink(&["verify", "--count", "50", "--seed", "7"], None);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.contains(" pass ")), "{text}");
}

#[test]
fn verify_tampered_tolerance_fails_convergence() {
    let out = braidlink(&["verify", "--count", "10", "--tol", "1e-12"], None);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let line = text.lines().find(|l| l.starts_with("convergence")).unwrap();
    assert!(line.contains("FAIL"), "{text}");
    let counterexample: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(counterexample["suite"], "convergence");
    assert!(counterexample["residual"].as_f64().unwrap() > 1e-12);
}

#[test]
fn table_command() {
    let v = json(&braidlink(&["table", "--count", "8"], None));
    assert_eq!(v["consistent"], true);
    assert_eq!(v["multiplicative"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 24);
    let swap = v["rows"].as_array().unwrap().iter().find(|r| r["sigma"] == "(1 2)").unwrap();
    assert_eq!(swap["row"], serde_json::json!([0, 1]));
}

#[test]
fn help_and_version_exit_zero() {
    let out = braidlink(&["--help"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("invariants"));
    assert_eq!(braidlink(&["--version"], None).status.code(), Some(0));
}
