use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromllt"))
        .args(args)
        .env_remove("CHROMLLT_MAX_BRUTE")
        .env_remove("CHROMLLT_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hook_coefficient_text() {
    for route in ["shuffle", "wt", "elw"] {
        let o = run(&["coeff", "hook", "area:3,3,2,1,0", "--k", "2", "--route", route]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "2q^6+q^7+q^8\n");
    }
}

#[test]
fn scan_n5_succeeds() {
    let o = run(&["verify", "scan", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations"));
}

#[test]
fn exit_codes_are_distinct() {
    assert_eq!(run(&["compute", "chromatic", "complete:x"]).status.code(), Some(3));
    assert_eq!(run(&["compute", "chromatic", "mseq:3,2"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "kdel", "--area", "3,2,1,0", "--i", "1", "--ell", "9", "--k", "1"]).status.code(), Some(5));
    assert_eq!(run(&["--max-brute", "3", "compute", "chromatic", "path:5", "--route", "brute"]).status.code(), Some(6));
    assert_eq!(run(&["verify", "triple", "path:3", "--triangle", "1-2,1-3,2-3"]).status.code(), Some(7));
    assert_eq!(run(&["compute"]).status.code(), Some(2));
}

#[test]
fn failed_verification_has_witness() {
    let o = run(&["verify", "lee", "--area", "2,1,1,0", "--i", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["reports"][0];
    assert_eq!(r["hypothesis_ok"], false);
    assert_eq!(r["identity_ok"], false);
    assert!(r["witness"].is_object());

    let o = run(&["verify", "equiv", "--graph", "path:3", "--coeff", "1", "--graph", "path:3", "--coeff", "-1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_is_deterministic() {
    let args = ["--format", "json", "verify", "scan", "--n", "4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["manifest"]["bounds"]["max_brute"], 8);
    assert_eq!(v["summary"]["violations"], 0);
}

#[test]
fn routes_agree_in_json() {
    let closed = run(&["--format", "json", "compute", "chromatic", "lollipop:3,2", "--route", "closed"]);
    let brute = run(&["--format", "json", "compute", "chromatic", "lollipop:3,2", "--route", "brute"]);
    let c: serde_json::Value = serde_json::from_str(&stdout(&closed)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&brute)).unwrap();
    assert_eq!(c["result"], b["result"]);
    assert_eq!(c["manifest"]["graph"]["mseq"], serde_json::json!([2, 3, 5, 5]));
}

#[test]
fn latex_lollipop() {
    let o = run(&["--format", "latex", "compute", "chromatic", "lollipop:3,2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("e_5") && s.contains("e_{41}") && s.contains("e_{32}"), "{s}");
    let r = run(&["render", "latex", "lollipop:3,2"]);
    assert_eq!(stdout(&r), s);
}

#[test]
fn wt_route_marks_conjectural_diagrams() {
    let o = run(&["--format", "json", "compute", "llt", "area:2,1,1,0", "--route", "wt"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["conjectural"], true);
    let o = run(&["--format", "json", "compute", "llt", "melting:4,1,2", "--route", "wt"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["conjectural"], false);
    assert!(v["wt_family"].as_str().unwrap().starts_with("melting:"));
}

#[test]
fn out_file_is_written() {
    let dir = std::env::temp_dir().join(format!("chromllt-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.txt");
    let o = run(&["--out", path.to_str().unwrap(), "compute", "chromatic", "complete:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(!std::fs::read_to_string(&path).unwrap().is_empty());
    let bad = run(&["--out", dir.join("missing/x.txt").to_str().unwrap(), "compute", "chromatic", "complete:3"]);
    assert_eq!(bad.status.code(), Some(10));
    std::fs::remove_dir_all(&dir).unwrap();
}
