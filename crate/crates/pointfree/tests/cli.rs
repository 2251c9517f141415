use std::path::PathBuf;
use std::process::{Command, Output};

fn write(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pointfree")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C2: &str = "lattice 2\n0 < 1\n";
const C3: &str = "# chain\nlattice 3\n0 < 1\n1 < 2\n0 < 2\n";
const M3: &str = "lattice 5\n0 < 1\n0 < 2\n0 < 3\n1 < 4\n2 < 4\n3 < 4\n";

#[test]
fn analyze_reports_counts() {
    let f = write("c3-analyze.lat", C3);
    let o = run(&["analyze", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["sublocale_count"], 4);
    assert_eq!(json["fitted_count"], 3);
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["adjunction"]["holds"], true);
    assert!(json["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("S_b(L) = S(L)")));
}

#[test]
fn analyze_is_deterministic() {
    let f = write("c3-det.lat", C3);
    let a = stdout(&run(&["analyze", f.to_str().unwrap()]));
    let b = stdout(&run(&["analyze", f.to_str().unwrap()]));
    assert_eq!(a, b);
}

#[test]
fn sublocales_dot_for_c2() {
    let f = write("c2-dot.lat", C2);
    let o = run(&["sublocales", f.to_str().unwrap(), "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 2);
}

#[test]
fn sublocale_listing() {
    let f = write("c3-list.lat", C3);
    let out = stdout(&run(&["sublocales", f.to_str().unwrap()]));
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().next().unwrap().starts_with("S0 {2}"));
    let fitted = stdout(&run(&["sublocales", f.to_str().unwrap(), "--fitted"]));
    assert_eq!(fitted.lines().count(), 3);
}

#[test]
fn subcolocale_filters() {
    let f = write("c2-sub.lat", C2);
    let p = f.to_str().unwrap();
    let codense = run(&["subcolocales", p, "--host", "SL", "--filter", "codense"]);
    assert_eq!(stdout(&codense).lines().count(), 1);
    let proper = run(&["subcolocales", p, "--host", "SoL", "--filter", "proper"]);
    assert!(stdout(&proper).contains("proper"));
    assert_eq!(run(&["subcolocales", p, "--host", "SL", "--filter", "proper"]).status.code(), Some(2));
}

#[test]
fn check_suites_on_a_file() {
    let f = write("c3-check.lat", C3);
    for suite in ["laws", "adjunction", "correspondence"] {
        let o = run(&["check", f.to_str().unwrap(), "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn check_corpus_adjunction() {
    let o = run(&["check", "--corpus", "--suite", "adjunction", "--sample", "2", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 41);
}

#[test]
fn roundtrip_prints_canonical_form() {
    let f = write("c3-round.lat", C3);
    let o = run(&["roundtrip", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lattice 3\nbottom 0\ntop 2\n0 < 1\n1 < 2\n");
}

#[test]
fn input_errors_exit_with_two() {
    let m3 = write("m3.lat", M3);
    assert_eq!(run(&["analyze", m3.to_str().unwrap()]).status.code(), Some(2));
    let bad = write("bad.lat", "lattice 2\n0 < 7\n");
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file.lat"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--suite", "laws"]).status.code(), Some(2));
    let c3 = write("c3-strict.lat", C3);
    assert_eq!(run(&["--strict", "roundtrip", c3.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn corpus_listing_and_files() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("corpus-out");
    let o = run(&["corpus", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 39);
    let text = std::fs::read_to_string(dir.join("chain-3.lat")).unwrap();
    assert_eq!(text, "lattice 3\nbottom 0\ntop 2\n0 < 1\n1 < 2\n");
}
