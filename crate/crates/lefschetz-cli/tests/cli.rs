use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn lefschetz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn export(dir: &Path, name: &str, genus: usize) -> PathBuf {
    let o = lefschetz(&["examples", "export", name, "--genus", &genus.to_string()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compare_ci_with_i4() {
    let dir = TempDir::new().unwrap();
    let (ci, i4) = (export(dir.path(), "CI", 3), export(dir.path(), "I4", 3));
    let o = lefschetz(&["compare", "--stable", s(&ci), s(&i4)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not stably isomorphic: w differs (1 vs 0)\n");
    let same = lefschetz(&["compare", "--stable", s(&ci), s(&ci)]);
    assert_eq!(same.status.code(), Some(0));
}

#[test]
fn invariants_of_u() {
    let dir = TempDir::new().unwrap();
    let u = export(dir.path(), "U", 3);
    let text = stdout(&lefschetz(&["invariants", s(&u)]));
    for needle in ["n=45", "chi=37", "sigma=-25", "w=1"] {
        assert!(text.contains(needle), "{needle} missing from {text}");
    }
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&lefschetz(&["invariants", "--json", s(&u)]))).unwrap();
    assert_eq!(json["sigma"], -25);
    assert_eq!(json["w"]["value"], 1);
}

#[test]
fn w_on_torus_base_with_commuting_handles() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("torus.json");
    std::fs::write(
        &path,
        r#"{"base_genus":1,"factors":[],"fiber_genus":2,"handle_words":[[1],[3]]}"#,
    )
    .unwrap();
    let o = lefschetz(&["w", s(&path)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn export_round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let q = export(dir.path(), "Q", 3);
    let original = std::fs::read(&q).unwrap();
    let o = lefschetz(&["conjugate", "--word", "", s(&q)]);
    assert_eq!(o.stdout, original);
    let o = lefschetz(&["stabilize", "--n", "0", s(&q)]);
    assert_eq!(o.stdout, original);
}

#[test]
fn transformations_keep_validity() {
    let dir = TempDir::new().unwrap();
    let u = export(dir.path(), "U", 3);
    let slid = dir.path().join("slid.json");
    let o = lefschetz(&["move", "slide", "--at", "3", "--dir", "r", s(&u)]);
    assert!(o.status.success());
    std::fs::write(&slid, &o.stdout).unwrap();
    assert_eq!(lefschetz(&["validate", s(&slid)]).status.code(), Some(0));
    let conj = lefschetz(&["conjugate", "--word", "-1,2", s(&slid)]);
    assert!(conj.status.success());
    let sum = lefschetz(&["fibersum", s(&u), s(&slid), "--twist", "3 -4"]);
    let summed = dir.path().join("sum.json");
    std::fs::write(&summed, &sum.stdout).unwrap();
    assert_eq!(stdout(&lefschetz(&["w", s(&summed)])), "0\n");
}

#[test]
fn invalid_inputs_exit_two_with_json() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let o = lefschetz(&["invariants", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    let diag: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(diag["error"]["kind"], "format");
    let missing = lefschetz(&["validate", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let unsupported = lefschetz(&["examples", "export", "PJ", "--genus", "3"]);
    assert_eq!(unsupported.status.code(), Some(2));
}

#[test]
fn validate_reports_nontrivial_relation() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("one.json");
    std::fs::write(
        &path,
        r#"{"base_genus":0,"factors":[{"conjugator":[],"core":{"index":1,"kind":"twist","sign":1}}],"fiber_genus":2,"handle_words":[]}"#,
    )
    .unwrap();
    let o = lefschetz(&["validate", s(&path)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("nontrivial_on_sphere"));
}

#[test]
fn comb_reports_dirac_class() {
    let o = lefschetz(&[
        "comb",
        "--strands",
        "4",
        "--word",
        "1,2,3,1,2,3,1,2,3,1,2,3",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dirac_class"], "dirac");
    let o = lefschetz(&["comb", "--strands", "4", "--word", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dirac_class"], "not_in_kernel");
    assert!(v["combed"].is_null());
}

#[test]
fn chart_commands() {
    let dir = TempDir::new().unwrap();
    let o = lefschetz(&["examples", "chart", "R4", "--genus", "3"]);
    let path = dir.path().join("r4.json");
    std::fs::write(&path, &o.stdout).unwrap();
    assert_eq!(
        lefschetz(&["chart", "validate", s(&path)]).status.code(),
        Some(0)
    );
    let v: serde_json::Value =
        serde_json::from_slice(&lefschetz(&["chart", "counts", s(&path)]).stdout).unwrap();
    assert_eq!(v["counts"]["w"], 1);
    assert_eq!(v["degree_sum_check"], true);
    let o = lefschetz(&["examples", "chart", "L0", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn manifest_lists_the_flagged_signatures() {
    let v: serde_json::Value =
        serde_json::from_slice(&lefschetz(&["examples", "manifest"]).stdout).unwrap();
    let flagged = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["quantity"] == "sigma" && e["note"].is_string())
        .count();
    assert_eq!(flagged, 2);
}
