use std::process::{Command, Output};

fn qschur(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .env("QSCHUR_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn canonical_product_with_negative_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let d = "[[0,1],[1,-3]]";
    let o = qschur(&["mul", "--context", "limitA:2", "--left", d, "--right", d, "--basis", "canonical"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("(v^2 + 2 + v^-2) {[[-1,2],[2,-4]]}"), "{out}");
    assert!(out.contains("(-v^4 - v^2 - 2 - v^-2 - v^-4) {[[1,0],[0,-2]]}"), "{out}");

    let o = qschur(&["cbstruct", "--json", "--context", "limitA:2", "--left", d, "--right", d], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["positive"], false);
    assert_eq!(v["negative_cells"].as_array().unwrap().len(), 2);
}

#[test]
fn gamma_table_first_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gamma.csv");
    let o = qschur(&["gamma-table", "--a-max", "6", "--r-max", "3", "--out", path.to_str().unwrap()], dir.path());
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("a,i,gamma"));
    for a in 0..=6 {
        assert!(text.lines().any(|l| l == format!("{a},1,v^{}", -a - 1)), "a = {a}");
    }
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = qschur(&["verify", "negBLM", "4", "--report", report.to_str().unwrap()], dir.path());
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 2);
    assert_eq!(items[0]["suite"], "negBLM");
    assert_eq!(items[1]["suite"], "lemma-n2");
    for it in items {
        assert_eq!(it["status"], "pass");
        assert_eq!(it.as_object().unwrap().len(), 3);
    }
    // the printed module coefficient does not hold
    let o = qschur(&["verify", "CBmodule"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        qschur(&["verify", "q-identities", "shift", "--report", p.to_str().unwrap()], dir.path());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = qschur(&["mul", "--context", "limitA:2", "--left", "[[0,1]", "--right", "[[0,1],[1,0]]"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(err["message"].as_str().unwrap().contains("bad matrix"));
    let o = qschur(&["verify", "no-such-suite"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = qschur(&["frobnicate"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_products_are_cached_and_recounted() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["mul", "--oracle", "--context", "schurJ:3,1", "--left", "[[0,1,0],[0,1,0],[0,1,0]]", "--right", "[[0,0,0],[1,1,1],[0,0,0]]"];
    let o = qschur(&args, dir.path());
    assert!(o.status.success());
    let engine = qschur(&args[..1].iter().chain(&args[2..]).copied().collect::<Vec<_>>(), dir.path());
    assert_eq!(stdout(&o), stdout(&engine));
    let list = qschur(&["cache", "list"], dir.path());
    assert_eq!(stdout(&list).lines().count(), 1);
    let audit = qschur(&["cache", "verify", "--pick", "0"], dir.path());
    assert!(audit.status.success());
    assert!(stdout(&audit).contains(": ok"), "{}", stdout(&audit));
}

#[test]
fn transfer_and_stabilize() {
    let dir = tempfile::tempdir().unwrap();
    // the rank-one canonical transfer {A_{1,b}} -> {A_{0,b-1}}
    let o = qschur(&["transfer", "--context", "schurI:2,3", "--cell", "[[1,0,2],[0,1,0],[2,0,1]]"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(1) {[[0,0,1],[0,1,0],[1,0,0]]}");
    let o = qschur(&["stabilize", "--json", "--context", "limitJ:3", "--cell", "[[0,0,1],[0,-3,0],[1,0,0]]"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["p0"], 6);
}
