use std::process::{Command, Output};

fn saguaro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_saguaro")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn braid_relation_is_false() {
    let o = saguaro(&["eq", "-n", "3", "s(1,2) s(2,3) s(1,2)", "s(2,3) s(1,2) s(2,3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "false");
    let o = saguaro(&["eq", "-n", "4", "s(3,4)", "s(1,4) s(1,2) s(1,4)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn order_and_image() {
    let o = saguaro(&["order", "-n", "4", "s(1,2) s(1,4)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
    let o = saguaro(&["order", "-n", "3", "s(1,2) s(1,3)", "--bound", "20"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "none");
    let o = saguaro(&["image", "-n", "4", "s(1,2) s(2,4) s(1,3)"]);
    assert_eq!(stdout(&o), "d = t{1,2} t{1,3,4} t{2,3,4}\ns = (4,3,1,2)\n");
}

#[test]
fn json_output() {
    let o = saguaro(&["--json", "image", "-n", "4", "s(1,2) s(2,4) s(1,3)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["d"], "t{1,2} t{1,3,4} t{2,3,4}");
    assert_eq!(v["s"], serde_json::json!([4, 3, 1, 2]));
    let o = saguaro(&["canon", "-n", "4", "s(1,2) s(1,2)", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["canonical"], "");
    assert_eq!(v["length"], 0);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(saguaro(&["canon", "-n", "3", "s(1,4)"]).status.code(), Some(2));
    let o = saguaro(&["canon", "-n", "3", "s(1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 5"));
    assert_eq!(saguaro(&["order", "-n", "3", "s(1,2)", "--bound", "0"]).status.code(), Some(2));
    assert_eq!(saguaro(&["member", "-n", "4", "s(1,2)"]).status.code(), Some(2));
    assert_eq!(saguaro(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn purity_and_membership() {
    assert_eq!(saguaro(&["pure", "-n", "3", "s(1,2) s(1,3) s(1,2) s(1,3) s(1,2) s(1,3)"]).status.code(), Some(0));
    assert_eq!(saguaro(&["pure", "-n", "3", "s(1,2)"]).status.code(), Some(1));
    assert_eq!(saguaro(&["member", "-n", "4", "s(1,3)", "--slice", "2,2"]).status.code(), Some(1));
    assert_eq!(saguaro(&["member", "-n", "4", "s(1,2) s(3,4)", "--slice", "2,2"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, "[[1,2],[1,3],[2,3]]").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(saguaro(&["member", "-n", "4", "s(1,3) s(2,3) s(1,3)", "--collection", p]).status.code(), Some(0));
    assert_eq!(saguaro(&["member", "-n", "4", "s(3,4)", "--collection", p]).status.code(), Some(1));
    // not closed under reflection
    std::fs::write(&path, "[[1,2],[1,3]]").unwrap();
    assert_eq!(saguaro(&["member", "-n", "4", "s(1,2)", "--collection", p]).status.code(), Some(2));
}

#[test]
fn erase_and_decompose() {
    let o = saguaro(&["erase", "-n", "4", "s(1,2) s(2,4) s(1,3)", "--min-leaf", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("slice = "));
    let o = saguaro(&["--json", "decompose", "-n", "4", "s(1,2) s(2,4) s(1,2) s(1,3)", "--min-leaf", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let parts = v["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0]["conjugator"], "");
    assert_eq!(parts[0]["letter"], "s(1,2)");
    assert_eq!(parts[1]["conjugator"], "s(2,4)");
}

#[test]
fn subgroup_presentations() {
    let o = saguaro(&["--json", "rs", "--presentation", "builtin:J4", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cosets"], 24);
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert_eq!(v["relators"].as_array().unwrap().len(), 1);
    assert_eq!(v["abelianization_rank"], 4);
    assert_eq!(v["invariant_factors"], serde_json::json!([2]));

    let dir = tempfile::tempdir().unwrap();
    let pres = dir.path().join("j3.txt");
    std::fs::write(&pres, "# two involutions\ngens: x y\nrels: x^2 = y^2 = 1\n").unwrap();
    let images = dir.path().join("im.json");
    std::fs::write(&images, r#"{"x": [2, 1, 3], "y": [3, 2, 1]}"#).unwrap();
    let o = saguaro(&[
        "--json",
        "rs",
        "--presentation",
        pres.to_str().unwrap(),
        "--images",
        images.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cosets"], 6);
    assert_eq!(v["generators"].as_array().unwrap().len(), 1);
    assert_eq!(v["relators"].as_array().unwrap().len(), 0);

    let o = saguaro(&["abel", "--presentation", "builtin:PJ4_target"]);
    assert_eq!(stdout(&o).trim(), "Z^4 [2]");
    assert_eq!(saguaro(&["rs", "--presentation", "builtin:J4"]).status.code(), Some(2));
    assert_eq!(saguaro(&["abel", "--presentation", "builtin:J9"]).status.code(), Some(2));
}

#[test]
fn verify_pj4_passes() {
    let o = saguaro(&["verify-pj4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let o = saguaro(&["render", "-n", "4", "s(1,2) s(2,4) s(1,3)", "-o", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polyline").count(), 4);
}

#[test]
fn quick_selftest() {
    let o = saguaro(&["selftest", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 14);
}
