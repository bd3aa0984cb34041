use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polypres")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn present_sym4() {
    let o = run(&["present", "--group", "sym:4", "--point", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "order: 24"));
}

#[test]
fn emit_m11_verified() {
    let o = run(&["emit", "--family", "m11", "--verify"]);
    let s = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(s.contains("relator check: PASS"));
    assert!(s.contains("index 11,"));
    assert!(s.lines().any(|l| l == "order: 7920"));
}

#[test]
fn emit_mq2_and_families() {
    for args in [
        &["emit", "--family", "mq2", "--q", "3", "--verify"][..],
        &["emit", "--family", "gl2:3", "--verify"],
        &["emit", "--family", "pgl2q-alt", "--q", "5", "--verify"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn polygroup_is_p2() {
    let o = run(&["polygroup", "--group", "sym:3", "--subgroup", "(1 2)"]);
    let s = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(s.contains("size: 2"));
    assert!(s.contains("isomorphic to: P2"));
}

#[test]
fn deform_graph_order_four() {
    let o = run(&["deform-graph", "--order", "4"]);
    let s = stdout(&o);
    assert!(s.contains("vertices: C4, C2xC2"));
    assert!(s.contains("edge: C4 -- C2xC2"));
}

#[test]
fn glgg_report() {
    let o = run(&["glgg", "--group", "sym:4", "--subgroup", "(1 2 3);(1 2)", "--presentation"]);
    let s = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(!s.contains("FAIL"));
    assert!(s.contains("|𝔊|: 24"));
    assert!(s.contains("isomorphic to G: yes"));
    assert!(s.contains("matches action presentation: yes"));
}

#[test]
fn catalog_mathieu() {
    let s = stdout(&run(&["catalog", "mathieu"]));
    assert!(s.contains("M11: degree 11, order 7920, sharply 4-transitive"));
    assert!(s.contains("M24: degree 24, order 244823040, 5-transitive"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["present", "--group", "foo:3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["emit", "--family", "gl2q"]).status.code(), Some(2));
    assert_eq!(run(&["present", "--group", "sym:6", "--max-cosets", "10"]).status.code(), Some(3));
}

#[test]
fn verify_file_against_images() {
    let dir = std::env::temp_dir().join(format!("polypres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("s3.txt");
    let o = run(&["present", "--group", "sym:3", "--no-verify", "--out", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--presentation", good.to_str().unwrap()]);
    assert!(stdout(&o).contains("order: 6"));
    std::fs::write(dir.join("c3.txt"), "gens: a\nrel: a^3\n").unwrap();
    let c3 = dir.join("c3.txt");
    let c3 = c3.to_str().unwrap();
    let ok = run(&["verify", "--presentation", c3, "--group", "cyc:3", "--images", "(1 2 3)"]);
    assert_eq!(ok.status.code(), Some(0));
    // a^3 does not present C6
    let bad = run(&["verify", "--presentation", c3, "--group", "cyc:6", "--images", "(1 2 3 4 5 6)"]);
    assert_eq!(bad.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_lines_parse() {
    let o = run(&["--format", "json-lines", "polygroup", "--group", "sym:4", "--point", "1"]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("kind").is_some());
    }
}

#[test]
fn verify_all_is_reproducible() {
    let a = run(&["verify-all"]);
    let b = run(&["verify-all"]);
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.contains("PASS M24 presentation (index 24"));
    // the two published claims that the computation contradicts
    assert!(s.contains("FAIL SL3(2) stabilizer polygroup is P3"));
    assert!(s.contains("FAIL deformation graph of order 8"));
    assert_eq!(s.matches("FAIL").count(), 2);
}
