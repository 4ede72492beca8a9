use std::fs;
use std::process::{Command, Output};

fn ffgrid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffgrid"))
        .args(args)
        .env_remove("FFGRID_CAP_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn color_k8_square_is_the_xor_table() {
    let o = ffgrid(&["color", "--product", "K8,K8", "--order", "lex", "--format", "csv"]);
    assert!(o.status.success());
    let rows: Vec<Vec<usize>> = stdout(&o)
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 8);
    for (i, row) in rows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            assert_eq!(c, (i ^ j) + 1);
        }
    }
}

#[test]
fn color_counts() {
    let o = ffgrid(&["color", "--product", "K1,K1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("colors: 1\n"));
    let o = ffgrid(&["color", "--product", "K2,K5", "--order", "lex", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["k"], 6);
    assert_eq!(v["descent_free"], true);
}

#[test]
fn explicit_orderings_are_classified() {
    let o = ffgrid(&["color", "--product", "K2,K2", "--order", "perm:0,3,1,2"]);
    assert!(stdout(&o).contains("ordering: arbitrary"));
    assert!(stdout(&o).contains("colors: 2"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("order.txt");
    fs::write(&path, "0 2\n1 3\n").unwrap();
    let spec = format!("file:{}", path.display());
    let o = ffgrid(&["color", "--product", "K2,K2", "--order", &spec]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("ordering: quasi-lex"));
    let o = ffgrid(&["color", "--product", "K2,K2", "--order", "perm:0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gds_examples() {
    let o = ffgrid(&["gds", "--latin", "Lk:2", "--method", "exhaustive", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["size"], 6);
    assert_eq!(v["certificate"]["verified"], true);
    assert_eq!(v["certificate"]["vertices"].as_array().unwrap().len(), 6);

    let o = ffgrid(&["gds", "--latin", "Lk:0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("size: 0\n"));

    let o = ffgrid(&["gds", "--latin", "Lk:3", "--method", "dk", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 33);

    let o = ffgrid(&["gds", "--latin", "Ct:2", "--method", "hitting-greedy"]);
    assert!(stdout(&o).contains("size: 0\n"));
}

#[test]
fn gds_on_a_product_coloring_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    fs::write(&path, "2,1\n1,2\n").unwrap();
    let o = ffgrid(&["gds", "--product", "K2,K2", "--coloring", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("size: 1\n"));
}

#[test]
fn lift_examples() {
    let o = ffgrid(&["gds", "--product", "P3,K2", "--latin", "Lk:1", "--method", "lift"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("size: 2\n"));

    // a path scanned a, d, b, c: pinning the class of the 1-entry cannot force a
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("p4.txt");
    fs::write(&h, "4 3\n0 1\n1 2\n2 3\norder: 0 3 1 2\n").unwrap();
    let r = dir.path().join("r.csv");
    fs::write(&r, "2,3,1\n").unwrap();
    let product = format!("K1,{}", h.display());
    let o = ffgrid(&[
        "gds",
        "--product",
        &product,
        "--latin",
        r.to_str().unwrap(),
        "--method",
        "lift",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not reproduce"), "{}", stderr(&o));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3 2\n0 1\n1 7\n").unwrap();
    let product = format!("{},K2", path.display());
    let o = ffgrid(&["color", "--product", &product]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn verify_examples() {
    let o = ffgrid(&["verify", "T5", "--nmax", "16"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("result: PASS"));

    let o = ffgrid(&["verify", "T3", "--vmax", "1", "--seed", "0"]);
    assert!(o.status.success());

    let o = ffgrid(&["verify", "T2", "--product", "K3,K3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("42 orderings"), "{text}");
    assert!(text.contains("quoted count 26"), "{text}");

    let o = ffgrid(&["verify", "T12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown theorem id"));
}

#[test]
fn failing_campaign_exits_one() {
    let o = ffgrid(&["verify", "LIFT", "--trials", "60"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("result: FAIL"));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let run = |out: &std::path::Path, threads: &str| {
        let o = ffgrid(&[
            "verify",
            "T6",
            "--trials",
            "40",
            "--seed",
            "7",
            "--format",
            "json",
            "--threads",
            threads,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    };
    run(&a, "1");
    run(&b, "4");
    let (a, b) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["report"]["passed"], true);
}

#[test]
fn cap_overrides() {
    let o = Command::new(env!("CARGO_BIN_EXE_ffgrid"))
        .args(["verify", "T2", "--product", "K3,K3"])
        .env("FFGRID_CAP_OVERRIDE", "enumeration=4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("enumeration too large"), "{}", stderr(&o));
    let o = ffgrid(&["verify", "T2", "--product", "K3,K3", "--caps", "enumeration=4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ffgrid(&["verify", "T2", "--caps", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}
