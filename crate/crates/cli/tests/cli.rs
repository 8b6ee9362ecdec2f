use std::path::Path;
use std::process::{Command, Output};

use runoff::config::RegionConfig;
use runoff::report::RegionDocument;

fn runoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_runoff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path_arg(p: &Path) -> String {
    p.display().to_string()
}

#[test]
fn map_has_one_row_per_sample_and_is_reproducible() {
    let a = runoff(&["map", "--n", "10000", "--seed", "42"]);
    let b = runoff(&["map", "--n", "10000", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "x1,x2,x3,p,r,s,class,d,q0,q1,q2,feasible,u,v");
    assert_eq!(lines.count(), 10_000);
}

#[test]
fn map_classical_drops_bloch_columns() {
    let out = runoff(&["map", "--model", "classical", "--n", "5"]);
    let text = stdout(&out);
    assert!(text.starts_with("p,r,s,class,d,q0,q1,q2,feasible,u,v\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn empty_map_is_header_only() {
    let out = runoff(&["map", "--n", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1,x2,x3,p,r,s,class,d,q0,q1,q2,feasible,u,v\n");
}

#[test]
fn off_simplex_support_is_rejected() {
    let out = runoff(&["region", "--omega", "0.5,0.6,0.1", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("support vector not on simplex"));
}

#[test]
fn invalid_arguments_exit_2() {
    for args in [
        &["sweep", "--step", "0"][..],
        &["classify", "1.2", "0.5", "0.5"],
        &["classify", "-0.1", "0.5", "0.5"],
        &["condorcet", "0.5", "0.5", "0.5"],
        &["region", "--grid", "0"],
        &["region", "--n", "0"],
        &["region", "--model", "bogus"],
        &["--workers", "0", "classify", "0.5", "0.5", "0.5"],
    ] {
        assert_eq!(runoff(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_1() {
    let out = runoff(&["map", "--n", "3", "--csv", "/nonexistent-dir/out.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_reports_cycle_and_order() {
    let out = runoff(&["classify", "0.3", "0.3", "0.3"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("intransitive cycle: 1≻0≻2≻1\n"));

    let out = runoff(&["classify", "0.8", "0.7", "0.9"]);
    assert!(stdout(&out).starts_with("intransitive cycle: 0≻1≻2≻0\n"));

    let out = runoff(&["classify", "0.5", "0.2", "0.9"]);
    assert!(stdout(&out).starts_with("boundary"));

    let out = runoff(&["classify", "0.8", "0.7", "0.1"]);
    let line = stdout(&out).lines().nth(1).unwrap().to_owned();
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["class"], "transitive");
}

#[test]
fn condorcet_mixture_relations() {
    let out = runoff(&["condorcet", "0.3333", "0.3333", "0.3334"]);
    let text = stdout(&out);
    assert!(text.contains("cyclic"), "{text}");

    let out = runoff(&["condorcet", "1", "0", "0"]);
    assert!(stdout(&out).contains("transitive A≻B≻C"));
}

#[test]
fn region_json_replays_from_embedded_config() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let out = runoff(&[
        "region", "--omega2", "0.45", "--n", "50000", "--grid", "40", "--seed", "9",
        "--json", &path_arg(&first),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let bytes = std::fs::read(&first).unwrap();
    let doc: RegionDocument = serde_json::from_slice(&bytes).unwrap();
    let cfg: RegionConfig = doc.config;

    let omega = cfg.omega.map(|w| format!("{w:?}")).join(",");
    let replay = runoff(&[
        "region",
        "--model", cfg.model.name(),
        "--omega", &omega,
        "--n", &cfg.n.to_string(),
        "--grid", &cfg.grid.to_string(),
        "--seed", &cfg.seed.to_string(),
        "--min-hits", &cfg.min_hits.to_string(),
        "--area-threshold", &format!("{:?}", cfg.area_threshold),
        "--oracle", if cfg.oracle { "on" } else { "off" },
    ]);
    assert_eq!(replay.stdout, bytes);
}

#[test]
fn json_fields_keep_their_order() {
    let out = runoff(&["region", "--n", "1000", "--grid", "10", "--oracle", "off"]);
    let text = stdout(&out);
    let keys = ["\"tool\"", "\"version\"", "\"command\"", "\"config\"", "\"report\"", "\"vanished\""];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    assert!(text.contains("\"relevant_confirmed\": null"));
}

#[test]
fn svg_outputs_are_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let region = dir.path().join("region.svg");
    let map = dir.path().join("map.svg");
    assert!(runoff(&["region", "--n", "20000", "--grid", "30", "--svg", &path_arg(&region)]).status.success());
    assert!(runoff(&["map", "--n", "500", "--svg", &path_arg(&map), "--csv", &path_arg(&dir.path().join("m.csv"))])
        .status
        .success());
    for path in [region, map] {
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = roxmltree::Document::parse(&text).unwrap();
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        assert_eq!(root.attribute("width"), Some("800"));
        assert_eq!(root.attribute("height"), Some("720"));
        assert_eq!(root.attribute("viewBox"), Some("0 0 800 720"));
        assert!(text.contains("40.000,680.000 760.000,680.000 400.000,56.462"));
    }
}

#[test]
fn sweep_without_vanishing_exits_3_after_writing() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let out = runoff(&[
        "sweep", "--omega2-to", "0.40", "--step", "0.02", "--n", "100000", "--grid", "40",
        "--csv", &path_arg(&csv),
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "omega2,raw_fraction,confirmed_fraction");
    assert_eq!(lines.count(), 4);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["result"]["critical_omega2"].is_null());
}

#[test]
fn sweep_finds_vanishing_point() {
    let out = runoff(&[
        "sweep", "--omega2-from", "0.5", "--omega2-to", "0.6", "--step", "0.02", "--n", "200000",
        "--grid", "60",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let w = doc["result"]["critical_omega2"].as_f64().unwrap();
    assert!((0.5..=0.6).contains(&w));
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["region", "--omega2", "0.5", "--n", "200000", "--grid", "60", "--seed", "5"];
    let one = runoff(&[&["--workers", "1"][..], &args].concat());
    let many = runoff(&[&["--workers", "8"][..], &args].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}
