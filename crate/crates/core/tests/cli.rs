//! The `poscent` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

use position_centrality::cli::{render_report, run, Cli, Format, Report, RunConfig};
use clap::Parser;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn poscent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poscent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn myerson_on_two_communities() {
    let g = fixture("two_communities.txt");
    let out = stdout(&poscent(&["centrality", "--graph", &g, "--measure", "myerson", "--game", "messages"]));
    let Report::Centrality(r) = serde_json::from_str(&out).unwrap() else { panic!("wrong report") };
    assert_eq!(r.method, "myerson_exact");
    assert!((r.nodes[0].value.approx - 29.7).abs() < 0.05);
    assert!((r.nodes[1].value.approx - 28.9).abs() < 0.05);
    assert_eq!(r.total.exact.as_deref(), Some("210/1"));
}

#[test]
fn json_round_trips_through_the_library() {
    let g = fixture("triangle_chain_bridged.txt");
    let args = ["poscent", "centrality", "--graph", g.as_str(), "--game", "conferences"];
    let cfg = RunConfig::with_env(Cli::try_parse_from(args).unwrap(), |_| None).unwrap();
    let report = run(&cfg).unwrap();
    let text = render_report(&report, Format::Json).unwrap();
    assert_eq!(text, stdout(&poscent(&args[1..])));
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}

#[test]
fn sampled_output_is_byte_identical() {
    let g = fixture("two_communities.txt");
    let args = ["centrality", "--graph", &g, "--method", "mc", "--samples", "20000", "--seed", "7", "--out", "csv"];
    let a = stdout(&poscent(&args));
    let b = stdout(&poscent(&args));
    assert_eq!(a, b);
    assert!(a.starts_with("node,value,stderr\n"));
    let mut serial = args.to_vec();
    serial.extend(["--threads", "1"]);
    assert_eq!(stdout(&poscent(&serial)), a);
}

#[test]
fn mc_without_seed_fails() {
    let g = fixture("triangle_chain.txt");
    let out = poscent(&["centrality", "--graph", &g, "--method", "mc"]);
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "config");
}

#[test]
fn empty_graph_file_is_a_parse_error() {
    let dir = std::env::temp_dir().join(format!("poscent-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("empty.txt");
    std::fs::write(&path, "").unwrap();
    let out = poscent(&["centrality", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "parse");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn cap_violation_points_to_sampling() {
    let g = fixture("two_communities.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_poscent"))
        .args(["centrality", "--graph", &g])
        .env("POSCENT_POSITION_EDGES", "10")
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "cap_exceeded");
    assert!(err["error"]["message"].as_str().unwrap().contains("Monte-Carlo"));
}

#[test]
fn delta_csv_and_output_file() {
    let g = fixture("triangle_chain.txt");
    let dir = std::env::temp_dir().join(format!("poscent-delta-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("delta.csv");
    let out = poscent(&[
        "delta", "--graph", &g, "--add", "0,3", "--measures", "position,myerson",
        "--out", "csv", "--output", path.to_str().unwrap(),
    ]);
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l.starts_with("3,end_node,position,1.500000,8.000000,6.500000")));
    assert_eq!(text.lines().count(), 1 + 2 * 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn axioms_and_dividends_commands() {
    let out = stdout(&poscent(&["axioms", "--measure", "pa", "--max-n", "4"]));
    let Report::Axioms(r) = serde_json::from_str(&out).unwrap() else { panic!("wrong report") };
    assert!(r.axioms.iter().all(|a| a.holds));
    assert!(r.perturbed.unwrap().iter().any(|a| !a.holds));

    let g = fixture("triangle_chain_bridged.txt");
    let csv = stdout(&poscent(&["dividends", "--graph", &g, "--out", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("mask,l,d_L,lambda"));
    // the triangle is cyclic: no cutedge count
    assert!(lines.any(|l| l == "7,3,,-6/1"));
}

#[test]
fn unknown_game_and_bad_flags() {
    let g = fixture("triangle_chain.txt");
    let out = poscent(&["centrality", "--graph", &g, "--game", "nonsense"]);
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "unknown_game");
    let out = poscent(&["two-stars", "--k1", "x"]);
    assert_eq!(out.status.code(), Some(2));
}
