//! End-to-end runs of the `fracbox` binary.

use std::io::Write;
use std::process::{Command, Output};

use fracbox::format::emit_graph6;
use fracbox_core::Graph;
use serde_json::Value;

fn fracbox(args: &[&str], stdin: &str) -> Output {
    fracbox_env(args, stdin, &[])
}

fn fracbox_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fracbox"))
        .args(args)
        .envs(env.iter().copied())
        .env_remove("FRACBOX_MAX_CEDGES")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn fracbox_env_set(args: &[&str], stdin: &str, key: &str, value: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fracbox"))
        .args(args)
        .env(key, value)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

const C4: &str = "4\n0 1\n1 2\n2 3\n3 0\n";

fn k32() -> String {
    emit_graph6(&Graph::complete_multipartite(&[3, 2]).unwrap())
}

#[test]
fn analyze_c4_edge_list() {
    let v = json(&fracbox(&["analyze", "--json"], C4));
    assert_eq!(v["box"], "2");
    assert_eq!(v["box_f"], "2/1");
    assert_eq!(v["lemma1_bound"], "2/1");
    assert_eq!(v["edge_transitive_complement"], true);
    assert_eq!(v["theorem3_equality_holds"], true);
}

#[test]
fn boxs_on_k32() {
    let v = json(&fracbox(
        &["boxs", "--s", "3", "--format", "graph6", "--json"],
        &k32(),
    ));
    assert_eq!(v["box_s"], "6");
    assert_eq!(v["cover"].as_array().unwrap().len(), 6);
    let text = fracbox(&["boxs", "--s", "3", "--format", "graph6"], &k32());
    assert_eq!(String::from_utf8(text.stdout).unwrap().trim(), "box_3 = 6");
}

#[test]
fn other_subcommands_on_k32() {
    let g6 = k32();
    let args = |cmd: &'static str| vec![cmd, "--format", "graph6", "--json"];
    assert_eq!(json(&fracbox(&args("box"), &g6))["box"], "2");
    let boxf = json(&fracbox(&args("boxf"), &g6));
    assert_eq!(boxf["box_f"], "2/1");
    let bounds = json(&fracbox(&args("bounds"), &g6));
    assert_eq!(bounds["lemma1_bound"], "4/3");
    assert_eq!(bounds["e_max"], 3);
    let hyper = json(&fracbox(&args("hypergraph"), &g6));
    assert_eq!(hyper["rows"].as_array().unwrap().len(), 4);
    let comps = json(&fracbox(&args("completions"), &g6));
    assert_eq!(
        comps["fill_sets"].as_array().unwrap().len(),
        comps["hyperedges"].as_array().unwrap().len()
    );
}

#[test]
fn input_file_and_format_detection() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("k32.g6");
    std::fs::write(&g6, k32()).unwrap();
    let v = json(&fracbox(
        &["box", "--json", "--input", g6.to_str().unwrap()],
        "",
    ));
    assert_eq!(v["box"], "2");
    let el = dir.path().join("c4.txt");
    std::fs::write(&el, C4).unwrap();
    let v = json(&fracbox(
        &["box", "--json", "--input", el.to_str().unwrap()],
        "",
    ));
    assert_eq!(v["box"], "2");
    let missing = fracbox(&["box", "--input", "/nonexistent/graph.g6"], "");
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn batch_preserves_line_order() {
    let graphs = [
        Graph::cycle(4).unwrap(),
        Graph::path(4).unwrap(),
        Graph::complete(3).unwrap(),
        Graph::complete_multipartite(&[3, 2]).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::empty(4).unwrap(),
        Graph::complete_multipartite(&[2, 2, 2]).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::path(5).unwrap(),
        Graph::complete_multipartite(&[1, 2, 3]).unwrap(),
    ];
    let input: String = graphs.iter().map(|g| emit_graph6(g) + "\n").collect();
    let out = fracbox(&["batch"], &input);
    assert!(out.status.success());
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 10);
    for (g, v) in graphs.iter().zip(&lines) {
        assert_eq!(v["graph6"], emit_graph6(g));
    }
}

#[test]
fn batch_reports_bad_lines_in_place() {
    let out = fracbox(&["batch"], "Bw\nnot graph6!\nCr\n");
    assert!(out.status.success());
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["box"], "0");
    assert_eq!(lines[1]["line"], 2);
    assert!(lines[1]["error"].is_string());
    assert_eq!(lines[2]["graph6"], "Cr");
}

#[test]
fn exit_codes() {
    let loop_edge = fracbox(&["box"], "2\n0 0\n");
    assert_eq!(loop_edge.status.code(), Some(1));
    let stderr = String::from_utf8(loop_edge.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.contains("self-loop"));

    // Nine isolated vertices: 36 complement edges, above the default 24.
    let big = fracbox(&["box"], "9\n");
    assert_eq!(big.status.code(), Some(2));
    assert!(String::from_utf8(big.stderr)
        .unwrap()
        .contains("instance too large"));

    let too_many = fracbox(&["box", "--max-n", "4"], "5\n");
    assert_eq!(too_many.status.code(), Some(2));

    let lowered = fracbox(&["box", "--max-cedges", "3"], C4);
    assert!(lowered.status.success());
    let lowered = fracbox(&["box", "--max-cedges", "1"], C4);
    assert_eq!(lowered.status.code(), Some(2));

    let bad_flag = fracbox(&["boxs", "--s", "0"], C4);
    assert_eq!(bad_flag.status.code(), Some(1));
}

#[test]
fn environment_limit_mirrors_flag() {
    let out = fracbox_env_set(&["box"], C4, "FRACBOX_MAX_CEDGES", "1");
    assert_eq!(out.status.code(), Some(2));
    let out = fracbox_env(&["box"], C4, &[]);
    assert!(out.status.success());
}

#[test]
fn text_output_marks_approximations() {
    let out = fracbox(&["bounds", "--format", "graph6"], &k32());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("= 4/3 (approx. 1.333333)"), "{text}");
    assert!(text.contains("box_f = 2\n"), "{text}");
}
