use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_treelike");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
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
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

const K4: &str = "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C4: &str = "4\n0 1\n1 2\n2 3\n0 3\n";
const K3: &str = "3\n0 1\n1 2\n0 2\n";

#[test]
fn solve_cactus_on_k4() {
    for method in ["qt", "chordal", "oracle", "auto"] {
        let out = run(&["solve", "cactus", "--method", method], K4);
        assert_eq!(out.status.code(), Some(0), "{method}");
        let v = json(&out);
        assert_eq!(v["deletions"], 2);
        assert_eq!(v["label"], "cactus");
        assert_eq!(v["certificate"]["verdict"]["accept"]["kind"], "cycles");
    }
    let v = json(&run(&["solve", "cactus", "--method", "qt"], K4));
    assert_eq!(v["extras"]["centers"], serde_json::json!([0]));
    assert_eq!(v["extras"]["matching"], serde_json::json!([[1, 2]]));
}

#[test]
fn solve_other_targets() {
    let star = "6\n0 1\n0 2\n0 3\n0 4\n0 5\n";
    let v = json(&run(&["solve", "constellation"], star));
    assert_eq!(v["deletions"], 0);
    assert_eq!(v["extras"]["dominating_set"], serde_json::json!([0]));
    let v = json(&run(&["solve", "linear-forest"], K4));
    assert_eq!(v["deletions"], 3);
    let v = json(&run(&["solve", "caterpillar"], C4));
    assert_eq!(v["deletions"], 1);
    // A subdivided claw has no spanning caterpillar.
    let spider = "7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
    let out = run(&["solve", "caterpillar"], spider);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "infeasible");
}

#[test]
fn disconnected_inputs() {
    let two = "5\n0 1\n1 2\n0 2\n3 4\n";
    for method in ["auto", "qt", "chordal", "oracle"] {
        let out = run(&["solve", "cactus", "--method", method], two);
        assert_eq!(out.status.code(), Some(2), "{method}");
        assert!(out.stdout.is_empty());
        assert_eq!(error_kind(&out), "infeasible");
        let out = run(&["solve", "cactus", "--forest", "--method", method], two);
        assert_eq!(out.status.code(), Some(0), "{method}");
        let v = json(&out);
        assert_eq!(v["label"], "forest-of-cacti");
        assert_eq!(v["deletions"], 0);
    }
}

#[test]
fn wrong_method_and_usage_errors() {
    let out = run(&["solve", "cactus", "--method", "qt"], C4);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "wrong-class");
    let out = run(&["solve", "constellation", "--method", "qt"], C4);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["solve", "nonsense"], C4);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "usage");
    let out = run(&["solve", "cactus", "--limit", "bogus=3"], C4);
    assert_eq!(error_kind(&out), "usage");
    let out = run(
        &[
            "solve",
            "cactus",
            "--limit",
            "pruned_edges=2",
            "--limit",
            "cycle-dp-vertices=2",
        ],
        C4,
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "size-limit");
    let out = run(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_errors_carry_positions() {
    let out = run(&["recognize", "cactus"], "3\n0 1\n1 1\n");
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["line"], 3);
    let out = run(&["recognize", "cactus", "--format", "graph6"], "C~~\n");
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"]["byte"].is_number());
}

#[test]
fn recognize_exit_status() {
    let out = run(&["recognize", "chordal", "--format", "graph6"], "C~\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"]["accept"]["kind"], "elimination_order");
    let out = run(&["recognize", "chordal"], C4);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"]["reject"]["kind"], "hole");
}

#[test]
fn reductions() {
    let v = json(&run(&["reduce", "hampath-to-caterpillar"], K3));
    assert_eq!(v["gadget"]["n"], 9);
    assert_eq!(v["budget"], 1);
    let out = run(&["reduce", "pip3-to-cactus"], K3);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "invalid-input");
    let out = run(&["reduce", "domset-to-constellation", "--set", "0,2"], C4);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kept"].as_array().unwrap().len(), 2);
    assert_eq!(v["label"], "constellation");
    let out = run(&["reduce", "domset-to-constellation", "--set", "0"], C4);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "invalid-certificate");
}

fn write(dir: &Path, name: &str, text: &[u8]) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn translate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", b"4\n0 1\n1 2\n2 3\n0 2\n");
    let inst = run(&["reduce", "hampath-to-caterpillar", &p4], "");
    let inst_path = write(dir.path(), "inst.json", &inst.stdout);
    let path = run(&["oracle", "hampath", &p4], "");
    assert_eq!(path.status.code(), Some(0));
    let path_file = write(dir.path(), "path.json", &path.stdout);
    let fwd = run(
        &[
            "translate",
            "--instance",
            &inst_path,
            "--certificate",
            &path_file,
        ],
        "",
    );
    assert_eq!(
        fwd.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&fwd.stderr)
    );
    let v = json(&fwd);
    assert_eq!(v["kind"], "solution");
    assert_eq!(v["label"], "caterpillar");
    assert_eq!(v["deletions"], 1);
    let fwd_file = write(dir.path(), "fwd.json", &fwd.stdout);
    let back = run(
        &[
            "translate",
            "--instance",
            &inst_path,
            "--certificate",
            &fwd_file,
        ],
        "",
    );
    let v = json(&back);
    assert_eq!(v["kind"], "hamiltonian_path");
    assert_eq!(v["path"].as_array().unwrap().len(), 4);

    let six = write(dir.path(), "p6.txt", b"6\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    let inst = run(&["reduce", "pip3-to-cactus", &six], "");
    let inst_path = write(dir.path(), "pinst.json", &inst.stdout);
    let blocks = run(&["oracle", "pip3", &six], "");
    let blocks_file = write(dir.path(), "blocks.json", &blocks.stdout);
    let fwd = run(
        &[
            "translate",
            "--instance",
            &inst_path,
            "--certificate",
            &blocks_file,
        ],
        "",
    );
    assert_eq!(
        fwd.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&fwd.stderr)
    );
    let fwd_file = write(dir.path(), "cactus.json", &fwd.stdout);
    let back = json(&run(
        &[
            "translate",
            "--instance",
            &inst_path,
            "--certificate",
            &fwd_file,
        ],
        "",
    ));
    assert_eq!(back["kind"], "p3_partition");
    assert_eq!(back["blocks"], serde_json::json!([[0, 1, 2], [3, 4, 5]]));

    let c4 = write(dir.path(), "c4.txt", C4.as_bytes());
    let set = write(
        dir.path(),
        "set.json",
        br#"{"kind":"dominating_set","set":[1,3]}"#,
    );
    let sol = run(&["translate", "--graph", &c4, "--certificate", &set], "");
    let sol_file = write(dir.path(), "sol.json", &sol.stdout);
    let back = json(&run(
        &["translate", "--graph", &c4, "--certificate", &sol_file],
        "",
    ));
    assert_eq!(back["set"], serde_json::json!([1, 3]));
    let wrong = run(
        &["translate", "--instance", &inst_path, "--certificate", &set],
        "",
    );
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn tampered_instances_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let inst = run(&["reduce", "hampath-to-caterpillar"], K3);
    let text = String::from_utf8(inst.stdout)
        .unwrap()
        .replace("\"budget\":1", "\"budget\":5");
    let inst_path = write(dir.path(), "inst.json", text.as_bytes());
    let cert = write(
        dir.path(),
        "p.json",
        br#"{"kind":"hamiltonian_path","path":[0,1,2]}"#,
    );
    let out = run(
        &[
            "translate",
            "--instance",
            &inst_path,
            "--certificate",
            &cert,
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "invalid-document");
}

#[test]
fn verify_checks_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", K4.as_bytes());
    let sol = run(&["solve", "cactus", &k4], "");
    let sol_file = write(dir.path(), "sol.json", &sol.stdout);
    let out = run(&["verify", "--solution", &sol_file, &k4], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);
    let tampered = String::from_utf8(sol.stdout)
        .unwrap()
        .replace("\"kept\":[", "\"kept\":[[1,3],[2,3],");
    let bad = write(dir.path(), "bad.json", tampered.as_bytes());
    let out = run(&["verify", "--solution", &bad, &k4], "");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn oracles() {
    let v = json(&run(&["oracle", "matching"], K4));
    assert_eq!(v["size"], 2);
    let v = json(&run(&["oracle", "domset"], C4));
    assert_eq!(v["set"].as_array().unwrap().len(), 2);
    let star = "4\n0 1\n0 2\n0 3\n";
    let out = run(&["oracle", "hampath"], star);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["oracle", "pip3"], star);
    assert_eq!(out.status.code(), Some(2));
    for engine in ["edges", "cycles", "auto"] {
        let v = json(&run(
            &["oracle", "max-spanning", "cactus", "--engine", engine],
            K4,
        ));
        assert_eq!(v["deletions"], 2);
    }
    let out = run(
        &[
            "oracle",
            "max-spanning",
            "linear-forest",
            "--engine",
            "cycles",
        ],
        K4,
    );
    assert_eq!(out.status.code(), Some(1));
    let out = run(
        &[
            "oracle",
            "pi-conditions",
            "--class",
            "linear-forest",
            "--n-max",
            "6",
            "--exhaustive-up-to",
            "5",
            "--samples",
            "20",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
    let out = run(
        &[
            "oracle",
            "pi-conditions",
            "--class",
            "cactus",
            "--n-max",
            "5",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    let failed: Vec<&str> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["condition"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["claw-free", "even-hole-free"]);
    let out = run(&["oracle", "pi-equiv", "--class", "linear-forest"], C4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outcome"], "agree");
    let out = run(&["oracle", "pi-equiv", "--class", "linear-forest"], K3);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn external_predicate() {
    // Maximum degree at most two, read from the edge list.
    let script = "awk 'NR>1 {d[$1]++; d[$2]++} END {for (v in d) if (d[v] > 2) exit 1; exit 0}'";
    let out = run(&["oracle", "pi-equiv", "--exec", script], C4);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["hamiltonian"], true);
}

#[test]
fn generators() {
    let out = run(&["gen", "qt-random", "--n", "10", "--seed", "7"], "");
    assert_eq!(out.status.code(), Some(0));
    let g = String::from_utf8(out.stdout.clone()).unwrap();
    let r = run(&["recognize", "quasi-threshold"], &g);
    assert_eq!(r.status.code(), Some(0));
    let out = run(&["gen", "chordal-random", "--n", "12", "--seed", "1"], "");
    let r = run(
        &["recognize", "chordal"],
        &String::from_utf8(out.stdout).unwrap(),
    );
    assert_eq!(r.status.code(), Some(0));
    let out = run(
        &["gen", "bipartite-subcubic", "--n", "9", "--seed", "3"],
        "",
    );
    let g = String::from_utf8(out.stdout).unwrap();
    assert!(g.starts_with("9\n"));
    assert_eq!(run(&["recognize", "bipartite"], &g).status.code(), Some(0));
    assert_eq!(run(&["recognize", "subcubic"], &g).status.code(), Some(0));
    let out = run(&["gen", "bipartite-subcubic", "--n", "8"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn labeled_catalog_matches_core() {
    let out = run(&["gen", "labeled-catalog", "--n", "4"], "");
    let lines: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    let expected: Vec<String> = treelike_core::generate::labeled_catalog(4)
        .map(|g| treelike::format::serialize_graph(&g, treelike::format::Format::Graph6))
        .collect();
    assert_eq!(lines, expected);
    let one = run(&["gen", "labeled-catalog", "--n", "4", "--index", "63"], "");
    assert_eq!(
        String::from_utf8(one.stdout).unwrap(),
        treelike::format::serialize_graph(
            &treelike_core::graph::families::complete(4),
            treelike::format::Format::EdgeList
        )
    );
    let out = run(&["gen", "labeled-catalog", "--n", "4", "--index", "64"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn labeled_input_keeps_names() {
    let out = run(
        &["solve", "cactus", "--format", "labeled"],
        "a b\nb c\nc a\nc d\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["extras"]["labels"],
        serde_json::json!(["a", "b", "c", "d"])
    );
    assert_eq!(v["deletions"], 0);
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.json");
    let t = target.to_string_lossy().into_owned();
    let out = run(&["solve", "cactus", "-o", &t], K4);
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&target).unwrap();
    let again = run(&["solve", "cactus"], K4);
    assert_eq!(first, again.stdout);
    let a = run(&["gen", "chordal-random", "--n", "15", "--seed", "42"], "");
    let b = run(&["gen", "chordal-random", "--n", "15", "--seed", "42"], "");
    let c = run(&["gen", "chordal-random", "--n", "15", "--seed", "43"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn in_process_runner() {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = treelike::run(
        ["treelike", "solve", "cactus", "--method", "qt"],
        &mut K4.as_bytes(),
        &mut stdout,
        &mut stderr,
    );
    assert_eq!(code, treelike::EXIT_SOLVED);
    assert_eq!(
        stdout,
        run(&["solve", "cactus", "--method", "qt"], K4).stdout
    );
    assert!(stderr.is_empty());
}
