use std::io::Write;
use std::process::{Command, Output, Stdio};

use extremal::counting::{count_cliques, count_triangles};
use extremal::families::FamilySpec;
use extremal::verify::VerificationReport;
use extremal::Graph;

fn extremal(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .env("EXTREMAL_THREADS", "2")
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

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_piped_into_count_matches_prediction() {
    let specs = FamilySpec::all_up_to(16);
    let codes: String = specs
        .iter()
        .map(|s| stdout(&extremal(&["gen", &s.to_string()], "")))
        .collect();
    let counted = extremal(&["count", "-"], &codes);
    assert!(counted.status.success());
    let lines: Vec<String> = stdout(&counted).lines().map(String::from).collect();
    assert_eq!(lines.len(), specs.len());
    for (spec, line) in specs.iter().zip(&lines) {
        let p = spec.predict().unwrap();
        let g = spec.build().unwrap();
        let mut want = format!(
            "n={} edges={} triangles={}",
            p.vertices,
            p.edges,
            count_triangles(&g)
        );
        if let Some(t) = p.triangles {
            assert_eq!(t, count_triangles(&g), "{spec}");
        }
        assert_eq!(line, &want, "{spec}");
        if let Some((k, c)) = p.kcliques {
            assert_eq!(count_cliques(&g, k), c, "{spec}");
            want += &format!(" k{k}={c}");
            let with_k = extremal(
                &[
                    "count",
                    "--cliques",
                    &k.to_string(),
                    &g.to_graph6().unwrap(),
                ],
                "",
            );
            assert_eq!(stdout(&with_k).trim_end(), want, "{spec}");
        }
    }
}

#[test]
fn worked_commands() {
    let out = extremal(&["gen", "kminus:3,3"], "");
    let g = Graph::from_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g.edge_count(), 10);

    let out = extremal(&["count", "C~"], "");
    assert_eq!(stdout(&out), "n=4 edges=6 triangles=4\n");

    let out = extremal(&["tau", "-"], "C~\nDQc\n");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("tau=2 cover=0,1 packing="));
    assert!(lines[1].starts_with("tau=0 cover= packing="));

    let out = extremal(&["iso", "Cl", "Cl"], "");
    assert_eq!(stdout(&out), "true\n");
    let out = extremal(&["iso", "Cl", "C~"], "");
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn verify_exit_codes_and_json() {
    let out = extremal(&["verify", "main", "--n", "6"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("extremal_value 4"), "{text}");
    assert!(text.contains("status holds"));

    let dir = std::env::temp_dir().join(format!("extremal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("main6.json");
    let out = extremal(
        &[
            "verify",
            "main",
            "--n",
            "6",
            "--json",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let report = VerificationReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.extremal_value, Some(4));
    assert_eq!(report.space_size, 3003);
    std::fs::remove_dir_all(&dir).unwrap();

    // the inequality grid has a genuine equality case outside the stated ones
    let out = extremal(&["verify", "lemma3", "--a", "3", "--b", "3"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample A=2,B=2,a=1,b=1"));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["count", "C~~"][..],
        &["count", "&&"],
        &["gen", "kst:10,2,2"],
        &["gen", "unknown:3"],
        &["enumerate", "12", "3"],
        &["enumerate", "4", "3", "--shards", "2", "--shard", "2"],
        &["verify", "erdos", "--n", "6", "--t", "3"],
        &["verify", "main"],
        &["verify", "fermat", "--n", "5"],
        &["tau"],
        &[],
    ] {
        let out = extremal(args, "");
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    let out = extremal(&["count", "-"], "C~\nnot graph6\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_is_ordered_and_deterministic() {
    let serial = extremal(
        &["enumerate", "5", "4", "--shards", "4", "--threads", "1"],
        "",
    );
    let parallel = extremal(
        &["enumerate", "5", "4", "--shards", "4", "--threads", "4"],
        "",
    );
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(serial.stderr, parallel.stderr);
    assert_eq!(stdout(&serial).lines().count(), 210);

    let mut pieces = String::new();
    for shard in 0..4 {
        let out = extremal(
            &[
                "enumerate",
                "5",
                "4",
                "--shards",
                "4",
                "--shard",
                &shard.to_string(),
            ],
            "",
        );
        pieces += &stdout(&out);
        let stats: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(stats["shard_id"], shard);
    }
    assert_eq!(pieces, stdout(&serial));

    let filtered = extremal(&["enumerate", "5", "7", "--min-tau", "2"], "");
    let text = stdout(&filtered);
    for line in text.lines() {
        let g = Graph::from_graph6(line).unwrap();
        assert!(extremal::covering::tau_triangle(&g).tau >= 2);
    }
    let stats: serde_json::Value = serde_json::from_slice(&filtered.stderr).unwrap();
    assert_eq!(stats["visited"], 120);
    assert_eq!(stats["passed"], text.lines().count());
}
