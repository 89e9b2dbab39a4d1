use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid-kl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON value")
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("matroid-kl-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn compute_uniform_json() {
    let out = run(&[
        "compute",
        "--family",
        "uniform",
        "--k",
        "3",
        "--n",
        "6",
        "--targets",
        "P,Z,gamma",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let z = ints(&v["Z"]);
    assert_eq!(z.len(), 4);
    assert_eq!(z, z.iter().rev().copied().collect::<Vec<_>>());
    assert_eq!(ints(&v["P"]), vec![1, 9]);
    assert_eq!(ints(&v["gamma"]), vec![1, 12]);
}

#[test]
fn compute_from_file_gives_nonnegative_gamma() {
    // write the Fano plane to a file as the complement of its lines
    let bases = run(&[
        "compute",
        "--family",
        "pg",
        "--r",
        "2",
        "--q",
        "2",
        "--targets",
        "stressed",
        "--json",
    ]);
    assert_eq!(bases.status.code(), Some(0));
    let lines: Vec<Vec<i64>> = stdout_json(&bases)["stressed"]
        .as_array()
        .unwrap()
        .iter()
        .map(ints)
        .collect();
    assert_eq!(lines.len(), 7);
    let mut all = Vec::new();
    for a in 0..7i64 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                if !lines.contains(&vec![a, b, c]) {
                    all.push(vec![a, b, c]);
                }
            }
        }
    }
    let path = temp_file(
        "fano.json",
        &serde_json::json!({ "n": 7, "bases": all }).to_string(),
    );
    let out = run(&[
        "compute",
        "--file",
        path.to_str().unwrap(),
        "--targets",
        "gamma",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let g = ints(&stdout_json(&out)["gamma"]);
    assert_eq!(g, vec![1, 4]);
    std::fs::remove_file(path).ok();
}

#[test]
fn compute_thagomizer_p_text() {
    let out = run(&[
        "compute",
        "--family",
        "thagomizer",
        "--n",
        "3",
        "--targets",
        "P",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("P: 1 + 4t"), "{text}");
}

#[test]
fn compute_inline_graph() {
    let g = r#"{"vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
    let out = run(&[
        "compute",
        "--matroid",
        g,
        "--targets",
        "tutte,char,beta,P,Q",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["beta"].as_i64(), Some(2));
    assert_eq!(ints(&v["char"]), vec![-6, 11, -6, 1]);
    assert_eq!(ints(&v["Q"]), vec![6, 1]);
}

#[test]
fn relax_v_matroid() {
    let out = run(&[
        "relax",
        "--family",
        "v",
        "--k",
        "3",
        "--h",
        "4",
        "--n",
        "6",
        "--hyperplane",
        "0,1,2,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["added_bases"].as_u64(), Some(4));
    assert_eq!(ints(&v["deltas"]["P"]), vec![0, 5]);
    // the emitted matroid re-parses and has the extra bases
    let back = run(&[
        "compute",
        "--matroid",
        &v["matroid"].to_string(),
        "--targets",
        "free",
        "--json",
    ]);
    let free: Vec<Vec<i64>> = stdout_json(&back)["free"]
        .as_array()
        .unwrap()
        .iter()
        .map(ints)
        .collect();
    assert!(free.contains(&vec![0, 1, 2, 3]));
}

#[test]
fn relax_all_on_sparse_paving_is_uniform() {
    let out = run(&["relax", "--family", "pg", "--r", "2", "--q", "2", "--all"]);
    let v = stdout_json(&out);
    assert_eq!(v["matroid"]["bases"].as_array().unwrap().len(), 35);
    assert_eq!(v["profile"]["lambda"]["3"].as_u64(), Some(7));
}

#[test]
fn relax_errors() {
    let out = run(&["relax", "--family", "figure-one", "--hyperplane", "0,4,5,6"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("not stressed") && err.contains("not a circuit"),
        "{err}"
    );
    let out = run(&["relax", "--family", "figure-one", "--all"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("not paving"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "appendix", "--n-max", "30"],
        vec![
            "verify",
            "gamma-sweep",
            "--sparse-paving",
            "--n",
            "10",
            "--samples",
            "100",
            "--seed",
            "7",
        ],
        vec!["verify", "tableaux", "--max-cells", "16"],
        vec!["verify", "relaxation", "--family", "figure-one"],
        vec!["verify", "gamma-sweep", "--family", "whirl", "--n", "5"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        for line in text.lines() {
            let rec: Value = serde_json::from_str(line).unwrap();
            assert_eq!(rec["verdict"], "pass", "{line}");
        }
        assert!(text.lines().count() > 0);
    }
}

#[test]
fn sweep_is_seeded() {
    let args = [
        "verify",
        "gamma-sweep",
        "--sparse-paving",
        "--n",
        "8",
        "--samples",
        "10",
        "--seed",
        "3",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn tableaux_count() {
    let out = run(&[
        "tableaux",
        "count",
        "--kind",
        "skyt",
        "--a",
        "2",
        "--i",
        "1",
        "--b",
        "2",
        "--enumerate",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2");
    let out = run(&[
        "tableaux", "count", "--kind", "syt", "--a", "3", "--i", "1", "--b", "2", "--barred",
        "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["cells"].as_u64(), Some(7));
    assert!(v["count"].as_u64().unwrap() > 0);
    let out = run(&[
        "tableaux", "count", "--kind", "skyt", "--a", "3", "--i", "-1", "--b", "2",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0");
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 7] = [
        (
            &[
                "compute",
                "--family",
                "uniform",
                "--k",
                "3",
                "--targets",
                "P",
            ],
            1,
        ),
        (
            &[
                "compute",
                "--family",
                "uniform",
                "--k",
                "3",
                "--n",
                "6",
                "--targets",
                "nope",
            ],
            1,
        ),
        (
            &[
                "compute",
                "--matroid",
                "{\"n\":2,\"bases\":[[0],[0,1]]}",
                "--targets",
                "P",
            ],
            1,
        ),
        (
            &[
                "compute",
                "--family",
                "uniform",
                "--k",
                "2",
                "--n",
                "15",
                "--targets",
                "P",
            ],
            2,
        ),
        (
            &[
                "compute",
                "--family",
                "uniform",
                "--k",
                "2",
                "--n",
                "15",
                "--targets",
                "P",
                "--max-n",
                "15",
            ],
            0,
        ),
        (
            &[
                "tableaux",
                "count",
                "--kind",
                "syt",
                "--a",
                "10",
                "--i",
                "5",
                "--b",
                "5",
                "--enumerate",
            ],
            2,
        ),
        (&["verify", "appendix", "--n-max", "2"], 1),
    ];
    for (args, code) in cases {
        assert_eq!(run(args).status.code(), Some(code), "{args:?}");
    }
}

#[test]
fn thread_cap_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_matroid-kl"))
        .args([
            "verify",
            "gamma-sweep",
            "--sparse-paving",
            "--n",
            "7",
            "--samples",
            "5",
        ])
        .env("MATROID_KL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_matroid-kl"))
        .args(["verify", "tableaux", "--max-cells", "4"])
        .env("MATROID_KL_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
