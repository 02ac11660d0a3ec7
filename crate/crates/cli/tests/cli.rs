use std::path::Path;
use std::process::{Command, Output};

fn dtcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dtcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn analyze_examples() {
    let v = json(&dtcode(&[
        "analyze",
        "--construction",
        "qr-example",
        "--p",
        "5",
    ]));
    assert_eq!(
        (v["N"].as_u64(), v["k"].as_u64(), v["d"].as_u64()),
        (Some(10), Some(5), Some(4))
    );
    assert_eq!(v["fsd"], true);

    let v = json(&dtcode(&["analyze", "--gen", "q=2 n=2 t=1 a=0 b=0"]));
    assert_eq!(v["d"], 2);
    assert_eq!(v["weight_distribution"], serde_json::json!([1, 0, 2, 0, 1]));
    assert_eq!(v["self_dual"], true);

    let v = json(&dtcode(&[
        "analyze",
        "--construction",
        "self-dual",
        "--q",
        "5",
        "--n",
        "3",
        "--variant",
        "scalar",
    ]));
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["structure"], "both");

    let v = json(&dtcode(&[
        "analyze",
        "--construction",
        "self-dual",
        "--q",
        "13",
        "--n",
        "4",
        "--variant",
        "negacirculant:1",
    ]));
    assert_eq!(v["structure"], "negacirculant");
}

#[test]
fn analyze_report_golden() {
    let out = dtcode(&["analyze", "--gen", "q=4 n=2 t=w a=1 b=1"]);
    let golden = "{\n  \"q\": 4,\n  \"n\": 2,\n  \"N\": 4,\n  \"k\": 2,\n  \"gen\": \"q=4 n=2 t=w a=1 b=1\",\n  \"d\": 3,\n  \"d_exact\": true,\n  \"weight_distribution\": [\n    1,\n    0,\n    0,\n    12,\n    3\n  ],\n  \"fsd\": true,\n  \"self_dual\": false,\n  \"structure\": \"not_self_dual\",\n  \"even\": null\n}\n";
    assert_eq!(stdout(&out), golden);
    let same = dtcode(&["analyze", "--construction", "qr-example", "--p", "2"]);
    assert_eq!(stdout(&same), golden);
}

#[test]
fn analyze_sampled_mode() {
    let args = [
        "analyze",
        "--construction",
        "qr-example",
        "--p",
        "11",
        "--sampled",
        "--trials",
        "2000",
        "--seed",
        "3",
    ];
    let a = json(&dtcode(&args));
    let b = json(&dtcode(&args));
    assert_eq!(a, b);
    assert_eq!(a["d_exact"], false);
    assert!(a["d"].as_u64().unwrap() >= 7);
    // sampled mode without a seed is a usage error
    assert_eq!(
        code(&dtcode(&[
            "analyze",
            "--gen",
            "q=2 n=2 t=1 a=0 b=0",
            "--sampled"
        ])),
        2
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&dtcode(&["analyze", "--gen", "q=2 n=x t=1"])), 2);
    assert_eq!(code(&dtcode(&["analyze", "--gen", "q=6 n=1 t=1 a= b="])), 2);
    assert_eq!(
        code(&dtcode(&["analyze", "--gen", "q=3 n=2 t=3 a=0 b=0"])),
        2
    );
    assert_eq!(
        code(&dtcode(&[
            "analyze",
            "--gen",
            "q=3 n=4 t=1 a=0,0,0 b=0,0,0",
            "--budget",
            "7"
        ])),
        3
    );
    assert_eq!(
        code(&dtcode(&[
            "analyze",
            "--construction",
            "self-dual",
            "--q",
            "7",
            "--n",
            "2"
        ])),
        2
    );
    assert_eq!(
        code(&dtcode(&[
            "search",
            "--q",
            "2",
            "--len",
            "30",
            "--exhaustive"
        ])),
        3
    );
    assert_eq!(
        code(&dtcode(&[
            "search",
            "--q",
            "2",
            "--len",
            "7",
            "--exhaustive"
        ])),
        2
    );
    assert_eq!(
        code(&dtcode(&["search", "--q", "2", "--len", "8", "--random"])),
        2
    );
    assert_eq!(code(&dtcode(&["search", "--q", "2", "--len", "8"])), 2);
    assert_eq!(
        code(&dtcode(&[
            "verify",
            "no-such-theorem",
            "--q",
            "2",
            "--n",
            "2"
        ])),
        2
    );
    assert_eq!(
        code(&dtcode(&[
            "verify",
            "even-circulant",
            "--q",
            "3",
            "--n",
            "2"
        ])),
        2
    );
    assert_eq!(
        code(&dtcode(&[
            "verify",
            "isodual",
            "--q",
            "2",
            "--n",
            "20",
            "--exhaustive"
        ])),
        3
    );
    assert_eq!(code(&dtcode(&["frobnicate"])), 2);
}

#[test]
fn search_examples() {
    let v = json(&dtcode(&[
        "search",
        "--q",
        "2",
        "--len",
        "8",
        "--exhaustive",
    ]));
    assert_eq!(v["best_d"], 4);
    let v = json(&dtcode(&[
        "search",
        "--q",
        "3",
        "--len",
        "4",
        "--exhaustive",
    ]));
    assert_eq!(v["best_d"], 3);
    let out = dtcode(&[
        "search",
        "--q",
        "2",
        "--len",
        "8",
        "--exhaustive",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q,2n,best_d,strategy,codes_examined,seed");
    assert!(lines[1].starts_with("2,8,4,exhaustive,"));
}

#[test]
fn random_search_reruns_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, extra: &[&str]| {
        let path = dir.path().join(name);
        let p = path.to_str().unwrap();
        let mut args = vec![
            "search", "--q", "2", "--len", "12", "--random", "--trials", "1000", "--seed", "7",
            "--output", p,
        ];
        args.extend_from_slice(extra);
        assert!(dtcode(&args).status.success());
        std::fs::read(&path).unwrap()
    };
    let a = run("a.json", &[]);
    let b = run("b.json", &[]);
    assert_eq!(a, b);
    assert_eq!(run("c.json", &["--jobs", "4", "--chunk", "37"]), a);
    assert_eq!(run("d.json", &["--shards", "3"]), a);
}

fn write_shards(dir: &Path, args: &[&str], total: u64) -> Vec<String> {
    (0..total)
        .map(|i| {
            let path = dir.join(format!("shard{i}.json"));
            let p = path.to_str().unwrap().to_string();
            let shard = format!("{i}/{total}");
            let mut full: Vec<&str> = args.to_vec();
            full.extend_from_slice(&["--shard", &shard, "--output", &p]);
            assert!(dtcode(&full).status.success());
            p
        })
        .collect()
}

#[test]
fn shard_files_merge_to_the_unsharded_report() {
    let dir = tempfile::tempdir().unwrap();
    let base = ["search", "--q", "3", "--len", "8", "--exhaustive"];
    let whole = stdout(&dtcode(&base));
    let files = write_shards(dir.path(), &base, 4);
    let mut args = vec!["merge"];
    args.extend(files.iter().map(String::as_str));
    assert_eq!(stdout(&dtcode(&args)), whole);
    // a missing shard is refused
    assert_eq!(code(&dtcode(&args[..3])), 2);
}

#[test]
fn checkpointed_search_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let cp = cp.to_str().unwrap();
    let base = [
        "search",
        "--q",
        "2",
        "--len",
        "14",
        "--exhaustive",
        "--chunk",
        "1000",
    ];
    let whole = stdout(&dtcode(&base));
    let mut halted = base.to_vec();
    halted.extend_from_slice(&["--checkpoint", cp, "--halt-after", "2"]);
    let first = json(&dtcode(&halted));
    assert_eq!(first["checkpoint"]["complete"], false);
    assert_eq!(first["checkpoint"]["position"], 2000);
    let mut resume = base.to_vec();
    resume.extend_from_slice(&["--checkpoint", cp]);
    assert_eq!(stdout(&dtcode(&resume)), whole);
}

#[test]
fn csv_file_accumulates_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let c = csv.to_str().unwrap();
    for len in ["4", "6"] {
        assert!(dtcode(&[
            "search",
            "--q",
            "2",
            "--len",
            len,
            "--exhaustive",
            "--csv",
            c
        ])
        .status
        .success());
    }
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("2,4,2,exhaustive,"));
    assert!(lines[2].starts_with("2,6,3,exhaustive,"));
}

#[test]
fn verify_examples() {
    for args in [
        &[
            "verify", "isodual", "--q", "4", "--n", "6", "--random", "10000",
        ][..],
        &[
            "verify",
            "selfdual-structure",
            "--q",
            "5",
            "--n",
            "3",
            "--exhaustive",
        ],
        &[
            "verify",
            "even-circulant",
            "--q",
            "2",
            "--n",
            "6",
            "--exhaustive",
        ],
        &["verify", "fsd", "--q", "3", "--n", "3"],
        &["verify", "containment-cap", "--q", "2", "--n", "3"],
        &["verify", "code-count", "--q", "5", "--n", "3"],
    ] {
        let out = dtcode(args);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(stdout(&out).starts_with("pass: "));
    }
}

#[test]
fn construct_prints_generators() {
    let out = dtcode(&["construct", "--construction", "qr", "--p", "5"]);
    assert_eq!(stdout(&out), "q=4 n=5 t=w a=1,0,0,1 b=0,1,1,0\n");
    let out = dtcode(&[
        "construct",
        "--construction",
        "qr-example",
        "--p",
        "2",
        "--matrix",
    ]);
    assert_eq!(stdout(&out), "q=4 n=2 t=w a=1 b=1\nw,1\n1,w\n");
    let out = dtcode(&["construct", "--construction", "qr", "--p", "5", "--t", "1"]);
    assert!(stdout(&out).starts_with("q=4 n=5 t=1 "));
}

#[test]
fn table_and_bounds() {
    let out = dtcode(&["table", "--q", "3", "--max-len", "8"]);
    let text = stdout(&out);
    let ds: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(ds, ["3", "3", "4"]);

    let v = json(&dtcode(&[
        "bounds",
        "--q",
        "2",
        "--max-len",
        "10",
        "--delta",
        "0.05",
    ]));
    assert!((v["delta_gv_half"].as_f64().unwrap() - 0.11003).abs() < 1e-4);
    assert!(v["counting"]["n0"].is_u64());
    let out = dtcode(&["bounds", "--q", "2", "--samples", "4", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().next(), Some("x,H"));
    assert_eq!(stdout(&out).lines().count(), 6);
    assert_eq!(code(&dtcode(&["bounds", "--q", "1"])), 2);
}
