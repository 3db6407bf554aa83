use std::path::Path;
use std::process::{Command, Output};

use clap::Parser;
use shadows_cli::commands::{enumerate_records, Cli, Command as Sub};
use shadows_cli::render::{render_record, Format};
use shadows_cli::OutputRecord;

fn shadows(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shadows"))
        .args(args)
        .env_remove("SHADOWS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn records(text: &str) -> Vec<OutputRecord> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn n3_classified_counts() {
    let recs = records(&stdout(&shadows(&[
        "enumerate",
        "--n",
        "3",
        "--classify",
        "--format",
        "jsonl",
    ])));
    assert_eq!(recs.len(), 5);
    assert_eq!(recs.iter().filter(|r| r.is_shadow == Some(true)).count(), 5);
    assert_eq!(
        recs.iter().filter(|r| r.is_essential == Some(true)).count(),
        4
    );
    let indices: Vec<_> = recs.iter().map(|r| r.index).collect();
    assert_eq!(indices, vec![1, 2, 3, 4, 5]);
}

#[test]
fn n5_essential_only() {
    let recs = records(&stdout(&shadows(&[
        "enumerate",
        "--n",
        "5",
        "--classify",
        "--essential-only",
    ])));
    assert_eq!(recs.len(), 26);
    assert!(recs.iter().all(|r| r.is_essential == Some(true)));
}

#[test]
fn n1_single_zero_record() {
    let recs = records(&stdout(&shadows(&["enumerate", "--n", "1"])));
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].matrix, vec![vec![0]]);
    assert!(!recs[0].is_classified());
}

#[test]
fn jsonl_round_trip() {
    for n in 1..=5 {
        let args = Cli::parse_from([
            "shadows",
            "enumerate",
            "--n",
            &n.to_string(),
            "--classify",
            "--threads",
            "1",
        ]);
        let Sub::Enumerate(args) = args.command else {
            unreachable!()
        };
        for rec in enumerate_records(&args).unwrap() {
            let line = render_record(&rec, Format::Jsonl).unwrap();
            assert!(line.ends_with('\n') && line.matches('\n').count() == 1);
            let back: OutputRecord = serde_json::from_str(&line).unwrap();
            assert_eq!(back, rec);
            assert_eq!(back.to_matrix().unwrap().to_rows(), rec.matrix);
        }
    }
}

#[test]
fn output_is_independent_of_threads() {
    let base = shadows(&["enumerate", "--n", "5", "--classify", "--threads", "1"]);
    let base = stdout(&base);
    for k in ["2", "8"] {
        assert_eq!(
            stdout(&shadows(&[
                "enumerate",
                "--n",
                "5",
                "--classify",
                "--threads",
                k
            ])),
            base
        );
    }
    let via_env = Command::new(env!("CARGO_BIN_EXE_shadows"))
        .args(["enumerate", "--n", "5", "--classify"])
        .env("SHADOWS_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&via_env), base);
}

#[test]
fn grouped_order_flag() {
    let recs = records(&stdout(&shadows(&[
        "enumerate",
        "--n",
        "5",
        "--paper-order",
    ])));
    assert_eq!(recs.len(), 138);
    let group = |r: &OutputRecord| match (r.is_essential, r.is_shadow) {
        (Some(true), _) => 0,
        (_, Some(true)) => 1,
        _ => 2,
    };
    let groups: Vec<_> = recs.iter().map(group).collect();
    assert!(groups.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(groups.iter().filter(|&&g| g == 0).count(), 26);
    assert_eq!(groups.iter().filter(|&&g| g == 1).count(), 39);
}

#[test]
fn search_flags_do_not_change_output() {
    let base = stdout(&shadows(&["enumerate", "--n", "5"]));
    assert_eq!(
        stdout(&shadows(&["enumerate", "--n", "5", "--prune"])),
        base
    );
    assert_eq!(
        stdout(&shadows(&[
            "enumerate",
            "--n",
            "5",
            "--stop-at-zero",
            "--prune"
        ])),
        base
    );
}

#[test]
fn exit_codes() {
    assert_eq!(shadows(&["enumerate", "--n", "0"]).status.code(), Some(1));
    assert_eq!(shadows(&["enumerate", "--n", "9"]).status.code(), Some(1));
    assert_eq!(shadows(&["verify", "--n", "5"]).status.code(), Some(1));
    assert_eq!(shadows(&["enumerate"]).status.code(), Some(2));
    assert_eq!(
        shadows(&["enumerate", "--n", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        shadows(&["enumerate", "--n", "3", "--threads", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(shadows(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn report_and_verify() {
    let csv = stdout(&shadows(&["report", "--max-n", "5", "--format", "csv"]));
    assert_eq!(
        csv,
        "n,shades,shadows,essential\n1,1,1,1\n2,1,1,1\n3,5,5,4\n4,12,12,7\n5,138,65,26\n"
    );
    for n in 1..=4 {
        let text = stdout(&shadows(&["verify", "--n", &n.to_string()]));
        assert!(text.contains("agrees"));
    }
}

#[test]
fn classify_reads_enumerate_output() {
    let dir = tempfile::tempdir().unwrap();
    let listing = dir.path().join("n4.jsonl");
    let classified = dir.path().join("n4_classified.jsonl");
    let path = |p: &Path| p.to_str().unwrap().to_string();
    stdout(&shadows(&[
        "enumerate",
        "--n",
        "4",
        "--out",
        &path(&listing),
    ]));
    stdout(&shadows(&[
        "classify",
        "--in",
        &path(&listing),
        "--out",
        &path(&classified),
    ]));
    let direct = stdout(&shadows(&["enumerate", "--n", "4", "--classify"]));
    assert_eq!(std::fs::read_to_string(&classified).unwrap(), direct);

    let bad = dir.path().join("bad.jsonl");
    std::fs::write(&bad, "[[0,1],[1,0]]\n").unwrap();
    let out = shadows(&["classify", "--in", &path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn text_and_latex_formats() {
    let text = stdout(&shadows(&[
        "enumerate",
        "--n",
        "1",
        "--classify",
        "--format",
        "text",
    ]));
    assert!(text.contains("[0]") && text.contains("[v₁]") && text.contains("[c₁]"));
    let tex = stdout(&shadows(&[
        "enumerate",
        "--n",
        "5",
        "--essential-only",
        "--format",
        "latex",
    ]));
    assert_eq!(tex.matches("\\begin{bmatrix}").count(), 3 * 26);
    assert!(!tex.contains('\r'));
}

#[test]
fn latex_item_one_structure() {
    let fixture =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/n5_essential.json");
    let items: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture).unwrap()).unwrap();
    let first = &items[0];
    let rows: Vec<Vec<i64>> = serde_json::from_value(first["matrix"].clone()).unwrap();
    let a = shadows::SkewIntMatrix::from_rows(&rows).unwrap();
    let rec = OutputRecord::classified(1, &shadows::classify(&a));
    let tex = render_record(&rec, Format::Latex).unwrap();
    let blocks: Vec<&str> = tex.split("\\begin{bmatrix}").skip(1).collect();
    assert_eq!(blocks.len(), 3);
    for block in &blocks {
        let body = block.split("\\end{bmatrix}").next().unwrap();
        assert_eq!(body.matches("\\\\").count(), 4, "five rows: {body}");
    }
    // x is a column, C keeps only its upper triangle
    assert!(!blocks[1].contains('&'));
    let c_rows: Vec<&str> = blocks[2]
        .split("\\end{bmatrix}")
        .next()
        .unwrap()
        .trim()
        .split(" \\\\\n")
        .collect();
    assert!(c_rows[4].starts_with(" &  &  &  & "), "{}", c_rows[4]);
    assert_eq!(c_rows[4].matches('c').count(), 1);
}
