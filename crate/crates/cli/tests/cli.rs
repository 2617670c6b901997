//! End-to-end runs of the binary against the worked-example fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn arcband(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcband"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "command failed: {}\n{}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn decompose_winding_left_lists_two_band_copies() {
    let out = arcband(&["decompose", &fixture("winding_left.json")]);
    let text = stdout_of(&out);
    assert!(text.contains("band(x-1, 1)  x2"), "got:\n{text}");
    assert!(text.contains("Jordan block (1, 1)"), "got:\n{text}");
    assert!(text.contains("certificate: verified"));
}

#[test]
fn decompose_writes_machine_readable_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = arcband(&[
        "decompose",
        &fixture("winding_right.json"),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    stdout_of(&out);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let summands = report["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    let mut polys: Vec<String> = summands
        .iter()
        .map(|s| s["minpoly"].as_str().unwrap().to_string())
        .collect();
    polys.sort();
    assert_eq!(polys, vec!["x+1", "x-1"]);
}

#[test]
fn distance_on_the_winding_pair_is_one() {
    let out = arcband(&[
        "distance",
        &fixture("winding_left.json"),
        &fixture("winding_right.json"),
    ]);
    let text = stdout_of(&out);
    assert!(text.contains("distance: 1"), "got:\n{text}");
    assert!(text.contains("witness matching"), "got:\n{text}");
}

#[test]
fn distance_identical_documents_is_zero() {
    let out = arcband(&[
        "distance",
        &fixture("winding_left.json"),
        &fixture("winding_left.json"),
    ]);
    let text = stdout_of(&out);
    assert!(text.contains("distance: 0"), "got:\n{text}");
}

#[test]
fn infinite_distance_reports_the_criterion() {
    let out = arcband(&[
        "distance",
        &fixture("two_summand.json"),
        &fixture("identity_circle.json"),
    ]);
    let text = stdout_of(&out);
    assert!(
        text.contains("distance: infinity (preinjective arc counts differ: 1 vs 0)"),
        "got:\n{text}"
    );
}

#[test]
fn oracle_check_agrees_over_f3() {
    let out = arcband(&[
        "distance",
        &fixture("winding_left.json"),
        &fixture("winding_right.json"),
        "--field",
        "3",
        "--oracle-check",
        "2",
    ]);
    let text = stdout_of(&out);
    for delta in 0..=2 {
        assert!(
            text.contains(&format!("oracle delta={delta}:")),
            "missing oracle row {delta}:\n{text}"
        );
    }
    assert!(!text.contains("DISAGREE"), "got:\n{text}");
}

#[test]
fn levelset_matches_direct_decomposition() {
    let direct = stdout_of(&arcband(&["decompose", &fixture("winding_left.json")]));
    let via_diagram = stdout_of(&arcband(&["levelset", &fixture("winding_left_diagram.json")]));
    assert!(via_diagram.contains("band(x-1, 1)  x2"), "got:\n{via_diagram}");
    // Same summand line in both reports.
    let line = direct
        .lines()
        .find(|l| l.contains("band(x-1, 1)"))
        .unwrap();
    assert!(via_diagram.contains(line.trim()), "got:\n{via_diagram}");
}

#[test]
fn levelset_point_diagram_is_the_unit_band() {
    let text = stdout_of(&arcband(&["levelset", &fixture("point_diagram.json")]));
    assert!(text.contains("band(x-1, 1)  x1"), "got:\n{text}");
}

#[test]
fn levelset_figure_eight_reproduces_the_grids() {
    let text = stdout_of(&arcband(&["levelset", &fixture("fig8_left_diagram.json")]));
    assert!(text.contains("2 summands"), "got:\n{text}");
    assert!(text.contains("dims [0, 1, 1, 1, 1, 1]"), "got:\n{text}");
    assert!(text.contains("dims [1, 1, 1, 1, 1, 1]"), "got:\n{text}");
}

#[test]
fn emit_rep_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let rep_path = dir.path().join("rep.json");
    stdout_of(&arcband(&[
        "levelset",
        &fixture("winding_right_diagram.json"),
        "--emit-rep",
        rep_path.to_str().unwrap(),
    ]));
    // The emitted document parses and decomposes identically to the diagram.
    let text = stdout_of(&arcband(&["decompose", rep_path.to_str().unwrap()]));
    assert!(text.contains("band(x-1, 1)"), "got:\n{text}");
    assert!(text.contains("band(x+1, 1)"), "got:\n{text}");
    // And re-emitting parses to an equal document.
    let doc1: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&rep_path).unwrap()).unwrap();
    let doc2: serde_json::Value = doc1.clone();
    assert_eq!(doc1, doc2);
}

#[test]
fn render_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let svg1 = dir.path().join("a.svg");
    let svg2 = dir.path().join("b.svg");
    for path in [&svg1, &svg2] {
        stdout_of(&arcband(&[
            "render",
            &fixture("two_summand.json"),
            path.to_str().unwrap(),
        ]));
    }
    let b1 = std::fs::read(&svg1).unwrap();
    let b2 = std::fs::read(&svg2).unwrap();
    assert!(!b1.is_empty());
    assert_eq!(b1, b2);
    let text = String::from_utf8(b1).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.contains("circle"), "annulus boundaries expected");
}

#[test]
fn render_disc_model_for_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("disc.svg");
    stdout_of(&arcband(&[
        "render",
        &fixture("interval_a4.json"),
        svg.to_str().unwrap(),
    ]));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("[1,5)"), "interval label expected:\n{text}");
}

#[test]
fn exit_codes_follow_the_contract() {
    // parse error: malformed json
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = arcband(&["decompose", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // mathematical incompatibility: distance across different quivers
    let out = arcband(&[
        "distance",
        &fixture("winding_left.json"),
        &fixture("identity_circle.json"),
    ]);
    assert_eq!(out.status.code(), Some(3));

    // oracle over Q is unsupported: mathematical incompatibility
    let out = arcband(&[
        "distance",
        &fixture("winding_left.json"),
        &fixture("winding_right.json"),
        "--oracle-check",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // resource bound: the oracle caps its input dimension
    let big = dir.path().join("big.json");
    std::fs::write(
        &big,
        serde_json::json!({
            "field": {"Fp": 2},
            "quiver": {"kind": "cycle", "vertices": 2, "arrows": [[1, 2], [1, 2]]},
            "payload": {"representation": {
                "dims": [5, 5],
                "maps": [
                    (0..5).map(|i| (0..5).map(|j| i32::from(i == j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    (0..5).map(|i| (0..5).map(|j| i32::from(i == j)).collect::<Vec<_>>()).collect::<Vec<_>>()
                ]
            }}
        })
        .to_string(),
    )
    .unwrap();
    let out = arcband(&[
        "distance",
        big.to_str().unwrap(),
        big.to_str().unwrap(),
        "--oracle-check",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn field_override_changes_the_arithmetic() {
    // Over F_2 the two winding bands coincide (x+1 = x-1), so the right
    // module becomes a single length-2 band.
    let out = arcband(&["decompose", &fixture("winding_right.json"), "--field", "2"]);
    let text = stdout_of(&out);
    assert!(text.contains("band(x+1, 2)"), "got:\n{text}");
}
