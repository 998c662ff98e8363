//! Behavioural tests of the command line surface: exit codes, report
//! shapes, output files, and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use symflex_testkit::fixture_path;

fn symflex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symflex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    fixture_path(name).to_string_lossy().into_owned()
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(!output.stdout.is_empty(), "expected JSON on stdout");
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symflex-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_exit_codes() {
    let ok = symflex(&["validate", &fixture("cycle_c4.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout_json(&ok)["ok"].as_bool().unwrap());

    // a mutated fixture exits 2 and names the offending edge
    let dir = tmp_dir("validate");
    let broken = dir.join("broken.json");
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture_path("k22_hubs_c2.json")).unwrap())
            .unwrap();
    doc["edges"].as_array_mut().unwrap().push(serde_json::json!(["h1", "h2"]));
    std::fs::write(&broken, serde_json::to_string(&doc).unwrap()).unwrap();
    let bad = symflex(&["validate", broken.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    let report = stdout_json(&bad);
    assert!(!report["ok"].as_bool().unwrap());
    let detail = report["violations"][0]["detail"].as_str().unwrap();
    assert!(detail.contains("h1") && detail.contains("h2"), "{detail}");

    let missing = symflex(&["validate", "/nonexistent/graph.json"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn list_counts_and_bounds() {
    let six = symflex(&["nac", "list", &fixture("cycle_c4.json"), "--count-only"]);
    assert_eq!(six.status.code(), Some(0));
    assert_eq!(stdout_json(&six)["count"], 6);
    assert!(stdout_json(&six)["colourings"].is_null());

    let three = symflex(&[
        "nac",
        "list",
        &fixture("cycle_c4.json"),
        "--count-only",
        "--up-to-conjugation",
    ]);
    assert_eq!(stdout_json(&three)["count"], 3);

    let full = symflex(&["nac", "list", &fixture("cycle_c4.json")]);
    assert_eq!(stdout_json(&full)["colourings"].as_array().unwrap().len(), 6);

    // bound exceeded is exit 3 and the message carries the bound
    let refused = symflex(&[
        "nac",
        "list",
        &fixture("triangle_ring12_c4.json"),
        "--max-edges",
        "10",
    ]);
    assert_eq!(refused.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&refused.stderr);
    assert!(stderr.contains("10"), "{stderr}");

    let sym = symflex(&["symnac", "list", &fixture("triangle_ring12_c4.json"), "--count-only"]);
    assert_eq!(stdout_json(&sym)["count"], 2);
}

#[test]
fn check_reports_with_witnesses() {
    let ok = symflex(&[
        "symnac",
        "check",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let doc = stdout_json(&ok);
    assert_eq!(doc["ok"], true);
    assert!(doc["reason"].is_null());

    // an almost cycle on K3: one blue edge closes the red path
    let dir = tmp_dir("check");
    let colouring = dir.join("k3_two_one.json");
    std::fs::write(
        &colouring,
        serde_json::json!({ "red": [["1", "2"], ["2", "3"]], "blue": [["1", "3"]] }).to_string(),
    )
    .unwrap();
    let bad = symflex(&["nac", "check", &fixture("k3_c3.json"), colouring.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    let doc = stdout_json(&bad);
    assert_eq!(doc["ok"], false);
    assert_eq!(doc["witness"]["type"], "almost_cycle");
    assert_eq!(doc["witness"]["colour"], "blue");
    assert_eq!(doc["witness"]["path"].as_array().unwrap().len(), 3);

    // a colouring file that does not partition E(G) is an operation error
    let partial = dir.join("partial.json");
    std::fs::write(&partial, serde_json::json!({ "red": [["1", "2"]], "blue": [] }).to_string())
        .unwrap();
    let err = symflex(&["nac", "check", &fixture("k3_c3.json"), partial.to_str().unwrap()]);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn motion_pipeline_round_trip() {
    let dir = tmp_dir("motion");
    let frames = dir.join("frames.json");
    let build = symflex(&[
        "motion",
        "build",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
        "--frames",
        "24",
        "--out",
        frames.to_str().unwrap(),
    ]);
    assert_eq!(build.status.code(), Some(0), "{}", String::from_utf8_lossy(&build.stderr));

    let verify = symflex(&[
        "motion",
        "verify",
        frames.to_str().unwrap(),
        "--graph",
        &fixture("triangle_ring12_c4.json"),
    ]);
    assert_eq!(verify.status.code(), Some(0));
    let report = stdout_json(&verify);
    assert_eq!(report["ok"], true);
    assert!(report["edge_length_residual"].as_f64().unwrap() < 1e-9);

    // corrupting one coordinate fails verification with exit 2
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&frames).unwrap()).unwrap();
    doc["frames"][3]["positions"]["7"][0] = serde_json::json!(99.0);
    let broken = dir.join("broken.json");
    std::fs::write(&broken, serde_json::to_string(&doc).unwrap()).unwrap();
    let bad = symflex(&[
        "motion",
        "verify",
        broken.to_str().unwrap(),
        "--graph",
        &fixture("triangle_ring12_c4.json"),
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(stdout_json(&bad)["edge_lengths_ok"], false);

    // explicit parameters: t = 0 and t = pi
    let sample = symflex(&[
        "motion",
        "sample",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
        "--t",
        "0.0,3.141592653589793",
    ]);
    assert_eq!(sample.status.code(), Some(0));
    let doc = stdout_json(&sample);
    assert_eq!(doc["frames"].as_array().unwrap().len(), 2);

    // rejection when the colouring is not a symmetric NAC-colouring
    let bad_col = dir.join("bad_colouring.json");
    std::fs::write(
        &bad_col,
        serde_json::json!({ "red": [["1", "2"], ["2", "3"]], "blue": [["1", "3"]] }).to_string(),
    )
    .unwrap();
    let rejected = symflex(&[
        "motion",
        "build",
        &fixture("k3_c3.json"),
        bad_col.to_str().unwrap(),
    ]);
    assert_eq!(rejected.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&rejected.stderr);
    assert!(stderr.contains("NAC"), "{stderr}");
}

#[test]
fn render_emits_one_svg_per_frame() {
    let dir = tmp_dir("render");
    let frames = dir.join("frames.json");
    symflex(&[
        "motion",
        "build",
        &fixture("ring8_hub_c2.json"),
        // build needs a colouring: take a symmetric one via symnac list
        &make_ring8_colouring(&dir),
        "--frames",
        "5",
        "--out",
        frames.to_str().unwrap(),
    ]);
    let out_dir = dir.join("svg");
    let render = symflex(&[
        "render",
        frames.to_str().unwrap(),
        "--graph",
        &fixture("ring8_hub_c2.json"),
        "--out-dir",
        out_dir.to_str().unwrap(),
        "--prefix",
        "pose",
    ]);
    assert_eq!(render.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, vec![
        "pose_0000.svg",
        "pose_0001.svg",
        "pose_0002.svg",
        "pose_0003.svg",
        "pose_0004.svg"
    ]);
    let body = std::fs::read_to_string(out_dir.join("pose_0000.svg")).unwrap();
    assert!(body.starts_with("<svg "));
    assert_eq!(body.matches("<line ").count(), 10);
    assert_eq!(body.matches("<circle ").count(), 9);
}

/// Write the first symmetric NAC-colouring of the ring fixture to a file.
fn make_ring8_colouring(dir: &Path) -> String {
    let list = symflex(&["symnac", "list", &fixture("ring8_hub_c2.json")]);
    let doc = stdout_json(&list);
    let colouring = doc["colourings"][0].clone();
    let path = dir.join("ring8_colouring.json");
    std::fs::write(&path, colouring.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tmp_dir("determinism");
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            let out = symflex(&["symnac", "list", &fixture("k44_collinear_c2.json")]);
            assert_eq!(out.status.code(), Some(0));
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);

    let builds: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            let out = symflex(&[
                "motion",
                "build",
                &fixture("triangle_ring12_c4.json"),
                &fixture("triangle_ring12_c4_colouring.json"),
                "--frames",
                "12",
                "--seed",
                "99",
            ]);
            assert_eq!(out.status.code(), Some(0));
            out.stdout
        })
        .collect();
    assert_eq!(builds[0], builds[1]);

    // --out produces exactly the stdout bytes
    let to_file = dir.join("list.json");
    let stdout_run = symflex(&["closure", &fixture("cycle_c6.json")]);
    let file_run = symflex(&[
        "closure",
        &fixture("cycle_c6.json"),
        "--out",
        to_file.to_str().unwrap(),
    ]);
    assert_eq!(file_run.status.code(), Some(0));
    assert!(file_run.stdout.is_empty());
    assert_eq!(std::fs::read(&to_file).unwrap(), stdout_run.stdout);
}

#[test]
fn serialised_outputs_are_parse_fixpoints() {
    // parsing an emitted document and re-serialising it reproduces the
    // bytes, for every document kind the tool writes
    let dir = tmp_dir("roundtrip");
    let frames = dir.join("frames.json");
    symflex(&[
        "motion",
        "build",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
        "--frames",
        "6",
        "--out",
        frames.to_str().unwrap(),
    ]);
    let motion_text = std::fs::read_to_string(&frames).unwrap();
    let motion: symflex_core::json::MotionDoc = serde_json::from_str(&motion_text).unwrap();
    assert_eq!(symflex_core::json::to_canonical_string(&motion), motion_text);

    let closure = symflex(&["closure", &fixture("ring8_hub_c2.json")]);
    let closure_text = String::from_utf8(closure.stdout).unwrap();
    let doc: symflex_core::json::ClosureDoc = serde_json::from_str(&closure_text).unwrap();
    assert_eq!(symflex_core::json::to_canonical_string(&doc), closure_text);

    let graph_text = std::fs::read_to_string(fixture_path("k24_c2.json")).unwrap();
    let doc: symflex_core::json::GraphDoc = serde_json::from_str(&graph_text).unwrap();
    assert_eq!(symflex_core::json::to_canonical_string(&doc), graph_text);

    let colouring_text =
        std::fs::read_to_string(fixture_path("triangle_ring12_c4_colouring.json")).unwrap();
    let doc: symflex_core::json::ColouringDoc = serde_json::from_str(&colouring_text).unwrap();
    assert_eq!(symflex_core::json::to_canonical_string(&doc), colouring_text);
}

#[test]
fn thread_cap_does_not_change_results() {
    let free = symflex(&["symnac", "list", &fixture("ring8_hub_c2.json")]);
    let capped = Command::new(env!("CARGO_BIN_EXE_symflex"))
        .args(["symnac", "list", &fixture("ring8_hub_c2.json")])
        .env("SYMFLEX_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(capped.status.code(), Some(0));
    assert_eq!(free.stdout, capped.stdout);
}

#[test]
fn seeded_and_unseeded_builds_differ_but_reproduce() {
    let base = symflex(&[
        "motion",
        "build",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
        "--frames",
        "4",
    ]);
    let seeded = symflex(&[
        "motion",
        "build",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
        "--frames",
        "4",
        "--seed",
        "5",
    ]);
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(seeded.status.code(), Some(0));
    assert_ne!(base.stdout, seeded.stdout);
    let base2 = symflex(&[
        "motion",
        "build",
        &fixture("triangle_ring12_c4.json"),
        &fixture("triangle_ring12_c4_colouring.json"),
        "--frames",
        "4",
    ]);
    assert_eq!(base.stdout, base2.stdout);
}
