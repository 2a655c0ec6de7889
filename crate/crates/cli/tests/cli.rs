use std::path::PathBuf;
use std::process::{Command, Output};

use motkit_core::model;

fn motkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motkit")).args(args).env_remove("MOTKIT_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("motkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn validate_conic_preset() {
    let o = motkit(&["validate", "preset:conic"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("space(F, C×C) = 2/4"));
}

#[test]
fn decompose_p3_lists_four_tate_summands() {
    let o = motkit(&["decompose", "preset:P3", "--summand", "P3", "--field", "F"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for k in 0..4 {
        assert!(out.contains(&format!("≅ 𝔽[{k}]")), "{out}");
    }
}

#[test]
fn theorem_on_two_point_model_exits_2() {
    let o = motkit(&["theorem", "preset:two-point", "--config", "preset:conic-theorem"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("multiple top classes"));
}

#[test]
fn negative_runs_exit_2() {
    let o = motkit(&["lemma3", "preset:adversarial", "--config", "preset:adversarial"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("hypothesis-1 violated"));
    let o = motkit(&["lemma3", "preset:conic", "--config", "preset:zero-h"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("lower-ness violated"));
}

#[test]
fn classify_point_class() {
    let o = motkit(&["classify", "preset:P1", "--inner", "P1:e0×e1", "--outer-ambient", "P1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("upper: "));
}

#[test]
fn machine_output_is_one_stable_document() {
    let args = ["theorem", "preset:conic", "--config", "preset:conic-theorem", "--output", "machine", "--seed", "5"];
    let a = motkit(&args);
    let b = motkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["outcome"]["task"], "theorem");
    assert!(v["transcript"]["entries"].as_array().unwrap().len() > 10);
}

#[test]
fn seed_comes_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_motkit"))
        .args(["validate", "preset:conic", "--output", "machine"])
        .env("MOTKIT_SEED", "42")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 42);
}

#[test]
fn model_and_config_files() {
    let m = scratch("synth1.json", &model::preset_synth1().to_json());
    let c = scratch("synth1-lemma3.json", &model::run_synth1_lemma3().to_json());
    let o = motkit(&["lemma3", m.to_str().unwrap(), "--config", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("n₁ = 2"));
}

#[test]
fn malformed_model_reports_position() {
    let m = scratch("bad.json", "{\n  \"format_version\": \"1.0\",\n  \"p\": 2,\n  \"varieties\": 7\n}");
    let o = motkit(&["validate", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4") && err.contains("varieties"), "{err}");
}
