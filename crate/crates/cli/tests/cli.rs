use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn workspace_file(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

fn paneled(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paneled"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn demo_scene_refutes_the_star_claim() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("star.json");
    let run = paneled(&["verify-star", "--demo", "--out", out.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let report = read_json(&out);
    assert!(report["report"]["min_blocked"].as_u64().unwrap() >= 1);
    assert!(report["report"]["evaluated"].as_u64().unwrap() >= 5000);
    assert_eq!(report["manifest"]["command"], "verify-star");
    assert_eq!(report["manifest"]["config"], "builtin:default");
}

#[test]
fn control_config_yields_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("control.json");
    let cfg = workspace_file("data/control_short_arc.json");
    let run = paneled(&[
        "verify-star",
        "--config",
        cfg.to_str().unwrap(),
        "--grid-dirs",
        "200",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(2));
    let report = read_json(&out);
    assert_eq!(report["report"]["min_blocked"], 0);
    let witness = &report["report"]["witnesses"][0];
    assert_eq!(witness["blocked_count"], 0);
    assert_eq!(report["manifest"]["overrides"][0][0], "grid.dirs");
}

#[test]
fn missing_config_is_an_error() {
    let run = paneled(&["verify-star", "--config", "definitely/missing.json"]);
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("cannot read config"));
}

#[test]
fn malformed_config_reports_the_field_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let mut cfg = read_json(&workspace_file("data/control_short_arc.json"));
    cfg["grid"]["shells"] = Value::String("six".into());
    std::fs::write(&path, cfg.to_string()).unwrap();
    let run = paneled(&["verify-star", "--config", path.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(1));
    let err = String::from_utf8_lossy(&run.stderr);
    assert!(err.contains("grid.shells"), "{err}");
}

#[test]
fn invalid_scene_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("splice.json");
    let mut cfg = read_json(&workspace_file("data/control_short_arc.json"));
    cfg["eta_prime"][0] = serde_json::json!([[1, 2], [0, 1], [0, 1]]);
    std::fs::write(&path, cfg.to_string()).unwrap();
    let run = paneled(&["verify-star", "--config", path.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(1));
}

fn lk(fixture: &str) -> Value {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lk.json");
    let emb = workspace_file(&format!("data/fixtures/{fixture}"));
    let run = paneled(&["lk", "--embedding", emb.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    read_json(&out)["report"]["pairs"].clone()
}

#[test]
fn lk_fixtures() {
    let hopf = lk("hopf_triangles.json");
    assert_eq!(hopf.as_array().unwrap().len(), 1);
    assert_eq!(hopf[0]["linking_number"].as_i64().unwrap().abs(), 1);
    let apart = lk("separated_triangles.json");
    assert_eq!(apart[0]["linking_number"], 0);
    assert!(lk("k4.json").as_array().unwrap().is_empty());
}

#[test]
fn export_writes_four_groups() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("scene.obj");
    let run = paneled(&["export", "--demo", "--obj", obj.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0));
    let text = std::fs::read_to_string(&obj).unwrap();
    let mut groups: Vec<(String, usize)> = Vec::new();
    for line in text.lines() {
        if let Some(name) = line.strip_prefix("g ") {
            groups.push((name.to_string(), 0));
        } else if line.starts_with("f ") {
            groups.last_mut().unwrap().1 += 1;
        }
    }
    let names: Vec<&str> = groups.iter().map(|g| g.0.as_str()).collect();
    assert_eq!(names, ["delta", "delta_patch", "gamma_prime", "d_f"]);
    // alpha has 297 points, the panel fan is over 2n + 1 = 129 points
    assert_eq!(groups[0].1, 296);
    assert_eq!(groups[2].1, 128);
    assert_eq!(groups[3].1, 23);
}

#[test]
fn export_to_unwritable_path_fails() {
    let run = paneled(&["export", "--demo", "--obj", "/nonexistent-dir/scene.obj"]);
    assert_eq!(run.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let args = [
        "verify-star",
        "--demo",
        "--grid-shells",
        "1",
        "--grid-dirs",
        "100",
        "--full-dump",
        "--out",
        out.to_str().unwrap(),
    ];
    assert_eq!(paneled(&args).status.code(), Some(0));
    let first = std::fs::read(&out).unwrap();
    assert_eq!(paneled(&args).status.code(), Some(0));
    assert_eq!(first, std::fs::read(&out).unwrap());
}

#[test]
fn equator_on_control_finds_counter_pairs() {
    let run = paneled(&["equator", "--control", "--grid-shells", "1", "--grid-dirs", "50", "--samples", "10"]);
    assert_eq!(run.status.code(), Some(2));
    let report: Value = serde_json::from_slice(&run.stdout).unwrap();
    assert!(!report["report"]["counter_pairs"].as_array().unwrap().is_empty());
}

#[test]
fn shipped_configs_match_the_built_in_ones() {
    for (flag, file) in [(None, "data/default_scene.json"), (Some("--control"), "data/control_short_arc.json")] {
        let mut args = vec!["write-config"];
        args.extend(flag);
        let run = paneled(&args);
        assert_eq!(run.status.code(), Some(0));
        assert_eq!(
            String::from_utf8(run.stdout).unwrap(),
            std::fs::read_to_string(workspace_file(file)).unwrap(),
            "{file} is out of date; regenerate with `paneled write-config`"
        );
    }
}
