#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use orthokit_harness::scene::{answers_json, evaluate, parse_scene, render_svg};
use orthokit_harness::{run_suite, Backend, RunConfig};

/// Scenes whose SVG output is pinned.
pub const SVG_SCENES: [&str; 5] = ["01_two_centers", "06_gamma", "15_focus", "22_empty", "23_circumcircle"];

/// Suites whose JSON report is pinned, with (trials, seed, backend).
pub const REPORTS: [(&str, u64, u64, Backend); 2] = [
    ("flies-altitudes", 20, 7, Backend::Exact),
    ("sondat", 20, 1, Backend::Float { tol: 1e-9 }),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests").join("golden")
}

/// The scene corpus as (file stem, text), sorted by name.
pub fn corpus() -> Vec<(String, String)> {
    let dir = manifest_dir().join("scenes");
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .expect("scene directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "scene"))
        .map(|p| {
            let stem = p.file_stem().unwrap().to_string_lossy().into_owned();
            (stem, fs::read_to_string(&p).expect("scene text"))
        })
        .collect();
    out.sort();
    out
}

pub fn scene_text(stem: &str) -> String {
    fs::read_to_string(manifest_dir().join("scenes").join(format!("{stem}.scene"))).expect("scene text")
}

pub fn render(stem: &str) -> String {
    render_svg(&parse_scene(&scene_text(stem)).expect("parses")).expect("renders")
}

/// Every pinned artifact as (file name, contents), computed afresh.
pub fn golden_outputs() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for stem in SVG_SCENES {
        out.push((format!("{stem}.svg"), render(stem)));
    }
    for (stem, text) in corpus() {
        let doc = parse_scene(&text).expect("parses");
        let answers = evaluate(&doc).expect("evaluates");
        out.push((format!("{stem}.answers.json"), answers_json(&answers)));
    }
    for (id, trials, seed, backend) in REPORTS {
        let config = RunConfig {
            trials: Some(trials),
            seed,
            backend,
            timing: false,
            ..RunConfig::default()
        };
        let report = run_suite(id, &config).expect("registered suite");
        out.push((format!("{id}.{}.json", backend.name()), report.to_json()));
    }
    out
}

/// Names of pinned artifacts that differ from the files in `dir`.
pub fn golden_mismatches(dir: &Path) -> Vec<String> {
    golden_outputs()
        .into_iter()
        .filter(|(name, content)| fs::read_to_string(dir.join(name)).ok().as_deref() != Some(content.as_str()))
        .map(|(name, _)| name)
        .collect()
}
