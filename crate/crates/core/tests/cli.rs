use std::fs;
use std::process::Command;

use archifold::cli::{run, EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn archifold(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("archifold").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn count(text: &str, prefix: &str) -> usize {
    text.lines().filter(|l| l.starts_with(prefix)).count()
}

#[test]
fn generate_left_snub_cube_obj() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sc.obj");
    let r = archifold(&[
        "generate",
        "snub-cube",
        "--chirality",
        "left",
        "--format",
        "obj",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let obj = fs::read_to_string(&path).unwrap();
    assert_eq!(count(&obj, "v "), 24);
    assert_eq!(count(&obj, "f "), 38);
    assert!(obj.contains("# chirality left"));
}

#[test]
fn generate_cube_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.json");
    let r = archifold(&[
        "generate",
        "cube",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(doc["faces"].as_array().unwrap().len(), 6);
    let faces = doc["faces"].as_array().unwrap();
    assert!(faces
        .iter()
        .flat_map(|f| f.as_array().unwrap())
        .all(|i| i.as_u64().unwrap() < 8));
}

#[test]
fn json_metadata_matches_metrics() {
    let r = archifold(&[
        "generate",
        "snub-cube",
        "--chirality",
        "right",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(doc["solid"], "snub-cube");
    assert_eq!(doc["parent"], "cube");
    assert_eq!(doc["chirality"], "right");
    let m = &doc["metrics"];
    let ratio = m["circumdiameter"].as_f64().unwrap() / m["edge_length"].as_f64().unwrap();
    assert!((ratio - 2.687_426_747_489).abs() < 1e-9, "{ratio}");
    assert!(m["certificates"]["circumsphere sextic"].as_f64().unwrap() < 1e-6);
}

#[test]
fn snub_without_chirality_is_a_usage_error() {
    let r = archifold(&["generate", "snub-dodecahedron"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("chirality"), "{}", r.err);
}

#[test]
fn unknown_solid_is_a_usage_error() {
    let r = archifold(&["generate", "great-stellated-thing"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(!r.err.is_empty());
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("cube.obj");
    let r = archifold(&["generate", "cube", "-o", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_IO);
}

#[test]
fn output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("sd{i}.obj")))
        .collect();
    for p in &paths {
        let r = archifold(&[
            "generate",
            "snub-dodecahedron",
            "--chirality",
            "right",
            "-o",
            p.to_str().unwrap(),
        ]);
        assert_eq!(r.code, EXIT_OK);
    }
    assert_eq!(fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
}

#[test]
fn verify_appendix_passes() {
    let r = archifold(&["verify", "appendix"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("0 failed"), "{}", r.out);
}

#[test]
fn verify_folds_runs_all_three_traces() {
    let r = archifold(&["verify", "folds"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    for name in ["Y -> A1", "g1..g5 concurrent", "2b - (1 + c^2)"] {
        assert!(r.out.contains(name), "missing {name}");
    }
}

#[test]
fn verify_snub_cube_reports_parameters() {
    let r = archifold(&["verify", "snub-cube", "--chirality", "left"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    assert!(r.out.contains("0.3522011287"), "{}", r.out);
}

#[test]
fn impossible_tolerance_fails_verification() {
    let r = archifold(&["verify", "truncated-cube", "--tol", "1e-300"]);
    assert_eq!(r.code, EXIT_FAILED, "{}", r.out);
}

#[test]
fn roots_print_ten_decimals() {
    let r = archifold(&["roots", "snub-cube"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(
        r.out.starts_with("x = 0.3522011287, y = 0.2281554937"),
        "{}",
        r.out
    );
    let r = archifold(&["roots", "snub-dodecahedron"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("x = 0.39446053"), "{}", r.out);
}

#[test]
fn list_names_every_solid() {
    let r = archifold(&["--list"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.lines().count(), 18);
    assert!(r.out.lines().any(|l| l == "truncated-cuboctahedron"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_archifold");
    let ok = Command::new(bin)
        .args(["verify", "appendix"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin)
        .args(["generate", "snub-cube"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn zero_tolerance_is_a_usage_error() {
    let r = archifold(&["verify", "cube", "--tol", "0"]);
    assert_eq!(r.code, EXIT_USAGE);
}
