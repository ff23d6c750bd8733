use std::fs;
use std::process::Command;

use mockinj_cli::{run, RunOutput, CACHE_ENV};
use serde_json::{json, Value};

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "args {args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}

#[test]
fn sl2_char_l3_at_p2() {
    let v = ok_json(&["sl2", "char", "--p", "2", "--lam", "3"]);
    assert_eq!(v["character"]["basis"], "sl2");
    assert_eq!(v["character"]["terms"], json!([[-3, 1], [-1, 1], [1, 1], [3, 1]]));
    assert_eq!(v["dim"], 4);
}

#[test]
fn classify_torus_with_odd_components() {
    let v = ok_json(&["classify", "--g0", "torus:1", "--pi0", "3", "--p", "2"]);
    assert_eq!(v["has_proper_mock_injectives"], false);
    assert_eq!(v["linearly_reductive"], true);
    let v = ok_json(&["classify", "--g0", "A1", "--pi0", "1", "--p", "2"]);
    assert_eq!(v["has_proper_mock_injectives"], true);
    assert_eq!(v["witness"]["kind"], "non_torus_identity_component");
}

#[test]
fn kuj_dim_and_fiber() {
    let v = ok_json(&["kuj-dim", "--type", "A2", "--weight", "1,1"]);
    assert_eq!(v["dim"], 2);
    let v = ok_json(&["kuj-dim", "--type", "G2", "--J", "2", "--weight", "3,2"]);
    assert_eq!(v["dim"], 3);
    let v = ok_json(&["kuj-dim", "--type", "B2", "--weight", "-1,2"]);
    assert_eq!(v["dim"], 0);
    let v = ok_json(&["kuj-fiber", "--type", "A2", "--J", "1", "--chi", "2=1"]);
    assert_eq!(v["total_dim"], 2);
    assert_eq!(v["J"], json!([1]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn rootsys_lists_positive_roots() {
    let v = ok_json(&["rootsys", "--type", "G2"]);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["highest_root"], json!([3, 2]));
    assert_eq!(v["cartan_matrix"], json!([[2, -3], [-1, 2]]));
}

#[test]
fn sl2_tensor_decompose_hom() {
    let v = ok_json(&["sl2", "tensor", "--p", "2", "--mu", "1", "--nu", "1"]);
    assert_eq!(v["factors"]["multiplicities"], json!({"0": 2, "2": 1}));
    let v = ok_json(&["sl2", "decompose", "--p", "3", "--char", "2:1,0:1,-2:1"]);
    assert_eq!(v["multiplicities"], json!({"2": 1}));
    let v = ok_json(&["sl2", "hom", "--p", "2", "--mu", "0", "--lam", "0", "--char", "0:1"]);
    assert_eq!(v["dim"], 1);
}

#[test]
fn remark_and_socle_sweeps() {
    let v = ok_json(&["sl2", "remark-sweep", "--max", "64"]);
    let mus: Vec<u64> = v["hits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["mu"].as_u64().unwrap())
        .collect();
    assert_eq!(mus, vec![1, 3, 7, 15, 31, 63]);
    let v = ok_json(&["sl2", "socle-wt", "--max", "64"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["socle"], json!([0]));
}

#[test]
fn usage_errors_exit_2() {
    let empty: [&str; 0] = [];
    for args in [
        &empty[..],
        &["frobnicate"],
        &["kuj-dim", "--type", "A2", "--weight", "1,x"],
        &["kuj-dim", "--type", "A2", "--weight", "1,1,1"],
        &["kuj-dim", "--type", "Q3", "--weight", "1,1,1"],
        &["kuj-dim", "--type", "E9", "--weight", "1"],
        &["kuj-fiber", "--type", "A2", "--J", "1", "--chi", "1=1"],
        &["kuj-fiber", "--type", "A2", "--J", "4"],
        &["sl2", "char", "--p", "4", "--lam", "3"],
        &["sl2", "socle-wt", "--max", "8", "--p", "3"],
        &["classify", "--g0", "torus:1", "--pi0", "0", "--p", "2"],
        &["reproduce", "--zero-weight-max", "100000000000"],
    ] {
        let out = run(args);
        assert_eq!(out.code, 2, "args {args:?}: {}", out.stdout);
        assert!(out.stdout.is_empty(), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?}");
    }
}

#[test]
fn non_module_character_exits_1() {
    let out = run(&["sl2", "hom", "--p", "2", "--mu", "0", "--lam", "0", "--char", "0:-1"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
    let out = run(&["sl2", "decompose", "--p", "2", "--char", "1:1"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("kuj-fiber"));
}

#[test]
fn text_format_renders() {
    let out = run(&["--format", "text", "kuj-fiber", "--type", "G2", "--J", "1", "--chi", "2=2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("total dim 11"));
    let out = run(&["--format", "text", "sl2", "char", "--p", "2", "--lam", "3"]);
    assert!(out.stdout.starts_with("ch L(3) = q^3 + q + q^-1 + q^-3"));
}

#[test]
fn output_is_deterministic_across_jobs() {
    let base = ["sl2", "remark-sweep", "--max", "2048"];
    let one = run(&[&["--jobs", "1"][..], &base].concat());
    let many = run(&[&["--jobs", "8"][..], &base].concat());
    assert_eq!(one, many);
    let fib = ["kuj-fiber", "--type", "B3", "--J", "2", "--chi", "1=2,3=2"];
    assert_eq!(
        run(&[&["--jobs", "1"][..], &fib].concat()),
        run(&[&["--jobs", "4"][..], &fib].concat())
    );
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let p = path.to_str().unwrap();
    let args = ["kuj-fiber", "--type", "G2", "--chi", "1=3,2=2"];
    let plain = run(&args);
    let cold = run(&[&["--cache", p][..], &args].concat());
    assert!(path.exists());
    let warm = run(&[&["--cache", p][..], &args].concat());
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);

    fs::write(&path, "{not json").unwrap();
    let corrupted = run(&[&["--cache", p][..], &args].concat());
    assert_eq!(corrupted.code, 0);
    assert_eq!(corrupted.stdout, plain.stdout);
    assert!(corrupted.stderr.contains("warning"));
    let healed = fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<Value>(&healed).is_ok());
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env-cache.json");
    let out = Command::new(env!("CARGO_BIN_EXE_mockinj"))
        .args(["kuj-dim", "--type", "A2", "--weight", "2,2"])
        .env(CACHE_ENV, &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    assert!(path.exists());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_mockinj");
    let st = Command::new(bin).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    let st = Command::new(bin)
        .args(["sl2", "decompose", "--p", "2", "--char", "1:1"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(1));
}

#[test]
fn reproduce_small_limits() {
    let out: RunOutput = run(&[
        "reproduce",
        "--zero-weight-max",
        "64",
        "--socle-max",
        "64",
        "--remark-max",
        "256",
        "--fiber-height",
        "2",
        "--partition-box",
        "3",
        "--random-characters",
        "20",
        "--tensor-max",
        "16",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 9);
    assert!(claims.iter().all(|c| c["passed"] == true));
}
