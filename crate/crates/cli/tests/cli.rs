use std::path::PathBuf;
use std::process::{Command, Output};

use defcoh::instance::{parse_instance, Instance, InstanceFile};
use serde_json::Value;

fn instance(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn defcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defcoh"))
        .args(args)
        .env_remove("DEFCOH_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let o = defcoh(&all);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

fn dims(v: &Value) -> Vec<u64> {
    v["facts"]["dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn bundled_instances_parse_and_round_trip() {
    for name in [
        "sl2.json",
        "abelian3.json",
        "aff1.json",
        "la_d10.json",
        "la_iso.json",
        "vb_sl2_std.json",
        "twovect_rand_seed7.json",
    ] {
        let text = std::fs::read_to_string(instance(name)).unwrap();
        let (file, inst) = parse_instance(&text, 6).unwrap();
        assert_eq!(InstanceFile::new(file.name.clone(), file.seed, &inst).to_json(), text, "{name}");
    }
}

#[test]
fn sl2_file_is_a_lie_algebra() {
    let (_, inst) = parse_instance(&std::fs::read_to_string(instance("sl2.json")).unwrap(), 6).unwrap();
    match inst {
        Instance::LieAlgebra(l) => {
            assert_eq!(l.dim(), 3);
            assert!(l.jacobi_defect().is_lie);
        }
        other => panic!("{}", other.kind()),
    }
}

#[test]
fn la_d10_shape() {
    let (_, inst) = parse_instance(&std::fs::read_to_string(instance("la_d10.json")).unwrap(), 6).unwrap();
    match inst {
        Instance::LaVectorSpace(l) => assert_eq!((l.core_dim(), l.side_dim(), l.rank()), (2, 2, 1)),
        other => panic!("{}", other.kind()),
    }
}

#[test]
fn sl2_def_cohomology_vanishes() {
    let (code, v) = structured(&["cohomology", &instance("sl2.json"), "--complex", "def", "--degrees", "-1..1"]);
    assert_eq!(code, 0);
    assert_eq!(dims(&v), [0, 0, 0]);
}

#[test]
fn abelian3_def_cohomology() {
    let (code, v) = structured(&["cohomology", &instance("abelian3.json"), "--complex", "def", "--degrees=-1..2"]);
    assert_eq!(code, 0);
    assert_eq!(dims(&v), [3, 9, 9, 3]);
}

#[test]
fn la_d10_three_term() {
    let (code, v) = structured(&["cohomology", &instance("la_d10.json"), "--complex", "three-term"]);
    assert_eq!(code, 0);
    assert_eq!(dims(&v), [1, 2, 1]);
}

#[test]
fn groupoid_complexes_agree_with_three_term() {
    let path = instance("la_d10.json");
    let (_, full) = structured(&["cohomology", &path, "--complex", "groupoid-full", "--degrees", "-1..1"]);
    let (_, norm) = structured(&["cohomology", &path, "--complex", "groupoid-normalized"]);
    assert_eq!(dims(&full), [1, 2, 1]);
    assert_eq!(dims(&norm), [1, 2, 1]);
}

#[test]
fn linear_and_cone_agree() {
    let path = instance("vb_sl2_std.json");
    let (_, lin) = structured(&["cohomology", &path, "--complex", "linear", "--degrees", "-1..1"]);
    let (_, cone) = structured(&["cohomology", &path, "--complex", "cone", "--degrees", "-1..1"]);
    assert_eq!(dims(&lin), dims(&cone));
}

#[test]
fn ce_with_adjoint_coefficients() {
    let (code, v) = structured(&["cohomology", &instance("sl2.json"), "--complex", "ce"]);
    assert_eq!(code, 0);
    // Adjoint coefficients: Whitehead's lemmas.
    assert_eq!(dims(&v), [0, 0, 0, 0]);
}

#[test]
fn incompatible_complex_exits_1() {
    let o = defcoh(&["cohomology", &instance("sl2.json"), "--complex", "three-term"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("incompatible"), "{}", stderr(&o));
}

#[test]
fn les_suite_passes_on_sl2_standard() {
    let (code, v) = structured(&["check", &instance("vb_sl2_std.json"), "--suite", "les"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["passed"], true);
    assert_eq!(v["tables"]["sequence"].as_array().unwrap().len(), 10);
}

#[test]
fn les_alias_matches_check() {
    let a = structured(&["les", &instance("vb_sl2_std.json")]).1;
    let b = structured(&["check", &instance("vb_sl2_std.json"), "--suite", "les"]).1;
    assert_eq!(a["tables"], b["tables"]);
    assert_eq!(a["checks"], b["checks"]);
}

#[test]
fn quasi_iso_on_invertible_partial() {
    let (code, v) = structured(&["check", &instance("la_iso.json"), "--suite", "quasi-iso"]);
    assert_eq!(code, 0);
    for row in v["tables"]["normalized inclusion"].as_array().unwrap() {
        assert_eq!(row["full"], 0);
        assert_eq!(row["normalized"], 0);
    }
}

#[test]
fn vanest_emits_sign_table() {
    let (code, v) = structured(&["vanest", &instance("twovect_rand_seed7.json")]);
    assert_eq!(code, 0);
    let signs: Vec<i64> = v["tables"]["sign table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["sign"].as_i64().unwrap())
        .collect();
    assert_eq!(signs, [1, 1, -1]);
}

#[test]
fn remaining_suites_pass() {
    for (file, suite) in [
        ("sl2.json", "mc"),
        ("vb_sl2_std.json", "mc"),
        ("vb_sl2_std.json", "split"),
        ("vb_sl2_std.json", "weights"),
        ("la_d10.json", "vanest"),
    ] {
        let o = defcoh(&["check", &instance(file), "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{file} {suite}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("PASS {suite}")));
    }
}

#[test]
fn gauge_aff1_passes() {
    let (code, v) = structured(&["gauge", &instance("aff1.json"), "--xi", "x"]);
    assert_eq!(code, 0);
    assert!(v["facts"]["max_abs_error"].as_f64().unwrap() < 1e-8);
}

#[test]
fn gauge_zero_generator_is_exact() {
    let (code, v) = structured(&["gauge", &instance("sl2.json"), "--xi", "0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["facts"]["max_abs_error"].as_f64(), Some(0.0));
}

#[test]
fn gauge_rejects_non_lie_instances() {
    let o = defcoh(&["gauge", &instance("la_d10.json"), "--xi", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validation_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"kind": "lie_algebra", "name": "bad", "dim": 2, "brackets": [[0, 0, 1, "1"]]}"#).unwrap();
    let o = defcoh(&["cohomology", path.to_str().unwrap(), "--complex", "def"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("skewness at (0,0)"), "{}", stderr(&o));
}

#[test]
fn non_jacobi_file_names_a_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nj.json");
    std::fs::write(
        &path,
        r#"{"kind": "lie_algebra", "name": "nj", "dim": 3, "brackets": [[0, 1, 0, "1"], [1, 2, 1, "1"]]}"#,
    )
    .unwrap();
    let o = defcoh(&["cohomology", path.to_str().unwrap(), "--complex", "def"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("jacobi identity fails on basis triple"), "{}", stderr(&o));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"kind\": ").unwrap();
    let o = defcoh(&["cohomology", path.to_str().unwrap(), "--complex", "def"]);
    assert_eq!(o.status.code(), Some(2));
    let missing = defcoh(&["cohomology", "/nonexistent/x.json", "--complex", "def"]);
    assert_eq!(missing.status.code(), Some(2));
    let flags = defcoh(&["cohomology", &instance("sl2.json"), "--complex", "nope"]);
    assert_eq!(flags.status.code(), Some(2));
}

#[test]
fn max_dim_override() {
    let path = instance("vb_sl2_std.json");
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_defcoh"))
            .args(["cohomology", &path, "--complex", "cone"])
            .env("DEFCOH_MAX_DIM", cap)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("4"), Some(1));
    assert_eq!(run("5"), Some(0));
}

#[test]
fn structured_reports_are_deterministic() {
    let args = ["check", &instance("vb_sl2_std.json"), "--suite", "weights", "--seed", "3"];
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(structured(&args).1), strip(structured(&args).1));
}

#[test]
fn random_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = defcoh(&["random", "--family", "la", "--seed", "1", "--dim-caps", "3", "-o", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn random_catalog_lie_validates() {
    let o = defcoh(&["random", "--family", "catalog-lie", "--seed", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let (_, inst) = parse_instance(&stdout(&o), 6).unwrap();
    match inst {
        Instance::LieAlgebra(l) => assert!(l.jacobi_defect().is_lie),
        other => panic!("{}", other.kind()),
    }
}

#[test]
fn random_vb_is_flat() {
    let o = defcoh(&["random", "--family", "vb", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    // Parsing runs the flatness check.
    let (_, inst) = parse_instance(&stdout(&o), 6).unwrap();
    assert_eq!(inst.kind(), "vb_algebra");
}

#[test]
fn random_respects_the_cap() {
    let o = defcoh(&["random", "--family", "la", "--dim-caps", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn batch_preserves_order_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (instance("sl2.json"), instance("abelian3.json"));
    let o = defcoh(&[
        "cohomology",
        &a,
        &b,
        "--complex",
        "def",
        "--report-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.find("instance: sl2").unwrap() < out.find("instance: abelian3").unwrap());
    assert!(dir.path().join("sl2.txt").exists());
    assert!(dir.path().join("abelian3.txt").exists());
}

#[test]
fn batch_exit_code_is_the_worst() {
    let o = defcoh(&["cohomology", &instance("sl2.json"), "/nonexistent.json", "--complex", "def"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("instance: sl2"));
}
