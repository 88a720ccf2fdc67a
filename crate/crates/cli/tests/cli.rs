use std::path::Path;
use std::process::{Command, Output};

use cubetwist_cli::cache::read_cache;
use cubetwist_cli::records::{
    read_csv, read_json, ApRecord, GrowthReport, HomomorphismRecord, LValueRecord, PointRecord,
    ScanRecord, TPolyRecord, ZkRecord,
};

fn cubetwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubetwist"))
        .args(args)
        .env_remove("CUBETWIST_CACHE")
        .env_remove("CUBETWIST_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn cubic_symbol_example() {
    let o = cubetwist(&["symbol", "cubic", "--a", "2", "--b", "1+3w"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("exponent: 2"), "{}", stdout(&o));
    assert!(stdout(&o).contains("value: w^2"));
}

#[test]
fn quadratic_symbol_accepts_negative_literals() {
    let o = cubetwist(&["symbol", "quadratic", "--a", "-1", "--b", "3", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["a"].as_str(), v["exponent"].as_u64()), (Some("-1"), Some(0)));
}

#[test]
fn non_cubefree_d_is_a_domain_error() {
    let o = cubetwist(&["lvalue", "--D", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("D must be cube-free"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["lvalue", "--D", "7", "--bogus"][..],
        &["frobnicate"],
        &["scan", "--xmax", "10", "--class", "1"],
        &["kubota", "check-hom", "--n", "4"],
        &["tpoly", "--m", "1", "--n", "1", "--w", "x,y"],
    ] {
        let o = cubetwist(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).contains("Usage"), "{args:?}");
    }
}

#[test]
fn dual_method_ap_table() {
    let o = cubetwist(&["ap", "--D", "1", "--pmax", "7", "--method", "both"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "7,-1,-1,true"), "{text}");
    let rows: Vec<ApRecord> = read_csv(text.as_bytes()).unwrap();
    assert!(rows.iter().all(|r| r.matches == Some(true)));

    let o = cubetwist(&["ap", "--D", "2", "--pmax", "50"]);
    let rows: Vec<ApRecord> = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r.a_p_check.is_none()));
}

#[test]
fn points_round_trip() {
    let o = cubetwist(&["points", "--D", "6", "--height", "30"]);
    let rows: Vec<PointRecord> = read_csv(o.stdout.as_slice()).unwrap();
    assert!(rows.contains(&PointRecord {
        x: "17/21".into(),
        y: "37/21".into()
    }));
    let o = cubetwist(&["points", "--D", "3", "--height", "100"]);
    assert_eq!(stdout(&o), "");
}

#[test]
fn lvalue_json_fields() {
    let o = cubetwist(&["lvalue", "--D", "7", "--json"]);
    let r: LValueRecord = read_json(o.stdout.as_slice()).unwrap();
    assert_eq!((r.d, r.sign.as_str(), r.vanished), (7, "-1", true));
    let o = cubetwist(&["lvalue", "--D", "-7", "--json"]);
    let s: LValueRecord = read_json(o.stdout.as_slice()).unwrap();
    assert_eq!((s.value, s.conductor), (r.value, r.conductor));
}

#[test]
fn kubota_commands() {
    let o = cubetwist(&["kubota", "check-hom", "--n", "2", "--samples", "100", "--seed", "5"]);
    let r: HomomorphismRecord = read_json(o.stdout.as_slice()).unwrap();
    assert_eq!((r.passed, r.samples, r.seed), (100, 100, 5));

    let o = cubetwist(&["kubota", "gl3", "--matrix", "1,0,0,0,1,0,0,0,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("exponent: 0"));

    let o = cubetwist(&["kubota", "gl2", "--matrix", "1,2,0,1"]);
    assert_eq!(o.status.code(), Some(1), "(1, 2; 0, 1) is not in the subgroup");
}

#[test]
fn tpoly_json() {
    let o = cubetwist(&["tpoly", "--m", "1+3w", "--n", "2", "--w", "1,0", "--alpha-max", "0"]);
    let t: TPolyRecord = read_json(o.stdout.as_slice()).unwrap();
    assert_eq!((t.value_re, t.value_im), (13.0, 0.0));
    assert_eq!(t.terms.len(), 3);
}

#[test]
fn scan_cache_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.csv");
    let out = dir.path().join("scan.csv");
    let args = |out: &Path| {
        vec![
            "scan".to_string(),
            "--xmax".into(),
            "60".into(),
            "--cache".into(),
            cache.display().to_string(),
            "--out".into(),
            out.display().to_string(),
        ]
    };
    let run = |out: &Path| {
        let a = args(out);
        let o = cubetwist(&a.iter().map(String::as_str).collect::<Vec<_>>());
        assert!(o.status.success(), "{}", stderr(&o));
        std::fs::read(out).unwrap()
    };
    let first = run(&out);
    let cached_rows = read_cache(&cache).unwrap();
    assert_eq!(cached_rows.len(), 51);
    let second = run(&dir.path().join("again.csv"));
    assert_eq!(first, second);
    assert_eq!(read_cache(&cache).unwrap().len(), 51, "cache is not rewritten");

    let rows: Vec<ScanRecord> = read_csv(first.as_slice()).unwrap();
    assert_eq!(rows.len(), 51);
    assert!(rows.windows(2).all(|w| w[0].d < w[1].d));
    for (r, c) in rows.iter().zip(&cached_rows) {
        assert_eq!((r.d, &r.sign, r.conductor), (c.d, &c.sign, c.conductor));
        assert!((r.value - c.value).abs() <= 1e-11 * c.value.abs().max(1.0));
    }

    // A different cutoff does not reuse the cached rows; it appends new ones.
    let o = cubetwist(&["lvalue", "--D", "5", "--cutoff-mult", "30", "--cache", cache.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(read_cache(&cache).unwrap().len(), 52);
}

#[test]
fn recompute_appends_and_matches() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.csv");
    let c = cache.to_str().unwrap();
    let a = cubetwist(&["scan", "--xmax", "20", "--cache", c, "--threads", "2"]);
    let b = cubetwist(&["scan", "--xmax", "20", "--cache", c, "--recompute", "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(read_cache(&cache).unwrap().len(), 2 * 18);
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_cubetwist"))
        .args(["lvalue", "--D", "11"])
        .env("CUBETWIST_CACHE", &cache)
        .env("CUBETWIST_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(read_cache(&cache).unwrap()[0].d, 11);
}

#[test]
fn scan_json_mirrors_csv() {
    let csv = cubetwist(&["scan", "--xmax", "30", "--class", "2", "--mod", "5"]);
    let json = cubetwist(&["scan", "--xmax", "30", "--class", "2", "--mod", "5", "--format", "json"]);
    let a: Vec<ScanRecord> = read_csv(csv.stdout.as_slice()).unwrap();
    let b: Vec<ScanRecord> = read_json(json.stdout.as_slice()).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.d % 5 == 2));
    let bad = cubetwist(&["scan", "--xmax", "30", "--class", "2", "--mod", "3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn statistics_commands() {
    let o = cubetwist(&["stats", "zk", "--xmax", "200"]);
    let rows: Vec<ZkRecord> = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(rows.iter().map(|r| r.x).collect::<Vec<_>>(), vec![100, 200]);
    assert!(rows.iter().all(|r| r.undetermined == 0 && r.fraction > 0.0 && r.fraction < 0.5));
    assert_eq!(cubetwist(&["stats", "zk", "--xmax", "50"]).status.code(), Some(1));

    let o = cubetwist(&["stats", "growth", "--xmax", "400", "--format", "json"]);
    let g: GrowthReport = read_json(o.stdout.as_slice()).unwrap();
    assert!(g.fit.exponent > 0.8 && g.fit.exponent < 1.2, "{g:?}");

    let o = cubetwist(&["stats", "tail", "--k", "24", "--w", "1", "--bound", "100"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cubetwist(&["stats", "gv", "--xmax", "50"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 2);
}
