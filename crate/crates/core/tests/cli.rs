use std::path::PathBuf;
use std::process::Command;

use nfvaaler::cli::run;

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("nfvaaler").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn field_report_is_json_for_gaussian_config() {
    let (code, out, _) = call(&["field", "--config", &config("q_i.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["n"].as_i64(), v["s"].as_i64(), v["t"].as_i64(), v["ell"].as_i64()), (Some(2), Some(0), Some(1), Some(0)));
}

#[test]
fn sieve_prints_sigma1() {
    let (code, out, _) = call(&["sieve", "--modulus-norm", "6", "--X", "10000", "--config", &config("q.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("d,Nm_d,lambda\n"));
    assert!(out.lines().any(|l| l == "sigma1 = 1/3"));
}

#[test]
fn overlap_of_two_and_three() {
    let (code, out, _) = call(&["overlap", "--m-norm", "2", "--n-norm", "3", "--config", &config("q.json")]);
    assert_eq!(code, 0);
    let mut rd = csv::Reader::from_reader(out.as_bytes());
    let head = rd.headers().unwrap().clone();
    let row = rd.records().next().unwrap().unwrap();
    let col = |name: &str| row.get(head.iter().position(|h| h == name).unwrap()).unwrap().to_string();
    assert_eq!(col("lambda_mn"), "0");
    assert_eq!(col("regime"), "zero-or-disjoint");
}

#[test]
fn exit_codes() {
    let q = config("q.json");
    // configuration problems
    assert_eq!(call(&["ideals", "--max-norm", "10"]).0, 2);
    let (code, _, err) = call(&["ideals", "--max-norm", "10", "--config", &q, "--set", "colour=3"]);
    assert_eq!(code, 2);
    assert!(err.contains("colour"));
    assert_eq!(call(&["ideals", "--max-norm", "10", "--config", "/nonexistent.json"]).0, 2);
    assert_eq!(call(&["ideals", "--max-norm", "10", "--config", &q, "--set", "poly=[1,0,-1]"]).0, 2);
    assert_eq!(call(&["measure", "--norm", "3", "--config", &q, "--set", "psi=[]"]).0, 2);
    // caps
    assert_eq!(call(&["ideals", "--max-norm", "1000000", "--config", &q]).0, 3);
    assert_eq!(call(&["gfun", "band", "--T", "1", "--X", "10", "--Y", "100", "--config", &q, "--set", "enumeration_cap=50"]).0, 3);
    // computation errors
    let (code, _, err) = call(&["overlap", "--m-norm", "5", "--n-norm", "5", "--config", &q]);
    assert_eq!(code, 1);
    assert!(err.contains("(5)"), "{err}");
    // unknown ideal
    let (code, _, err) = call(&["measure", "--norm", "3", "--config", &config("q_i.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("norm 3"));
}

#[test]
fn monte_carlo_output_is_reproducible_and_worker_independent() {
    let c = config("q_sqrt2.json");
    let base = ["experiment", "--R", "12", "--config", c.as_str(), "--set", "mc_samples=20000"];
    let one: Vec<&str> = base.iter().copied().chain(["--workers", "1"]).collect();
    let four: Vec<&str> = base.iter().copied().chain(["--workers", "4"]).collect();
    let a = call(&one);
    let b = call(&four);
    let c2 = call(&four);
    assert_eq!(a.0, 0, "{}", a.2);
    assert!(a.1.contains("monte_carlo"));
    assert_eq!(a.1, b.1);
    assert_eq!(b.1, c2.1);
    let other_seed: Vec<&str> = one.iter().copied().chain(["--set", "seed=9"]).collect();
    assert_ne!(call(&other_seed).1, a.1);
}

#[test]
fn warm_and_cold_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("primes.cache");
    let set = format!("cache_path={}", cache.display());
    let args = ["primes", "--max-norm", "500", "--config", &config("q_i.json"), "--set", "output=csv", "--set", &set];
    let cold = call(&args);
    assert!(cache.exists());
    let warm = call(&args);
    let none = call(&args[..7]);
    assert_eq!(cold.0, 0);
    assert_eq!(cold.1, warm.1);
    assert_eq!(cold.1, none.1);
}

#[test]
fn cache_env_var_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.cache");
    let out = Command::new(env!("CARGO_BIN_EXE_nfvaaler"))
        .args(["primes", "--max-norm", "50", "--config", &config("q_sqrt2.json")])
        .env("NFVAALER_CACHE", &cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(cache.exists());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("norm,index,ideal,p,e,f\n"));
}

#[test]
fn binary_exit_status_matches() {
    let st = Command::new(env!("CARGO_BIN_EXE_nfvaaler")).args(["ideals", "--max-norm", "5"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}
