// Prime factorizations persisted to a cache file, then reloaded.

use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q_i.cache");
    let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();

    let cold = PrimeTable::with_cache(&k, &path).unwrap();
    let first: Vec<String> = cold.primes_up_to(100).iter().map(|p| p.to_string()).collect();
    let lines = std::fs::read_to_string(&path).unwrap().lines().count();
    println!("cold run: {} primes of norm <= 100, {lines} cache lines", first.len());

    let warm = PrimeTable::with_cache(&k, &path).unwrap();
    let second: Vec<String> = warm.primes_up_to(100).iter().map(|p| p.to_string()).collect();
    assert_eq!(first, second);
    println!("warm run agrees: {}", first[..6].join(" "));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
