// Measures of the approximation sets A_n: exact over Q and Q(i), Monte
// Carlo elsewhere, and a pair overlap report.

use nfvaaler::measure::{build_approx_set, measure_of, overlap_report, MeasureOptions};
use nfvaaler::psi::PsiSystem;
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let opts = MeasureOptions { samples: 20_000, ..MeasureOptions::default() };

    let q = build_field(&NumberFieldSpec::new(vec![0, 1])).unwrap();
    let tq = PrimeTable::new(&q);
    let sys = PsiSystem::uniform(q.signature(), 0.25, 2.0).unwrap();
    let five = tq.integer_ideal(5).unwrap();
    let set = build_approx_set(&q, &tq, &sys, &five).unwrap();
    let m = measure_of(&q, &[&set], &opts).unwrap();
    println!("Q, n = (5): {} boxes, lambda = {} ({})", set.boxes.len(), m.value, m.method);

    let gi = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let ti = PrimeTable::new(&gi);
    let sys = PsiSystem::uniform(gi.signature(), 0.25, 2.0).unwrap();
    let a = ti.integer_ideal(2).unwrap();
    let b = ti.integer_ideal(5).unwrap();
    let r = overlap_report(&gi, &ti, &sys, &a, &b, &opts).unwrap();
    println!(
        "Z[i], {} and {}: lambda_m = {:.6}, lambda_n = {:.6}, lambda_mn = {:.6}, regime {}, {}",
        r.m, r.n, r.lambda_m, r.lambda_n, r.lambda_mn, r.regime, r.method
    );

    let k = build_field(&NumberFieldSpec::new(vec![-2, 0, 1])).unwrap();
    let tk = PrimeTable::new(&k);
    let sys = PsiSystem::uniform(k.signature(), 0.5, 1.0).unwrap();
    let n = tk.integer_ideal(3).unwrap();
    let set = build_approx_set(&k, &tk, &sys, &n).unwrap();
    let m = measure_of(&k, &[&set], &opts).unwrap();
    println!("Q(sqrt 2), n = (3): lambda = {:.5} +- {:.5} ({}, seed {})", m.value, m.stderr, m.method, m.seed);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
