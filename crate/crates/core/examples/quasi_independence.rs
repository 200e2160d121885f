// Σ λ(A_m ∩ A_n) against (Σ λ(A_n))² over Z[i] for ψ = Nm^-2 / 4.

use nfvaaler::measure::{quasi_independence_experiment, MeasureOptions};
use nfvaaler::psi::PsiSystem;
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let table = PrimeTable::new(&k);
    let sys = PsiSystem::uniform(k.signature(), 0.25, 2.0).unwrap();
    for r in [10, 20] {
        let q = quasi_independence_experiment(&k, &table, &sys, r, &MeasureOptions::default()).unwrap();
        println!(
            "R = {r}: {} pairs, singles {:.6}, pairs {:.6}, ratio {:.6}, worst pair ratio {:.4}",
            q.pairs.len(),
            q.single_sum,
            q.pair_sum,
            q.ratio.unwrap(),
            q.max_pair_ratio.unwrap()
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
