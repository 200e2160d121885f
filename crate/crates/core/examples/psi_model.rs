// Approximation functions ψ_ρ = c·Nm^-e, the balanced check and the
// overlap geometry of a pair of ideals.

use nfvaaler::psi::{balanced_check, divergence_partial_sum, pair_geometry, vaaler_condition_check, PsiRule, PsiSystem};
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let k = build_field(&NumberFieldSpec::new(vec![-2, 0, 1])).unwrap();
    let table = PrimeTable::new(&k);
    let rule = |embedding, c, e| PsiRule { embedding, c, e };

    let even = PsiSystem::new(k.signature(), vec![rule(0, 0.5, 1.0), rule(1, 0.5, 1.0)]).unwrap();
    let lopsided = PsiSystem::new(k.signature(), vec![rule(0, 0.5, 0.5), rule(1, 0.5, 1.5)]).unwrap();
    for (name, sys) in [("even", &even), ("lopsided", &lopsided)] {
        let b = balanced_check(sys, &table, 200);
        let v = vaaler_condition_check(sys, &table, 200);
        println!(
            "{name}: balanced = {} (max ratio {:.3}), growth ok = {}, partial sum to 100 = {:.4}",
            b.balanced,
            b.max_ratio.unwrap_or(f64::NAN),
            v.satisfied,
            divergence_partial_sum(sys, &table, 100)
        );
    }

    let two = table.integer_ideal(2).unwrap();
    let three = table.integer_ideal(3).unwrap();
    let pg = pair_geometry(&even, &two, &three).unwrap();
    println!("(2), (3): D = {}, P = {}, tau = {}, regime {}", pg.d, pg.p, pg.tau, pg.regime);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
