// Selberg weights for n = (6) over Z, and the sieve bound against the
// true count of integers coprime to 6.

use nfvaaler::selberg::{build_sieve, coprime_count_exact, sieve_upper_bound, sigma1};
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let k = build_field(&NumberFieldSpec::new(vec![0, 1])).unwrap();
    let table = PrimeTable::new(&k);
    let n = table.integer_ideal(6).unwrap();

    for x in [100, 10_000] {
        let ctx = build_sieve(k.degree(), &n, x).unwrap();
        println!("X = {x}: P = {}, G = {}", ctx.p, ctx.g);
        for (d, l) in &ctx.weights {
            println!("  lambda_{d} = {l}");
        }
        let ub = sieve_upper_bound(&table, &ctx, 100_000).unwrap();
        let exact = coprime_count_exact(&table, &n, x, 100_000).unwrap();
        println!("  sigma1 = {}, upper bound {ub}, exact {exact}", sigma1(&ctx));
        assert!(ctx.weights_bounded());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
