// The Erdős g-function over Z and Z[i]: exact tails, counts of ideals with
// large g, and the divisor and banded sums.

use nfvaaler::gfun::{banded_g_sum, count_large_g_table, divisor_g_sum, g_value};
use num_traits::ToPrimitive;
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let q = build_field(&NumberFieldSpec::new(vec![0, 1])).unwrap();
    let table = PrimeTable::new(&q);

    for k in [2, 6, 30, 210, 2310] {
        let r = g_value(&table.integer_ideal(k).unwrap());
        println!("g(({k})) = {}, tail sum {}", r.g, r.tail_sum);
    }

    let twelve = table.integer_ideal(12).unwrap();
    println!("divisor sum for (12), v = 1: {}", divisor_g_sum(&twelve, 1));
    let band = banded_g_sum(&table, 1, 10, 100, 100_000).unwrap();
    println!("band T = 1, 10 < Nm < 100: {:.9}", band.to_f64().unwrap());

    let counts = count_large_g_table(&table, 10_000, 5);
    println!("#{{Nm <= 10^4, g >= v}} for v = 1..5: {counts:?}");

    let gi = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let ti = PrimeTable::new(&gi);
    let n = ti.integer_ideal(3).unwrap().mul(&ti.integer_ideal(6).unwrap());
    let r = g_value(&n);
    println!("Z[i]: g({n}) = {}, tail {}", r.g, r.tail_sum);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
