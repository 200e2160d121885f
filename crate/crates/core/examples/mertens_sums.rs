// The three Mertens sums and the ideal-count residue over Q and Q(i).

use nfvaaler::analytic::{ideal_count_residue, mertens_log_sum, mertens_product, mertens_recip_sum};
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    for (name, poly) in [("Q", vec![0, 1]), ("Q(i)", vec![1, 0, 1])] {
        let k = build_field(&NumberFieldSpec::new(poly)).unwrap();
        let table = PrimeTable::new(&k);
        let x = 10_000;
        let log_sum = mertens_log_sum(&table, x).unwrap();
        let recip = mertens_recip_sum(&table, x).unwrap();
        let prod = mertens_product(&table, x).unwrap();
        let (count, alpha) = ideal_count_residue(&table, x).unwrap();
        println!("{name} at X = {x}");
        println!("  sum log Nm p / Nm p = {:.6} (log X = {:.6})", log_sum.value, log_sum.model);
        println!("  sum 1/Nm p - loglog X = {:.6}", recip.estimate.unwrap());
        println!("  prod (1 - 1/Nm p)^-1 / (e^gamma log X) = {:.6}", prod.estimate.unwrap());
        println!("  #ideals = {count}, residue estimate {alpha:.6}");
    }
    println!("pi/4 = {:.6}", std::f64::consts::FRAC_PI_4);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
