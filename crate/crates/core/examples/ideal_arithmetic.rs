// Prime splitting, ideal factorization, gcd/lcm and the multiplicative
// functions over Z[i].

use nfvaaler::ideal::factor_principal;
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

pub fn run_example() {
    let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let table = PrimeTable::new(&k);

    for p in [2, 3, 5, 13] {
        let above = table.primes_above(p).unwrap();
        let split: Vec<String> = above.iter().map(|q| format!("{q} (e={}, f={})", q.e, q.f)).collect();
        println!("{p}: {}", split.join(", "));
    }

    // (3 + i) has norm 10
    let a = factor_principal(&k, &table, &k.element(&[3, 1])).unwrap();
    let b = table.integer_ideal(6).unwrap();
    println!("(3+i) = {a}, Nm = {}", a.norm());
    println!("gcd((3+i), (6)) = {}", a.gcd(&b));
    println!("lcm((3+i), (6)) = {}", a.lcm(&b));

    let n = a.mul(&b);
    let phi_sum: u64 = n.divisors().iter().map(|d| d.euler_phi()).sum();
    let mu_sum: i32 = n.divisors().iter().map(|d| d.moebius()).sum();
    println!("{n}: Nm = {}, Phi = {}, sum of Phi over divisors = {phi_sum}, sum of mu = {mu_sum}", n.norm(), n.euler_phi());
    assert_eq!(phi_sum, n.norm());
    assert_eq!(mu_sum, 0);

    // the Hermite basis has determinant Nm
    let h = n.hnf(&k);
    println!("HNF rows of {n}: {:?}", h.rows());
    assert_eq!(h.det(), n.norm() as u128);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
