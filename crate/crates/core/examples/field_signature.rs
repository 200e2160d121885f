// Build a few monogenic fields and look at their Minkowski data.

use nfvaaler::{build_field, NumberFieldSpec};

pub fn run_example() {
    for (name, poly) in [("Q", vec![0, 1]), ("Q(i)", vec![1, 0, 1]), ("Q(sqrt 2)", vec![-2, 0, 1]), ("cubic", vec![-2, 0, 0, 1])] {
        let k = build_field(&NumberFieldSpec::new(poly)).expect("field");
        let (s, t) = k.signature();
        println!(
            "{name:>10}: n = {}, (s, t) = ({s}, {t}), rank = {}, disc = {}, vol(D_K) = {:.6}",
            k.degree(),
            k.unit_rank(),
            k.discriminant(),
            k.domain_volume()
        );
        assert_eq!(s + 2 * t, k.degree());
    }

    // the generator t of Q(i) lands on (0, 1) in the single complex place
    let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let p = k.embed(&k.theta());
    println!("embedding of t in Q(i): {:?}", p.to_real_vec());

    // reducible input is refused
    let err = build_field(&NumberFieldSpec::new(vec![-1, 0, 1])).unwrap_err();
    println!("x^2 - 1 -> {err}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
