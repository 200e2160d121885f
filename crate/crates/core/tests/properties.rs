use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};
use proptest::prelude::*;

fn gaussian() -> (nfvaaler::NumberField, Vec<nfvaaler::Ideal>) {
    let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let ideals = PrimeTable::new(&k).enumerate_ideals(300, false);
    (k, ideals)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn element_norm_is_multiplicative(a in prop::collection::vec(-20i64..20, 3), b in prop::collection::vec(-20i64..20, 3)) {
        let k = build_field(&NumberFieldSpec::new(vec![-2, 0, 0, 1])).unwrap();
        let (x, y) = (k.element(&a), k.element(&b));
        prop_assert_eq!(k.norm(&k.mul(&x, &y)), k.norm(&x) * k.norm(&y));
    }

    #[test]
    fn ideal_operations_agree(i in 0usize..200, j in 0usize..200) {
        let (k, ideals) = gaussian();
        let (a, b) = (&ideals[i], &ideals[j]);
        let ab = a.mul(b);
        prop_assert_eq!(ab.norm(), a.norm() * b.norm());
        prop_assert_eq!(a.gcd(b).mul(&a.lcm(b)), ab.clone());
        prop_assert!(a.divides(&ab) && a.gcd(b).divides(b));
        if a.is_coprime_to(b) {
            prop_assert_eq!(ab.euler_phi(), a.euler_phi() * b.euler_phi());
            prop_assert_eq!(ab.moebius(), a.moebius() * b.moebius());
        }
        prop_assert_eq!(ab.quotient(b).unwrap(), a.clone());
        prop_assert_eq!(ab.hnf(&k).det(), ab.norm() as u128);
    }
}
