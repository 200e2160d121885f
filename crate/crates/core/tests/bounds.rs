// Regression pins for the implied constants in the "≪" lemmas. Every
// constant is the maximum printed by oracles/ideal_counts.py or
// oracles/gaussian_measure.py, rounded up in the last shown digit.

use nfvaaler::analytic::{count_ideals_coprime, mertens_log_sum};
use nfvaaler::arith::factorial;
use nfvaaler::gfun::{banded_g_sum, count_large_g_table, g, norm_over_phi, tail_product};
use nfvaaler::measure::{overlap_report, MeasureOptions};
use nfvaaler::psi::PsiSystem;
use nfvaaler::selberg::{coprime_count_exact, final_bound_shape};
use nfvaaler::{build_field, NumberFieldSpec, PrimeTable};

struct Pins {
    poly: Vec<i64>,
    log_residual: f64,
    decay: f64,
    norm_over_phi: f64,
    tail_product: f64,
    band: f64,
    final_bound: f64,
}

fn fields() -> Vec<Pins> {
    vec![
        Pins { poly: vec![0, 1], log_residual: 1.329485051, decay: 1.1, norm_over_phi: 2.6, tail_product: 1.7918, band: 0.76, final_bound: 1.01 },
        Pins { poly: vec![1, 0, 1], log_residual: 1.452561374, decay: 0.8, norm_over_phi: 2.45, tail_product: 1.6928, band: 0.61, final_bound: 0.79 },
        Pins { poly: vec![-2, 0, 1], log_residual: 1.749672002, decay: 0.63, norm_over_phi: 2.22, tail_product: 1.5313, band: 0.52, final_bound: 0.63 },
    ]
}

#[test]
fn mertens_log_residual_stays_pinned() {
    for f in fields() {
        let t = PrimeTable::new(&build_field(&NumberFieldSpec::new(f.poly.clone())).unwrap());
        let worst = (4..=17).map(|k| mertens_log_sum(&t, 1 << k).unwrap().residual.abs()).fold(0.0, f64::max);
        assert!(worst <= f.log_residual, "{:?}: {worst}", f.poly);
    }
}

#[test]
fn g_function_constants() {
    for f in fields() {
        let t = PrimeTable::new(&build_field(&NumberFieldSpec::new(f.poly.clone())).unwrap());
        let counts = count_large_g_table(&t, 10_000, 5);
        for v in 2..=5u64 {
            assert!(counts[v as usize - 1] as f64 * factorial(v) / 1e4 <= f.decay);
            assert!(counts[v as usize - 1] <= counts[v as usize - 2]);
        }
        for a in t.enumerate_ideals(1000, false) {
            assert!(norm_over_phi(&a) <= f.norm_over_phi * (2.0 * g(&a) as f64).ln() + 1e-12, "{a}");
            assert!(tail_product(&a) <= f.tail_product, "{a}");
        }
        for tt in 1..=3u64 {
            for (x, y) in [(10u64, 100u64), (10, 1000)] {
                let s = num_traits::ToPrimitive::to_f64(&banded_g_sum(&t, tt, x, y, 100_000).unwrap()).unwrap();
                assert!(s <= f.band * ((y as f64 / x as f64).ln() + 1.0) / factorial(tt));
            }
        }
    }
}

#[test]
fn selberg_final_bound_shape() {
    for f in fields() {
        let t = PrimeTable::new(&build_field(&NumberFieldSpec::new(f.poly.clone())).unwrap());
        for n in t.enumerate_ideals(200, false) {
            for x in [1000, 10_000] {
                let c = coprime_count_exact(&t, &n, x, 100_000).unwrap();
                assert!(c as f64 <= f.final_bound * final_bound_shape(&n, x), "{:?} {n} {x}", f.poly);
            }
        }
    }
}

#[test]
fn coprime_to_one_plus_i() {
    let t = PrimeTable::new(&build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap());
    let p = t.primes_above(2).unwrap()[0].clone();
    assert_eq!(count_ideals_coprime(&t, 20, &nfvaaler::Ideal::prime(p.clone())), 8);
    assert_eq!(coprime_count_exact(&t, &nfvaaler::Ideal::prime(p), 20, 1000).unwrap(), 8);
}

#[test]
fn gaussian_pair_overlap() {
    let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
    let t = PrimeTable::new(&k);
    let sys = PsiSystem::uniform(k.signature(), 0.25, 2.0).unwrap();
    let m = nfvaaler::Ideal::prime(t.primes_above(2).unwrap()[0].clone());
    let n = nfvaaler::Ideal::prime(t.primes_above(5).unwrap()[0].clone());
    assert_eq!(n.to_string(), "(5, t+2)");
    let r = overlap_report(&k, &t, &sys, &m, &n, &MeasureOptions::default()).unwrap();
    // shapely polygons carry a relative error near 1e-7
    for (got, want) in [(r.lambda_m, 0.196349521598), (r.lambda_n, 0.125663693823), (r.lambda_mn, 0.012148140474)] {
        assert!((got - want).abs() <= 1e-6 * want, "{got} vs {want}");
    }
}
