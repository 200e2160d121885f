//! Selberg's upper-bound sieve for ideals coprime to a fixed modulus n.
//!
//! The level z = X^{1/(2k+1)} (k the field degree) is never formed as a
//! float. Every test "Nm(d) < z" is made as Nm(d)^{2k+1} < X in integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::analytic::count_ideals_coprime;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, PrimeTable};

#[derive(Clone, Debug)]
pub struct SieveContext {
    pub n: Ideal,
    pub x: u64,
    pub degree: usize,
    /// product of the primes 𝔭 | n with Nm 𝔭 < z
    pub p: Ideal,
    pub g: BigRational,
    /// (d, λ_d) for squarefree d | P with Nm d < z, in ideal order
    pub weights: Vec<(Ideal, BigRational)>,
}

/// Nm^{2k+1} < X, exactly.
pub fn below_level(norm: u64, degree: usize, x: u64) -> bool {
    let e = 2 * degree as u32 + 1;
    match (norm as u128).checked_pow(e) {
        Some(v) => v < x as u128,
        None => false,
    }
}

fn ratio(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// G_v(x) = Σ μ²(r)/Φ(r) over r | n, (r, v) = 1, Nm r < x, for rational x.
pub fn g_restricted(n: &Ideal, v: &Ideal, x: &BigRational) -> BigRational {
    n.squarefree_divisors()
        .iter()
        .filter(|r| r.is_coprime_to(v) && ratio(r.norm(), 1) < *x)
        .map(|r| ratio(1, r.euler_phi()))
        .fold(BigRational::zero(), |s, t| s + t)
}

/// G_v(z/Nm(scale)) with the level comparison (Nm r · Nm scale)^{2k+1} < X.
fn g_at_level(n: &Ideal, v: &Ideal, scale: u64, degree: usize, x: u64) -> BigRational {
    n.squarefree_divisors()
        .iter()
        .filter(|r| {
            r.is_coprime_to(v) && r.norm().checked_mul(scale).is_some_and(|m| below_level(m, degree, x))
        })
        .map(|r| ratio(1, r.euler_phi()))
        .fold(BigRational::zero(), |s, t| s + t)
}

pub fn build_sieve(degree: usize, n: &Ideal, x: u64) -> Result<SieveContext> {
    if x < 2 {
        return Err(Error::InvalidArgument(format!("sieve length X = {x} must be at least 2")));
    }
    let p = Ideal::from_factors(
        n.factors()
            .iter()
            .filter(|(q, _)| below_level(q.norm(), degree, x))
            .map(|(q, _)| (q.clone(), 1))
            .collect(),
    );
    let g = g_at_level(n, &Ideal::unit(), 1, degree, x);
    let mut weights = Vec::new();
    for d in p.squarefree_divisors() {
        if !below_level(d.norm(), degree, x) {
            continue;
        }
        let head = ratio(d.norm(), d.euler_phi()) * BigInt::from(d.moebius());
        let lambda = head * g_at_level(n, &d, d.norm(), degree, x) / &g;
        weights.push((d, lambda));
    }
    Ok(SieveContext { n: n.clone(), x, degree, p, g, weights })
}

impl SieveContext {
    pub fn weight(&self, d: &Ideal) -> BigRational {
        self.weights.iter().find(|(e, _)| e == d).map(|(_, l)| l.clone()).unwrap_or_else(BigRational::zero)
    }

    /// z as a float, for reports only.
    pub fn level(&self) -> f64 {
        (self.x as f64).powf(1.0 / (2 * self.degree + 1) as f64)
    }

    pub fn weights_bounded(&self) -> bool {
        self.weight(&Ideal::unit()).is_one() && self.weights.iter().all(|(_, l)| l.abs() <= BigRational::one())
    }
}

/// Σ_{d₁,d₂} λ_{d₁}λ_{d₂} Nm(gcd(d₁,d₂))/(Nm d₁ Nm d₂).
pub fn sigma1(ctx: &SieveContext) -> BigRational {
    let mut total = BigRational::zero();
    for (d1, l1) in &ctx.weights {
        for (d2, l2) in &ctx.weights {
            let gcd = d1.gcd(d2).norm();
            total += l1 * l2 * ratio(gcd, d1.norm() * d2.norm());
        }
    }
    total
}

fn check_cap(x: u64, cap: u64) -> Result<()> {
    if x > cap {
        return Err(Error::EnumerationCapExceeded { needed: x, cap });
    }
    Ok(())
}

/// Σ_{Nm a ≤ X} (Σ_{d | (a, P)} λ_d)². Always an integer-valued rational
/// bound on the number of a ≤ X coprime to P.
pub fn sieve_upper_bound(table: &PrimeTable, ctx: &SieveContext, cap: u64) -> Result<BigRational> {
    check_cap(ctx.x, cap)?;
    let mut inner: HashMap<Ideal, BigRational> = HashMap::new();
    let mut total = BigRational::zero();
    for a in table.enumerate_ideals(ctx.x, false) {
        let key = a.gcd(&ctx.p);
        let s = inner.entry(key.clone()).or_insert_with(|| {
            ctx.weights.iter().filter(|(d, _)| d.divides(&key)).map(|(_, l)| l.clone()).sum()
        });
        total += &*s * &*s;
    }
    Ok(total)
}

/// #{a : Nm a ≤ X, (a, n) = O_K}.
pub fn coprime_count_exact(table: &PrimeTable, n: &Ideal, x: u64, cap: u64) -> Result<u64> {
    check_cap(x, cap)?;
    Ok(count_ideals_coprime(table, x, n))
}

/// X · Π_{𝔭 | n, Nm 𝔭 ≤ X} (1 − 1/Nm 𝔭), the shape of the final bound.
pub fn final_bound_shape(n: &Ideal, x: u64) -> f64 {
    n.primes()
        .filter(|p| p.norm() <= x)
        .map(|p| 1.0 - 1.0 / p.norm() as f64)
        .product::<f64>()
        * x as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_field, NumberFieldSpec};

    fn table(poly: Vec<i64>) -> PrimeTable {
        PrimeTable::new(&build_field(&NumberFieldSpec::new(poly)).unwrap())
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn restricted_sums() {
        let q = table(vec![0, 1]);
        let six = q.integer_ideal(6).unwrap();
        let two = q.integer_ideal(2).unwrap();
        assert_eq!(g_restricted(&six, &Ideal::unit(), &rat(1, 1)), rat(0, 1));
        assert_eq!(g_restricted(&six, &Ideal::unit(), &rat(22, 1)), rat(3, 1));
        assert_eq!(g_restricted(&six, &two, &rat(11, 1)), rat(3, 2));
    }

    #[test]
    fn weights_for_six() {
        let q = table(vec![0, 1]);
        let ctx = build_sieve(1, &q.integer_ideal(6).unwrap(), 10_000).unwrap();
        assert_eq!(ctx.g, rat(3, 1));
        let table: Vec<(u64, BigRational)> = ctx.weights.iter().map(|(d, l)| (d.norm(), l.clone())).collect();
        assert_eq!(table, vec![(1, rat(1, 1)), (2, rat(-1, 1)), (3, rat(-1, 1)), (6, rat(1, 1))]);
        assert_eq!(sigma1(&ctx), rat(1, 3));
        assert!(ctx.weights_bounded());
    }

    #[test]
    fn weights_for_six_at_one_hundred() {
        // z = 100^{1/3} ≈ 4.64: only d ∈ {1, 2, 3} carry weight, and G = 5/2
        let q = table(vec![0, 1]);
        let six = q.integer_ideal(6).unwrap();
        let ctx = build_sieve(1, &six, 100).unwrap();
        assert_eq!(ctx.g, rat(5, 2));
        let ls: Vec<BigRational> = ctx.weights.iter().map(|(_, l)| l.clone()).collect();
        assert_eq!(ls, vec![rat(1, 1), rat(-4, 5), rat(-3, 5)]);
        assert_eq!(sigma1(&ctx), rat(2, 5));
        assert_eq!(coprime_count_exact(&q, &six, 100, 1000).unwrap(), 33);
        let ub = sieve_upper_bound(&q, &ctx, 1000).unwrap();
        assert!(ub >= rat(33, 1));
    }

    #[test]
    fn trivial_modulus() {
        let gi = table(vec![1, 0, 1]);
        let ctx = build_sieve(2, &Ideal::unit(), 500).unwrap();
        assert_eq!(ctx.weights.len(), 1);
        assert_eq!(sigma1(&ctx), rat(1, 1));
        let total = gi.enumerate_ideals(500, false).len() as i64;
        assert_eq!(sieve_upper_bound(&gi, &ctx, 1000).unwrap(), rat(total, 1));
        assert_eq!(coprime_count_exact(&gi, &Ideal::unit(), 500, 1000).unwrap(), total as u64);
        assert!(matches!(
            coprime_count_exact(&gi, &Ideal::unit(), 5000, 1000),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn gaussian_context() {
        let gi = table(vec![1, 0, 1]);
        let n = gi.enumerate_ideals(18, false).into_iter().find(|a| a.norm() == 18).unwrap();
        let ctx = build_sieve(2, &n, 10_000).unwrap();
        // Nm^5 < 10⁴ admits norm 2 but not 9
        assert_eq!(ctx.p.norm(), 2);
        assert_eq!(sigma1(&ctx), BigRational::one() / &ctx.g);
        let ub = sieve_upper_bound(&gi, &ctx, 100_000).unwrap();
        let exact = coprime_count_exact(&gi, &n, 10_000, 100_000).unwrap();
        assert!(ub >= rat(exact as i64, 1));
    }
}
