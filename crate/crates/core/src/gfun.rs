//! The Erdős g-function on ideals: the least v ≥ 1 for which the primes
//! 𝔭 | a with Nm 𝔭 > v have reciprocal norm sum below 1/2.
//!
//! Everything is decided in exact rationals so that a tail of exactly 1/2,
//! as for (2) in ℚ, is classified correctly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, PrimeTable};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GReport {
    #[serde(serialize_with = "crate::io::ser_display")]
    pub ideal: Ideal,
    pub g: u64,
    #[serde(serialize_with = "crate::io::ser_display")]
    pub tail_sum: BigRational,
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn recip(q: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(q))
}

/// Σ_{𝔭 | a, Nm 𝔭 > v} 1/Nm 𝔭, exactly.
pub fn tail_sum(a: &Ideal, v: u64) -> BigRational {
    a.primes().filter(|p| p.norm() > v).map(|p| recip(p.norm())).fold(BigRational::zero(), |s, t| s + t)
}

/// The tail is a step function that only drops at prime norms, so the
/// least admissible v is 1 or one of the norms of the primes dividing a.
pub fn g_value(a: &Ideal) -> GReport {
    let mut candidates: Vec<u64> = a.primes().map(|p| p.norm()).collect();
    candidates.push(1);
    candidates.sort_unstable();
    candidates.dedup();
    let h = half();
    for v in candidates {
        let t = tail_sum(a, v);
        if t < h {
            return GReport { ideal: a.clone(), g: v, tail_sum: t };
        }
    }
    unreachable!("the tail above the largest prime norm is empty")
}

pub fn g(a: &Ideal) -> u64 {
    g_value(a).g
}

/// Π_{𝔭 | a, Nm 𝔭 > g(a)} (1 − 1/Nm 𝔭)^{-1}.
pub fn tail_product(a: &Ideal) -> f64 {
    let v = g(a);
    a.primes()
        .filter(|p| p.norm() > v)
        .map(|p| {
            let q = p.norm() as f64;
            q / (q - 1.0)
        })
        .product()
}

/// Nm(a)/Φ(a).
pub fn norm_over_phi(a: &Ideal) -> f64 {
    a.norm() as f64 / a.euler_phi() as f64
}

/// #{a : Nm a ≤ X, g(a) ≥ v}.
pub fn count_large_g(table: &PrimeTable, x: u64, v: u64) -> u64 {
    table.enumerate_ideals(x, false).iter().filter(|a| g(a) >= v).count() as u64
}

/// Counts for v = 1..=v_max in one pass over the ideals.
pub fn count_large_g_table(table: &PrimeTable, x: u64, v_max: u64) -> Vec<u64> {
    let mut counts = vec![0u64; v_max as usize];
    for a in table.enumerate_ideals(x, false) {
        let ga = g(&a).min(v_max);
        for c in counts.iter_mut().take(ga as usize) {
            *c += 1;
        }
    }
    counts
}

/// Σ_{d | q, g(q/d) ≤ v} 1/Nm d.
pub fn divisor_g_sum(q: &Ideal, v: u64) -> BigRational {
    q.divisors()
        .iter()
        .filter(|d| g(&q.quotient(d).expect("d divides q")) <= v)
        .map(|d| recip(d.norm()))
        .fold(BigRational::zero(), |s, t| s + t)
}

/// Σ_{g(s) = T, X < Nm s < Y} 1/Nm s.
pub fn banded_g_sum(table: &PrimeTable, t: u64, x: u64, y: u64, cap: u64) -> Result<BigRational> {
    if x == 0 || x >= y {
        return Err(Error::InvalidArgument(format!("band requires 0 < X < Y, got X={x}, Y={y}")));
    }
    if y > cap {
        return Err(Error::BandTooLarge(y, cap));
    }
    Ok(table
        .enumerate_ideals(y - 1, false)
        .iter()
        .filter(|s| s.norm() > x && g(s) == t)
        .map(|s| recip(s.norm()))
        .fold(BigRational::zero(), |s, t| s + t))
}
