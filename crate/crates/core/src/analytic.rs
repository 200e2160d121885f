//! Mertens-type prime sums over a number field and the ideal-count estimate
//! of the Dedekind zeta residue.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, PrimeTable};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MertensReport {
    pub x: u64,
    pub value: f64,
    pub model: f64,
    pub residual: f64,
    /// B_K estimate for the reciprocal sum, α_K estimate for the product
    pub estimate: Option<f64>,
}

fn check_x(x: u64) -> Result<()> {
    if x < 16 {
        return Err(Error::InvalidArgument(format!("X = {x} must be at least 16")));
    }
    Ok(())
}

/// Σ_{Nm 𝔭 < X} log Nm(𝔭)/Nm(𝔭) against log X.
pub fn mertens_log_sum(table: &PrimeTable, x: u64) -> Result<MertensReport> {
    check_x(x)?;
    let value: f64 = table
        .primes_up_to(x - 1)
        .iter()
        .map(|p| {
            let q = p.norm() as f64;
            q.ln() / q
        })
        .sum();
    let model = (x as f64).ln();
    Ok(MertensReport { x, value, model, residual: value - model, estimate: None })
}

/// Σ_{Nm 𝔭 ≤ X} 1/Nm(𝔭) against log log X; the offset estimates B_K.
pub fn mertens_recip_sum(table: &PrimeTable, x: u64) -> Result<MertensReport> {
    check_x(x)?;
    let value: f64 = table.primes_up_to(x).iter().map(|p| 1.0 / p.norm() as f64).sum();
    let model = (x as f64).ln().ln();
    Ok(MertensReport { x, value, model, residual: value - model, estimate: Some(value - model) })
}

/// Π_{Nm 𝔭 ≤ X} (1 − 1/Nm 𝔭)^{-1} against e^γ log X; the ratio estimates α_K.
pub fn mertens_product(table: &PrimeTable, x: u64) -> Result<MertensReport> {
    check_x(x)?;
    let log_value: f64 = table
        .primes_up_to(x)
        .iter()
        .map(|p| -(1.0 - 1.0 / p.norm() as f64).ln())
        .sum();
    let value = log_value.exp();
    let model = EULER_GAMMA.exp() * (x as f64).ln();
    Ok(MertensReport { x, value, model, residual: value - model, estimate: Some(value / model) })
}

/// #{a : Nm(a) ≤ X} and the density estimate count/X of α_K.
pub fn ideal_count_residue(table: &PrimeTable, x: u64) -> Result<(u64, f64)> {
    check_x(x)?;
    let count = count_ideals(table, x);
    Ok((count, count as f64 / x as f64))
}

/// Number of ideals of norm ≤ x, by multiplicative generation without
/// materializing the ideals.
pub fn count_ideals(table: &PrimeTable, x: u64) -> u64 {
    count_ideals_coprime(table, x, &Ideal::unit())
}

/// Number of ideals a with Nm a ≤ x and gcd(a, n) = O_K.
pub fn count_ideals_coprime(table: &PrimeTable, x: u64, n: &Ideal) -> u64 {
    let norms: Vec<u64> = table
        .primes_up_to(x)
        .iter()
        .filter(|p| n.exponent_of(p) == 0)
        .map(|p| p.norm())
        .collect();
    fn rec(norms: &[u64], start: usize, acc: u64, x: u64) -> u64 {
        let mut total = 1;
        for i in start..norms.len() {
            let q = norms[i];
            if acc.saturating_mul(q) > x {
                break;
            }
            let mut nn = acc * q;
            while nn <= x {
                total += rec(norms, i + 1, nn, x);
                nn = match nn.checked_mul(q) {
                    Some(v) => v,
                    None => break,
                };
            }
        }
        total
    }
    if x == 0 {
        0
    } else {
        rec(&norms, 0, 1, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_field, NumberFieldSpec};

    fn table(poly: Vec<i64>) -> PrimeTable {
        PrimeTable::new(&build_field(&NumberFieldSpec::new(poly)).unwrap())
    }

    #[test]
    fn log_sum_small_x() {
        // primes below 16: 2, 3, 5, 7, 11, 13
        let r = mertens_log_sum(&table(vec![0, 1]), 16).unwrap();
        assert!((r.value - 1.727_946_709_213_371_8).abs() < 1e-12);
        assert!((r.residual + 1.044_642_013_026_409_4).abs() < 1e-12);
        assert!(mertens_log_sum(&table(vec![0, 1]), 15).is_err());
    }

    #[test]
    fn recip_sum_hundred() {
        let r = mertens_recip_sum(&table(vec![0, 1]), 100).unwrap();
        assert!((r.value - 1.802_817_201_048_870_6).abs() < 1e-12);
    }

    #[test]
    fn product_monotone() {
        let t = table(vec![1, 0, 1]);
        let a = mertens_product(&t, 16).unwrap();
        let b = mertens_product(&t, 32).unwrap();
        assert!(b.value > a.value);
    }

    #[test]
    fn ideal_counts() {
        let (c, a) = ideal_count_residue(&table(vec![0, 1]), 1000).unwrap();
        assert_eq!((c, a), (1000, 1.0));
        let t = table(vec![-2, 0, 1]);
        assert_eq!(ideal_count_residue(&t, 1000).unwrap(), ideal_count_residue(&t, 1000).unwrap());
        let k = build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap();
        let t = PrimeTable::new(&k);
        assert_eq!(count_ideals(&t, 200) as usize, t.enumerate_ideals(200, false).len());
    }
}
