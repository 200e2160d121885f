//! Rational-integer helpers: prime sieve, trial-division factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// All primes p ≤ limit, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization of |n| as (p, exponent), ascending. Zero and ±1 give [].
pub fn factor_integer(n: &BigInt) -> Vec<(u64, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return out;
    }
    if let Some(small) = m.to_u64() {
        let mut m = small;
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                let mut k = 0;
                while m % d == 0 {
                    m /= d;
                    k += 1;
                }
                out.push((d, k));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            out.push((m, 1));
        }
        return out;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut k = 0;
            while (&m % &d).is_zero() {
                m /= &d;
                k += 1;
            }
            out.push((d.to_u64().expect("prime factor exceeds u64"), k));
        }
        d += 1;
    }
    if m > BigInt::one() {
        out.push((m.to_u64().expect("prime factor exceeds u64"), 1));
    }
    out
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut k = 0;
    while !m.is_zero() && m.is_multiple_of(&p) {
        m /= &p;
        k += 1;
    }
    k
}

pub fn factorial(v: u64) -> f64 {
    (1..=v).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_and_factor() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
        assert_eq!(factor_integer(&BigInt::from(-360)), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factor_integer(&BigInt::from(1)).is_empty());
        assert_eq!(valuation(&BigInt::from(48), 2), 4);
        assert!(is_prime(9973) && !is_prime(9975) && !is_prime(1));
    }
}
