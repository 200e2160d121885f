//! Dense univariate polynomials over the prime field F_p and their factorization.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no trailing
//! zeros (the zero polynomial is the empty vector). Factorization runs
//! squarefree decomposition, then distinct-degree splitting, then
//! equal-degree splitting with a fixed-seed generator so results are
//! reproducible.

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type PolyP = Vec<u64>;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

/// Reduce integer coefficients into F_p.
pub fn from_ints(coeffs: &[i64], p: u64) -> PolyP {
    let pi = p as i128;
    trim(
        coeffs
            .iter()
            .map(|&c| (((c as i128) % pi + pi) % pi) as u64)
            .collect(),
    )
}

fn sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    let mut r = vec![0; n];
    for (i, slot) in r.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(r)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(r)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv(b[db], p);
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = mulmod(r[k], lead_inv, p);
        if c == 0 {
            continue;
        }
        q[k - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = (r[idx] + p - mulmod(c, bj, p)) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    divrem(a, b, p).1
}

pub fn make_monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| mulmod(c, li, p)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&x, p)
}

fn derivative(a: &[u64], p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
            .collect(),
    )
}

fn powmod_poly(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> PolyP {
    let mut result: PolyP = vec![1];
    let mut b = rem(base, modulus, p);
    for i in 0..exp.bits() {
        if exp.bit(i) {
            result = rem(&mul(&result, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
    }
    rem(&result, modulus, p)
}

/// x^(p^k) mod m, by k successive p-th powers.
fn frobenius_power(x_pow: &[u64], modulus: &[u64], p: u64) -> PolyP {
    powmod_poly(x_pow, &BigUint::from(p), modulus, p)
}

/// Squarefree decomposition of a monic polynomial: pairs (squarefree factor, multiplicity).
pub fn squarefree_decomposition(f: &[u64], p: u64) -> Vec<(PolyP, u32)> {
    let f = make_monic(f, p);
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let fp = derivative(&f, p);
    if fp.is_empty() {
        // f = g(x^p)
        let root = pth_root(&f, p);
        for (g, m) in squarefree_decomposition(&root, p) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = gcd(&f, &fp, p);
    let mut w = divrem(&f, &c, p).0;
    let mut i = 1u32;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(&w, &c, p);
        let fac = divrem(&w, &y, p).0;
        if degree(&fac).unwrap_or(0) > 0 {
            out.push((make_monic(&fac, p), i));
        }
        w = y;
        c = divrem(&c, &w, p).0;
        i += 1;
    }
    if degree(&c).unwrap_or(0) > 0 {
        let root = pth_root(&c, p);
        for (g, m) in squarefree_decomposition(&root, p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn pth_root(f: &[u64], p: u64) -> PolyP {
    // coefficients are fixed by Frobenius on F_p
    f.iter().step_by(p as usize).copied().collect()
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(PolyP, usize)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x: PolyP = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    while degree(&rest).unwrap_or(0) >= 2 * d {
        h = frobenius_power(&h, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        if degree(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
        }
        d += 1;
    }
    if degree(&rest).unwrap_or(0) > 0 {
        let dr = degree(&rest).unwrap();
        out.push((make_monic(&rest, p), dr));
    }
    out
}

/// Split a product of distinct irreducibles of common degree `d`.
fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
    let n = degree(f).unwrap();
    if n == d {
        return vec![f.to_vec()];
    }
    loop {
        let a: PolyP = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(nd-1)) with nd = d
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = rem(&mul(&t, &t, p), f, p);
                acc = trim(
                    (0..acc.len().max(t.len()))
                        .map(|i| {
                            (acc.get(i).copied().unwrap_or(0) + t.get(i).copied().unwrap_or(0)) % 2
                        })
                        .collect(),
                );
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            sub(&powmod_poly(&a, &e, f, p), &[1], p)
        };
        let g = gcd(f, &candidate, p);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&make_monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Complete factorization of `f` into monic irreducibles with multiplicities,
/// sorted lexicographically by coefficient vector (lowest degree first).
pub fn factor(f: &[u64], p: u64) -> Vec<(PolyP, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(f, p) {
        for (block, d) in distinct_degree(&sqf, p) {
            for g in equal_degree(&block, d, p, &mut rng) {
                out.push((make_monic(&g, p), mult));
            }
        }
    }
    out.sort();
    out
}
