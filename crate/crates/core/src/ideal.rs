//! Integral ideals of a monogenic order: Dedekind factorization of rational
//! primes, ideals in factored form with a lazily built Hermite normal form,
//! the multiplicative functions Nm, Φ, μ, divisor and norm-bounded
//! enumeration, and valuations of elements.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::{factor_integer, is_prime, primes_up_to};
use crate::cache::FactorCache;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::hnf::Hnf;
use crate::modp;

/// A prime ideal 𝔭 = (p, g(θ)) above a rational prime p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    pub p: u64,
    /// residue degree
    pub f: u32,
    /// ramification index
    pub e: u32,
    /// monic irreducible factor of the defining polynomial mod p, low degree first
    pub local_factor: Vec<u64>,
    /// degree of the field, so inert primes can print as (p)
    pub field_degree: u32,
}

impl PrimeIdeal {
    pub fn norm(&self) -> u64 {
        self.p.checked_pow(self.f).expect("prime norm overflows u64")
    }
}

impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p.cmp(&other.p).then_with(|| self.local_factor.cmp(&other.local_factor))
    }
}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 && self.f == self.field_degree {
            return write!(f, "({})", self.p);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.local_factor.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => format!("{c}"),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        write!(f, "({}, {})", self.p, terms.join("+"))
    }
}

/// Integral ideal in factored form; the empty factor list is O_K.
#[derive(Clone)]
pub struct Ideal {
    factors: Vec<(Arc<PrimeIdeal>, u32)>,
    hnf: Arc<OnceLock<Hnf>>,
}

impl Ideal {
    pub fn unit() -> Ideal {
        Ideal { factors: Vec::new(), hnf: Arc::new(OnceLock::new()) }
    }

    pub fn from_factors(mut factors: Vec<(Arc<PrimeIdeal>, u32)>) -> Ideal {
        factors.retain(|(_, k)| *k > 0);
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Arc<PrimeIdeal>, u32)> = Vec::with_capacity(factors.len());
        for (p, k) in factors {
            match merged.last_mut() {
                Some((q, kk)) if **q == *p => *kk += k,
                _ => merged.push((p, k)),
            }
        }
        Ideal { factors: merged, hnf: Arc::new(OnceLock::new()) }
    }

    pub fn prime(p: Arc<PrimeIdeal>) -> Ideal {
        Ideal::from_factors(vec![(p, 1)])
    }

    pub fn factors(&self) -> &[(Arc<PrimeIdeal>, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn norm(&self) -> u64 {
        self.factors
            .iter()
            .map(|(p, k)| p.norm().checked_pow(*k).expect("ideal norm overflows u64"))
            .try_fold(1u64, |a, b| a.checked_mul(b))
            .expect("ideal norm overflows u64")
    }

    /// Φ(a) = #(O_K/a)^×.
    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|(p, k)| {
                let q = p.norm();
                q.pow(*k) - q.pow(*k - 1)
            })
            .product()
    }

    pub fn moebius(&self) -> i32 {
        if self.factors.iter().any(|(_, k)| *k >= 2) {
            0
        } else if self.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }

    pub fn exponent_of(&self, p: &PrimeIdeal) -> u32 {
        self.factors.iter().find(|(q, _)| **q == *p).map(|(_, k)| *k).unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &Arc<PrimeIdeal>> {
        self.factors.iter().map(|(p, _)| p)
    }

    fn merge_with(&self, other: &Ideal, op: impl Fn(u32, u32) -> u32) -> Ideal {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push((a[i].0.clone(), op(a[i].1, 0)));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), op(0, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), op(a[i].1, b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.retain(|(_, k)| *k > 0);
        Ideal { factors: out, hnf: Arc::new(OnceLock::new()) }
    }

    pub fn mul(&self, other: &Ideal) -> Ideal {
        self.merge_with(other, |x, y| x + y)
    }

    pub fn gcd(&self, other: &Ideal) -> Ideal {
        self.merge_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Ideal) -> Ideal {
        self.merge_with(other, u32::max)
    }

    pub fn divides(&self, other: &Ideal) -> bool {
        self.factors.iter().all(|(p, k)| other.exponent_of(p) >= *k)
    }

    pub fn is_coprime_to(&self, other: &Ideal) -> bool {
        self.factors.iter().all(|(p, _)| other.exponent_of(p) == 0)
    }

    /// self / d, when d | self.
    pub fn quotient(&self, d: &Ideal) -> Result<Ideal> {
        if !d.divides(self) {
            return Err(Error::NotDivisible(d.to_string(), self.to_string()));
        }
        Ok(self.merge_with(d, |x, y| x - y))
    }

    pub fn pow(&self, k: u32) -> Ideal {
        Ideal::from_factors(self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect())
    }

    /// Product of the distinct primes dividing self.
    pub fn radical(&self) -> Ideal {
        Ideal::from_factors(self.factors.iter().map(|(p, _)| (p.clone(), 1)).collect())
    }

    /// All divisors Π 𝔭^j, 0 ≤ j ≤ k, in canonical order.
    pub fn divisors(&self) -> Vec<Ideal> {
        let mut out: Vec<Vec<(Arc<PrimeIdeal>, u32)>> = vec![Vec::new()];
        for (p, k) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (*k as usize + 1));
            for base in &out {
                for j in 0..=*k {
                    let mut v = base.clone();
                    if j > 0 {
                        v.push((p.clone(), j));
                    }
                    next.push(v);
                }
            }
            out = next;
        }
        let mut ideals: Vec<Ideal> = out.into_iter().map(Ideal::from_factors).collect();
        ideals.sort();
        ideals
    }

    /// Squarefree divisors, canonical order.
    pub fn squarefree_divisors(&self) -> Vec<Ideal> {
        self.radical().divisors()
    }

    /// The Hermite normal form of the ideal as a ℤ-module over the power basis.
    pub fn hnf(&self, field: &NumberField) -> &Hnf {
        self.hnf.get_or_init(|| compute_hnf(field, self))
    }

    /// Membership test for an integral element.
    pub fn contains(&self, field: &NumberField, e: &FieldElement) -> bool {
        match e.integer_coords() {
            Some(c) => self.hnf(field).contains_big(&c),
            None => false,
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.factors.len() == other.factors.len()
            && self.factors.iter().zip(&other.factors).all(|(a, b)| *a.0 == *b.0 && a.1 == b.1)
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (p, k) in &self.factors {
            p.hash(state);
            k.hash(state);
        }
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm().cmp(&other.norm()).then_with(|| {
            let a = self.factors.iter().map(|(p, k)| (&**p, *k));
            let b = other.factors.iter().map(|(p, k)| (&**p, *k));
            a.cmp(b)
        })
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "O_K");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, k)| if *k == 1 { p.to_string() } else { format!("{p}^{k}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{self}, Nm={}]", self.norm())
    }
}

/// An element of K written as numerator / denominator with integral numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalElement {
    pub numerator: FieldElement,
    pub denominator: BigInt,
}

impl FractionalElement {
    pub fn new(numerator: FieldElement, denominator: BigInt) -> Result<Self> {
        if !numerator.is_integral() || !denominator.is_positive() {
            return Err(Error::NotIntegral);
        }
        Ok(FractionalElement { numerator, denominator })
    }

    pub fn from_element(e: &FieldElement) -> Self {
        let d = e.denominator();
        let dq = BigRational::from_integer(d.clone());
        FractionalElement { numerator: e.scale(&dq), denominator: d }
    }

    pub fn to_element(&self) -> FieldElement {
        self.numerator.scale(&BigRational::new(BigInt::one(), self.denominator.clone()))
    }
}

/// Integer vector product modulo the defining polynomial, reduced mod `m`.
fn mul_int_mod(poly: &[i64], a: &[i128], b: &[i128], m: i128) -> Vec<i128> {
    let n = a.len();
    let mut prod = vec![0i128; 2 * n - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y).rem_euclid(m);
        }
    }
    for k in (n..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for j in 0..n {
            prod[k - n + j] = (prod[k - n + j] - c * poly[j] as i128).rem_euclid(m);
        }
    }
    prod.truncate(n);
    prod
}

fn prime_hnf(field: &NumberField, p: &PrimeIdeal) -> Hnf {
    let n = field.degree();
    let m = p.p as i128;
    let mut g: Vec<i128> = vec![0; n];
    for (i, &c) in p.local_factor.iter().enumerate() {
        if i < n {
            g[i] = c as i128;
        } else {
            // local factor of full degree n equals f mod p, which is 0 in O_K/p
            for j in 0..n {
                g[j] = (g[j] - c as i128 * field.poly()[j] as i128).rem_euclid(m);
            }
        }
    }
    let mut gens = Vec::with_capacity(n);
    let mut theta = vec![0i128; n];
    if n > 1 {
        theta[1] = 1;
    } else {
        theta[0] = -field.poly()[0] as i128;
    }
    let mut cur = g;
    for _ in 0..n {
        gens.push(cur.clone());
        cur = mul_int_mod(field.poly(), &cur, &theta, m);
    }
    Hnf::from_generators(n, m, &gens)
}

fn hnf_product(field: &NumberField, a: &Hnf, b: &Hnf) -> Hnf {
    let n = field.degree();
    let m = a.modulus() * b.modulus();
    let mut gens = Vec::with_capacity(n * n);
    for x in a.rows() {
        for y in b.rows() {
            gens.push(mul_int_mod(field.poly(), x, y, m));
        }
    }
    Hnf::from_generators(n, m, &gens)
}

fn compute_hnf(field: &NumberField, ideal: &Ideal) -> Hnf {
    let n = field.degree();
    let mut acc = Hnf::identity(n);
    for (p, k) in &ideal.factors {
        let ph = prime_hnf(field, p);
        for _ in 0..*k {
            acc = hnf_product(field, &acc, &ph);
        }
    }
    acc
}

/// Factor a rational prime via Dedekind's criterion.
pub fn factor_rational_prime(field: &NumberField, p: u64) -> Result<Vec<PrimeIdeal>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(dedekind_split(field.poly(), p))
}

fn dedekind_split(poly: &[i64], p: u64) -> Vec<PrimeIdeal> {
    let fp = modp::from_ints(poly, p);
    modp::factor(&fp, p)
        .into_iter()
        .map(|(g, e)| PrimeIdeal {
            p,
            f: (g.len() - 1) as u32,
            e,
            local_factor: g,
            field_degree: (poly.len() - 1) as u32,
        })
        .collect()
}

/// Prime factorizations cached per rational prime, optionally persisted to a
/// line-oriented cache file.
pub struct PrimeTable {
    poly: Vec<i64>,
    degree: usize,
    known: Mutex<BTreeMap<u64, Vec<Arc<PrimeIdeal>>>>,
    cache: Option<Mutex<FactorCache>>,
}

impl PrimeTable {
    pub fn new(field: &NumberField) -> PrimeTable {
        PrimeTable {
            poly: field.poly().to_vec(),
            degree: field.degree(),
            known: Mutex::new(BTreeMap::new()),
            cache: None,
        }
    }

    /// Attach a cache file: entries are loaded now and new primes appended.
    pub fn with_cache(field: &NumberField, path: impl Into<PathBuf>) -> Result<PrimeTable> {
        let cache = FactorCache::open(path.into(), field.poly())?;
        let table = PrimeTable::new(field);
        {
            let mut known = table.known.lock().unwrap();
            for (p, primes) in cache.entries() {
                known.insert(*p, primes.iter().cloned().map(Arc::new).collect());
            }
        }
        Ok(PrimeTable { cache: Some(Mutex::new(cache)), ..table })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn primes_above(&self, p: u64) -> Result<Vec<Arc<PrimeIdeal>>> {
        if let Some(v) = self.known.lock().unwrap().get(&p) {
            return Ok(v.clone());
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let split = dedekind_split(&self.poly, p);
        debug_assert_eq!(split.iter().map(|q| (q.e * q.f) as usize).sum::<usize>(), self.degree);
        if let Some(cache) = &self.cache {
            cache.lock().unwrap().append(p, &split)?;
        }
        let v: Vec<Arc<PrimeIdeal>> = split.into_iter().map(Arc::new).collect();
        self.known.lock().unwrap().insert(p, v.clone());
        Ok(v)
    }

    /// Prime ideals of norm ≤ x, ordered by (norm, p, local factor).
    pub fn primes_up_to(&self, x: u64) -> Vec<Arc<PrimeIdeal>> {
        let mut out = Vec::new();
        for p in primes_up_to(x) {
            for q in self.primes_above(p).expect("sieved value is prime") {
                if q.norm() <= x {
                    out.push(q);
                }
            }
        }
        out.sort_by(|a, b| a.norm().cmp(&b.norm()).then_with(|| a.cmp(b)));
        out
    }

    /// All ideals (or only prime ideals) of norm ≤ x, in canonical order.
    pub fn enumerate_ideals(&self, x: u64, primes_only: bool) -> Vec<Ideal> {
        let primes = self.primes_up_to(x);
        if primes_only {
            return primes.into_iter().map(Ideal::prime).collect();
        }
        let mut out = Vec::new();
        let mut stack: Vec<(Arc<PrimeIdeal>, u32)> = Vec::new();
        fn rec(
            primes: &[Arc<PrimeIdeal>],
            start: usize,
            norm: u64,
            x: u64,
            stack: &mut Vec<(Arc<PrimeIdeal>, u32)>,
            out: &mut Vec<Ideal>,
        ) {
            out.push(Ideal::from_factors(stack.clone()));
            for i in start..primes.len() {
                let q = primes[i].norm();
                if norm.saturating_mul(q) > x {
                    break;
                }
                let mut nn = norm * q;
                let mut k = 1;
                while nn <= x {
                    stack.push((primes[i].clone(), k));
                    rec(primes, i + 1, nn, x, stack, out);
                    stack.pop();
                    k += 1;
                    nn = match nn.checked_mul(q) {
                        Some(v) => v,
                        None => break,
                    };
                }
            }
        }
        if x >= 1 {
            rec(&primes, 0, 1, x, &mut stack, &mut out);
        }
        out.sort();
        out
    }

    /// The ideal generated by an integer.
    pub fn integer_ideal(&self, k: u64) -> Result<Ideal> {
        let mut factors = Vec::new();
        for (p, v) in factor_integer(&BigInt::from(k)) {
            for q in self.primes_above(p)? {
                factors.push((q.clone(), q.e * v));
            }
        }
        Ok(Ideal::from_factors(factors))
    }
}

pub fn ideal_norm(a: &Ideal) -> u64 {
    a.norm()
}

pub fn euler_phi(a: &Ideal) -> u64 {
    a.euler_phi()
}

pub fn moebius(a: &Ideal) -> i32 {
    a.moebius()
}

pub fn gcd_lcm(a: &Ideal, b: &Ideal) -> (Ideal, Ideal) {
    (a.gcd(b), a.lcm(b))
}

pub fn divisors_of(a: &Ideal) -> Vec<Ideal> {
    a.divisors()
}

pub fn hnf_of<'a>(field: &NumberField, a: &'a Ideal) -> &'a Hnf {
    a.hnf(field)
}

pub fn enumerate_ideals(field: &NumberField, x: u64, primes_only: bool) -> Vec<Ideal> {
    PrimeTable::new(field).enumerate_ideals(x, primes_only)
}

/// Largest k ≤ cap with e ∈ 𝔭^k.
fn valuation_at(field: &NumberField, e: &[BigInt], p: &Arc<PrimeIdeal>, cap: u32) -> u32 {
    let mut k = 0;
    let base = Ideal::prime(p.clone());
    while k < cap {
        let power = base.pow(k + 1);
        if power.hnf(field).contains_big(e) {
            k += 1;
        } else {
            break;
        }
    }
    k
}

/// The principal ideal (e) of a nonzero integral element.
pub fn factor_principal(field: &NumberField, table: &PrimeTable, e: &FieldElement) -> Result<Ideal> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let coords = e.integer_coords().ok_or(Error::NotIntegral)?;
    let nm = field.norm(e).to_integer();
    let mut factors = Vec::new();
    for (p, vp) in factor_integer(&nm) {
        let mut remaining = vp;
        for q in table.primes_above(p)? {
            if remaining == 0 {
                break;
            }
            let k = valuation_at(field, &coords, &q, remaining / q.f);
            remaining -= k * q.f;
            if k > 0 {
                factors.push((q, k));
            }
        }
    }
    Ok(Ideal::from_factors(factors))
}

/// dnm(γ): the n in (γ) = a/n with (a, n) = 1.
pub fn denominator_ideal(field: &NumberField, table: &PrimeTable, g: &FractionalElement) -> Result<Ideal> {
    if g.numerator.is_zero() {
        return Err(Error::ZeroElement);
    }
    let coords = g.numerator.integer_coords().ok_or(Error::NotIntegral)?;
    let mut factors = Vec::new();
    for (p, vd) in factor_integer(&g.denominator) {
        for q in table.primes_above(p)? {
            let vden = q.e * vd;
            let vnum = valuation_at(field, &coords, &q, vden);
            if vden > vnum {
                factors.push((q, vden - vnum));
            }
        }
    }
    Ok(Ideal::from_factors(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_field, NumberFieldSpec};

    fn qi() -> NumberField {
        build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap()
    }
    fn q() -> NumberField {
        build_field(&NumberFieldSpec::new(vec![0, 1])).unwrap()
    }

    #[test]
    fn splitting_in_gaussian_integers() {
        let k = qi();
        let five = factor_rational_prime(&k, 5).unwrap();
        assert_eq!(five.len(), 2);
        assert!(five.iter().all(|p| p.e == 1 && p.f == 1));
        let two = factor_rational_prime(&k, 2).unwrap();
        assert_eq!((two.len(), two[0].e, two[0].f), (1, 2, 1));
        let three = factor_rational_prime(&k, 3).unwrap();
        assert_eq!((three.len(), three[0].e, three[0].f), (1, 1, 2));
        assert_eq!(factor_rational_prime(&k, 9).unwrap_err(), Error::NotPrime(9));
    }

    /// (1+i), (2+i), (2−i), (3) in ℚ(i).
    fn gaussian(table: &PrimeTable, k: &NumberField) -> (Ideal, Ideal, Ideal, Ideal) {
        let one_i = factor_principal(k, table, &k.element(&[1, 1])).unwrap();
        let two_i = factor_principal(k, table, &k.element(&[2, 1])).unwrap();
        let two_mi = factor_principal(k, table, &k.element(&[2, -1])).unwrap();
        let three = table.integer_ideal(3).unwrap();
        (one_i, two_i, two_mi, three)
    }

    #[test]
    fn norm_phi_moebius_examples() {
        let k = qi();
        let t = PrimeTable::new(&k);
        let (a, b, b2, c) = gaussian(&t, &k);
        assert_ne!(b, b2);
        assert_eq!(Ideal::unit().norm(), 1);
        assert_eq!(a.pow(2).norm(), 4);
        assert_eq!(b.mul(&c).norm(), 45);
        assert_eq!(Ideal::unit().euler_phi(), 1);
        assert_eq!(b.euler_phi(), 4);
        assert_eq!(a.pow(2).euler_phi(), 2);
        assert_eq!(Ideal::unit().moebius(), 1);
        assert_eq!(a.mul(&c).moebius(), 1);
        assert_eq!(t.integer_ideal(2).unwrap().moebius(), 0);
    }

    #[test]
    fn gcd_lcm_examples() {
        let k = qi();
        let t = PrimeTable::new(&k);
        let (a, _, _, c) = gaussian(&t, &k);
        let x = a.pow(3).mul(&c);
        let y = a.mul(&c.pow(2));
        let (g, l) = gcd_lcm(&x, &y);
        assert_eq!(g, a.mul(&c));
        assert_eq!(l, a.pow(3).mul(&c.pow(2)));
        assert_eq!(g.mul(&l), x.mul(&y));
        assert_eq!(gcd_lcm(&x, &Ideal::unit()), (Ideal::unit(), x.clone()));

        let kq = q();
        let tq = PrimeTable::new(&kq);
        let (g, l) = gcd_lcm(&tq.integer_ideal(12).unwrap(), &tq.integer_ideal(18).unwrap());
        assert_eq!((g.norm(), l.norm()), (6, 36));
    }

    #[test]
    fn enumeration_examples() {
        let kq = q();
        let all = enumerate_ideals(&kq, 10, false);
        assert_eq!(all.iter().map(|a| a.norm()).collect::<Vec<_>>(), (1..=10).collect::<Vec<_>>());
        let k = qi();
        let primes = enumerate_ideals(&k, 10, true);
        assert_eq!(primes.iter().map(|a| a.norm()).collect::<Vec<_>>(), vec![2, 5, 5, 9]);
        let small = enumerate_ideals(&k, 5, false);
        assert_eq!(small.iter().map(|a| a.norm()).collect::<Vec<_>>(), vec![1, 2, 4, 5, 5]);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(Ideal::unit().divisors(), vec![Ideal::unit()]);
        let kq = q();
        let tq = PrimeTable::new(&kq);
        assert_eq!(tq.integer_ideal(12).unwrap().divisors().len(), 6);
        let k = qi();
        let t = PrimeTable::new(&k);
        let (a, _, _, c) = gaussian(&t, &k);
        assert_eq!(a.pow(2).mul(&c).divisors().len(), 6);
    }

    #[test]
    fn hnf_examples() {
        let k = qi();
        let t = PrimeTable::new(&k);
        assert_eq!(Ideal::unit().hnf(&k).rows(), &[vec![1, 0], vec![0, 1]]);
        let (a, b, _, _) = gaussian(&t, &k);
        assert_eq!(a.hnf(&k).det(), 2);
        assert_eq!(b.hnf(&k).det(), 5);
        assert!(b.contains(&k, &k.element(&[2, 1])));
        assert!(!b.contains(&k, &k.element(&[2, -1])));
    }

    #[test]
    fn principal_factorization_examples() {
        let k = qi();
        let t = PrimeTable::new(&k);
        let (a, b, b2, _) = gaussian(&t, &k);
        assert_eq!(factor_principal(&k, &t, &k.element(&[1, 0])).unwrap(), Ideal::unit());
        assert_eq!(factor_principal(&k, &t, &k.element(&[2, 0])).unwrap(), a.pow(2));
        // 3+i = (1+i)(2−i); its conjugate-side partner 1+3i = (1+i)(2+i)
        assert_eq!(factor_principal(&k, &t, &k.element(&[3, 1])).unwrap(), a.mul(&b2));
        assert_eq!(factor_principal(&k, &t, &k.element(&[1, 3])).unwrap(), a.mul(&b));
        assert_eq!(factor_principal(&k, &t, &k.element(&[0, 0])).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn denominator_examples() {
        let k = qi();
        let t = PrimeTable::new(&k);
        let (a, _, _, _) = gaussian(&t, &k);
        let two = FractionalElement::from_element(&k.element(&[2, 0]));
        assert_eq!(denominator_ideal(&k, &t, &two).unwrap(), Ideal::unit());
        // 1/(1+i) = (1−i)/2
        let g = FractionalElement::new(k.element(&[1, -1]), BigInt::from(2)).unwrap();
        assert_eq!(denominator_ideal(&k, &t, &g).unwrap(), a);

        let kq = q();
        let tq = PrimeTable::new(&kq);
        let g = FractionalElement::new(kq.element(&[3]), BigInt::from(4)).unwrap();
        assert_eq!(denominator_ideal(&kq, &tq, &g).unwrap(), tq.integer_ideal(4).unwrap());
    }

    #[test]
    fn display_is_readable() {
        let k = qi();
        let t = PrimeTable::new(&k);
        let (a, _, _, c) = gaussian(&t, &k);
        assert_eq!(a.pow(2).mul(&c).to_string(), "(2, t+1)^2*(3)");
        assert_eq!(Ideal::unit().to_string(), "O_K");
    }
}
