//! Multi-embedding approximation functions ψ_ρ(a) = c_ρ·Nm(a)^{−e_ρ} with
//! finite overrides and a support restriction, plus the pair quantities
//! D(m,n), P(m,n), τ(m,n) and the L/M/N split that control overlaps.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfun::g;
use crate::ideal::{Ideal, PrimeTable};

/// Width of the band around the zero-overlap threshold inside which a
/// float-valued D is reported as a boundary case.
pub const GUARD_BAND: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PsiRule {
    pub embedding: usize,
    pub c: f64,
    pub e: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Support {
    All(AllTag),
    NormRange { norm_min: u64, norm_max: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AllTag {
    All,
}

impl Default for Support {
    fn default() -> Self {
        Support::All(AllTag::All)
    }
}

impl Support {
    pub fn contains(&self, a: &Ideal) -> bool {
        match self {
            Support::All(_) => true,
            Support::NormRange { norm_min, norm_max } => (*norm_min..=*norm_max).contains(&a.norm()),
        }
    }
}

/// Shortest decimal form of a finite double, read back as a rational, so
/// that a configured 0.1 means 1/10.
pub fn decimal_rational(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let s = format!("{x:e}");
    let (mant, exp) = s.split_once('e')?;
    let exp: i32 = exp.parse().ok()?;
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Some(if shift >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-shift) as usize))
    })
}

#[derive(Clone, Debug)]
pub struct PsiSystem {
    rules: Vec<PsiRule>,
    overrides: HashMap<(usize, Ideal), f64>,
    support: Support,
    signature: (usize, usize),
}

impl PsiSystem {
    /// One rule per embedding; embeddings are numbered real places first,
    /// then one per conjugate pair of complex places.
    pub fn new(signature: (usize, usize), mut rules: Vec<PsiRule>) -> Result<PsiSystem> {
        let places = signature.0 + signature.1;
        rules.sort_by_key(|r| r.embedding);
        let indices: Vec<usize> = rules.iter().map(|r| r.embedding).collect();
        if indices != (0..places).collect::<Vec<_>>() {
            return Err(Error::ConfigInvalid(format!(
                "psi: need exactly one rule for each embedding 0..{places}, got {indices:?}"
            )));
        }
        for r in &rules {
            if !(r.c.is_finite() && r.c >= 0.0 && r.e.is_finite()) {
                return Err(Error::ConfigInvalid(format!(
                    "psi: embedding {} needs finite c ≥ 0 and finite e",
                    r.embedding
                )));
            }
        }
        Ok(PsiSystem { rules, overrides: HashMap::new(), support: Support::default(), signature })
    }

    /// The same rule at every embedding.
    pub fn uniform(signature: (usize, usize), c: f64, e: f64) -> Result<PsiSystem> {
        let rules = (0..signature.0 + signature.1).map(|embedding| PsiRule { embedding, c, e }).collect();
        PsiSystem::new(signature, rules)
    }

    pub fn with_override(mut self, embedding: usize, a: Ideal, value: f64) -> Result<PsiSystem> {
        if embedding >= self.places() || !(value.is_finite() && value >= 0.0) {
            return Err(Error::ConfigInvalid(format!(
                "override at embedding {embedding} for {a}: value {value} must be finite and ≥ 0"
            )));
        }
        self.overrides.insert((embedding, a), value);
        Ok(self)
    }

    pub fn with_support(mut self, support: Support) -> PsiSystem {
        self.support = support;
        self
    }

    pub fn places(&self) -> usize {
        self.rules.len()
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn rules(&self) -> &[PsiRule] {
        &self.rules
    }

    pub fn has_overrides(&self) -> bool {
        !self.overrides.is_empty()
    }

    pub fn eval(&self, rho: usize, a: &Ideal) -> f64 {
        if !self.support.contains(a) {
            return 0.0;
        }
        if let Some(v) = self.overrides.get(&(rho, a.clone())) {
            return *v;
        }
        let r = &self.rules[rho];
        if r.c == 0.0 {
            return 0.0;
        }
        let nm = a.norm() as f64;
        if r.e.fract() == 0.0 && r.e.abs() <= i32::MAX as f64 {
            r.c * nm.powi(-(r.e as i32))
        } else {
            r.c * nm.powf(-r.e)
        }
    }

    /// ψ_ρ(a) as an exact rational when the rule has an integer exponent
    /// (or an override or the support decides the value).
    pub fn eval_exact(&self, rho: usize, a: &Ideal) -> Option<BigRational> {
        if !self.support.contains(a) {
            return Some(BigRational::zero());
        }
        if let Some(v) = self.overrides.get(&(rho, a.clone())) {
            return decimal_rational(*v);
        }
        let r = &self.rules[rho];
        let c = decimal_rational(r.c)?;
        if c.is_zero() {
            return Some(c);
        }
        if r.e.fract() != 0.0 || r.e.abs() > 64.0 {
            return None;
        }
        let nm = BigInt::from(a.norm());
        let k = r.e.abs() as usize;
        let p = num_traits::pow(nm, k);
        Some(if r.e >= 0.0 { c / p } else { c * p })
    }

    /// Ψ(a) = Π_ρ ψ_ρ(a), multiplied in embedding order.
    pub fn big_psi(&self, a: &Ideal) -> f64 {
        (0..self.places()).map(|rho| self.eval(rho, a)).product()
    }
}

pub fn psi_eval(sys: &PsiSystem, rho: usize, a: &Ideal) -> f64 {
    sys.eval(rho, a)
}

pub fn big_psi(sys: &PsiSystem, a: &Ideal) -> f64 {
    sys.big_psi(a)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub ideal: String,
    pub norm: u64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BalancedVerdict {
    pub balanced: bool,
    pub trivially: bool,
    /// largest ratio Π_{Σ′} ψ / Π_{Σ∖Σ′} ψ seen in the scan
    pub max_ratio: Option<f64>,
    pub witness: Option<Witness>,
}

fn half_subsets(places: usize) -> Vec<Vec<bool>> {
    (0u32..1 << places)
        .filter(|mask| mask.count_ones() as usize * 2 == places)
        .map(|mask| (0..places).map(|i| mask >> i & 1 == 1).collect())
        .collect()
}

pub fn balanced_check(sys: &PsiSystem, table: &PrimeTable, cap: u64) -> BalancedVerdict {
    let places = sys.places();
    if places % 2 == 1 {
        return BalancedVerdict { balanced: true, trivially: true, max_ratio: None, witness: None };
    }
    let subsets = half_subsets(places);
    // parametric verdict: equal exponent sums and no zero-against-nonzero split
    let mut parametric = true;
    for s in &subsets {
        let (mut e_in, mut e_out, mut c_in, mut c_out) = (0.0, 0.0, 1.0, 1.0);
        for (r, inside) in sys.rules.iter().zip(s) {
            if *inside {
                e_in += r.e;
                c_in *= r.c;
            } else {
                e_out += r.e;
                c_out *= r.c;
            }
        }
        let zero_split = c_out == 0.0 && c_in != 0.0;
        if zero_split || (c_in != 0.0 && (e_in - e_out).abs() > 1e-12) {
            parametric = false;
        }
    }
    let mut best: Option<(f64, Witness)> = None;
    for a in table.enumerate_ideals(cap, false) {
        let vals: Vec<f64> = (0..places).map(|rho| sys.eval(rho, &a)).collect();
        for s in &subsets {
            let num: f64 = vals.iter().zip(s).filter(|(_, i)| **i).map(|(v, _)| v).product();
            let den: f64 = vals.iter().zip(s).filter(|(_, i)| !**i).map(|(v, _)| v).product();
            let ratio = if den == 0.0 {
                if num == 0.0 {
                    continue;
                }
                f64::INFINITY
            } else {
                num / den
            };
            if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
                best = Some((ratio, Witness { ideal: a.to_string(), norm: a.norm(), value: ratio }));
            }
        }
    }
    let finite = best.as_ref().is_none_or(|(r, _)| r.is_finite());
    let (max_ratio, witness) = match best {
        Some((r, w)) => (Some(r), Some(w)),
        None => (None, None),
    };
    BalancedVerdict { balanced: parametric && finite, trivially: false, max_ratio, witness }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VaalerVerdict {
    pub satisfied: bool,
    pub threshold_exponent: f64,
    /// max over the scan of ψ_ρ(a)·Nm(a)^{2/(s+t)}
    pub max_scaled: f64,
    pub witness: Option<Witness>,
}

/// ψ_ρ(a) ≪ Nm(a)^{−2/(s+t)}: decided from the exponents; the scan
/// supplies the growth witness.
pub fn vaaler_condition_check(sys: &PsiSystem, table: &PrimeTable, cap: u64) -> VaalerVerdict {
    let places = sys.places() as f64;
    let thr = 2.0 / places;
    let satisfied = sys.rules.iter().all(|r| r.c == 0.0 || r.e * places >= 2.0 - 1e-12);
    let mut max_scaled = 0.0;
    let mut witness = None;
    for a in table.enumerate_ideals(cap, false) {
        let scale = (a.norm() as f64).powf(thr);
        for rho in 0..sys.places() {
            let v = sys.eval(rho, &a) * scale;
            if v > max_scaled {
                max_scaled = v;
                witness = Some(Witness { ideal: a.to_string(), norm: a.norm(), value: v });
            }
        }
    }
    VaalerVerdict { satisfied, threshold_exponent: thr, max_scaled, witness }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// D ≤ 2^{−(s+t)}
    ZeroOrDisjoint,
    /// 2^{−(s+t)} < D < τ
    Log,
    /// τ ≤ D
    Flat,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::ZeroOrDisjoint => "zero-or-disjoint",
            Regime::Log => "log",
            Regime::Flat => "flat",
        })
    }
}

#[derive(Clone, Debug)]
pub struct PairGeometry {
    pub m: Ideal,
    pub n: Ideal,
    pub gcd: Ideal,
    pub l: Ideal,
    pub mm: Ideal,
    pub nn: Ideal,
    pub d: f64,
    /// D as an exact rational when every ψ value involved is exact
    pub d_exact: Option<BigRational>,
    pub p: f64,
    pub tau: u64,
    pub regime: Regime,
    /// float D within the guard band of a threshold
    pub boundary: bool,
}

/// L = Π_{u=v} 𝔭^u, M = Π_{u≠v} 𝔭^{min}, N = Π_{u≠v} 𝔭^{max}.
pub fn lmn_split(m: &Ideal, n: &Ideal) -> (Ideal, Ideal, Ideal) {
    let mut l = Vec::new();
    let mut mm = Vec::new();
    let mut nn = Vec::new();
    for p in m.lcm(n).primes() {
        let (u, v) = (m.exponent_of(p), n.exponent_of(p));
        if u == v {
            l.push((p.clone(), u));
        } else {
            if u.min(v) > 0 {
                mm.push((p.clone(), u.min(v)));
            }
            nn.push((p.clone(), u.max(v)));
        }
    }
    (Ideal::from_factors(l), Ideal::from_factors(mm), Ideal::from_factors(nn))
}

/// Order of D against a threshold t: exact when D is exact, otherwise by
/// float with a flag for values inside the guard band.
fn compare(exact: Option<&BigRational>, approx: f64, t: &BigRational) -> (Ordering, bool) {
    match exact {
        Some(e) => (e.cmp(t), false),
        None => {
            let tf = t.to_f64().unwrap();
            let band = (approx - tf).abs() <= GUARD_BAND * tf.max(1.0);
            (approx.partial_cmp(&tf).unwrap_or(Ordering::Equal), band)
        }
    }
}

pub fn pair_geometry(sys: &PsiSystem, m: &Ideal, n: &Ideal) -> Result<PairGeometry> {
    if m == n {
        return Err(Error::EqualIdeals(m.to_string()));
    }
    let gcd = m.gcd(n);
    let lcm = m.lcm(n);
    let (l, mm, nn) = lmn_split(m, n);
    let mut d = lcm.norm() as f64;
    let mut d_exact = Some(BigRational::from_integer(BigInt::from(lcm.norm())));
    for rho in 0..sys.places() {
        d *= sys.eval(rho, m).max(sys.eval(rho, n));
        d_exact = match (d_exact, sys.eval_exact(rho, m), sys.eval_exact(rho, n)) {
            (Some(acc), Some(a), Some(b)) => Some(acc * a.max(b)),
            _ => None,
        };
    }
    let m0 = m.quotient(&gcd)?;
    let n0 = n.quotient(&gcd)?;
    let mut boundary = false;
    let mut p = 1.0;
    for q in m0.mul(&n0).primes() {
        let (ord, band) = compare(d_exact.as_ref(), d, &BigRational::from_integer(BigInt::from(q.norm())));
        boundary |= band;
        if ord == Ordering::Less {
            let qf = q.norm() as f64;
            p *= qf / (qf - 1.0);
        }
    }
    let tau = g(&m0).max(g(&n0));
    let zero_thr = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(2), sys.places()));
    let (vs_zero, band0) = compare(d_exact.as_ref(), d, &zero_thr);
    let (vs_tau, band1) = compare(d_exact.as_ref(), d, &BigRational::from_integer(BigInt::from(tau)));
    boundary |= band0 || band1;
    let regime = if vs_zero != Ordering::Greater {
        Regime::ZeroOrDisjoint
    } else if vs_tau == Ordering::Less {
        Regime::Log
    } else {
        Regime::Flat
    };
    Ok(PairGeometry { m: m.clone(), n: n.clone(), gcd, l, mm, nn, d, d_exact, p, tau, regime, boundary })
}

/// Σ_{Nm n ≤ R} Φ(n)Ψ(n).
pub fn divergence_partial_sum(sys: &PsiSystem, table: &PrimeTable, r: u64) -> f64 {
    table.enumerate_ideals(r, false).iter().map(|a| a.euler_phi() as f64 * sys.big_psi(a)).sum()
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

    fn by_norm(t: &PrimeTable, norm: u64, index: usize) -> Ideal {
        t.enumerate_ideals(norm, false).into_iter().filter(|a| a.norm() == norm).nth(index).unwrap()
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(decimal_rational(0.1), Some(rat(1, 10)));
        assert_eq!(decimal_rational(0.25), Some(rat(1, 4)));
        assert_eq!(decimal_rational(1200.0), Some(rat(1200, 1)));
        assert_eq!(decimal_rational(-3.5e-3), Some(rat(-7, 2000)));
        assert_eq!(decimal_rational(f64::NAN), None);
    }

    #[test]
    fn evaluation() {
        let gi = table(vec![1, 0, 1]);
        let sys = PsiSystem::uniform((0, 1), 1.0, 2.0).unwrap();
        let a = by_norm(&gi, 5, 0);
        assert_eq!(sys.eval(0, &a), 1.0 / 25.0);
        assert_eq!(sys.eval_exact(0, &a), Some(rat(1, 25)));
        let zero = PsiSystem::uniform((0, 1), 0.0, 2.0).unwrap();
        assert_eq!(zero.big_psi(&a), 0.0);

        let r2 = table(vec![-2, 0, 1]);
        let sys = PsiSystem::uniform((2, 0), 1.0, 1.0).unwrap();
        // (2) = (√2)² has norm 4; the prime (√2) has norm 2
        assert_eq!(sys.big_psi(&r2.integer_ideal(2).unwrap()), 1.0 / 16.0);
        assert_eq!(sys.big_psi(&by_norm(&r2, 2, 0)), 0.25);

        let sys = PsiSystem::uniform((0, 1), 1.0, 2.0)
            .unwrap()
            .with_override(0, a.clone(), 0.5)
            .unwrap()
            .with_support(Support::NormRange { norm_min: 2, norm_max: 10 });
        assert_eq!(sys.eval(0, &a), 0.5);
        assert_eq!(sys.eval(0, &Ideal::unit()), 0.0);
        assert!(PsiSystem::new((2, 0), vec![PsiRule { embedding: 0, c: 1.0, e: 1.0 }]).is_err());
    }

    #[test]
    fn support_from_json() {
        let s: Support = serde_json::from_str("\"all\"").unwrap();
        assert_eq!(s, Support::default());
        let s: Support = serde_json::from_str(r#"{"norm_min": 2, "norm_max": 9}"#).unwrap();
        assert_eq!(s, Support::NormRange { norm_min: 2, norm_max: 9 });
    }

    #[test]
    fn balanced_examples() {
        let gi = table(vec![1, 0, 1]);
        let v = balanced_check(&PsiSystem::uniform((0, 1), 1.0, 2.0).unwrap(), &gi, 50);
        assert!(v.balanced && v.trivially);

        let r2 = table(vec![-2, 0, 1]);
        let rules = |e0, c1, e1| {
            vec![PsiRule { embedding: 0, c: 1.0, e: e0 }, PsiRule { embedding: 1, c: c1, e: e1 }]
        };
        let v = balanced_check(&PsiSystem::new((2, 0), rules(1.0, 2.0, 1.0)).unwrap(), &r2, 100);
        assert!(v.balanced && !v.trivially);
        assert_eq!(v.max_ratio, Some(2.0));

        let v = balanced_check(&PsiSystem::new((2, 0), rules(0.5, 1.0, 1.5)).unwrap(), &r2, 100);
        assert!(!v.balanced);
        let w = v.witness.unwrap();
        assert_eq!(w.norm, 100);
        assert!((w.value - 100.0).abs() < 1e-9);
    }

    #[test]
    fn vaaler_examples() {
        let gi = table(vec![1, 0, 1]);
        assert!(vaaler_condition_check(&PsiSystem::uniform((0, 1), 0.25, 2.0).unwrap(), &gi, 50).satisfied);
        let r2 = table(vec![-2, 0, 1]);
        assert!(vaaler_condition_check(&PsiSystem::uniform((2, 0), 1.0, 1.0).unwrap(), &r2, 50).satisfied);
        let v = vaaler_condition_check(&PsiSystem::uniform((0, 1), 1.0, 1.0).unwrap(), &gi, 50);
        assert!(!v.satisfied);
        assert_eq!(v.witness.unwrap().norm, 50);
        assert!((v.max_scaled - 50.0).abs() < 1e-9);
    }

    #[test]
    fn pair_examples() {
        let q = table(vec![0, 1]);
        let sys = PsiSystem::uniform((1, 0), 0.25, 2.0).unwrap();
        let two = q.integer_ideal(2).unwrap();
        let three = q.integer_ideal(3).unwrap();
        let pg = pair_geometry(&sys, &two, &three).unwrap();
        assert_eq!(pg.d_exact, Some(rat(3, 8)));
        assert!((pg.p - 3.0).abs() < 1e-12);
        assert_eq!(pg.tau, 2);
        assert_eq!(pg.regime, Regime::ZeroOrDisjoint);
        assert!(matches!(pair_geometry(&sys, &two, &two), Err(Error::EqualIdeals(_))));

        let i = |k| q.integer_ideal(k).unwrap();
        let (l, m, n) = lmn_split(&i(12), &i(18));
        assert_eq!((l.norm(), m.norm(), n.norm()), (1, 6, 36));
        let (l, m, n) = lmn_split(&i(12), &i(6));
        assert_eq!((l.norm(), m.norm(), n.norm()), (3, 2, 4));
    }

    #[test]
    fn pair_invariants() {
        let gi = table(vec![1, 0, 1]);
        let sys = PsiSystem::uniform((0, 1), 0.25, 2.0).unwrap();
        let ideals = gi.enumerate_ideals(40, false);
        for m in &ideals {
            for n in &ideals {
                if m == n {
                    continue;
                }
                let a = pair_geometry(&sys, m, n).unwrap();
                let b = pair_geometry(&sys, n, m).unwrap();
                assert_eq!(a.l.mul(&a.mm), a.gcd);
                assert_eq!(a.l.pow(2).mul(&a.mm).mul(&a.nn), m.mul(n));
                let phi = |x: &Ideal| x.euler_phi();
                assert_eq!(phi(&a.l).pow(2) * phi(&a.mm) * phi(&a.nn), phi(m) * phi(n));
                assert_eq!((a.d, a.p, a.tau), (b.d, b.p, b.tau));
                assert!(a.p >= 1.0 && a.tau >= 1);
            }
        }
    }

    #[test]
    fn partial_sums() {
        let gi = table(vec![1, 0, 1]);
        let sys = PsiSystem::uniform((0, 1), 1.0, 2.0).unwrap();
        assert!((divergence_partial_sum(&sys, &gi, 5) - 1.695).abs() < 1e-12);
        assert!(divergence_partial_sum(&sys, &gi, 100) >= divergence_partial_sum(&sys, &gi, 50));
        let zero = PsiSystem::uniform((0, 1), 0.0, 1.0).unwrap();
        assert_eq!(divergence_partial_sum(&zero, &gi, 100), 0.0);
    }
}
