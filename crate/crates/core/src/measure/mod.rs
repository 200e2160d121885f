//! Approximation sets A_n ⊂ D_K and their Lebesgue measure.
//!
//! A_n is the union, over the Φ(n) centers γ = α/β with dnm γ = n, of the
//! boxes |x_ρ − ρ(γ)|_ρ ≤ ψ_ρ(n), clipped to the fundamental domain. Lattice
//! translates of a box are kept whenever they reach the closed domain.
//!
//! Measures are exact for degree 1 (rational interval sweep when ψ is
//! exact) and for axis-aligned degree-2 domains (disc unions via Green's
//! theorem). Everything else goes through counter-based Monte Carlo.

pub mod experiment;
pub mod geometry;
pub mod monte_carlo;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{EmbeddingPoint, FieldElement, NumberField};
use crate::ideal::{denominator_ideal, factor_principal, FractionalElement, Ideal, PrimeTable};
use crate::psi::PsiSystem;

use geometry::{disc_union_area, intersection_length, merge_intervals, pairwise_disjoint, total_length, Disc, Rect};

pub use experiment::{
    overlap_report, pair_count_oracle, quasi_independence_experiment, OverlapRecord, QuasiRecord,
};

/// One Ψ⃗-box: half-width ψ_ρ at real places, a disc |z − c|² ≤ ψ_ρ at
/// complex places.
#[derive(Clone, Debug)]
pub struct ApproxBox {
    pub center: EmbeddingPoint,
    /// exact basis coordinates of the center, translate included
    pub coords: Vec<BigRational>,
    pub psi: Vec<f64>,
    pub psi_exact: Option<Vec<BigRational>>,
}

impl ApproxBox {
    /// Π_real 2ψ_ρ · Π_complex πψ_ρ.
    pub fn volume(&self) -> f64 {
        let s = self.center.real.len();
        self.psi
            .iter()
            .enumerate()
            .map(|(rho, p)| if rho < s { 2.0 * p } else { std::f64::consts::PI * p })
            .product()
    }

    /// Membership of a flattened point of ℝ^n.
    pub fn contains_flat(&self, x: &[f64]) -> bool {
        let s = self.center.real.len();
        for (rho, p) in self.psi.iter().enumerate() {
            if rho < s {
                if (x[rho] - self.center.real[rho]).abs() > *p {
                    return false;
                }
            } else {
                let j = rho - s;
                let c = self.center.complex[j];
                let (dx, dy) = (x[s + 2 * j] - c.re, x[s + 2 * j + 1] - c.im);
                if dx * dx + dy * dy > *p {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct ApproxSet {
    pub n: Ideal,
    pub boxes: Vec<ApproxBox>,
    pub center_classes: Vec<FractionalElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    MonteCarlo,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::MonteCarlo => "monte_carlo",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureEstimate {
    pub value: f64,
    #[serde(skip)]
    pub exact: Option<BigRational>,
    pub method: Method,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

impl MeasureEstimate {
    fn exact(value: f64, exact: Option<BigRational>) -> Self {
        MeasureEstimate { value, exact, method: Method::Exact, stderr: 0.0, samples: 0, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureOptions {
    pub samples: u64,
    pub seed: u64,
    /// use Monte Carlo even where an exact path exists
    pub force_monte_carlo: bool,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions { samples: 100_000, seed: 0, force_monte_carlo: false }
    }
}

/// Integral elements with max |coordinate| = k, in a fixed order.
fn shell(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-k..=k).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|c| c.abs() == k));
    out
}

/// A generator β of a principal ideal n, searched by growing max-coordinate
/// shells up to ⌈4·Nm(n)^{1/n}⌉.
pub fn find_generator(field: &NumberField, table: &PrimeTable, n: &Ideal) -> Result<FieldElement> {
    let deg = field.degree();
    if n.is_unit() {
        return Ok(FieldElement::one(deg));
    }
    let target = BigInt::from(n.norm());
    let cap = (4.0 * (n.norm() as f64).powf(1.0 / deg as f64)).ceil() as i64;
    for k in 1..=cap {
        for v in shell(deg, k) {
            let b = field.element(&v);
            let nm = field.norm(&b);
            if nm.numer().magnitude() != target.magnitude() || !nm.is_integer() {
                continue;
            }
            if factor_principal(field, table, &b)? == *n {
                return Ok(b);
            }
        }
    }
    Err(Error::NoGeneratorFound(n.to_string(), cap))
}

/// Representatives α/β mod O_K, α over the invertible residues mod n, with
/// coordinates reduced into [0, 1).
pub fn approximant_centers(field: &NumberField, table: &PrimeTable, n: &Ideal) -> Result<Vec<FractionalElement>> {
    let beta = find_generator(field, table, n)?;
    centers_for_generator(field, table, n, &beta)
}

pub fn centers_for_generator(
    field: &NumberField,
    table: &PrimeTable,
    n: &Ideal,
    beta: &FieldElement,
) -> Result<Vec<FractionalElement>> {
    let deg = field.degree();
    if n.is_unit() {
        return Ok(vec![FractionalElement::from_element(&FieldElement::zero(deg))]);
    }
    let inv = field.inverse(beta)?;
    let primes: Vec<Ideal> = n.primes().map(|p| Ideal::prime(p.clone())).collect();
    let mut out = Vec::new();
    for r in n.hnf(field).residue_representatives() {
        let coords: Vec<i64> = r.iter().map(|c| *c as i64).collect();
        let alpha = field.element(&coords);
        if primes.iter().any(|p| p.contains(field, &alpha)) {
            continue;
        }
        let gamma = field.mul(&alpha, &inv).reduce_mod_integers();
        let f = FractionalElement::from_element(&gamma);
        debug_assert_eq!(denominator_ideal(field, table, &f).ok().as_ref(), Some(n));
        out.push(f);
    }
    out.sort_by(|a, b| a.to_element().coords.cmp(&b.to_element().coords));
    Ok(out)
}

/// Basis-coordinate half-extent of a box with flattened half-widths `w`.
fn coordinate_reach(field: &NumberField, w: &[f64]) -> Vec<f64> {
    let deg = field.degree();
    let mut reach = vec![0.0; deg];
    for (j, wj) in w.iter().enumerate() {
        let mut e = vec![0.0; deg];
        e[j] = 1.0;
        let (s, t) = field.signature();
        let col = field.basis_coordinates(&EmbeddingPoint::from_real_vec(&e, s, t));
        for i in 0..deg {
            reach[i] += col[i].abs() * wj;
        }
    }
    reach
}

/// Flattened per-coordinate half-widths of the box with place values ψ.
fn flat_widths(field: &NumberField, psi: &[f64]) -> Vec<f64> {
    let (s, _) = field.signature();
    let mut w = Vec::new();
    for (rho, p) in psi.iter().enumerate() {
        if rho < s {
            w.push(*p);
        } else {
            w.push(p.sqrt());
            w.push(p.sqrt());
        }
    }
    w
}

/// Integer vectors k with t + k + [−reach, reach] meeting [lo, hi] coordinatewise.
pub(crate) fn translates(t: &[f64], reach: &[f64], lo: f64, hi: f64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for (ti, ri) in t.iter().zip(reach) {
        let kmin = (lo - ti - ri).ceil() as i64;
        let kmax = (hi - ti + ri).floor() as i64;
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (kmin..=kmax).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

fn disc_meets_domain(field: &NumberField, b: &ApproxBox) -> bool {
    if !field.axis_aligned_domain() || field.degree() != 2 {
        return true;
    }
    let c = b.center.complex[0];
    let scale = field.complex_roots()[0].im;
    let rect = Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: scale };
    Disc { cx: c.re, cy: c.im, r: b.psi[0].sqrt() }.meets_rect(&rect)
}

pub fn build_approx_set(field: &NumberField, table: &PrimeTable, sys: &PsiSystem, n: &Ideal) -> Result<ApproxSet> {
    let centers = approximant_centers(field, table, n)?;
    let psi: Vec<f64> = (0..sys.places()).map(|rho| sys.eval(rho, n)).collect();
    let psi_exact: Option<Vec<BigRational>> = (0..sys.places()).map(|rho| sys.eval_exact(rho, n)).collect();
    let mut boxes = Vec::new();
    if psi.iter().all(|p| *p > 0.0) {
        let reach = coordinate_reach(field, &flat_widths(field, &psi));
        for c in &centers {
            let coords = c.to_element().coords;
            let t: Vec<f64> = coords.iter().map(|x| x.to_f64().unwrap()).collect();
            for k in translates(&t, &reach, 0.0, 1.0) {
                let shifted: Vec<BigRational> =
                    coords.iter().zip(&k).map(|(x, ki)| x + BigRational::from_integer(BigInt::from(*ki))).collect();
                let center = field.embed(&FieldElement::from_rationals(shifted.clone()));
                let b = ApproxBox { center, coords: shifted, psi: psi.clone(), psi_exact: psi_exact.clone() };
                if disc_meets_domain(field, &b) {
                    boxes.push(b);
                }
            }
        }
    }
    Ok(ApproxSet { n: n.clone(), boxes, center_classes: centers })
}

/// Which exact path, if any, applies to this field.
fn exact_path(field: &NumberField) -> Option<usize> {
    match field.degree() {
        1 => Some(1),
        2 if field.axis_aligned_domain() => Some(2),
        _ => None,
    }
}

fn intervals_exact(set: &ApproxSet) -> Option<Vec<(BigRational, BigRational)>> {
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());
    let mut v = Vec::new();
    for b in &set.boxes {
        let w = b.psi_exact.as_ref()?[0].clone();
        let c = &b.coords[0];
        let lo = (c - &w).max(zero.clone());
        let hi = (c + &w).min(one.clone());
        v.push((lo, hi));
    }
    Some(merge_intervals(v))
}

fn intervals_float(set: &ApproxSet) -> Vec<(f64, f64)> {
    let v = set
        .boxes
        .iter()
        .map(|b| {
            let c = b.coords[0].to_f64().unwrap();
            ((c - b.psi[0]).max(0.0), (c + b.psi[0]).min(1.0))
        })
        .collect();
    merge_intervals(v)
}

fn discs(set: &ApproxSet) -> Vec<Disc> {
    set.boxes
        .iter()
        .map(|b| {
            let c = b.center.complex[0];
            Disc { cx: c.re, cy: c.im, r: b.psi[0].sqrt() }
        })
        .collect()
}

fn domain_rect(field: &NumberField) -> Rect {
    Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: field.complex_roots()[0].im }
}

/// λ(A_n) for one set, λ(A_m ∩ A_n) for two.
pub fn measure_of(field: &NumberField, sets: &[&ApproxSet], opts: &MeasureOptions) -> Result<MeasureEstimate> {
    if sets.is_empty() || sets.len() > 2 {
        return Err(Error::InvalidArgument(format!("measure_of takes one or two sets, got {}", sets.len())));
    }
    if sets.iter().any(|s| s.boxes.is_empty()) {
        return Ok(MeasureEstimate::exact(0.0, Some(BigRational::zero())));
    }
    // a canonical order makes the result independent of argument order
    let mut sets: Vec<&ApproxSet> = sets.to_vec();
    sets.sort_by(|a, b| a.n.cmp(&b.n));
    if !opts.force_monte_carlo {
        match exact_path(field) {
            Some(1) => {
                let exact: Option<Vec<_>> = sets.iter().map(|s| intervals_exact(s)).collect();
                if let Some(lists) = exact {
                    let v = if lists.len() == 1 {
                        total_length(&lists[0])
                    } else {
                        intersection_length(&lists[0], &lists[1])
                    };
                    return Ok(MeasureEstimate::exact(v.to_f64().unwrap(), Some(v)));
                }
                let lists: Vec<_> = sets.iter().map(|s| intervals_float(s)).collect();
                let v = if lists.len() == 1 {
                    total_length(&lists[0])
                } else {
                    intersection_length(&lists[0], &lists[1])
                };
                return Ok(MeasureEstimate::exact(v, None));
            }
            Some(2) => {
                let rect = domain_rect(field);
                let d: Vec<Vec<Disc>> = sets.iter().map(|s| discs(s)).collect();
                if d.len() == 1 {
                    return Ok(MeasureEstimate::exact(disc_union_area(&d[0], rect), None));
                }
                if pairwise_disjoint(&d[0], &d[1]) {
                    return Ok(MeasureEstimate::exact(0.0, Some(BigRational::zero())));
                }
                let a = disc_union_area(&d[0], rect);
                let b = disc_union_area(&d[1], rect);
                let both: Vec<Disc> = d[0].iter().chain(&d[1]).copied().collect();
                let v = (a + b - disc_union_area(&both, rect)).max(0.0);
                return Ok(MeasureEstimate::exact(v, None));
            }
            _ => {}
        }
    }
    Ok(monte_carlo::estimate(field, &sets, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_field, NumberFieldSpec};

    fn setup(poly: Vec<i64>) -> (NumberField, PrimeTable) {
        let k = build_field(&NumberFieldSpec::new(poly)).unwrap();
        let t = PrimeTable::new(&k);
        (k, t)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn by_norm(t: &PrimeTable, norm: u64, index: usize) -> Ideal {
        t.enumerate_ideals(norm, false).into_iter().filter(|a| a.norm() == norm).nth(index).unwrap()
    }

    #[test]
    fn rational_centers() {
        let (k, t) = setup(vec![0, 1]);
        let c = approximant_centers(&k, &t, &t.integer_ideal(5).unwrap()).unwrap();
        let v: Vec<BigRational> = c.iter().map(|f| f.to_element().coords[0].clone()).collect();
        assert_eq!(v, vec![rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)]);
        let unit = approximant_centers(&k, &t, &Ideal::unit()).unwrap();
        assert_eq!(unit.len(), 1);
        assert!(unit[0].to_element().is_zero());
    }

    #[test]
    fn gaussian_centers() {
        let (k, t) = setup(vec![1, 0, 1]);
        for n in t.enumerate_ideals(50, false) {
            let c = approximant_centers(&k, &t, &n).unwrap();
            assert_eq!(c.len() as u64, n.euler_phi(), "{n}");
            for g in c.iter().filter(|_| !n.is_unit()) {
                assert_eq!(denominator_ideal(&k, &t, g).unwrap(), n);
            }
        }
        // the center set does not depend on the generator's unit
        let n = by_norm(&t, 5, 0);
        let beta = find_generator(&k, &t, &n).unwrap();
        let i_beta = k.mul(&k.element(&[0, 1]), &beta);
        assert_eq!(
            centers_for_generator(&k, &t, &n, &beta).unwrap(),
            centers_for_generator(&k, &t, &n, &i_beta).unwrap()
        );
    }

    #[test]
    fn rational_measure() {
        let (k, t) = setup(vec![0, 1]);
        let sys = PsiSystem::uniform((1, 0), 0.25, 2.0).unwrap();
        let set = build_approx_set(&k, &t, &sys, &t.integer_ideal(5).unwrap()).unwrap();
        assert_eq!(set.boxes.len(), 4);
        let m = measure_of(&k, &[&set], &MeasureOptions::default()).unwrap();
        assert_eq!(m.exact, Some(rat(2, 25)));
        assert_eq!(m.method, Method::Exact);
        // O_K: [0, 1/4] ∪ [3/4, 1] from the translate of 0
        let unit = build_approx_set(&k, &t, &sys, &Ideal::unit()).unwrap();
        assert_eq!(measure_of(&k, &[&unit], &MeasureOptions::default()).unwrap().exact, Some(rat(1, 2)));
        let zero = PsiSystem::uniform((1, 0), 0.0, 2.0).unwrap();
        let empty = build_approx_set(&k, &t, &zero, &t.integer_ideal(5).unwrap()).unwrap();
        assert!(empty.boxes.is_empty());
        assert_eq!(measure_of(&k, &[&empty], &MeasureOptions::default()).unwrap().value, 0.0);
    }

    #[test]
    fn gaussian_disc_set() {
        let (k, t) = setup(vec![1, 0, 1]);
        let sys = PsiSystem::uniform((0, 1), 1.0, 2.0).unwrap();
        let n = by_norm(&t, 2, 0);
        let set = build_approx_set(&k, &t, &sys, &n).unwrap();
        assert_eq!(set.center_classes.len(), 1);
        // radius 1/2 around (1+i)/2 and its translates meeting the square
        let m = measure_of(&k, &[&set], &MeasureOptions::default()).unwrap();
        assert!((m.value - 1.0).abs() < 1e-12 || m.value < 1.0);
        assert!(m.value > std::f64::consts::PI / 4.0 - 1e-12);
    }

    #[test]
    fn symmetric_and_agrees_with_monte_carlo() {
        let (k, t) = setup(vec![1, 0, 1]);
        let sys = PsiSystem::uniform((0, 1), 0.25, 2.0).unwrap();
        let a = build_approx_set(&k, &t, &sys, &by_norm(&t, 2, 0)).unwrap();
        let b = build_approx_set(&k, &t, &sys, &by_norm(&t, 5, 0)).unwrap();
        let opts = MeasureOptions::default();
        let ab = measure_of(&k, &[&a, &b], &opts).unwrap();
        let ba = measure_of(&k, &[&b, &a], &opts).unwrap();
        assert_eq!(ab.value.to_bits(), ba.value.to_bits());
        let mc_opts = MeasureOptions { force_monte_carlo: true, ..opts };
        let single = measure_of(&k, &[&b], &opts).unwrap();
        let mc = measure_of(&k, &[&b], &mc_opts).unwrap();
        assert!((mc.value - single.value).abs() <= 3.0 * mc.stderr + 1e-12);
        let mc2 = measure_of(&k, &[&b, &a], &mc_opts).unwrap();
        assert_eq!(measure_of(&k, &[&a, &b], &mc_opts).unwrap(), mc2);
    }
}
