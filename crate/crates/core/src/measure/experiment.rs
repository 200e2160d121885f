//! Pair overlaps, the brute-force pair count behind the overlap estimate,
//! and the quasi-independence sweep Σ λ(A_m ∩ A_n) against (Σ λ(A_n))².

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    approximant_centers, build_approx_set, coordinate_reach, flat_widths, measure_of, translates, ApproxSet,
    MeasureEstimate, MeasureOptions, Method,
};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::{Ideal, PrimeTable};
use crate::psi::{pair_geometry, PsiSystem, Regime};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OverlapRecord {
    pub nm_m: u64,
    pub nm_n: u64,
    pub m: String,
    pub n: String,
    pub lambda_m: f64,
    pub lambda_n: f64,
    pub lambda_mn: f64,
    pub d: f64,
    pub p: f64,
    pub tau: u64,
    pub regime: Regime,
    /// λmn/(P·λm·λn), absent when λm or λn vanishes
    pub ratio: Option<f64>,
    pub method: Method,
    pub stderr: f64,
}

fn record(
    sys: &PsiSystem,
    a: &ApproxSet,
    b: &ApproxSet,
    lm: &MeasureEstimate,
    ln: &MeasureEstimate,
    field: &NumberField,
    opts: &MeasureOptions,
) -> Result<OverlapRecord> {
    let pg = pair_geometry(sys, &a.n, &b.n)?;
    let lmn = measure_of(field, &[a, b], opts)?;
    let ratio = if lm.value > 0.0 && ln.value > 0.0 { Some(lmn.value / (pg.p * lm.value * ln.value)) } else { None };
    Ok(OverlapRecord {
        nm_m: a.n.norm(),
        nm_n: b.n.norm(),
        m: a.n.to_string(),
        n: b.n.to_string(),
        lambda_m: lm.value,
        lambda_n: ln.value,
        lambda_mn: lmn.value,
        d: pg.d,
        p: pg.p,
        tau: pg.tau,
        regime: pg.regime,
        ratio,
        method: lmn.method,
        stderr: lmn.stderr,
    })
}

pub fn overlap_report(
    field: &NumberField,
    table: &PrimeTable,
    sys: &PsiSystem,
    m: &Ideal,
    n: &Ideal,
    opts: &MeasureOptions,
) -> Result<OverlapRecord> {
    pair_geometry(sys, m, n)?;
    let a = build_approx_set(field, table, sys, m)?;
    let b = build_approx_set(field, table, sys, n)?;
    let lm = measure_of(field, &[&a], opts)?;
    let ln = measure_of(field, &[&b], opts)?;
    record(sys, &a, &b, &lm, &ln, field, opts)
}

/// #{(β, γ) : β a center for m, γ a center for n or a lattice translate,
/// |ρ(β − γ)|_ρ < Δ_ρ at every place}.
pub fn pair_count_oracle(field: &NumberField, table: &PrimeTable, m: &Ideal, n: &Ideal, delta: &[f64]) -> Result<u64> {
    if m == n {
        return Err(Error::EqualIdeals(m.to_string()));
    }
    let cm = approximant_centers(field, table, m)?;
    let cn = approximant_centers(field, table, n)?;
    let reach = coordinate_reach(field, &flat_widths(field, delta));
    let mut count = 0;
    for b in &cm {
        for g in &cn {
            let diff = b.to_element().sub(&g.to_element());
            // k with |t − k| within reach, where t are the coordinates of β − γ
            let neg_t: Vec<f64> = diff.coords.iter().map(|x| -x.to_f64().unwrap()).collect();
            for k in translates(&neg_t, &reach, 0.0, 0.0) {
                let p = field.embed(&diff.sub(&FieldElement::from_ints(&k)));
                if (0..delta.len()).all(|rho| p.place_abs(rho) < delta[rho]) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuasiRecord {
    pub r: u64,
    pub pair_sum: f64,
    pub single_sum: f64,
    /// pair_sum / single_sum², undefined when single_sum = 0
    pub ratio: Option<f64>,
    pub ratio_stderr: f64,
    pub max_pair_ratio: Option<f64>,
    #[serde(skip)]
    pub pairs: Vec<OverlapRecord>,
}

/// Sweep over all ideals with Nm ≤ R: singles for every n, pairs for
/// Nm m < Nm n. Pairs come back in (Nm m, Nm n, m, n) order.
pub fn quasi_independence_experiment(
    field: &NumberField,
    table: &PrimeTable,
    sys: &PsiSystem,
    r: u64,
    opts: &MeasureOptions,
) -> Result<QuasiRecord> {
    let ideals = table.enumerate_ideals(r, false);
    let sets: Vec<ApproxSet> =
        ideals.iter().map(|a| build_approx_set(field, table, sys, a)).collect::<Result<_>>()?;
    let singles: Vec<MeasureEstimate> =
        sets.par_iter().map(|s| measure_of(field, &[s], opts)).collect::<Result<_>>()?;
    let mut pair_idx = Vec::new();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if a.norm() < b.norm() {
                pair_idx.push((i, j));
            }
        }
    }
    let pairs: Vec<OverlapRecord> = pair_idx
        .par_iter()
        .map(|&(i, j)| record(sys, &sets[i], &sets[j], &singles[i], &singles[j], field, opts))
        .collect::<Result<_>>()?;
    let single_sum: f64 = singles.iter().map(|m| m.value).sum();
    let single_var: f64 = singles.iter().map(|m| m.stderr * m.stderr).sum();
    let pair_sum: f64 = pairs.iter().map(|p| p.lambda_mn).sum();
    let pair_var: f64 = pairs.iter().map(|p| p.stderr * p.stderr).sum();
    let ratio = (single_sum > 0.0).then(|| pair_sum / (single_sum * single_sum));
    let ratio_stderr = match ratio {
        Some(q) if pair_sum > 0.0 => {
            q * (pair_var / (pair_sum * pair_sum) + 4.0 * single_var / (single_sum * single_sum)).sqrt()
        }
        _ => 0.0,
    };
    let max_pair_ratio = pairs.iter().filter_map(|p| p.ratio).fold(None, |acc: Option<f64>, x| {
        Some(acc.map_or(x, |a| a.max(x)))
    });
    Ok(QuasiRecord { r, pair_sum, single_sum, ratio, ratio_stderr, max_pair_ratio, pairs })
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

    #[test]
    fn disjoint_rational_pair() {
        let (k, t) = setup(vec![0, 1]);
        let sys = PsiSystem::uniform((1, 0), 0.01, 1.0).unwrap();
        let r = overlap_report(&k, &t, &sys, &t.integer_ideal(2).unwrap(), &t.integer_ideal(3).unwrap(), &MeasureOptions::default())
            .unwrap();
        assert_eq!(r.lambda_mn, 0.0);
        assert_eq!(r.regime, Regime::ZeroOrDisjoint);
        assert_eq!(r.method, Method::Exact);
    }

    #[test]
    fn pair_counts() {
        let (k, t) = setup(vec![0, 1]);
        let (two, three) = (t.integer_ideal(2).unwrap(), t.integer_ideal(3).unwrap());
        assert_eq!(pair_count_oracle(&k, &t, &two, &three, &[0.2]).unwrap(), 2);
        assert_eq!(pair_count_oracle(&k, &t, &two, &three, &[1e-9]).unwrap(), 0);
        // |1/2 − 1/3 − k| < 2 for k ∈ {−1, 0, 1, 2}, likewise for 2/3: 8 pairs
        assert_eq!(pair_count_oracle(&k, &t, &two, &three, &[2.0]).unwrap(), 8);
    }

    #[test]
    fn zero_psi_sweep() {
        let (k, t) = setup(vec![0, 1]);
        let sys = PsiSystem::uniform((1, 0), 0.0, 2.0).unwrap();
        let q = quasi_independence_experiment(&k, &t, &sys, 10, &MeasureOptions::default()).unwrap();
        assert_eq!((q.pair_sum, q.single_sum, q.ratio), (0.0, 0.0, None));
    }

    #[test]
    fn rational_sweep_is_stable() {
        let (k, t) = setup(vec![0, 1]);
        let sys = PsiSystem::uniform((1, 0), 0.25, 2.0).unwrap();
        let a = quasi_independence_experiment(&k, &t, &sys, 20, &MeasureOptions::default()).unwrap();
        let b = quasi_independence_experiment(&k, &t, &sys, 20, &MeasureOptions::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.ratio.unwrap() > 0.0);
        assert_eq!(a.pairs.len(), 190);
    }
}
