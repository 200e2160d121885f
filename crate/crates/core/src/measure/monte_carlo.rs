//! Counter-based Monte Carlo over D_K.
//!
//! Sample i is drawn from ChaCha8 seeded with the global seed, on a stream
//! keyed by the (unordered) set of ideals being measured, at word position
//! i·2n. Samples are processed in fixed-size chunks, so the hit count does
//! not depend on how chunks are spread over threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ApproxSet, MeasureEstimate, MeasureOptions, Method};
use crate::field::NumberField;

const CHUNK: u64 = 8192;

/// FNV-1a, used only to turn ideal labels into a stream id.
fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ *b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Stream id for a set of ideals, independent of their order.
pub fn stream_key(sets: &[&ApproxSet]) -> u64 {
    let mut labels: Vec<String> = sets.iter().map(|s| s.n.to_string()).collect();
    labels.sort();
    fnv1a(labels.join("|").as_bytes())
}

pub fn estimate(field: &NumberField, sets: &[&ApproxSet], opts: &MeasureOptions) -> MeasureEstimate {
    let n = field.degree();
    let basis = field.domain_basis();
    let key = stream_key(sets);
    let samples = opts.samples.max(1);
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(samples);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(key);
            rng.set_word_pos(start as u128 * 2 * n as u128);
            let mut x = vec![0.0; n];
            let mut local = 0;
            for _ in start..end {
                x.iter_mut().for_each(|v| *v = 0.0);
                for b in basis {
                    let t: f64 = rng.gen();
                    for (xk, bk) in x.iter_mut().zip(b) {
                        *xk += t * bk;
                    }
                }
                if sets.iter().all(|s| s.boxes.iter().any(|b| b.contains_flat(&x))) {
                    local += 1;
                }
            }
            local
        })
        .sum();
    let vol = field.domain_volume();
    let p = hits as f64 / samples as f64;
    MeasureEstimate {
        value: vol * p,
        exact: None,
        method: Method::MonteCarlo,
        stderr: vol * (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
        seed: opts.seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a(b"a"), 0xaf63_dc4c_8601_ec8c);
    }
}
