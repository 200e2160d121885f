//! Hermite normal form of full-rank sublattices of ℤ^n that contain M·ℤ^n
//! for a known modulus M. All arithmetic is reduced mod M, so entries stay
//! bounded by M.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Upper-triangular row basis: row i has its pivot in column i, pivots are
/// positive, and entries above each pivot are reduced into [0, pivot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    rows: Vec<Vec<i128>>,
    modulus: i128,
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl Hnf {
    /// HNF of the lattice spanned by `generators` together with modulus·ℤ^n.
    pub fn from_generators(n: usize, modulus: i128, generators: &[Vec<i128>]) -> Hnf {
        assert!(modulus > 0);
        let m = modulus;
        let mut rows: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = m;
                r
            })
            .collect();
        for g in generators {
            let mut v: Vec<i128> = g.iter().map(|x| x.rem_euclid(m)).collect();
            for i in 0..n {
                if v[i] == 0 {
                    continue;
                }
                let (d, x, y) = egcd(rows[i][i], v[i]);
                let a = rows[i][i] / d;
                let b = v[i] / d;
                let new_row: Vec<i128> =
                    (0..n).map(|k| (x * rows[i][k] + y * v[k]).rem_euclid(m)).collect();
                let new_v: Vec<i128> = (0..n).map(|k| (a * v[k] - b * rows[i][k]).rem_euclid(m)).collect();
                rows[i] = new_row;
                // the pivot d divides m, so reduction mod m cannot zero it
                rows[i][i] = d;
                v = new_v;
                debug_assert_eq!(v[i], 0);
            }
        }
        // rows[i][i] may equal m after reductions; restore pivots and reduce upward
        for i in 0..n {
            if rows[i][i] == 0 {
                rows[i][i] = m;
            }
        }
        for j in 0..n {
            let pivot = rows[j][j];
            for i in 0..j {
                let q = rows[i][j].div_euclid(pivot);
                if q != 0 {
                    let rj = rows[j].clone();
                    for k in j..n {
                        rows[i][k] -= q * rj[k];
                    }
                }
            }
        }
        Hnf { rows, modulus: m }
    }

    pub fn identity(n: usize) -> Hnf {
        Hnf::from_generators(n, 1, &[])
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.rows
    }

    pub fn modulus(&self) -> i128 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// |det| = product of pivots = index in ℤ^n.
    pub fn det(&self) -> u128 {
        self.rows.iter().enumerate().map(|(i, r)| r[i] as u128).product()
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        let n = self.rows.len();
        let mut w: Vec<i128> = v.iter().map(|x| x.rem_euclid(self.modulus)).collect();
        for i in 0..n {
            let piv = self.rows[i][i];
            if w[i] % piv != 0 {
                return false;
            }
            let q = w[i] / piv;
            if q != 0 {
                for k in i..n {
                    w[k] = (w[k] - q * self.rows[i][k]).rem_euclid(self.modulus);
                }
            }
        }
        w.iter().all(|x| *x == 0)
    }

    pub fn contains_big(&self, v: &[BigInt]) -> bool {
        let m = BigInt::from(self.modulus);
        let reduced: Vec<i128> = v
            .iter()
            .map(|x| {
                let r = ((x % &m) + &m) % &m;
                r.to_i128().expect("reduced coordinate fits in i128")
            })
            .collect();
        self.contains(&reduced)
    }

    /// Representatives of ℤ^n / lattice: the box ∏ [0, pivot_i) in coordinates
    /// reduced along the triangular basis.
    pub fn residue_representatives(&self) -> Vec<Vec<i128>> {
        let n = self.rows.len();
        let mut out = vec![vec![0i128; n]];
        for i in 0..n {
            let piv = self.rows[i][i];
            let mut next = Vec::with_capacity(out.len() * piv as usize);
            for base in &out {
                for c in 0..piv {
                    let mut v = base.clone();
                    v[i] = c;
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    pub fn is_zero_lattice(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_prime_above_two() {
        // ⟨2, 1+i⟩ over the basis {1, i}
        let h = Hnf::from_generators(2, 2, &[vec![1, 1], vec![-1, 1]]);
        assert_eq!(h.det(), 2);
        assert!(h.contains(&[1, 1]) && h.contains(&[2, 0]) && !h.contains(&[1, 0]));
        assert_eq!(h.rows(), &[vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn residues_cover_index() {
        let h = Hnf::from_generators(2, 5, &[vec![2, 1], vec![-1, 2]]);
        assert_eq!(h.det(), 5);
        assert_eq!(h.residue_representatives().len(), 5);
    }
}
