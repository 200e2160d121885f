//! Number fields given by a monic integer polynomial, exact element
//! arithmetic over the power basis, the Minkowski embedding and the
//! fundamental domain of the lattice ι(O_K).

use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residual tolerance for stored roots.
pub const ROOT_TOLERANCE: f64 = 1e-9;

/// User input describing a field: `{"poly": [c0, c1, ..., 1], "monogenic_asserted": true}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberFieldSpec {
    #[serde(rename = "poly")]
    pub coefficients: Vec<i64>,
    #[serde(default = "default_true")]
    pub monogenic_asserted: bool,
}

fn default_true() -> bool {
    true
}

impl NumberFieldSpec {
    pub fn new(coefficients: Vec<i64>) -> Self {
        NumberFieldSpec { coefficients, monogenic_asserted: true }
    }
}

/// A point of ℝ^s × ℂ^t, indexed by embedding: reals first, then one
/// complex coordinate per conjugate pair.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingPoint {
    pub real: Vec<f64>,
    pub complex: Vec<Complex64>,
}

impl EmbeddingPoint {
    pub fn zero(s: usize, t: usize) -> Self {
        EmbeddingPoint { real: vec![0.0; s], complex: vec![Complex64::new(0.0, 0.0); t] }
    }

    /// Flatten to ℝ^n: real coordinates, then (re, im) per complex coordinate.
    pub fn to_real_vec(&self) -> Vec<f64> {
        let mut v = self.real.clone();
        for z in &self.complex {
            v.push(z.re);
            v.push(z.im);
        }
        v
    }

    pub fn from_real_vec(v: &[f64], s: usize, t: usize) -> Self {
        let real = v[..s].to_vec();
        let complex = (0..t).map(|j| Complex64::new(v[s + 2 * j], v[s + 2 * j + 1])).collect();
        EmbeddingPoint { real, complex }
    }

    /// |x_ρ|_ρ: real absolute value at real places, squared modulus at complex places.
    pub fn place_abs(&self, rho: usize) -> f64 {
        if rho < self.real.len() {
            self.real[rho].abs()
        } else {
            self.complex[rho - self.real.len()].norm_sqr()
        }
    }

    pub fn places(&self) -> usize {
        self.real.len() + self.complex.len()
    }

    pub fn sub(&self, other: &EmbeddingPoint) -> EmbeddingPoint {
        EmbeddingPoint {
            real: self.real.iter().zip(&other.real).map(|(a, b)| a - b).collect(),
            complex: self.complex.iter().zip(&other.complex).map(|(a, b)| a - b).collect(),
        }
    }
}

/// An element of K as exact rational coordinates over 1, θ, …, θ^{n−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn zero(n: usize) -> Self {
        FieldElement { coords: vec![BigRational::zero(); n] }
    }

    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.coords[0] = BigRational::one();
        e
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        FieldElement {
            coords: coords.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
        }
    }

    pub fn from_rationals(coords: Vec<BigRational>) -> Self {
        FieldElement { coords }
    }

    pub fn degree(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Integral iff every coordinate is an integer (power basis = O_K).
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.coords.iter().map(|c| if c.is_integer() { Some(c.to_integer()) } else { None }).collect()
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        FieldElement { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        FieldElement { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|a| a * k).collect() }
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> BigInt {
        use num_integer::Integer;
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Coordinates reduced into [0, 1): the canonical representative mod O_K.
    pub fn reduce_mod_integers(&self) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|c| c - c.floor()).collect() }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let coef = if mono.is_empty() || !c.abs().is_one() {
                format!("{c}")
            } else if c.is_negative() {
                "-".to_string()
            } else {
                String::new()
            };
            let sep = if mono.is_empty() || coef.is_empty() || coef == "-" { "" } else { "*" };
            terms.push(format!("{coef}{sep}{mono}"));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// A number field K = ℚ[x]/(f) with its numeric embeddings.
#[derive(Clone, Debug)]
pub struct NumberField {
    poly: Vec<i64>,
    degree: usize,
    s: usize,
    t: usize,
    real_roots: Vec<f64>,
    complex_roots: Vec<Complex64>,
    domain_basis: Vec<Vec<f64>>,
    basis_inverse: DMatrix<f64>,
    domain_volume: f64,
    discriminant: BigInt,
    monogenic_asserted: bool,
}

impl NumberField {
    pub fn poly(&self) -> &[i64] {
        &self.poly
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    /// (s, t): real embeddings and conjugate complex pairs.
    pub fn signature(&self) -> (usize, usize) {
        (self.s, self.t)
    }
    /// Number of places |Σ| = s + t.
    pub fn places(&self) -> usize {
        self.s + self.t
    }
    pub fn unit_rank(&self) -> usize {
        self.s + self.t - 1
    }
    pub fn real_roots(&self) -> &[f64] {
        &self.real_roots
    }
    pub fn complex_roots(&self) -> &[Complex64] {
        &self.complex_roots
    }
    /// ι(θ^j) flattened to ℝ^n, j = 0..n.
    pub fn domain_basis(&self) -> &[Vec<f64>] {
        &self.domain_basis
    }
    /// λ(D_K) = |det| of the basis matrix.
    pub fn domain_volume(&self) -> f64 {
        self.domain_volume
    }
    /// Discriminant of the defining polynomial.
    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }
    pub fn monogenic_asserted(&self) -> bool {
        self.monogenic_asserted
    }

    /// True when D_K is an axis-aligned rectangle (degree ≤ 2 with a purely
    /// imaginary generator, or degree 1).
    pub fn axis_aligned_domain(&self) -> bool {
        match (self.degree, self.s, self.t) {
            (1, _, _) => true,
            (2, 0, 1) => self.complex_roots[0].re.abs() < 1e-12,
            _ => false,
        }
    }

    pub fn element(&self, coords: &[i64]) -> FieldElement {
        let mut c = coords.to_vec();
        c.resize(self.degree, 0);
        FieldElement::from_ints(&c)
    }

    /// Exact product, reduced modulo the defining polynomial.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (n..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                if self.poly[j] != 0 {
                    prod[k - n + j] -= &c * BigRational::from_integer(BigInt::from(self.poly[j]));
                }
            }
        }
        prod.truncate(n);
        FieldElement { coords: prod }
    }

    /// Matrix of multiplication by `a` on the power basis (column j = a·θ^j).
    pub fn multiplication_matrix(&self, a: &FieldElement) -> Vec<Vec<BigRational>> {
        let n = self.degree;
        let mut cols = Vec::with_capacity(n);
        let mut cur = a.clone();
        let theta = self.theta();
        for _ in 0..n {
            cols.push(cur.coords.clone());
            cur = self.mul(&cur, &theta);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Generator θ.
    pub fn theta(&self) -> FieldElement {
        let mut e = FieldElement::zero(self.degree);
        if self.degree == 1 {
            e.coords[0] = BigRational::from_integer(BigInt::from(-self.poly[0]));
        } else {
            e.coords[1] = BigRational::one();
        }
        e
    }

    /// Exact norm: Res(f, a) = det of the multiplication matrix, sign kept.
    pub fn norm(&self, a: &FieldElement) -> BigRational {
        rational_det(self.multiplication_matrix(a))
    }

    /// Exact inverse of a nonzero element.
    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let m = self.multiplication_matrix(a);
        let mut rhs = vec![BigRational::zero(); self.degree];
        rhs[0] = BigRational::one();
        Ok(FieldElement { coords: rational_solve(m, rhs).ok_or(Error::ZeroElement)? })
    }

    fn eval_at(&self, a: &FieldElement, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in a.coords.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    /// ι(a) = (σ_1(a), …, σ_s(a), τ_1(a), …, τ_t(a)).
    pub fn embed(&self, a: &FieldElement) -> EmbeddingPoint {
        if self.degree == 1 {
            return EmbeddingPoint {
                real: vec![a.coords[0].to_f64().unwrap_or(f64::NAN)],
                complex: vec![],
            };
        }
        EmbeddingPoint {
            real: self.real_roots.iter().map(|&r| self.eval_at(a, Complex64::new(r, 0.0)).re).collect(),
            complex: self.complex_roots.iter().map(|&z| self.eval_at(a, z)).collect(),
        }
    }

    /// Basis coordinates t with p = Σ t_i ι(θ^{i}).
    pub fn basis_coordinates(&self, p: &EmbeddingPoint) -> Vec<f64> {
        let v = nalgebra::DVector::from_vec(p.to_real_vec());
        (&self.basis_inverse * v).iter().copied().collect()
    }

    pub fn point_from_basis_coordinates(&self, t: &[f64]) -> EmbeddingPoint {
        let n = self.degree;
        let mut v = vec![0.0; n];
        for (ti, b) in t.iter().zip(&self.domain_basis) {
            for k in 0..n {
                v[k] += ti * b[k];
            }
        }
        EmbeddingPoint::from_real_vec(&v, self.s, self.t)
    }

    /// Translate `p` by a lattice vector so its basis coordinates lie in [0,1).
    /// Coordinates within 1e-9 of an integer snap to it.
    pub fn reduce_to_domain(&self, p: &EmbeddingPoint) -> Result<(EmbeddingPoint, Vec<i64>)> {
        let t = self.basis_coordinates(p);
        if t.iter().any(|x| !x.is_finite()) {
            return Err(Error::SingularBasis);
        }
        let mut lattice = Vec::with_capacity(t.len());
        let mut frac = Vec::with_capacity(t.len());
        for &x in &t {
            let r = x.round();
            let k = if (x - r).abs() < 1e-9 { r } else { x.floor() };
            let mut f = x - k;
            if (x - r).abs() < 1e-9 || f < 0.0 {
                f = 0.0;
            }
            lattice.push(k as i64);
            frac.push(f);
        }
        Ok((self.point_from_basis_coordinates(&frac), lattice))
    }
}

/// Validate a spec and build the field.
pub fn build_field(spec: &NumberFieldSpec) -> Result<NumberField> {
    let poly = &spec.coefficients;
    if poly.len() < 2 || *poly.last().unwrap() != 1 {
        return Err(Error::NonMonic);
    }
    if !spec.monogenic_asserted {
        return Err(Error::NotMonogenic);
    }
    let n = poly.len() - 1;
    if n >= 2 {
        if let Some(r) = integer_root(poly) {
            return Err(Error::RationalRootFound(r));
        }
    }
    let mut field = NumberField {
        poly: poly.clone(),
        degree: n,
        s: 0,
        t: 0,
        real_roots: vec![],
        complex_roots: vec![],
        domain_basis: vec![],
        basis_inverse: DMatrix::zeros(n, n),
        domain_volume: 0.0,
        discriminant: BigInt::zero(),
        monogenic_asserted: spec.monogenic_asserted,
    };
    field.discriminant = poly_discriminant(&field);
    if field.discriminant.is_zero() {
        return Err(Error::NotSquarefree);
    }

    if n == 1 {
        field.s = 1;
        field.real_roots = vec![-poly[0] as f64];
    } else {
        let roots = find_roots(poly)?;
        let scale = roots.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
        let mut real = Vec::new();
        let mut upper = Vec::new();
        for z in roots {
            if z.im.abs() <= 1e-8 * scale {
                real.push(polish_real(poly, z.re));
            } else if z.im > 0.0 {
                upper.push(z);
            }
        }
        real.sort_by(|a, b| a.partial_cmp(b).unwrap());
        upper.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        if real.len() + 2 * upper.len() != n {
            return Err(Error::RootFindingFailed(f64::NAN));
        }
        for &r in &real {
            let res = horner(poly, Complex64::new(r, 0.0)).norm();
            if res > ROOT_TOLERANCE {
                return Err(Error::RootFindingFailed(res));
            }
        }
        for &z in &upper {
            let res = horner(poly, z).norm();
            if res > ROOT_TOLERANCE {
                return Err(Error::RootFindingFailed(res));
            }
        }
        field.s = real.len();
        field.t = upper.len();
        field.real_roots = real;
        field.complex_roots = upper;
    }

    let basis: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0i64; n];
            e[j] = 1;
            field.embed(&FieldElement::from_ints(&e)).to_real_vec()
        })
        .collect();
    // columns are the basis vectors
    let m = DMatrix::from_fn(n, n, |r, c| basis[c][r]);
    let det = m.clone().determinant();
    if det == 0.0 || !det.is_finite() {
        return Err(Error::SingularBasis);
    }
    field.basis_inverse = m.try_inverse().ok_or(Error::SingularBasis)?;
    field.domain_volume = det.abs();
    field.domain_basis = basis;
    Ok(field)
}

fn horner(poly: &[i64], z: Complex64) -> Complex64 {
    poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
}

fn horner_deriv(poly: &[i64], z: Complex64) -> Complex64 {
    let n = poly.len() - 1;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (1..=n).rev() {
        acc = acc * z + (poly[k] as f64) * (k as f64);
    }
    acc
}

fn polish_real(poly: &[i64], mut x: f64) -> f64 {
    for _ in 0..50 {
        let fx = horner(poly, Complex64::new(x, 0.0)).re;
        let dx = horner_deriv(poly, Complex64::new(x, 0.0)).re;
        if dx == 0.0 {
            break;
        }
        let step = fx / dx;
        x -= step;
        if step.abs() <= 1e-17 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Aberth–Ehrlich simultaneous iteration followed by Newton polishing.
fn find_roots(poly: &[i64]) -> Result<Vec<Complex64>> {
    let n = poly.len() - 1;
    // Cauchy bound for the initial circle
    let bound = 1.0 + poly[..n].iter().map(|&c| (c as f64).abs()).fold(0.0, f64::max);
    let radius = bound.min(1e6).max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.7, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let fz = horner(poly, z[k]);
            let dz = horner_deriv(poly, z[k]);
            if fz.norm() == 0.0 {
                continue;
            }
            let ratio = fz / dz;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[k] -= w;
            max_step = max_step.max(w.norm());
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for zk in z.iter_mut() {
        for _ in 0..20 {
            let d = horner_deriv(poly, *zk);
            if d.norm() == 0.0 {
                break;
            }
            let step = horner(poly, *zk) / d;
            *zk -= step;
            if step.norm() < 1e-17 {
                break;
            }
        }
    }
    let worst = z.iter().map(|&r| horner(poly, r).norm()).fold(0.0, f64::max);
    if !worst.is_finite() || worst > ROOT_TOLERANCE {
        return Err(Error::RootFindingFailed(worst));
    }
    Ok(z)
}

fn integer_root(poly: &[i64]) -> Option<i64> {
    let c0 = poly[0];
    if c0 == 0 {
        return Some(0);
    }
    let eval = |x: i64| -> i128 { poly.iter().rev().fold(0i128, |acc, &c| acc.saturating_mul(x as i128).saturating_add(c as i128)) };
    let a = c0.unsigned_abs();
    let mut d = 1u64;
    while d * d <= a {
        if a.is_multiple_of(d) {
            for q in [d, a / d] {
                for sgn in [1i64, -1] {
                    let x = sgn * q as i64;
                    if eval(x) == 0 {
                        return Some(x);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

/// disc(f) = (−1)^{n(n−1)/2} Nm(f'(θ)).
fn poly_discriminant(field: &NumberField) -> BigInt {
    let n = field.degree;
    if n == 1 {
        return BigInt::one();
    }
    let d: Vec<BigRational> =
        (1..=n).map(|k| BigRational::from_integer(BigInt::from(field.poly[k] * k as i64))).collect();
    let nm = field.norm(&FieldElement { coords: d });
    let sign = if (n * (n - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    (nm * BigRational::from_integer(BigInt::from(sign))).to_integer()
}

/// Determinant by Gaussian elimination over ℚ.
pub fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

fn rational_solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(piv, col);
        rhs.swap(piv, col);
        let p = m[col][col].clone();
        for c in col..n {
            m[col][c] = &m[col][c] / &p;
        }
        rhs[col] = &rhs[col] / &p;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
            let sub = &factor * &rhs[col];
            rhs[r] -= sub;
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> NumberField {
        build_field(&NumberFieldSpec::new(vec![0, 1])).unwrap()
    }
    fn qi() -> NumberField {
        build_field(&NumberFieldSpec::new(vec![1, 0, 1])).unwrap()
    }
    fn qsqrt2() -> NumberField {
        build_field(&NumberFieldSpec::new(vec![-2, 0, 1])).unwrap()
    }
    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn signatures() {
        let k = q();
        assert_eq!((k.degree(), k.signature(), k.unit_rank()), (1, (1, 0), 0));
        let k = qi();
        assert_eq!((k.signature(), k.unit_rank()), ((0, 1), 0));
        assert!((k.complex_roots()[0] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let k = build_field(&NumberFieldSpec::new(vec![-2, 0, 0, 1])).unwrap();
        assert_eq!((k.signature(), k.unit_rank()), ((1, 1), 1));
        assert!((k.real_roots()[0] - 2f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_field(&NumberFieldSpec::new(vec![1, 2])).unwrap_err(), Error::NonMonic);
        assert_eq!(build_field(&NumberFieldSpec::new(vec![5])).unwrap_err(), Error::NonMonic);
        assert_eq!(
            build_field(&NumberFieldSpec::new(vec![-4, 0, 1])).unwrap_err(),
            Error::RationalRootFound(2)
        );
        // (x^2+1)^2
        assert_eq!(build_field(&NumberFieldSpec::new(vec![1, 0, 2, 0, 1])).unwrap_err(), Error::NotSquarefree);
    }

    #[test]
    fn discriminants() {
        assert_eq!(qi().discriminant(), &BigInt::from(-4));
        assert_eq!(qsqrt2().discriminant(), &BigInt::from(8));
        let k = build_field(&NumberFieldSpec::new(vec![-2, 0, 0, 1])).unwrap();
        assert_eq!(k.discriminant(), &BigInt::from(-108));
    }

    #[test]
    fn norm_examples() {
        let k = qi();
        assert_eq!(k.norm(&k.element(&[1, 1])), rat(2, 1));
        assert_eq!(k.norm(&k.element(&[1, 0])), rat(1, 1));
        let k = qsqrt2();
        assert_eq!(k.norm(&k.element(&[1, 1])), rat(-1, 1));
        let k = q();
        assert_eq!(k.norm(&FieldElement::from_rationals(vec![rat(-3, 4)])), rat(-3, 4));
    }

    #[test]
    fn embed_examples() {
        let k = qi();
        let p = k.embed(&k.element(&[1, 1]));
        assert!((p.complex[0] - Complex64::new(1.0, 1.0)).norm() < 1e-12);
        assert!((p.place_abs(0) - 2.0).abs() < 1e-12);
        let k = q();
        assert_eq!(k.embed(&k.element(&[-3])).place_abs(0), 3.0);
        let k = qsqrt2();
        let p = k.embed(&k.element(&[1, 1]));
        let s2 = 2f64.sqrt();
        assert!((p.real[0] - (1.0 - s2)).abs() < 1e-12 && (p.real[1] - (1.0 + s2)).abs() < 1e-12);
        assert!((p.place_abs(0) * p.place_abs(1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn domain_volumes() {
        assert!((qi().domain_volume() - 1.0).abs() < 1e-12);
        assert!((qsqrt2().domain_volume() - 2.0 * 2f64.sqrt()).abs() < 1e-9);
        assert!((q().domain_volume() - 1.0).abs() < 1e-15);
        assert!(qi().axis_aligned_domain() && q().axis_aligned_domain() && !qsqrt2().axis_aligned_domain());
    }

    #[test]
    fn reduce_examples() {
        let k = qi();
        let p = EmbeddingPoint { real: vec![], complex: vec![Complex64::new(1.5, 2.25)] };
        let (r, lat) = k.reduce_to_domain(&p).unwrap();
        assert_eq!(lat, vec![1, 2]);
        assert!((r.complex[0] - Complex64::new(0.5, 0.25)).norm() < 1e-12);
        let (r, lat) = k.reduce_to_domain(&EmbeddingPoint::zero(0, 1)).unwrap();
        assert_eq!(lat, vec![0, 0]);
        assert_eq!(r, EmbeddingPoint::zero(0, 1));
        let k = qsqrt2();
        let (r, lat) = k.reduce_to_domain(&k.embed(&k.element(&[3, 1]))).unwrap();
        assert_eq!(lat, vec![3, 1]);
        assert!(r.real.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn inverse_roundtrip() {
        let k = build_field(&NumberFieldSpec::new(vec![-2, 0, 0, 1])).unwrap();
        let a = k.element(&[1, 2, -1]);
        let b = k.inverse(&a).unwrap();
        assert_eq!(k.mul(&a, &b), FieldElement::one(3));
    }
}
