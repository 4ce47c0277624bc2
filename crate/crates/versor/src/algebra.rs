//! Dense multivector arithmetic for real Clifford algebras Cl(p,q), p+q <= 5.
//!
//! Basis blades are indexed by bitmask: bit `i` set means basis vector `e_i`
//! is present, with vectors in ascending index order. Basis vector `i` squares
//! to +1 for `i < p` and to -1 otherwise. With at most 5 generators a
//! multivector is at most 32 coefficients, so everything is stored densely.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Result, VersorError};

/// Default tolerance for approximate equality and dedup throughout the crate.
pub const TOL: f64 = 1e-9;

/// The golden ratio (1 + sqrt(5)) / 2.
pub fn golden_ratio() -> f64 {
    (1.0 + 5.0_f64.sqrt()) * 0.5
}

/// Metric signature of a real Clifford algebra Cl(p,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > 5 {
            return Err(VersorError::InvalidSignature { p, q });
        }
        Ok(Self { p, q })
    }

    /// Euclidean Cl(d,0).
    pub fn euclidean(d: usize) -> Result<Self> {
        Self::new(d, 0)
    }

    /// The conformal signature Cl(4,1).
    pub fn conformal() -> Self {
        Self { p: 4, q: 1 }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of generating vectors.
    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// Number of basis blades, 2^(p+q).
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Square of basis vector `i`.
    pub fn metric(&self, i: usize) -> f64 {
        if i < self.p {
            1.0
        } else {
            -1.0
        }
    }
}

/// Grade of a basis blade given by bitmask.
pub fn blade_grade(blade: usize) -> usize {
    blade.count_ones() as usize
}

/// Sign from reordering the product of two blades into canonical ascending
/// order, counting the swaps needed to move each generator of `b` past the
/// higher-indexed generators of `a`.
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Product of two basis blades: result blade and the combined reorder/metric sign.
fn blade_product(a: usize, b: usize, sig: &Signature) -> (usize, f64) {
    let mut sign = reorder_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let i = common.trailing_zeros() as usize;
        sign *= sig.metric(i);
        common &= common - 1;
    }
    (a ^ b, sign)
}

/// A dense multivector over the 2^(p+q) basis blades of Cl(p,q).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "MultivectorRepr", try_from = "MultivectorRepr")]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

/// Serialized form: `{"signature": [p, q], "coeffs": {"<blade-bitmask>": value}}`
/// with zero coefficients omitted.
#[derive(Serialize, Deserialize, Clone)]
struct MultivectorRepr {
    signature: (usize, usize),
    coeffs: BTreeMap<String, f64>,
}

impl From<Multivector> for MultivectorRepr {
    fn from(mv: Multivector) -> Self {
        let coeffs = mv
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0.0)
            .map(|(i, &c)| (i.to_string(), c))
            .collect();
        MultivectorRepr {
            signature: (mv.sig.p, mv.sig.q),
            coeffs,
        }
    }
}

impl TryFrom<MultivectorRepr> for Multivector {
    type Error = VersorError;

    fn try_from(repr: MultivectorRepr) -> Result<Self> {
        let sig = Signature::new(repr.signature.0, repr.signature.1)?;
        let mut mv = Multivector::zero(sig);
        for (key, value) in repr.coeffs {
            let blade: usize = key
                .parse()
                .map_err(|_| VersorError::Malformed(format!("bad blade key {key:?}")))?;
            if blade >= sig.blade_count() {
                return Err(VersorError::Malformed(format!(
                    "blade {blade} out of range for Cl({},{})",
                    sig.p, sig.q
                )));
            }
            mv.coeffs[blade] = value;
        }
        Ok(mv)
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            coeffs: vec![0.0; sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, s: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = s;
        mv
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    /// Basis vector `e_i` (0-indexed).
    pub fn basis_vector(sig: Signature, i: usize) -> Self {
        assert!(i < sig.dim(), "basis vector {i} out of range");
        let mut mv = Self::zero(sig);
        mv.coeffs[1 << i] = 1.0;
        mv
    }

    /// Grade-1 multivector from components on e_1..e_d.
    pub fn vector(sig: Signature, components: &[f64]) -> Self {
        assert!(components.len() <= sig.dim(), "too many components");
        let mut mv = Self::zero(sig);
        for (i, &c) in components.iter().enumerate() {
            mv.coeffs[1 << i] = c;
        }
        mv
    }

    pub fn from_coeffs(sig: Signature, coeffs: &[f64]) -> Self {
        assert_eq!(coeffs.len(), sig.blade_count());
        Self {
            sig,
            coeffs: coeffs.to_vec(),
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn get(&self, blade: usize) -> f64 {
        self.coeffs[blade]
    }

    pub fn set(&mut self, blade: usize, value: f64) {
        self.coeffs[blade] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Components on the basis vectors e_1..e_d.
    pub fn vector_part(&self) -> Vec<f64> {
        (0..self.sig.dim()).map(|i| self.coeffs[1 << i]).collect()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.abs() < tol)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.sig == other.sig
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| (a - b).abs() < tol)
    }

    /// Largest absolute coefficient difference against `other`.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(VersorError::SignatureMismatch(
                self.sig.p, self.sig.q, other.sig.p, other.sig.q,
            ));
        }
        Ok(())
    }

    /// The geometric product, bilinear and associative, with signs from blade
    /// reordering and metric contraction.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(self.sig);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let (blade, sign) = blade_product(a, b, &self.sig);
                out.coeffs[blade] += sign * ca * cb;
            }
        }
        Ok(out)
    }

    /// Reversal: grade-k components pick up (-1)^(k(k-1)/2).
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (blade, c) in out.coeffs.iter_mut().enumerate() {
            let k = blade_grade(blade);
            // (-1)^(k(k-1)/2) is -1 exactly for k = 2, 3 mod 4
            if k % 4 == 2 || k % 4 == 3 {
                *c = -*c;
            }
        }
        out
    }

    /// Grade projection; grades beyond the dimension return zero.
    pub fn grade_project(&self, k: usize) -> Self {
        let mut out = Self::zero(self.sig);
        for (blade, &c) in self.coeffs.iter().enumerate() {
            if blade_grade(blade) == k {
                out.coeffs[blade] = c;
            }
        }
        out
    }

    /// The grade of a homogeneous multivector, or None if grades mix.
    pub fn grade(&self, tol: f64) -> Option<usize> {
        let mut found = None;
        for (blade, &c) in self.coeffs.iter().enumerate() {
            if c.abs() > tol {
                let g = blade_grade(blade);
                match found {
                    None => found = Some(g),
                    Some(prev) if prev != g => return None,
                    _ => {}
                }
            }
        }
        found
    }

    pub fn is_grade(&self, k: usize, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(blade, c)| blade_grade(blade) == k || c.abs() < tol)
    }

    pub fn has_even_only(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(blade, c)| blade_grade(blade).is_multiple_of(2) || c.abs() < tol)
    }

    pub fn has_odd_only(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(blade, c)| blade_grade(blade) % 2 == 1 || c.abs() < tol)
    }

    /// Scalar part of a * reverse(a). For Euclidean grade-1 vectors this is |a|^2.
    pub fn norm_squared(&self) -> f64 {
        self.geometric_product(&self.reverse())
            .expect("same signature")
            .scalar_part()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().abs().sqrt()
    }

    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n < TOL {
            None
        } else {
            Some(self.scale(1.0 / n))
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= s;
        }
        out
    }

    /// Metric dot product of two grade-1 multivectors.
    pub fn dot(&self, other: &Self) -> Result<f64> {
        self.check_sig(other)?;
        Ok(self
            .geometric_product(other)?
            .grade_project(0)
            .scalar_part())
    }

    /// The pseudoscalar e_1 e_2 ... e_d.
    pub fn pseudoscalar(sig: Signature) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[sig.blade_count() - 1] = 1.0;
        mv
    }
}

/// Reflect grade-1 `v` in the hyperplane orthogonal to non-null grade-1 `alpha`:
/// v -> -alpha v alpha / alpha^2. For unit alpha this is the paper's -a v a.
pub fn reflect(v: &Multivector, alpha: &Multivector) -> Result<Multivector> {
    if !v.is_grade(1, TOL) || !alpha.is_grade(1, TOL) {
        return Err(VersorError::WrongGrade { expected: 1 });
    }
    let alpha_sq = alpha.dot(alpha)?;
    if alpha_sq.abs() < 1e-12 {
        return Err(VersorError::NullMirror(alpha_sq));
    }
    let ava = alpha.geometric_product(v)?.geometric_product(alpha)?;
    Ok(ava.scale(-1.0 / alpha_sq))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A unit versor: a product of invertible vectors, of pure even or odd grade
/// content, acting on vectors as (-1)^parity reverse(A) v A.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Versor {
    mv: Multivector,
    parity: Parity,
}

impl Versor {
    pub fn try_new(mv: Multivector) -> Result<Self> {
        let parity = if mv.has_even_only(TOL) {
            Parity::Even
        } else if mv.has_odd_only(TOL) {
            Parity::Odd
        } else {
            return Err(VersorError::MixedParity);
        };
        let unit = mv.geometric_product(&mv.reverse())?;
        if (unit.scalar_part() - 1.0).abs() > TOL || !unit.grade_project(0).approx_eq(&unit, TOL) {
            return Err(VersorError::NonUnitVersor(unit.scalar_part()));
        }
        Ok(Self { mv, parity })
    }

    pub fn identity(sig: Signature) -> Self {
        Self {
            mv: Multivector::one(sig),
            parity: Parity::Even,
        }
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn signature(&self) -> Signature {
        self.mv.signature()
    }

    pub fn reverse(&self) -> Self {
        Self {
            mv: self.mv.reverse(),
            parity: self.parity,
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            mv: self.mv.scale(-1.0),
            parity: self.parity,
        }
    }

    /// Geometric product of two versors; parity composes by XOR.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mv = self.mv.geometric_product(&other.mv)?;
        let parity = if self.parity == other.parity {
            Parity::Even
        } else {
            Parity::Odd
        };
        Ok(Self { mv, parity })
    }

    /// The double-sided action (-1)^parity reverse(A) x A. With the parity
    /// sign, reflections (odd) and rotations (even) share one code path when
    /// acting on vectors.
    pub fn sandwich(&self, x: &Multivector) -> Result<Multivector> {
        let out = self
            .mv
            .reverse()
            .geometric_product(x)?
            .geometric_product(&self.mv)?;
        Ok(match self.parity {
            Parity::Even => out,
            Parity::Odd => out.scale(-1.0),
        })
    }

    /// reverse(A) x A without the parity sign; callers apply their own sign
    /// conventions when acting on non-vector grades.
    pub fn sandwich_raw(&self, x: &Multivector) -> Result<Multivector> {
        self.mv
            .reverse()
            .geometric_product(x)?
            .geometric_product(&self.mv)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in add");
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in sub");
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= r;
        }
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("signature mismatch in mul")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if blade == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*e")?;
                for i in 0..self.sig.dim() {
                    if blade & (1 << i) != 0 {
                        write!(f, "{}", i + 1)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl3() -> Signature {
        Signature::euclidean(3).unwrap()
    }

    #[test]
    fn unit_vector_squares_to_plus_one() {
        let e1 = Multivector::basis_vector(cl3(), 0);
        let sq = &e1 * &e1;
        assert!(sq.approx_eq(&Multivector::one(cl3()), 1e-12));
    }

    #[test]
    fn orthogonal_vectors_anticommute() {
        let e1 = Multivector::basis_vector(cl3(), 0);
        let e2 = Multivector::basis_vector(cl3(), 1);
        let e12 = &e1 * &e2;
        let e21 = &e2 * &e1;
        assert!(e12.is_grade(2, 1e-12));
        assert!((&e12 + &e21).is_zero(1e-12));
        assert!((e12.get(0b011) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ebar_squares_to_minus_one_in_conformal() {
        let sig = Signature::conformal();
        let ebar = Multivector::basis_vector(sig, 4);
        let sq = &ebar * &ebar;
        assert!(sq.approx_eq(&Multivector::scalar(sig, -1.0), 1e-12));
    }

    #[test]
    fn reverse_signs_by_grade() {
        let sig = cl3();
        let e1 = Multivector::basis_vector(sig, 0);
        let e2 = Multivector::basis_vector(sig, 1);
        let e3 = Multivector::basis_vector(sig, 2);
        let e12 = &e1 * &e2;
        assert!(e12.reverse().approx_eq(&-&e12, 1e-12));
        let s = Multivector::scalar(sig, 3.5);
        assert!(s.reverse().approx_eq(&s, 1e-12));
        let e123 = &e12 * &e3;
        assert!(e123.reverse().approx_eq(&-&e123, 1e-12));
    }

    #[test]
    fn grade_projection_splits_and_recombines() {
        let sig = cl3();
        let e1 = Multivector::basis_vector(sig, 0);
        let e12 = &e1 * &Multivector::basis_vector(sig, 1);
        let mixed = &(&Multivector::one(sig) + &e1) + &e12;
        assert!(mixed.grade_project(1).approx_eq(&e1, 1e-12));
        assert!(mixed.grade_project(5).is_zero(1e-12));
        let recombined = (0..=3)
            .map(|k| mixed.grade_project(k))
            .fold(Multivector::zero(sig), |acc, part| &acc + &part);
        assert!(recombined.approx_eq(&mixed, 1e-12));
    }

    #[test]
    fn i2_5_coxeter_versor_grade_parts() {
        // W = a1 a2 for I2(5): -cos(pi/5) + sin(pi/5) e1e2
        let sig = Signature::euclidean(2).unwrap();
        let c = (std::f64::consts::PI / 5.0).cos();
        let s = (std::f64::consts::PI / 5.0).sin();
        let a1 = Multivector::vector(sig, &[1.0, 0.0]);
        let a2 = Multivector::vector(sig, &[-c, s]);
        let w = &a1 * &a2;
        assert!((w.scalar_part() + c).abs() < 1e-12);
        let b = w.grade_project(2);
        assert!((b.get(0b11) - s).abs() < 1e-12);
    }

    #[test]
    fn reflect_basic_cases() {
        let sig = cl3();
        let e1 = Multivector::basis_vector(sig, 0);
        let e2 = Multivector::basis_vector(sig, 1);
        let r = reflect(&e1, &e1).unwrap();
        assert!(r.approx_eq(&-&e1, 1e-12));
        let r = reflect(&e2, &e1).unwrap();
        assert!(r.approx_eq(&e2, 1e-12));
    }

    #[test]
    fn reflect_i2_5_simple_root() {
        // Reflecting e1 in a2 of I2(5) lands on (cos 3pi/5, sin 3pi/5),
        // cross-checked against v - 2(a.v)a evaluated directly.
        let sig = Signature::euclidean(2).unwrap();
        let pi = std::f64::consts::PI;
        let a2 = Multivector::vector(sig, &[-(pi / 5.0).cos(), (pi / 5.0).sin()]);
        let e1 = Multivector::basis_vector(sig, 0);
        let got = reflect(&e1, &a2).unwrap();
        let expected = Multivector::vector(sig, &[(3.0 * pi / 5.0).cos(), (3.0 * pi / 5.0).sin()]);
        assert!(got.approx_eq(&expected, 1e-12));

        // independent oracle: Eq (1)
        let av = a2.dot(&e1).unwrap();
        let aa = a2.dot(&a2).unwrap();
        let oracle = &e1 - &a2.scale(2.0 * av / aa);
        assert!(got.approx_eq(&oracle, 1e-12));
    }

    #[test]
    fn reflect_rejects_null_mirror() {
        let sig = Signature::conformal();
        // n = e + ebar is null
        let n = &Multivector::basis_vector(sig, 3) + &Multivector::basis_vector(sig, 4);
        let e1 = Multivector::basis_vector(sig, 0);
        assert!(matches!(reflect(&e1, &n), Err(VersorError::NullMirror(_))));
    }

    #[test]
    fn sandwich_rotation_by_pi() {
        let sig = cl3();
        let e1 = Multivector::basis_vector(sig, 0);
        let e12 = &e1 * &Multivector::basis_vector(sig, 1);
        let r = Versor::try_new(e12).unwrap();
        assert!(r.sandwich(&e1).unwrap().approx_eq(&-&e1, 1e-12));
        let id = Versor::identity(sig);
        let v = Multivector::vector(sig, &[0.3, -1.2, 0.5]);
        assert!(id.sandwich(&v).unwrap().approx_eq(&v, 1e-12));
    }

    #[test]
    fn sandwich_matches_two_reflections() {
        // W of I2(5) rotates e1 by 2pi/5 in the e1e2 plane, which must equal
        // reflecting first in a1 then in a2.
        let sig = Signature::euclidean(2).unwrap();
        let pi = std::f64::consts::PI;
        let a1 = Multivector::vector(sig, &[1.0, 0.0]);
        let a2 = Multivector::vector(sig, &[-(pi / 5.0).cos(), (pi / 5.0).sin()]);
        let w = Versor::try_new(&a1 * &a2).unwrap();
        let e1 = Multivector::basis_vector(sig, 0);
        let via_w = w.sandwich(&e1).unwrap();
        let via_refl = reflect(&reflect(&e1, &a1).unwrap(), &a2).unwrap();
        assert!(via_w.approx_eq(&via_refl, 1e-12));
    }

    #[test]
    fn versor_rejects_mixed_parity_and_non_unit() {
        let sig = cl3();
        let e1 = Multivector::basis_vector(sig, 0);
        let mixed = &Multivector::one(sig) + &e1;
        assert!(matches!(
            Versor::try_new(mixed),
            Err(VersorError::MixedParity)
        ));
        assert!(matches!(
            Versor::try_new(e1.scale(2.0)),
            Err(VersorError::NonUnitVersor(_))
        ));
    }

    #[test]
    fn multivector_json_round_trip() {
        let sig = cl3();
        let mut mv = Multivector::zero(sig);
        mv.set(0, 0.5);
        mv.set(0b011, -1.25);
        let json = serde_json::to_string(&mv).unwrap();
        assert!(json.contains("\"signature\":[3,0]"));
        assert!(json.contains("\"3\":-1.25"));
        assert!(!json.contains("\"1\":"));
        let back: Multivector = serde_json::from_str(&json).unwrap();
        assert!(back.approx_eq(&mv, 0.0_f64.max(1e-15)));
    }
}
