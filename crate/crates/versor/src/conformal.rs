//! Conformal geometric algebra over Cl(4,1): null embedding of Euclidean
//! points, reflections and translations as versors, and round-trip
//! extraction.
//!
//! Basis order is e1, e2, e3, e, ebar with e^2 = +1 (index 3) and
//! ebar^2 = -1 (index 4), so Euclidean blades keep their Cl(3,0) bitmasks
//! when lifted.

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, Signature, Versor, TOL};
use crate::error::{Result, VersorError};

/// Blade index of e (the +1 extra dimension).
pub const E_PLUS: usize = 3;
/// Blade index of ebar (the -1 extra dimension).
pub const E_MINUS: usize = 4;

/// The conformal model at a fixed fundamental length scale lambda.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConformalContext {
    lambda: f64,
}

impl ConformalContext {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(VersorError::Malformed(format!(
                "lambda must be a positive real, got {lambda}"
            )));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn signature(&self) -> Signature {
        Signature::conformal()
    }

    /// The null vector n = e + ebar.
    pub fn n(&self) -> Multivector {
        let sig = self.signature();
        &Multivector::basis_vector(sig, E_PLUS) + &Multivector::basis_vector(sig, E_MINUS)
    }

    /// The null vector nbar = e - ebar.
    pub fn n_bar(&self) -> Multivector {
        let sig = self.signature();
        &Multivector::basis_vector(sig, E_PLUS) - &Multivector::basis_vector(sig, E_MINUS)
    }

    /// Lifts a Euclidean 2D/3D multivector into Cl(4,1); blade bitmasks over
    /// e1..e3 are unchanged.
    pub fn lift(&self, mv: &Multivector) -> Result<Multivector> {
        let src = mv.signature();
        if src.q() != 0 || src.dim() > 3 {
            return Err(VersorError::Malformed(format!(
                "can only lift Euclidean Cl(d,0), d <= 3, got Cl({},{})",
                src.p(),
                src.q()
            )));
        }
        let mut out = Multivector::zero(self.signature());
        for (blade, &c) in mv.coeffs().iter().enumerate() {
            out.set(blade, c);
        }
        Ok(out)
    }

    /// Lifts a Euclidean versor; the lifted element is again a unit versor.
    pub fn lift_versor(&self, v: &Versor) -> Result<Versor> {
        Versor::try_new(self.lift(v.multivector())?)
    }

    /// The null embedding F(x) = x^2 n + 2 lambda x - lambda^2 nbar, in
    /// canonical scaling.
    pub fn embed(&self, x: &[f64]) -> Result<ConformalPoint> {
        if x.len() > 3 || x.iter().any(|c| !c.is_finite()) {
            return Err(VersorError::Malformed(
                "embed expects up to 3 finite coordinates".into(),
            ));
        }
        let sig = self.signature();
        let x_sq: f64 = x.iter().map(|c| c * c).sum();
        let euclid = Multivector::vector(sig, x);
        let fx = &(&self.n().scale(x_sq) + &euclid.scale(2.0 * self.lambda))
            - &self.n_bar().scale(self.lambda * self.lambda);
        ConformalPoint::try_new(fx, self)
    }

    /// Recovers the Euclidean coordinates from a null ray; rejects points at
    /// infinity (zero nbar-coefficient).
    pub fn extract(&self, point: &ConformalPoint) -> Result<Vec<f64>> {
        let x = &point.0;
        Ok((0..3).map(|i| x.get(1 << i) / (2.0 * self.lambda)).collect())
    }

    /// Reflection of a conformal point in the hyperplane orthogonal to a
    /// Euclidean unit vector: X -> -alpha^{-1} X alpha.
    pub fn reflect(&self, point: &ConformalPoint, alpha: &Multivector) -> Result<ConformalPoint> {
        let alpha = if alpha.signature() == self.signature() {
            alpha.clone()
        } else {
            self.lift(alpha)?
        };
        let image = crate::algebra::reflect(&point.0, &alpha)?;
        ConformalPoint::try_new(image, self)
    }

    /// The translation rotor T_a = exp(na / 2 lambda) = 1 + na / (2 lambda);
    /// the series truncates exactly because (na)^2 = 0.
    pub fn translation_rotor(&self, a: &[f64]) -> Result<Versor> {
        if a.len() > 3 || a.iter().any(|c| !c.is_finite()) {
            return Err(VersorError::Malformed(
                "translation expects up to 3 finite coordinates".into(),
            ));
        }
        let sig = self.signature();
        let na = self
            .n()
            .geometric_product(&Multivector::vector(sig, a))?
            .scale(1.0 / (2.0 * self.lambda));
        Versor::try_new(&Multivector::one(sig) + &na)
    }

    /// Applies a translation rotor as T X reverse(T), which carries F(x) to
    /// F(x + a).
    pub fn translate(&self, point: &ConformalPoint, t: &Versor) -> Result<ConformalPoint> {
        let image = t
            .multivector()
            .geometric_product(&point.0)?
            .geometric_product(&t.multivector().reverse())?;
        ConformalPoint::try_new(image, self)
    }

    /// Applies a lifted orthogonal versor via the standard sandwich.
    pub fn transform(&self, point: &ConformalPoint, v: &Versor) -> Result<ConformalPoint> {
        ConformalPoint::try_new(v.sandwich(&point.0)?, self)
    }
}

impl Default for ConformalContext {
    fn default() -> Self {
        Self { lambda: 1.0 }
    }
}

/// A point on the projective null cone of Cl(4,1), stored in the canonical
/// scaling with nbar-coefficient -lambda^2 (so the n-coefficient is x^2 >= 0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConformalPoint(Multivector);

impl ConformalPoint {
    /// Validates grade, nullity and finite weight, then canonically rescales.
    pub fn try_new(x: Multivector, ctx: &ConformalContext) -> Result<Self> {
        if x.signature() != Signature::conformal() || !x.is_grade(1, TOL) {
            return Err(VersorError::WrongGrade { expected: 1 });
        }
        let norm_sq = x.dot(&x)?;
        let scale_ref = x.coeffs().iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        if norm_sq.abs() > TOL * scale_ref.max(1.0) * scale_ref.max(1.0) {
            return Err(VersorError::Malformed(format!(
                "conformal point is not null: X^2 = {norm_sq:e}"
            )));
        }
        // nbar-coefficient of X = (alpha - beta)/2 on the e/ebar components
        let weight = (x.get(1 << E_PLUS) - x.get(1 << E_MINUS)) / 2.0;
        if weight.abs() < TOL * scale_ref.max(1.0) {
            return Err(VersorError::PointAtInfinity);
        }
        let l2 = ctx.lambda() * ctx.lambda();
        Ok(Self(x.scale(-l2 / weight)))
    }

    pub fn multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }
}
