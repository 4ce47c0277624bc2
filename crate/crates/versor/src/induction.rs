//! Spinors of Cl(3,0) read as vectors in 4D Euclidean space, and the rank-4
//! root systems they induce.

use serde::{Deserialize, Serialize};

use crate::algebra::{golden_ratio, Parity, Versor, TOL};
use crate::dedup::{canonical_order, ToleranceSet};
use crate::error::{Result, VersorError};
use crate::groups::VersorGroup;

/// Blade indices of the even subalgebra of Cl(3,0) in the fixed read-off
/// order (1, e2e3, e3e1, e1e2). The bivectors are ordered cyclically so the
/// map respects the 3D duality convention e_i <-> e_j e_k.
const EVEN_BLADES: [usize; 4] = [0b000, 0b110, 0b101, 0b011];
// e3e1 is stored on the e1e3 blade with opposite sign
const EVEN_SIGNS: [f64; 4] = [1.0, 1.0, -1.0, 1.0];

/// A spinor's coefficients (w, x, y, z) on (1, e2e3, e3e1, e1e2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vector4(pub [f64; 4]);

impl Vector4 {
    pub fn dot(&self, other: &Vector4) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn approx_eq(&self, other: &Vector4, tol: f64) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| (a - b).abs() < tol)
    }
}

/// Reads an even unit versor of Cl(3,0) as a unit 4D vector.
pub fn spinor_to_4d(psi: &Versor) -> Result<Vector4> {
    if psi.parity() != Parity::Even || !psi.multivector().has_even_only(TOL) {
        return Err(VersorError::NotASpinor);
    }
    let mut out = [0.0; 4];
    for (slot, (&blade, &sign)) in EVEN_BLADES.iter().zip(&EVEN_SIGNS).enumerate() {
        out[slot] = sign * psi.multivector().get(blade);
    }
    Ok(Vector4(out))
}

/// 4D Euclidean reflection v - 2(a.v)a for unit a.
pub fn reflect4(v: &Vector4, alpha: &Vector4) -> Vector4 {
    let scale = 2.0 * alpha.dot(v);
    let mut out = [0.0; 4];
    for (o, (&vi, &ai)) in out.iter_mut().zip(v.0.iter().zip(&alpha.0)) {
        *o = vi - scale * ai;
    }
    Vector4(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank4Label {
    #[serde(rename = "A1^4")]
    A1Fourth,
    D4,
    F4,
    H4,
}

/// A rank-4 root system induced from a binary polyhedral group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystem4 {
    pub label: Rank4Label,
    pub roots: Vec<Vector4>,
}

impl RootSystem4 {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &Vector4, tol: f64) -> bool {
        self.roots.iter().any(|r| r.approx_eq(v, tol))
    }
}

fn label_by_cardinality(n: usize) -> Result<Rank4Label> {
    match n {
        8 => Ok(Rank4Label::A1Fourth),
        24 => Ok(Rank4Label::D4),
        48 => Ok(Rank4Label::F4),
        120 => Ok(Rank4Label::H4),
        _ => Err(VersorError::Malformed(format!(
            "{n} spinors is not one of the four binary polyhedral groups"
        ))),
    }
}

/// Maps every spinor of a binary group to 4D and verifies the set is closed
/// under 4D reflections. The closure check is executable, not taken on faith.
pub fn induce_root_system(vg: &VersorGroup) -> Result<RootSystem4> {
    let label = label_by_cardinality(vg.order())?;
    let mut set = ToleranceSet::new(TOL);
    let mut roots = Vec::new();
    for psi in &vg.elements {
        let v = spinor_to_4d(psi)?;
        let (_, fresh) = set.insert(&v.0);
        if fresh {
            roots.push(v);
        }
    }
    if roots.len() != vg.order() {
        return Err(VersorError::Malformed(format!(
            "spinor-to-4D map not injective: {} of {}",
            roots.len(),
            vg.order()
        )));
    }
    for alpha in &roots {
        for v in &roots {
            let image = reflect4(v, alpha);
            if !set.contains(&image.0) {
                return Err(VersorError::Malformed(
                    "induced set not closed under 4D reflections".into(),
                ));
            }
        }
    }
    let coords: Vec<Vec<f64>> = roots.iter().map(|r| r.0.to_vec()).collect();
    let order = canonical_order(&coords);
    Ok(RootSystem4 {
        label,
        roots: order.into_iter().map(|i| roots[i]).collect(),
    })
}

/// True when every coordinate is within tol of the allowed value set.
pub fn coords_in_set(roots: &[Vector4], allowed: &[f64], tol: f64) -> bool {
    roots.iter().all(|r| {
        r.0.iter()
            .all(|c| allowed.iter().any(|a| (c.abs() - a).abs() < tol))
    })
}

/// The coordinate sets of Table 2's root systems, for structural checks.
pub fn allowed_coordinates(label: Rank4Label) -> Vec<f64> {
    let tau = golden_ratio();
    match label {
        Rank4Label::A1Fourth => vec![0.0, 1.0],
        Rank4Label::D4 => vec![0.0, 0.5, 1.0],
        // unit-normalized F4 also has the 1/sqrt(2) ring from 2O's order-8 elements
        Rank4Label::F4 => vec![0.0, 0.5, 0.5_f64.sqrt(), 1.0],
        Rank4Label::H4 => vec![0.0, 0.5, tau / 2.0, (tau - 1.0) / 2.0, 1.0],
    }
}
