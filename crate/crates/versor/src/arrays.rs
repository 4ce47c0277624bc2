//! Affine-extension point arrays: translate a seed polytope, orbit it under
//! a finite orthogonal group, deduplicate, and report degeneracy — in both
//! the plain Euclidean and the conformal pipeline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, Signature, Versor, TOL};
use crate::conformal::ConformalContext;
use crate::dedup::ToleranceSet;
use crate::error::{Result, VersorError};
use crate::groups::{OrthogonalGroup, VersorGroup};

/// A finite labelled vertex set used as the seed of an affine orbit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedPolytope {
    pub name: String,
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
}

impl SeedPolytope {
    pub fn new(name: &str, dim: usize, vertices: Vec<Vec<f64>>) -> Result<Self> {
        let mut set = ToleranceSet::new(TOL);
        for v in &vertices {
            if v.len() != dim {
                return Err(VersorError::Malformed(format!(
                    "seed vertex has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
            let (_, fresh) = set.insert(v);
            if !fresh {
                return Err(VersorError::Malformed(
                    "seed vertices must be distinct to 1e-9".into(),
                ));
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            vertices,
        })
    }

    /// The unit pentagon (cos 2*pi*k/5, sin 2*pi*k/5).
    pub fn pentagon() -> Self {
        let vertices = (0..5)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                vec![theta.cos(), theta.sin()]
            })
            .collect();
        Self::new("pentagon", 2, vertices).expect("pentagon vertices are distinct")
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            name: self.name.clone(),
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|c| c * s).collect())
                .collect(),
        }
    }
}

/// A translation by `length` along a unit `direction`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranslationSpec {
    pub direction: Vec<f64>,
    pub length: f64,
}

impl TranslationSpec {
    pub fn new(direction: Vec<f64>, length: f64) -> Result<Self> {
        let norm: f64 = direction.iter().map(|c| c * c).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > TOL {
            return Err(VersorError::Malformed(format!(
                "translation direction must be unit, |d| = {norm}"
            )));
        }
        if length.is_nan() || length < 0.0 {
            return Err(VersorError::Malformed(format!(
                "translation length must be nonnegative, got {length}"
            )));
        }
        Ok(Self { direction, length })
    }

    pub fn vector(&self) -> Vec<f64> {
        self.direction.iter().map(|c| c * self.length).collect()
    }
}

/// Where a deduplicated point came from: the group element that produced it
/// (None for an untranslated seed vertex kept by `include_seed`) and the seed
/// vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub element: Option<usize>,
    pub vertex: usize,
}

/// A deduplicated point set with per-point provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointArray {
    pub seed_name: String,
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    pub provenance: Vec<Vec<Provenance>>,
    pub candidate_count: usize,
}

impl PointArray {
    pub fn cardinality(&self) -> usize {
        self.points.len()
    }

    /// Set equality against another array, order-independent.
    pub fn set_eq(&self, other: &PointArray, tol: f64) -> bool {
        if self.points.len() != other.points.len() {
            return false;
        }
        let mut set = ToleranceSet::new(tol);
        for p in &other.points {
            set.insert(p);
        }
        self.points.iter().all(|p| set.contains(p))
    }
}

fn collect_candidates(
    seed: &SeedPolytope,
    candidates: impl Iterator<Item = (Provenance, Vec<f64>)>,
    candidate_count: usize,
) -> PointArray {
    let mut set = ToleranceSet::new(TOL);
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut provenance: Vec<Vec<Provenance>> = Vec::new();
    for (tag, p) in candidates {
        let (idx, fresh) = set.insert(&p);
        if fresh {
            points.push(p);
            provenance.push(vec![tag]);
        } else {
            provenance[idx].push(tag);
        }
    }
    PointArray {
        seed_name: seed.name.clone(),
        dim: seed.dim,
        points,
        provenance,
        candidate_count,
    }
}

/// The affine orbit {g(v + t) : g in group, v in seed}; with `include_seed`
/// the untranslated seed vertices join the candidate list.
pub fn affine_orbit(
    seed: &SeedPolytope,
    group: &OrthogonalGroup,
    t: &TranslationSpec,
    include_seed: bool,
) -> Result<PointArray> {
    if group.dim != seed.dim || t.direction.len() != seed.dim {
        return Err(VersorError::Malformed(
            "seed, group and translation dimensions must agree".into(),
        ));
    }
    let tv = t.vector();
    let mut candidates = Vec::new();
    for (vi, v) in seed.vertices.iter().enumerate() {
        let shifted: Vec<f64> = v.iter().zip(&tv).map(|(a, b)| a + b).collect();
        for (gi, m) in group.matrices.iter().enumerate() {
            candidates.push((
                Provenance {
                    element: Some(gi),
                    vertex: vi,
                },
                OrthogonalGroup::apply(m, &shifted),
            ));
        }
        if include_seed {
            candidates.push((
                Provenance {
                    element: None,
                    vertex: vi,
                },
                v.clone(),
            ));
        }
    }
    let count = candidates.len();
    Ok(collect_candidates(seed, candidates.into_iter(), count))
}

/// Multiplicity structure of a point array.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegeneracyReport {
    pub candidate_count: usize,
    pub cardinality: usize,
    /// Points produced by more than one (group element, vertex) pair.
    pub degenerate_points: usize,
    /// multiplicity -> number of points with that multiplicity.
    pub multiplicities: BTreeMap<usize, usize>,
    pub degenerate: bool,
}

pub fn degeneracy_report(arr: &PointArray) -> DegeneracyReport {
    let mut multiplicities = BTreeMap::new();
    let mut degenerate_points = 0;
    for prov in &arr.provenance {
        *multiplicities.entry(prov.len()).or_insert(0) += 1;
        if prov.len() > 1 {
            degenerate_points += 1;
        }
    }
    DegeneracyReport {
        candidate_count: arr.candidate_count,
        cardinality: arr.cardinality(),
        degenerate_points,
        multiplicities,
        degenerate: arr.cardinality() < arr.candidate_count,
    }
}

/// Cardinality as a function of translation length, so distinguished lengths
/// show up as local minima.
pub fn translation_sweep(
    seed: &SeedPolytope,
    group: &OrthogonalGroup,
    direction: &[f64],
    lengths: &[f64],
) -> Result<Vec<(f64, usize)>> {
    lengths
        .iter()
        .map(|&len| {
            let t = TranslationSpec::new(direction.to_vec(), len)?;
            Ok((len, affine_orbit(seed, group, &t, false)?.cardinality()))
        })
        .collect()
}

/// The same affine orbit computed entirely with conformal versors: embed,
/// translate by the rotor T_t, sandwich with each lifted group versor,
/// extract. Must agree with `affine_orbit` as a point set.
pub fn affine_orbit_conformal(
    seed: &SeedPolytope,
    group: &VersorGroup,
    t: &TranslationSpec,
    ctx: &ConformalContext,
    include_seed: bool,
) -> Result<PointArray> {
    if group.signature().dim() != seed.dim || t.direction.len() != seed.dim {
        return Err(VersorError::Malformed(
            "seed, group and translation dimensions must agree".into(),
        ));
    }
    let rotor = ctx.translation_rotor(&t.vector())?;
    let lifted: Vec<Versor> = group
        .elements
        .iter()
        .map(|g| ctx.lift_versor(g))
        .collect::<Result<_>>()?;
    let mut candidates = Vec::new();
    for (vi, v) in seed.vertices.iter().enumerate() {
        let shifted = ctx.translate(&ctx.embed(v)?, &rotor)?;
        for (gi, g) in lifted.iter().enumerate() {
            let image = ctx.transform(&shifted, g)?;
            let coords = ctx.extract(&image)?[..seed.dim].to_vec();
            candidates.push((
                Provenance {
                    element: Some(gi),
                    vertex: vi,
                },
                coords,
            ));
        }
        if include_seed {
            candidates.push((
                Provenance {
                    element: None,
                    vertex: vi,
                },
                v.clone(),
            ));
        }
    }
    let count = candidates.len();
    Ok(collect_candidates(seed, candidates.into_iter(), count))
}

/// The chiral rotation group C_n realized from the I2(n) spin group.
pub fn cyclic_rotation_group(n: usize) -> Result<OrthogonalGroup> {
    let rs = crate::roots::root_system(crate::roots::GroupId::I2(n))?;
    let spin = crate::groups::generate_spin_group(&rs)?;
    crate::groups::realize_orthogonal(&spin)
}

/// The I2(n) spin versor group (the double cover of C_n), for the conformal
/// pipeline.
pub fn cyclic_spin_group(n: usize) -> Result<VersorGroup> {
    let rs = crate::roots::root_system(crate::roots::GroupId::I2(n))?;
    crate::groups::generate_spin_group(&rs)
}

/// Convenience: a grade-1 multivector view of an array point.
pub fn point_as_vector(arr: &PointArray, idx: usize) -> Result<Multivector> {
    let sig = Signature::euclidean(arr.dim)?;
    Ok(Multivector::vector(sig, &arr.points[idx]))
}
