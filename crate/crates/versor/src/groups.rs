//! Chiral, full and binary polyhedral groups as versor groups, plus the
//! orthogonal-matrix realization and structural verification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, Signature, Versor, TOL};
use crate::dedup::{canonical_order, ToleranceSet};
use crate::error::{Result, VersorError};
use crate::roots::{GroupId, RootSystem, CLOSURE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityClass {
    /// Even versors only: a discrete subgroup of Spin.
    EvenOnly,
    /// Even and odd versors: a discrete subgroup of Pin.
    Mixed,
}

/// A finite set of unit versors closed under the geometric product, with R
/// and -R kept distinct so the double cover stays visible.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VersorGroup {
    pub source: Option<GroupId>,
    pub parity_class: ParityClass,
    pub elements: Vec<Versor>,
}

impl VersorGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn signature(&self) -> Signature {
        self.elements[0].signature()
    }

    pub fn find(&self, v: &Versor, tol: f64) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| e.multivector().approx_eq(v.multivector(), tol))
    }
}

/// Breadth-first closure of seed versors under the geometric product,
/// re-canonicalized to a deterministic element order.
fn close_versors(seeds: Vec<Versor>) -> Result<Vec<Versor>> {
    let mut set = ToleranceSet::new(TOL);
    let mut elements: Vec<Versor> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    for seed in seeds {
        let (idx, fresh) = set.insert(seed.multivector().coeffs());
        if fresh {
            elements.push(seed);
            frontier.push(idx);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &f in &frontier {
            let mut i = 0;
            while i < elements.len() {
                for (a, b) in [(f, i), (i, f)] {
                    let prod = elements[a].compose(&elements[b])?;
                    let (idx, fresh) = set.insert(prod.multivector().coeffs());
                    if fresh {
                        elements.push(prod);
                        next.push(idx);
                        if elements.len() > CLOSURE_LIMIT {
                            return Err(VersorError::ClosureOverflow {
                                limit: CLOSURE_LIMIT,
                            });
                        }
                    }
                }
                i += 1;
            }
        }
        frontier = next;
    }
    let coeffs: Vec<Vec<f64>> = elements
        .iter()
        .map(|e| e.multivector().coeffs().to_vec())
        .collect();
    let order = canonical_order(&coeffs);
    Ok(order.into_iter().map(|i| elements[i].clone()).collect())
}

fn roots_as_versors(rs: &RootSystem) -> Result<Vec<Versor>> {
    rs.roots.iter().cloned().map(Versor::try_new).collect()
}

/// Spinor (rotor) group generated by all pairwise products of roots: the
/// binary polyhedral group of the root system.
pub fn generate_spin_group(rs: &RootSystem) -> Result<VersorGroup> {
    let roots = roots_as_versors(rs)?;
    let mut seeds = Vec::new();
    for a in &roots {
        for b in &roots {
            seeds.push(a.compose(b)?);
        }
    }
    let elements = close_versors(seeds)?;
    Ok(VersorGroup {
        source: rs.group,
        parity_class: ParityClass::EvenOnly,
        elements,
    })
}

/// Pin group generated by closing the roots themselves under the geometric
/// product: the double cover of the full polyhedral group.
pub fn generate_pin_group(rs: &RootSystem) -> Result<VersorGroup> {
    let elements = close_versors(roots_as_versors(rs)?)?;
    Ok(VersorGroup {
        source: rs.group,
        parity_class: ParityClass::Mixed,
        elements,
    })
}

/// A finite set of orthogonal matrices (row-major, deduplicated).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrthogonalGroup {
    pub dim: usize,
    pub chirality: Chirality,
    pub matrices: Vec<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    RotationOnly,
    Full,
}

impl OrthogonalGroup {
    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn apply(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
        m.iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

pub fn matrix_det3(m: &[Vec<f64>]) -> f64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        _ => panic!("determinant only for dim <= 3"),
    }
}

/// The matrix of a versor's double-sided action on basis vectors.
pub fn versor_matrix(v: &Versor) -> Result<Vec<Vec<f64>>> {
    let sig = v.signature();
    let d = sig.dim();
    let mut m = vec![vec![0.0; d]; d];
    for (j, row) in m.iter_mut().enumerate() {
        // build the transpose column-by-column, then flip below
        let image = v.sandwich(&Multivector::basis_vector(sig, j))?;
        row.copy_from_slice(&image.vector_part());
    }
    for r in 0..d {
        for j in 0..r {
            let (a, b) = m.split_at_mut(r);
            std::mem::swap(&mut a[j][r], &mut b[0][j]);
        }
    }
    Ok(m)
}

/// Maps every versor to its orthogonal matrix; R and -R collapse.
pub fn realize_orthogonal(vg: &VersorGroup) -> Result<OrthogonalGroup> {
    let d = vg.signature().dim();
    let mut set = ToleranceSet::new(TOL);
    let mut matrices = Vec::new();
    for v in &vg.elements {
        let m = versor_matrix(v)?;
        let flat: Vec<f64> = m.iter().flatten().copied().collect();
        let (_, fresh) = set.insert(&flat);
        if fresh {
            matrices.push(m);
        }
    }
    Ok(OrthogonalGroup {
        dim: d,
        chirality: match vg.parity_class {
            ParityClass::EvenOnly => Chirality::RotationOnly,
            ParityClass::Mixed => Chirality::Full,
        },
        matrices,
    })
}

/// Count of true reflection matrices (symmetric, det -1, trace d-2) in an
/// orthogonal group.
pub fn count_reflections(og: &OrthogonalGroup) -> usize {
    og.matrices
        .iter()
        .filter(|m| {
            let d = og.dim;
            let symmetric = (0..d).all(|i| (0..d).all(|j| (m[i][j] - m[j][i]).abs() < TOL));
            let trace: f64 = (0..d).map(|i| m[i][i]).sum();
            symmetric
                && matrix_det3(m) < 0.0
                && (trace - (d as f64 - 2.0)).abs() < TOL
        })
        .count()
}

/// Histogram of exact versor orders: smallest k with A^k = +1.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderSpectrum {
    pub counts: BTreeMap<usize, usize>,
}

impl OrderSpectrum {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_order(&self) -> usize {
        self.counts.keys().max().copied().unwrap_or(0)
    }
}

/// Order of one versor under exact versor powers (not the matrix action).
pub fn versor_order(v: &Versor, bound: usize) -> Result<usize> {
    let one = Multivector::one(v.signature());
    let mut acc = v.clone();
    for k in 1..=bound {
        if acc.multivector().approx_eq(&one, TOL) {
            return Ok(k);
        }
        acc = acc.compose(v)?;
    }
    Err(VersorError::OrderNotFound(bound))
}

pub fn order_spectrum(vg: &VersorGroup) -> Result<OrderSpectrum> {
    let bound = 2 * vg.order().max(1);
    let mut counts = BTreeMap::new();
    for v in &vg.elements {
        let k = versor_order(v, bound)?;
        *counts.entry(k).or_insert(0) += 1;
    }
    Ok(OrderSpectrum { counts })
}

/// Outcome of the group-axiom checks, with witnesses for any failure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: usize,
    pub parity_class: ParityClass,
    pub closure_ok: bool,
    pub identity_ok: bool,
    pub inverses_ok: bool,
    pub associativity_ok: bool,
    /// Binary-group label when the order matches one of {8, 24, 48, 120}.
    pub label: Option<String>,
    pub failures: Vec<String>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.closure_ok && self.identity_ok && self.inverses_ok && self.associativity_ok
    }
}

fn binary_label(order: usize) -> Option<String> {
    match order {
        8 => Some("Q".into()),
        24 => Some("2T".into()),
        48 => Some("2O".into()),
        120 => Some("2I".into()),
        _ => None,
    }
}

// Small deterministic PRNG for sampled associativity; keeps rand out of the
// library's dependencies.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Checks closure, identity and inverse membership, and associativity
/// (sampled over 1000 random triples by default; exhaustive behind the flag).
pub fn verify_group(vg: &VersorGroup, exhaustive_associativity: bool) -> Result<GroupReport> {
    let n = vg.order();
    let mut failures = Vec::new();

    let mut index = ToleranceSet::new(TOL);
    for v in &vg.elements {
        index.insert(v.multivector().coeffs());
    }

    let mut closure_ok = true;
    'outer: for (i, a) in vg.elements.iter().enumerate() {
        for (j, b) in vg.elements.iter().enumerate() {
            let ab = a.compose(b)?;
            if !index.contains(ab.multivector().coeffs()) {
                closure_ok = false;
                failures.push(format!("closure: element {i} * element {j} not in set"));
                break 'outer;
            }
        }
    }

    let one = Multivector::one(vg.signature());
    let identity_ok = vg
        .elements
        .iter()
        .any(|v| v.multivector().approx_eq(&one, TOL));
    if !identity_ok {
        failures.push("identity: scalar 1 not in set".into());
    }

    let mut inverses_ok = true;
    for (i, v) in vg.elements.iter().enumerate() {
        if !index.contains(v.reverse().multivector().coeffs()) {
            inverses_ok = false;
            failures.push(format!("inverse: reverse of element {i} not in set"));
            break;
        }
    }

    let mut associativity_ok = true;
    let check_triple = |i: usize, j: usize, k: usize| -> Result<bool> {
        let lhs = vg.elements[i].compose(&vg.elements[j])?.compose(&vg.elements[k])?;
        let rhs = vg.elements[i].compose(&vg.elements[j].compose(&vg.elements[k])?)?;
        Ok(lhs.multivector().approx_eq(rhs.multivector(), TOL))
    };
    if exhaustive_associativity {
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !check_triple(i, j, k)? {
                        associativity_ok = false;
                        failures.push(format!("associativity: triple ({i},{j},{k})"));
                        break 'assoc;
                    }
                }
            }
        }
    } else {
        let mut rng = SplitMix(0x5eed);
        for _ in 0..1000 {
            let (i, j, k) = (rng.below(n), rng.below(n), rng.below(n));
            if !check_triple(i, j, k)? {
                associativity_ok = false;
                failures.push(format!("associativity: triple ({i},{j},{k})"));
                break;
            }
        }
    }

    let label = if vg.parity_class == ParityClass::EvenOnly {
        binary_label(n)
    } else {
        None
    };

    Ok(GroupReport {
        order: n,
        parity_class: vg.parity_class,
        closure_ok,
        identity_ok,
        inverses_ok,
        associativity_ok,
        label,
        failures,
    })
}
