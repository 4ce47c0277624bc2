//! Simple-root catalog and closure of simple roots into full root systems.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{golden_ratio, reflect, Multivector, Signature, TOL};
use crate::dedup::ToleranceSet;
use crate::error::{Result, VersorError};

/// Overflow guard for the reflection closure: a finite Coxeter group of the
/// ranks handled here never exceeds this.
pub const CLOSURE_LIMIT: usize = 10_000;

/// Identifier for the catalog groups. `H2` parses as an alias of `I2(5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupId {
    A1A1A1,
    A3,
    B3,
    H3,
    I2(usize),
}

impl GroupId {
    pub fn rank(&self) -> usize {
        match self {
            GroupId::I2(_) => 2,
            _ => 3,
        }
    }

    pub fn signature(&self) -> Signature {
        Signature::euclidean(self.rank()).expect("rank <= 3")
    }

    /// All rank-3 catalog entries, in Theorem order.
    pub fn rank3_catalog() -> [GroupId; 4] {
        [GroupId::A1A1A1, GroupId::A3, GroupId::B3, GroupId::H3]
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::A1A1A1 => write!(f, "A1A1A1"),
            GroupId::A3 => write!(f, "A3"),
            GroupId::B3 => write!(f, "B3"),
            GroupId::H3 => write!(f, "H3"),
            GroupId::I2(n) => write!(f, "I2:{n}"),
        }
    }
}

impl From<GroupId> for String {
    fn from(id: GroupId) -> String {
        id.to_string()
    }
}

impl TryFrom<String> for GroupId {
    type Error = VersorError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for GroupId {
    type Err = VersorError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace(['X', '*'], "");
        match norm.as_str() {
            "A1A1A1" => return Ok(GroupId::A1A1A1),
            "A3" => return Ok(GroupId::A3),
            "B3" => return Ok(GroupId::B3),
            "H3" => return Ok(GroupId::H3),
            "H2" => return Ok(GroupId::I2(5)),
            _ => {}
        }
        if let Some(rest) = norm
            .strip_prefix("I2:")
            .or_else(|| norm.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')))
        {
            let n: usize = rest
                .parse()
                .map_err(|_| VersorError::UnknownGroup(s.to_string()))?;
            if n < 3 {
                return Err(VersorError::BadDihedralOrder(n));
            }
            return Ok(GroupId::I2(n));
        }
        Err(VersorError::UnknownGroup(s.to_string()))
    }
}

/// A finite set of unit roots closed under mutual reflections.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystem {
    pub group: Option<GroupId>,
    pub rank: usize,
    pub simple_roots: Vec<Multivector>,
    pub roots: Vec<Multivector>,
    /// Diagram-normalization length per root (1 everywhere except B3, where
    /// the original two-length structure is kept as a tag after roots are
    /// normalized to unit length for reflection purposes).
    pub lengths: Vec<f64>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn signature(&self) -> Signature {
        self.simple_roots[0].signature()
    }

    pub fn contains(&self, v: &Multivector, tol: f64) -> bool {
        self.roots.iter().any(|r| r.approx_eq(v, tol))
    }
}

/// Catalog simple roots, normalized to unit length.
pub fn simple_roots(id: GroupId) -> Vec<Multivector> {
    let sig = id.signature();
    let tau = golden_ratio();
    match id {
        GroupId::I2(n) => {
            let angle = std::f64::consts::PI / n as f64;
            vec![
                Multivector::vector(sig, &[1.0, 0.0]),
                Multivector::vector(sig, &[-angle.cos(), angle.sin()]),
            ]
        }
        GroupId::A1A1A1 => (0..3).map(|i| Multivector::basis_vector(sig, i)).collect(),
        GroupId::H3 => vec![
            Multivector::basis_vector(sig, 1),
            Multivector::vector(sig, &[-0.5 * (tau - 1.0), -0.5, -0.5 * tau]),
            Multivector::basis_vector(sig, 2),
        ],
        GroupId::B3 => {
            let s = 0.5_f64.sqrt();
            vec![
                Multivector::vector(sig, &[s, -s, 0.0]),
                Multivector::vector(sig, &[0.0, s, -s]),
                Multivector::basis_vector(sig, 2),
            ]
        }
        // D3 = A3 realization
        GroupId::A3 => {
            let s = 0.5_f64.sqrt();
            vec![
                Multivector::vector(sig, &[s, -s, 0.0]),
                Multivector::vector(sig, &[0.0, s, -s]),
                Multivector::vector(sig, &[0.0, s, s]),
            ]
        }
    }
}

/// Diagram lengths of the catalog simple roots (sqrt(2) for B3's long roots).
pub fn simple_root_lengths(id: GroupId) -> Vec<f64> {
    match id {
        GroupId::B3 => vec![2.0_f64.sqrt(), 2.0_f64.sqrt(), 1.0],
        _ => vec![1.0; simple_roots(id).len()],
    }
}

/// Closes a set of unit simple roots under mutual reflections by fixed-point
/// iteration. Length tags propagate from the reflected root.
fn close_tagged(seeds: &[(Multivector, f64)]) -> Result<(Vec<Multivector>, Vec<f64>)> {
    let sig = seeds[0].0.signature();
    let mut set = ToleranceSet::new(TOL);
    let mut roots: Vec<Multivector> = Vec::new();
    let mut tags: Vec<f64> = Vec::new();
    for (seed, tag) in seeds {
        let unit = seed
            .normalized()
            .ok_or(VersorError::NullMirror(0.0))?;
        let (_, fresh) = set.insert(unit.coeffs());
        if fresh {
            roots.push(unit);
            tags.push(*tag);
        }
    }
    loop {
        let mut added = false;
        let snapshot = roots.len();
        for i in 0..snapshot {
            for j in 0..snapshot {
                let r = reflect(&roots[j], &roots[i])?;
                let (_, fresh) = set.insert(r.coeffs());
                if fresh {
                    roots.push(r);
                    tags.push(tags[j]);
                    added = true;
                    if roots.len() > CLOSURE_LIMIT {
                        return Err(VersorError::ClosureOverflow {
                            limit: CLOSURE_LIMIT,
                        });
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    // deterministic order, keeping tags aligned
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| {
        let ka: Vec<i64> = roots[a].coeffs().iter().map(|x| (x * 1e6).round() as i64).collect();
        let kb: Vec<i64> = roots[b].coeffs().iter().map(|x| (x * 1e6).round() as i64).collect();
        ka.cmp(&kb)
    });
    let roots_sorted = order.iter().map(|&i| roots[i].clone()).collect();
    let tags_sorted = order.iter().map(|&i| tags[i]).collect();
    let _ = sig;
    Ok((roots_sorted, tags_sorted))
}

/// Closure of arbitrary simple roots into a full root system.
pub fn close_under_reflections(simple: &[Multivector]) -> Result<RootSystem> {
    let seeds: Vec<(Multivector, f64)> = simple.iter().map(|r| (r.clone(), 1.0)).collect();
    let (roots, lengths) = close_tagged(&seeds)?;
    Ok(RootSystem {
        group: None,
        rank: simple[0].signature().dim(),
        simple_roots: simple.to_vec(),
        roots,
        lengths,
    })
}

/// Full root system of a catalog group.
pub fn root_system(id: GroupId) -> Result<RootSystem> {
    let simple = simple_roots(id);
    let tags = simple_root_lengths(id);
    let seeds: Vec<(Multivector, f64)> = simple.iter().cloned().zip(tags).collect();
    let (roots, lengths) = close_tagged(&seeds)?;
    Ok(RootSystem {
        group: Some(id),
        rank: id.rank(),
        simple_roots: simple,
        roots,
        lengths,
    })
}

/// Cartan matrix A_ij = 2 a_i . a_j / (a_i . a_i) over the given simple roots.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<f64>>,
}

pub fn cartan_matrix(simple: &[Multivector]) -> Result<CartanMatrix> {
    let n = simple.len();
    let mut entries = vec![vec![0.0; n]; n];
    for i in 0..n {
        let aii = simple[i].dot(&simple[i])?;
        for j in 0..n {
            entries[i][j] = 2.0 * simple[i].dot(&simple[j])? / aii;
        }
    }
    Ok(CartanMatrix { entries })
}

/// Cartan matrix of a catalog group, computed from the simple roots at their
/// diagram lengths. The catalog stores unit mirrors (the reflection formula
/// wants unit vectors), but the Cartan formula is length-sensitive: B3's
/// integral entries only appear at the sqrt(2)/1 diagram lengths.
pub fn cartan_matrix_of(id: GroupId) -> Result<CartanMatrix> {
    let restored: Vec<Multivector> = simple_roots(id)
        .iter()
        .zip(simple_root_lengths(id))
        .map(|(r, l)| r.scale(l))
        .collect();
    cartan_matrix(&restored)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_id_parsing() {
        assert_eq!("H3".parse::<GroupId>().unwrap(), GroupId::H3);
        assert_eq!("h2".parse::<GroupId>().unwrap(), GroupId::I2(5));
        assert_eq!("I2:7".parse::<GroupId>().unwrap(), GroupId::I2(7));
        assert_eq!("I2(4)".parse::<GroupId>().unwrap(), GroupId::I2(4));
        assert_eq!("A1xA1xA1".parse::<GroupId>().unwrap(), GroupId::A1A1A1);
        assert!(matches!(
            "I2:2".parse::<GroupId>(),
            Err(VersorError::BadDihedralOrder(2))
        ));
        assert!("E8".parse::<GroupId>().is_err());
    }

    #[test]
    fn a1_cubed_simple_roots_close_to_octahedron() {
        let rs = root_system(GroupId::A1A1A1).unwrap();
        assert_eq!(rs.len(), 6);
        for r in &rs.roots {
            assert!(rs.contains(&r.scale(-1.0), TOL));
        }
    }

    #[test]
    fn closure_cardinalities_match_catalog() {
        assert_eq!(root_system(GroupId::A3).unwrap().len(), 12);
        assert_eq!(root_system(GroupId::B3).unwrap().len(), 18);
        assert_eq!(root_system(GroupId::H3).unwrap().len(), 30);
        assert_eq!(root_system(GroupId::I2(5)).unwrap().len(), 10);
        for n in 3..=12 {
            assert_eq!(root_system(GroupId::I2(n)).unwrap().len(), 2 * n);
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let rs = root_system(GroupId::H3).unwrap();
        let again = close_under_reflections(&rs.roots).unwrap();
        assert_eq!(again.len(), rs.len());
        for r in &rs.roots {
            assert!(again.contains(r, TOL));
        }
    }

    #[test]
    fn roots_are_unit_and_closed() {
        for id in [GroupId::A3, GroupId::B3, GroupId::H3, GroupId::I2(7)] {
            let rs = root_system(id).unwrap();
            for r in &rs.roots {
                assert!((r.norm() - 1.0).abs() < TOL);
            }
            for a in &rs.roots {
                for b in &rs.roots {
                    let refl = reflect(b, a).unwrap();
                    assert!(rs.contains(&refl, 1e-8), "closure violated for {id}");
                }
            }
        }
    }

    #[test]
    fn h3_root_coordinates_lie_in_golden_set() {
        let tau = golden_ratio();
        let allowed = [0.0, 1.0, 0.5, tau / 2.0, (tau - 1.0) / 2.0];
        let rs = root_system(GroupId::H3).unwrap();
        for r in &rs.roots {
            for c in r.vector_part() {
                assert!(
                    allowed.iter().any(|a| (c.abs() - a).abs() < TOL),
                    "coordinate {c} outside icosidodecahedral set"
                );
            }
        }
    }

    #[test]
    fn b3_two_length_decomposition() {
        let rs = root_system(GroupId::B3).unwrap();
        let long = rs.lengths.iter().filter(|&&l| (l - 2.0_f64.sqrt()).abs() < TOL).count();
        let short = rs.lengths.iter().filter(|&&l| (l - 1.0).abs() < TOL).count();
        assert_eq!((long, short), (12, 6));
    }

    #[test]
    fn cartan_matrix_i2n() {
        for n in 3..=12 {
            let cm = cartan_matrix(&simple_roots(GroupId::I2(n))).unwrap();
            let c = -2.0 * (std::f64::consts::PI / n as f64).cos();
            assert!((cm.entries[0][0] - 2.0).abs() < 1e-12);
            assert!((cm.entries[1][1] - 2.0).abs() < 1e-12);
            assert!((cm.entries[0][1] - c).abs() < 1e-12);
            assert!((cm.entries[1][0] - c).abs() < 1e-12);
        }
    }

    #[test]
    fn cartan_matrix_a1_cubed_is_twice_identity() {
        let cm = cartan_matrix(&simple_roots(GroupId::A1A1A1)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 } else { 0.0 };
                assert!((cm.entries[i][j] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cartan_matrix_h3_off_diagonals() {
        let tau = golden_ratio();
        // dot products of the catalog roots: the 3-branch sits between a1,a2
        // and the 5-branch (entry -tau) between a2,a3
        let cm = cartan_matrix(&simple_roots(GroupId::H3)).unwrap();
        assert!((cm.entries[0][1] + 1.0).abs() < 1e-9);
        assert!((cm.entries[1][2] + tau).abs() < 1e-9);
        assert!((cm.entries[0][2]).abs() < 1e-9);
    }

    #[test]
    fn crystallographic_cartan_entries_are_integers() {
        for id in [GroupId::A3, GroupId::B3] {
            let cm = cartan_matrix_of(id).unwrap();
            for row in &cm.entries {
                for &e in row {
                    assert!((e - e.round()).abs() < 1e-9, "{id}: entry {e} not integral");
                }
            }
        }
    }
}
