//! Tolerance-ball dedup for coefficient-vector sets.
//!
//! Elements are hashed on coordinates rounded to six decimals. A lookup also
//! probes the neighbor cells of any coordinate sitting within tolerance of a
//! cell boundary, so rounding cannot split one element into two. Candidates
//! from the hash are confirmed with an exact tolerance-ball comparison.

use std::collections::HashMap;

const GRID: f64 = 1e6;

/// A deduplicated set of fixed-length coefficient vectors with tolerance
/// matching and deterministic insertion order.
#[derive(Debug, Clone)]
pub struct ToleranceSet {
    tol: f64,
    items: Vec<Vec<f64>>,
    buckets: HashMap<Vec<i64>, Vec<usize>>,
}

impl ToleranceSet {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            items: Vec::new(),
            buckets: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Vec<f64>] {
        &self.items
    }

    fn key(coeffs: &[f64]) -> Vec<i64> {
        coeffs.iter().map(|x| (x * GRID).round() as i64).collect()
    }

    /// Cells to probe: the rounded cell, plus the flip of every coordinate
    /// whose residual lies within tolerance of the cell boundary.
    fn candidate_keys(&self, coeffs: &[f64]) -> Vec<Vec<i64>> {
        let base = Self::key(coeffs);
        let margin = self.tol * GRID;
        let mut flips: Vec<(usize, i64)> = Vec::new();
        for (i, &x) in coeffs.iter().enumerate() {
            let resid = x * GRID - base[i] as f64;
            if resid > 0.5 - margin {
                flips.push((i, 1));
            } else if resid < -0.5 + margin {
                flips.push((i, -1));
            }
        }
        let mut keys = vec![base.clone()];
        for mask in 1..(1u32 << flips.len().min(16)) {
            let mut k = base.clone();
            for (bit, &(i, d)) in flips.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    k[i] += d;
                }
            }
            keys.push(k);
        }
        keys
    }

    pub fn find(&self, coeffs: &[f64]) -> Option<usize> {
        for key in self.candidate_keys(coeffs) {
            if let Some(indices) = self.buckets.get(&key) {
                for &idx in indices {
                    if self.items[idx]
                        .iter()
                        .zip(coeffs)
                        .all(|(a, b)| (a - b).abs() < self.tol)
                    {
                        return Some(idx);
                    }
                }
            }
        }
        None
    }

    pub fn contains(&self, coeffs: &[f64]) -> bool {
        self.find(coeffs).is_some()
    }

    /// Inserts the vector if no existing element matches within tolerance.
    /// Returns the element index and whether it was newly inserted.
    pub fn insert(&mut self, coeffs: &[f64]) -> (usize, bool) {
        if let Some(idx) = self.find(coeffs) {
            return (idx, false);
        }
        let idx = self.items.len();
        self.items.push(coeffs.to_vec());
        self.buckets.entry(Self::key(coeffs)).or_default().push(idx);
        (idx, true)
    }
}

/// Lexicographic order on coordinates rounded to six decimals, used to make
/// element indices reproducible across runs.
pub fn canonical_order(items: &[Vec<f64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| {
        let ka: Vec<i64> = ToleranceSet::key(&items[a]);
        let kb: Vec<i64> = ToleranceSet::key(&items[b]);
        ka.cmp(&kb)
    });
    order
}
