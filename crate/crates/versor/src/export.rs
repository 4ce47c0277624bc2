//! Stable CSV/JSON export of the pipeline artifacts. CSV numbers are fixed
//! at 12 significant digits so golden files are reproducible across
//! platforms.

use crate::arrays::PointArray;
use crate::error::Result;
use crate::roots::{CartanMatrix, RootSystem};

/// Formats with 12 significant digits in plain decimal notation.
pub fn fmt_sig12(v: f64) -> String {
    if v == 0.0 || v.abs() < 1e-15 {
        return "0".into();
    }
    let mut exp = v.abs().log10().floor() as i32;
    let mut decimals = (11 - exp).clamp(0, 17) as usize;
    let mut s = format!("{v:.decimals$}");
    // rounding can bump the magnitude past a power of ten (0.99999... -> 1.0);
    // recompute the digit budget from the rounded value
    let rounded: f64 = s.parse().unwrap_or(v);
    if rounded != 0.0 {
        let exp2 = rounded.abs().log10().floor() as i32;
        if exp2 != exp {
            exp = exp2;
            decimals = (11 - exp).clamp(0, 17) as usize;
            s = format!("{v:.decimals$}");
        }
    }
    if s == format!("-{:.decimals$}", 0.0) {
        s[1..].to_string()
    } else {
        s
    }
}

fn csv_row(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| fmt_sig12(v))
        .collect::<Vec<_>>()
        .join(",")
}

/// CSV of a root system: one row per root, coordinates then length.
pub fn root_system_csv(rs: &RootSystem) -> String {
    let mut out = String::new();
    let coords: Vec<String> = (0..rs.rank).map(|i| format!("x{}", i + 1)).collect();
    out.push_str(&coords.join(","));
    out.push_str(",length\n");
    for (root, len) in rs.roots.iter().zip(&rs.lengths) {
        let mut row = root.vector_part();
        row.push(*len);
        out.push_str(&csv_row(&row));
        out.push('\n');
    }
    out
}

/// CSV of a Cartan matrix: plain numeric rows.
pub fn cartan_csv(cm: &CartanMatrix) -> String {
    let mut out = String::new();
    for row in &cm.entries {
        out.push_str(&csv_row(row));
        out.push('\n');
    }
    out
}

/// CSV of a point array: coordinates then multiplicity.
pub fn point_array_csv(arr: &PointArray) -> String {
    let mut out = String::new();
    let coords: Vec<String> = (0..arr.dim).map(|i| format!("x{}", i + 1)).collect();
    out.push_str(&coords.join(","));
    out.push_str(",multiplicity\n");
    for (p, prov) in arr.points.iter().zip(&arr.provenance) {
        out.push_str(&csv_row(p));
        out.push_str(&format!(",{}\n", prov.len()));
    }
    out
}

/// CSV of 2D plane projections.
pub fn projection_csv(points: &[[f64; 2]]) -> String {
    let mut out = String::from("x,y\n");
    for p in points {
        out.push_str(&csv_row(p));
        out.push('\n');
    }
    out
}

/// CSV of a translation sweep: length, cardinality.
pub fn sweep_csv(sweep: &[(f64, usize)]) -> String {
    let mut out = String::from("length,cardinality\n");
    for (len, card) in sweep {
        out.push_str(&format!("{},{card}\n", fmt_sig12(*len)));
    }
    out
}

/// Pretty JSON with a trailing newline, for byte-stable golden files.
pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| crate::error::VersorError::Malformed(format!("serialization: {e}")))?;
    s.push('\n');
    Ok(s)
}
