//! Coxeter elements as versors: Coxeter number, Coxeter plane, exponents,
//! and projection of root systems onto the Coxeter plane.

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, Versor, TOL};
use crate::dedup::ToleranceSet;
use crate::error::{Result, VersorError};
use crate::groups::{matrix_det3, versor_matrix};
use crate::roots::{simple_roots, GroupId};

const ORDER_BOUND: usize = 1000;
const ANGLE_TOL: f64 = 1e-6;

/// A Coxeter element with its order, invariant plane and exponents.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoxeterDescriptor {
    pub group: GroupId,
    pub versor: Versor,
    pub h: usize,
    /// Unit bivector of the Coxeter plane, sign-normalized to a positive
    /// coefficient on the lexicographically first nonzero blade.
    pub plane: Multivector,
    /// In 3D, the vector normal to the Coxeter plane (plane * pseudoscalar).
    pub normal: Option<Multivector>,
    pub exponents: Vec<usize>,
}

/// Product of the simple roots in catalog order: the Coxeter versor.
pub fn coxeter_versor(simple: &[Multivector]) -> Result<Versor> {
    let mut acc = Multivector::one(simple[0].signature());
    for root in simple {
        acc = acc.geometric_product(root)?;
    }
    Versor::try_new(acc)
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let d = a.len();
    let mut out = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..d {
            out[i][j] = (0..d).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn is_identity(m: &[Vec<f64>], tol: f64) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &v)| (v - if i == j { 1.0 } else { 0.0 }).abs() < tol)
    })
}

/// Smallest h >= 1 such that the h-fold sandwich action is the identity on
/// all basis vectors.
pub fn coxeter_number(w: &Versor) -> Result<usize> {
    let m = versor_matrix(w)?;
    let mut acc = m.clone();
    for h in 1..=ORDER_BOUND {
        if is_identity(&acc, TOL) {
            return Ok(h);
        }
        acc = mat_mul(&acc, &m);
    }
    Err(VersorError::OrderNotFound(ORDER_BOUND))
}

/// Checks the rank-2 versor identity W^n = (-1)^(n+1); returns the deviation.
pub fn i2_versor_identity_deviation(w: &Versor, n: usize) -> Result<f64> {
    let sig = w.signature();
    let mut acc = Versor::identity(sig);
    for _ in 0..n {
        acc = acc.compose(w)?;
    }
    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
    let expected = Multivector::scalar(sig, sign);
    Ok(acc.multivector().max_deviation(&expected))
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Real eigenvector of a 3x3 orthogonal matrix for eigenvalue `eps`, or None
/// when (M - eps I) has full rank.
fn axis_for_eigenvalue(m: &[Vec<f64>], eps: f64) -> Option<[f64; 3]> {
    let rows: Vec<Vec<f64>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| m[i][j] - if i == j { eps } else { 0.0 })
                .collect()
        })
        .collect();
    let mut best: Option<[f64; 3]> = None;
    let mut best_norm = 1e-6;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = cross(&rows[i], &rows[j]);
        let n = norm(&c);
        if n > best_norm {
            best_norm = n;
            best = Some([c[0] / n, c[1] / n, c[2] / n]);
        }
    }
    // confirm it really is an eigenvector
    best.filter(|axis| {
        let image: Vec<f64> = (0..3)
            .map(|r| (0..3).map(|c| m[r][c] * axis[c]).sum::<f64>())
            .collect();
        (0..3).all(|r| (image[r] - eps * axis[r]).abs() < 1e-6)
    })
}

/// Rotation data of a 3x3 orthogonal Coxeter-element matrix: the normal axis,
/// its real eigenvalue, and the rotation angle in the orthogonal plane.
fn rotation_structure(m: &[Vec<f64>]) -> Result<(Option<[f64; 3]>, f64, f64)> {
    // degenerate case: the action is +-identity, every plane is invariant
    if is_identity(m, TOL) {
        return Ok((None, 1.0, 0.0));
    }
    let minus = m
        .iter()
        .map(|row| row.iter().map(|v| -v).collect())
        .collect::<Vec<Vec<f64>>>();
    if is_identity(&minus, TOL) {
        return Ok((None, -1.0, std::f64::consts::PI));
    }
    let det = matrix_det3(m);
    // try the eigenvalue opposite the determinant's rotation part first
    for eps in [-det.signum(), det.signum()] {
        if let Some(axis) = axis_for_eigenvalue(m, eps) {
            // angle in the plane orthogonal to the axis
            let u = orthogonal_unit(&axis);
            let mu: Vec<f64> = (0..3)
                .map(|r| (0..3).map(|c| m[r][c] * u[c]).sum::<f64>())
                .collect();
            let cos_t = u.iter().zip(&mu).map(|(a, b)| a * b).sum::<f64>();
            let sin_t = {
                let c = cross(&u, &mu);
                axis.iter().zip(&c).map(|(a, b)| a * b).sum::<f64>()
            };
            let angle = sin_t.atan2(cos_t).abs();
            return Ok((Some(axis), eps, angle));
        }
    }
    Err(VersorError::NoCoxeterPlane { h: 0 })
}

fn orthogonal_unit(axis: &[f64; 3]) -> [f64; 3] {
    let trial = if axis[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let dot: f64 = axis.iter().zip(&trial).map(|(a, b)| a * b).sum();
    let mut u = [0.0; 3];
    for i in 0..3 {
        u[i] = trial[i] - dot * axis[i];
    }
    let n = norm(&u);
    [u[0] / n, u[1] / n, u[2] / n]
}

/// Sign-normalize: positive coefficient on the lexicographically first
/// (lowest blade index) nonzero blade.
fn sign_normalize(mv: &Multivector) -> Multivector {
    for &c in mv.coeffs() {
        if c.abs() > TOL {
            return if c < 0.0 { mv.scale(-1.0) } else { mv.clone() };
        }
    }
    mv.clone()
}

/// The invariant plane on which the Coxeter element rotates by 2*pi/h,
/// returned as a sign-normalized unit bivector.
pub fn coxeter_plane(w: &Versor) -> Result<Multivector> {
    let sig = w.signature();
    let h = coxeter_number(w)?;
    match sig.dim() {
        2 => {
            let e1 = Multivector::basis_vector(sig, 0);
            let e2 = Multivector::basis_vector(sig, 1);
            Ok(&e1 * &e2)
        }
        3 => {
            let m = versor_matrix(w)?;
            let (axis, _eps, angle) = rotation_structure(&m)?;
            let axis = axis.unwrap_or([0.0, 0.0, 1.0]);
            if axis_angle_mismatch(angle, h) {
                return Err(VersorError::NoCoxeterPlane { h });
            }
            // plane bivector from the normal: B = -(n I), unit by construction
            let n = Multivector::vector(sig, &[axis[0], axis[1], axis[2]]);
            let pseudo = Multivector::pseudoscalar(sig);
            let b = n.geometric_product(&pseudo)?.scale(-1.0);
            Ok(sign_normalize(&b.normalized().expect("unit axis")))
        }
        d => Err(VersorError::Malformed(format!(
            "coxeter plane only defined for rank 2 or 3, got {d}"
        ))),
    }
}

fn axis_angle_mismatch(angle: f64, h: usize) -> bool {
    let target = 2.0 * std::f64::consts::PI / h as f64;
    // the plane angle must be a multiple m*2pi/h with m coprime-ish; for the
    // canonical Coxeter element it is exactly 2pi/h
    (angle - target).abs() > ANGLE_TOL && h > 2
}

/// Exponents m with eigenvalues exp(2 pi i m / h): the plane rotation angle
/// contributes m and h-m, a real eigenvalue -1 contributes h/2.
pub fn exponents(w: &Versor, h: usize) -> Result<Vec<usize>> {
    let sig = w.signature();
    let m = versor_matrix(w)?;
    let two_pi = 2.0 * std::f64::consts::PI;
    let to_exponent = |angle: f64| -> Result<usize> {
        let raw = angle * h as f64 / two_pi;
        let rounded = raw.round();
        if (raw - rounded).abs() > ANGLE_TOL * h as f64 {
            return Err(VersorError::ExponentMismatch { angle, h });
        }
        Ok(rounded as usize)
    };
    let mut out = Vec::new();
    match sig.dim() {
        2 => {
            let angle = m[1][0].atan2(m[0][0]).abs();
            let e = to_exponent(angle)?;
            out.push(e);
            out.push(h - e);
        }
        3 => {
            let (_axis, eps, angle) = rotation_structure(&m)?;
            let e = to_exponent(angle)?;
            out.push(e);
            out.push(h - e);
            if eps < 0.0 {
                out.push(h / 2);
            }
        }
        d => {
            return Err(VersorError::Malformed(format!(
                "exponents only for rank 2 or 3, got {d}"
            )))
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Full descriptor for a catalog group.
pub fn coxeter_descriptor(id: GroupId) -> Result<CoxeterDescriptor> {
    let simple = simple_roots(id);
    let w = coxeter_versor(&simple)?;
    let h = coxeter_number(&w)?;
    let plane = coxeter_plane(&w)?;
    let normal = if id.rank() == 3 {
        let pseudo = Multivector::pseudoscalar(id.signature());
        Some(plane.geometric_product(&pseudo)?)
    } else {
        None
    };
    let exps = exponents(&w, h)?;
    Ok(CoxeterDescriptor {
        group: id,
        versor: w,
        h,
        plane,
        normal,
        exponents: exps,
    })
}

/// Orthonormal in-plane basis (u1, u2) of a unit bivector, chosen so points
/// already spanning the plane keep their coordinates where possible.
pub fn plane_basis(plane: &Multivector) -> Result<(Multivector, Multivector)> {
    let sig = plane.signature();
    let rev = plane.reverse();
    let mut u1 = None;
    for i in 0..sig.dim() {
        let e = Multivector::basis_vector(sig, i);
        // projection of e onto the plane: (e . B) B~
        let contracted = e.geometric_product(plane)?.grade_project(1);
        let projected = contracted.geometric_product(&rev)?.grade_project(1);
        if projected.norm() > 0.5 {
            u1 = Some(projected.normalized().expect("nonzero"));
            break;
        }
    }
    let u1 = u1.ok_or_else(|| VersorError::Malformed("degenerate plane bivector".into()))?;
    let u2 = u1.geometric_product(plane)?.grade_project(1);
    let u2 = u2
        .normalized()
        .ok_or_else(|| VersorError::Malformed("degenerate plane bivector".into()))?;
    Ok((u1, u2))
}

/// Orthogonal projection of grade-1 points onto the plane's 2D coordinates.
pub fn project_to_plane(points: &[Multivector], plane: &Multivector) -> Result<Vec<[f64; 2]>> {
    let (u1, u2) = plane_basis(plane)?;
    points
        .iter()
        .map(|p| Ok([p.dot(&u1)?, p.dot(&u2)?]))
        .collect()
}

/// Orbit of a vector under repeated application of the Coxeter element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitReport {
    pub orbit_size: usize,
    pub points: Vec<Multivector>,
    pub in_plane: bool,
}

pub fn plane_orbit_decomposition(w: &Versor, v: &Multivector) -> Result<OrbitReport> {
    let plane = coxeter_plane(w)?;
    let (u1, u2) = plane_basis(&plane)?;
    let in_plane = {
        let p1 = v.dot(&u1)?;
        let p2 = v.dot(&u2)?;
        ((p1 * p1 + p2 * p2).sqrt() - v.norm()).abs() < TOL
    };
    let mut set = ToleranceSet::new(TOL);
    let mut points = Vec::new();
    let mut current = v.clone();
    for _ in 0..ORDER_BOUND {
        let (_, fresh) = set.insert(current.coeffs());
        if !fresh {
            break;
        }
        points.push(current.clone());
        current = w.sandwich(&current)?;
    }
    Ok(OrbitReport {
        orbit_size: points.len(),
        points,
        in_plane,
    })
}
