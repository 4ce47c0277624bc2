//! A geometric (Clifford) algebra engine for Coxeter root systems,
//! polyhedral versor groups, spinor-induced rank-4 root systems,
//! Coxeter-plane geometry, conformal geometric algebra, and affine
//! quasicrystalline point arrays.
//!
//! The pipeline, end to end:
//!
//! 1. [`roots`]: close catalog simple roots (A1^3, A3, B3, H3, I2(n)) under
//!    reflections into full root systems; Cartan matrices.
//! 2. [`groups`]: close roots and root products under the geometric product
//!    into pin/spin versor groups (the binary polyhedral groups Q, 2T, 2O,
//!    2I), realize them as orthogonal matrix groups, verify group axioms.
//! 3. [`induction`]: read the spinors as 4D vectors, inducing the A1^4, D4,
//!    F4 and H4 root systems.
//! 4. [`coxeter`]: Coxeter elements as versors — Coxeter number, invariant
//!    plane, exponents, and projections onto the Coxeter plane.
//! 5. [`conformal`]: the Cl(4,1) null embedding, conformal reflections and
//!    translation rotors.
//! 6. [`arrays`]: affine-extension point arrays from translated seed
//!    polytopes, in both the Euclidean and conformal pipelines.
//!
//! Everything is exact closure plus floating-point tolerance [`TOL`]; no
//! group orders or root counts are hard-coded into the generators.

pub mod algebra;
pub mod arrays;
pub mod conformal;
pub mod coxeter;
pub mod dedup;
pub mod error;
pub mod export;
pub mod groups;
pub mod induction;
pub mod roots;

pub use algebra::{golden_ratio, reflect, Multivector, Parity, Signature, Versor, TOL};
pub use arrays::{
    affine_orbit, affine_orbit_conformal, cyclic_rotation_group, cyclic_spin_group,
    degeneracy_report, translation_sweep, PointArray, SeedPolytope, TranslationSpec,
};
pub use conformal::{ConformalContext, ConformalPoint};
pub use coxeter::{
    coxeter_descriptor, coxeter_number, coxeter_plane, coxeter_versor, exponents,
    plane_orbit_decomposition, project_to_plane, CoxeterDescriptor,
};
pub use error::{Result, VersorError};
pub use groups::{
    count_reflections, generate_pin_group, generate_spin_group, order_spectrum,
    realize_orthogonal, verify_group, Chirality, OrthogonalGroup, VersorGroup,
};
pub use induction::{induce_root_system, spinor_to_4d, Rank4Label, RootSystem4, Vector4};
pub use roots::{
    cartan_matrix, cartan_matrix_of, close_under_reflections, root_system, simple_root_lengths,
    simple_roots, GroupId,
};
