//! Finite fields, linear algebra over GF(q), projective-space objects,
//! classical group generators and order formulas, and the arithmetic
//! identities the parameter analysis rests on.
//!
//! Everything here is exact: orders and bounds are integers or rationals, and
//! inequality checks move powers of q across the comparison instead of
//! dividing.

pub mod actions;
pub mod arith;
pub mod field;
pub mod matrix;
pub mod orders;
pub mod subspace;

pub use actions::{
    extend_to_pgammal, psl_action, psl_action_with_budget, sl_generators, ActionObject,
    ProjectiveAction,
};
pub use arith::{
    gaussian_binomial, gcd_identity, parabolic_index, GcdVariant, ParabolicKind, Rational,
};
pub use field::{FieldElement, FieldSpec};
pub use matrix::MatrixGL;
pub use orders::{check_order_bounds, classical_order, ClassicalKind};
pub use subspace::{enumerate_subspaces, ProjSubspace};
