//! Constructions, verification and arithmetic sieving for flag-transitive
//! 2-(v,k,2) designs.
//!
//! The crate is organized around six areas:
//! - [`permgroup`]: exact permutation-group computations (orbits,
//!   stabilizers, orders via a deterministic stabilizer chain, primitivity,
//!   set actions);
//! - [`finitegeom`]: GF(p^f), projective subspaces, classical group actions,
//!   order formulas and their bracketing bounds, gcd identities;
//! - [`design`]: incidence structures, 2-design verification,
//!   flag-transitivity;
//! - [`construct`]: the specific designs under study (derived designs of
//!   linear spaces, projective point-line designs, the Fano complement, a
//!   16-point biplane);
//! - [`sieve`]: the parameter feasibility filters, with full elimination
//!   trails;
//! - [`replicate`]: brute-force reproduction of the computer-verified facts.
//!
//! All arithmetic is exact; there are no tolerances anywhere.

pub mod construct;
pub mod design;
pub mod error;
pub mod finitegeom;
pub mod permgroup;
pub mod replicate;
pub mod sieve;

pub use error::{Error, Result};
