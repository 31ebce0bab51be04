//! Sheaves attached to modules for infinitesimal group schemes.
//!
//! The crate builds, over a finite field, the global operator of a rational
//! representation, the coherent sheaves on the projectivized support variety
//! obtained from kernels and images of its powers, and the commutative algebra
//! needed to decide whether those sheaves vanish or are locally free.

pub mod error;
pub mod field;
pub mod groebner;
pub mod group;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod rep;
pub mod sheaf;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldOp, PrimeField};
pub use groebner::{annihilator, radical_membership, RingPresentation, Submodule, Vector};
pub use group::{GroupDescriptor, GroupFamily, NullconePoint};
pub use matrix::Matrix;
pub use partition::Partition;
pub use poly::{Monomial, PolyRing, Polynomial};
pub use rep::{LocalJordanReport, Representation};
pub use sheaf::{GradedMatrix, Operator, SheafReport, SubquotientSheaf};
