//! Exact weighted hyperplane arrangements and their Varchenko determinants.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! * [`exactalg`]: rationals, word-sized prime fields, weight monomials and
//!   factored products `∏ (1 − m²)^e`.
//! * [`geometry`]: a general engine for weighted arrangements with exact
//!   sign-vector feasibility, chambers, faces, generated edges and
//!   multiplicities.
//! * [`families`]: the Coxeter arrangements of types A, B, D and I₂(m), with
//!   purely combinatorial chamber and edge models.
//! * [`varchenko`]: the Varchenko matrix evaluated over a prime field and its
//!   brute-force determinant.
//! * [`closedform`]: closed-form determinant factorizations for the Coxeter
//!   families and the single-variable Zagier product.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closedform;
pub mod error;
pub mod exactalg;
pub mod families;
pub mod geometry;
pub mod varchenko;

pub use error::{Error, Result};
pub use exactalg::{FactoredDiff, FactoredProduct, Monomial, PrimeField, Rational, VariableId};
pub use families::FamilyKind;
pub use geometry::{Arrangement, Chamber, ChamberComplex, Edge, Face, Guards, Hyperplane};
