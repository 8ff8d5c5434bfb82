//! Exact arithmetic substrate: rationals, prime fields, weight monomials and
//! factored products.

mod factored;
mod field;
mod monomial;
mod rational;
mod variable;

pub use factored::{DiffEntry, FactoredDiff, FactoredProduct};
pub use field::{is_prime_u64, PrimeField};
pub use monomial::{mono_mul, Assignment, Monomial};
pub use rational::{parse_rational, Rational};
pub use variable::VariableId;
