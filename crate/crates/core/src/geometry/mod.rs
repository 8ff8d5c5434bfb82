//! General weighted-arrangement engine.
//!
//! Everything here is exact: chambers are found by rational sign-vector
//! feasibility (Fourier–Motzkin with strict/weak bookkeeping), faces by
//! per-hyperplane feasibility probes, and edges by rational Gaussian
//! elimination.

mod arrangement;
mod chambers;
mod complex;
mod edges;
mod feasibility;

pub use arrangement::{Arrangement, Hyperplane, Sign};
pub use chambers::{enumerate_chambers, Chamber, Guards};
pub use complex::{factored_determinant_general, multiplicity, relevant_edges, ChamberComplex, FaceScan};
pub use edges::{canonical_edge, face_of, Edge, Face};
pub use feasibility::{feasible_strict, LinearConstraint, Relation};
