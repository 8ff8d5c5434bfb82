//! Verification harness and command-line surface for `varchenko-core`.
//!
//! [`verify::verify_identity`] evaluates two determinant sources at random
//! points of a prime field and reports agreement; [`io`] reads arrangement
//! files and assignment JSON; [`json`] encodes factored products; [`cli`]
//! is the `varchenko` binary.

pub mod cli;
pub mod error;
pub mod io;
pub mod json;
pub mod verify;

pub use error::{HarnessError, Result};
pub use io::{assignment_digest, format_arrangement, parse_arrangement_file, parse_assignment_json};
pub use json::{factored_from_json, factored_to_json};
pub use verify::{compare_factored, verify_identity, Source, Subject, Verdict, VerificationReport, VerifyConfig};
