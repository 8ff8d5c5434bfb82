use alloc::string::String;

use thiserror::Error;

use crate::exactalg::VariableId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),

    #[error("modulus {0} is not a prime")]
    NotPrime(u64),

    #[error("no value assigned to variable {0}")]
    MissingVariable(VariableId),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(usize),

    #[error("hyperplanes {first} and {second} define the same affine set")]
    DuplicateHyperplane { first: usize, second: usize },

    #[error("weight {0} is used by more than one hyperplane")]
    DuplicateWeight(VariableId),

    #[error("arrangement has {count} hyperplanes, more than the limit of {limit}")]
    TooManyHyperplanes { count: usize, limit: usize },

    #[error("chamber count reached {reached}, exceeding the guard of {limit}")]
    ChamberGuard { reached: usize, limit: usize },

    #[error("hyperplane index {index} out of range for {len} hyperplanes")]
    HyperplaneIndex { index: usize, len: usize },

    #[error("chamber index {index} out of range for {len} chambers")]
    ChamberIndex { index: usize, len: usize },

    #[error("the face of chamber {chamber} at hyperplane {hyperplane} is empty")]
    EmptyFace { chamber: usize, hyperplane: usize },

    #[error("the chosen hyperplanes have an empty intersection")]
    EmptyIntersection,

    #[error("empty hyperplane subset")]
    EmptySubset,

    #[error("pivot hyperplane {0} does not contain the edge")]
    PivotNotContaining(usize),

    #[error("odd chamber count {count} for an edge at pivot {pivot}")]
    OddMultiplicity { count: u64, pivot: usize },

    #[error("sign vectors have different lengths ({0} and {1})")]
    SignLengthMismatch(usize, usize),

    #[error("family parameter out of range: {0}")]
    FamilyParameter(String),

    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),

    #[error("signed indices {0} and {1} have equal absolute value")]
    EqualAbsoluteValue(i64, i64),

    #[error("factorial of a negative number in multiplicity formula")]
    NegativeFactorial,

    #[error("edge descriptor does not belong to family {0}")]
    DescriptorMismatch(String),
}
