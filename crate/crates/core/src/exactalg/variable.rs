use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Name of a weight variable.
///
/// Canonical forms are `q_{i,j}` and `q_{-i,j}` with `1 ≤ i < j`, and `q_{i}`
/// with `i ≥ 1`. Anything else must be a plain identifier (ASCII letter
/// followed by letters, digits or `_`) that does not start with `q_{`.
/// Parsing the displayed name always gives back the same id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId(Repr);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    Pair(u32, u32),
    NegPair(u32, u32),
    Single(u32),
    Named(String),
}

impl VariableId {
    /// `q_{i,j}`. Panics unless `1 ≤ i < j`.
    pub fn pair(i: u32, j: u32) -> Self {
        assert!(1 <= i && i < j, "q_{{{i},{j}}} needs 1 <= i < j");
        Self(Repr::Pair(i, j))
    }

    /// `q_{-i,j}`. Panics unless `1 ≤ i < j`.
    pub fn neg_pair(i: u32, j: u32) -> Self {
        assert!(1 <= i && i < j, "q_{{-{i},{j}}} needs 1 <= i < j");
        Self(Repr::NegPair(i, j))
    }

    /// `q_{i}`. Panics unless `i ≥ 1`.
    pub fn single(i: u32) -> Self {
        assert!(i >= 1, "q_{{{i}}} needs i >= 1");
        Self(Repr::Single(i))
    }

    pub fn named(name: &str) -> Result<Self> {
        let id: Self = name.parse()?;
        match id.0 {
            Repr::Named(_) => Ok(id),
            _ => Err(Error::InvalidVariable(name.to_string())),
        }
    }

    pub fn as_pair(&self) -> Option<(u32, u32)> {
        match self.0 {
            Repr::Pair(i, j) => Some((i, j)),
            _ => None,
        }
    }

    pub fn as_neg_pair(&self) -> Option<(u32, u32)> {
        match self.0 {
            Repr::NegPair(i, j) => Some((i, j)),
            _ => None,
        }
    }

    pub fn as_single(&self) -> Option<u32> {
        match self.0 {
            Repr::Single(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Pair(i, j) => write!(f, "q_{{{i},{j}}}"),
            Repr::NegPair(i, j) => write!(f, "q_{{-{i},{j}}}"),
            Repr::Single(i) => write!(f, "q_{{{i}}}"),
            Repr::Named(s) => f.write_str(s),
        }
    }
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidVariable(s.to_string());
        if let Some(inner) = s.strip_prefix("q_{") {
            let inner = inner.strip_suffix('}').ok_or_else(bad)?;
            let repr = match inner.split_once(',') {
                Some((a, b)) => {
                    let (neg, a) = match a.strip_prefix('-') {
                        Some(rest) => (true, rest),
                        None => (false, a),
                    };
                    let i = parse_index(a).ok_or_else(bad)?;
                    let j = parse_index(b).ok_or_else(bad)?;
                    if i >= j {
                        return Err(bad());
                    }
                    if neg {
                        Repr::NegPair(i, j)
                    } else {
                        Repr::Pair(i, j)
                    }
                }
                None => Repr::Single(parse_index(inner).ok_or_else(bad)?),
            };
            return Ok(Self(repr));
        }
        let mut chars = s.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(bad()),
        }
        if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(bad());
        }
        Ok(Self(Repr::Named(s.to_string())))
    }
}
