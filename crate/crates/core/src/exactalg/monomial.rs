use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{PrimeField, VariableId};

/// Values of weight variables in a prime field.
pub type Assignment = BTreeMap<VariableId, u64>;

/// A monomial in the weight variables. Zero exponents are never stored, so
/// the empty map is the monomial 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: BTreeMap<VariableId, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VariableId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VariableId, exp: u32) -> Self {
        let mut m = Self::one();
        if exp > 0 {
            m.exponents.insert(v, exp);
        }
        m
    }

    /// Product of the given variables, each with exponent 1 (repeats add up).
    pub fn product<I: IntoIterator<Item = VariableId>>(vars: I) -> Self {
        vars.into_iter().fold(Self::one(), |m, v| m.mul(&Self::var(v)))
    }

    pub fn from_exponents<I: IntoIterator<Item = (VariableId, u32)>>(pairs: I) -> Self {
        pairs.into_iter().fold(Self::one(), |m, (v, e)| m.mul(&Self::var_pow(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| e as u64).sum()
    }

    pub fn exponent(&self, v: &VariableId) -> u32 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableId, u32)> + '_ {
        self.exponents.iter().map(|(v, &e)| (v, e))
    }

    pub fn variables(&self) -> impl Iterator<Item = &VariableId> + '_ {
        self.exponents.keys()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exponents = self.exponents.clone();
        for (v, &e) in &other.exponents {
            *exponents.entry(v.clone()).or_insert(0) += e;
        }
        Self { exponents }
    }

    /// Every variable replaced by `var`: a monomial of degree d becomes var^d.
    pub fn specialize(&self, var: &VariableId) -> Self {
        let d = u32::try_from(self.degree()).expect("monomial degree overflows u32");
        Self::var_pow(var.clone(), d)
    }

    pub fn eval(&self, assignment: &Assignment, field: &PrimeField) -> Result<u64> {
        let mut acc = field.reduce(1);
        for (v, &e) in &self.exponents {
            let x = assignment.get(v).ok_or_else(|| Error::MissingVariable(v.clone()))?;
            acc = field.mul(acc, field.pow(*x, e as u64));
        }
        Ok(acc)
    }

    pub fn to_pairs(&self) -> Vec<(VariableId, u32)> {
        self.iter().map(|(v, e)| (v.clone(), e)).collect()
    }
}

/// `a · b`.
pub fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.mul(b)
}

/// Total degree first, then lexicographic over the sorted (variable, exponent)
/// entries.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exponents.iter().cmp(other.exponents.iter()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
