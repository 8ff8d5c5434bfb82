use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Rational, VariableId};
use crate::geometry::feasibility::{LinearConstraint, Relation};

/// Side of a hyperplane. `Plus` orders before `Minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn of(value: &Rational) -> Option<Self> {
        if value.is_positive() {
            Some(Sign::Plus)
        } else if value.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The hyperplane `{x : normal · x = offset}` carrying a weight variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub weight: VariableId,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational, weight: VariableId) -> Self {
        Self { normal, offset, weight }
    }

    /// `normal · x − offset`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal.iter().zip(x).fold(-self.offset.clone(), |acc, (a, xi)| acc + a * xi)
    }

    pub fn side_of(&self, x: &[Rational]) -> Option<Sign> {
        Sign::of(&self.eval(x))
    }

    /// `sign · (normal · x − offset)  relation  0`.
    pub fn constraint(&self, sign: Sign, relation: Relation) -> LinearConstraint {
        let coeffs = self
            .normal
            .iter()
            .map(|a| match sign {
                Sign::Plus => a.clone(),
                Sign::Minus => -a.clone(),
            })
            .collect();
        let constant = match sign {
            Sign::Plus => -self.offset.clone(),
            Sign::Minus => self.offset.clone(),
        };
        LinearConstraint::new(coeffs, constant, relation)
    }

    /// (normal, offset) scaled so the first nonzero normal entry is 1.
    fn normalized(&self) -> (Vec<Rational>, Rational) {
        let lead = self.normal.iter().find(|a| !a.is_zero()).cloned().expect("normal checked nonzero");
        (self.normal.iter().map(|a| a / &lead).collect(), &self.offset / &lead)
    }
}

/// A finite list of distinct weighted hyperplanes in ℚⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Validates dimensions, nonzero normals, distinct weights and distinct
    /// affine sets.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut weights = BTreeSet::new();
        let mut seen: Vec<(Vec<Rational>, Rational)> = Vec::with_capacity(hyperplanes.len());
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.normal.len() });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(Error::ZeroNormal(i));
            }
            if !weights.insert(h.weight.clone()) {
                return Err(Error::DuplicateWeight(h.weight.clone()));
            }
            let key = h.normalized();
            if let Some(first) = seen.iter().position(|k| *k == key) {
                return Err(Error::DuplicateHyperplane { first, second: i });
            }
            seen.push(key);
        }
        Ok(Self { dim, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplane(&self, index: usize) -> Result<&Hyperplane> {
        self.hyperplanes.get(index).ok_or(Error::HyperplaneIndex { index, len: self.len() })
    }

    /// All hyperplanes pass through the origin.
    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.offset.is_zero())
    }

    pub fn weights(&self) -> impl Iterator<Item = &VariableId> + '_ {
        self.hyperplanes.iter().map(|h| &h.weight)
    }

    pub fn index_of_weight(&self, weight: &VariableId) -> Option<usize> {
        self.hyperplanes.iter().position(|h| &h.weight == weight)
    }

    /// Product of the weights of the given hyperplanes.
    pub fn weight_monomial(&self, indices: &[usize]) -> Monomial {
        Monomial::product(indices.iter().map(|&i| self.hyperplanes[i].weight.clone()))
    }

    /// Sign vector of a point lying on no hyperplane.
    pub fn signs_at(&self, x: &[Rational]) -> Option<Vec<Sign>> {
        self.hyperplanes.iter().map(|h| h.side_of(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn h(normal: &[i64], offset: i64, w: VariableId) -> Hyperplane {
        Hyperplane::new(normal.iter().map(|&a| r(a)).collect(), r(offset), w)
    }

    #[test]
    fn rejects_bad_input() {
        let w = VariableId::single;
        assert_eq!(
            Arrangement::new(2, vec![h(&[1, 0, 0], 0, w(1))]),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
        assert_eq!(Arrangement::new(2, vec![h(&[0, 0], 0, w(1))]), Err(Error::ZeroNormal(0)));
        assert_eq!(
            Arrangement::new(2, vec![h(&[1, 0], 0, w(1)), h(&[0, 1], 0, w(1))]),
            Err(Error::DuplicateWeight(w(1)))
        );
        assert_eq!(
            Arrangement::new(2, vec![h(&[1, -1], 2, w(1)), h(&[-2, 2], -4, w(2))]),
            Err(Error::DuplicateHyperplane { first: 0, second: 1 })
        );
        // parallel but distinct is fine
        assert!(Arrangement::new(2, vec![h(&[1, -1], 2, w(1)), h(&[-2, 2], 4, w(2))]).is_ok());
    }

    #[test]
    fn constraint_orientation() {
        let hp = h(&[1, -1], 1, VariableId::single(1));
        let x = [r(3), r(0)];
        assert_eq!(hp.eval(&x), r(2));
        assert!(hp.constraint(Sign::Plus, Relation::Gt).holds_at(&x));
        assert!(!hp.constraint(Sign::Minus, Relation::Gt).holds_at(&x));
    }
}
