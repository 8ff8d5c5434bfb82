use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Result;
use crate::exactalg::{Assignment, Monomial, PrimeField, VariableId};

/// Formal product `∏ (1 − m²)^e` over monomials `m`.
///
/// Any factor list is accepted; [`FactoredProduct::canonicalize`] merges equal
/// monomials, drops zero exponents and sorts by monomial order. Two products
/// denote the same polynomial iff their canonical factor lists are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredProduct {
    factors: Vec<(Monomial, BigUint)>,
}

impl FactoredProduct {
    pub fn new(factors: Vec<(Monomial, BigUint)>) -> Self {
        Self { factors }
    }

    /// Builds a canonical product from any factor list.
    pub fn canonical<I: IntoIterator<Item = (Monomial, BigUint)>>(factors: I) -> Self {
        Self::new(factors.into_iter().collect()).canonicalize()
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[(Monomial, BigUint)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, monomial: Monomial, exponent: BigUint) {
        self.factors.push((monomial, exponent));
    }

    pub fn canonicalize(&self) -> Self {
        let mut merged: BTreeMap<Monomial, BigUint> = BTreeMap::new();
        for (m, e) in &self.factors {
            *merged.entry(m.clone()).or_default() += e;
        }
        Self { factors: merged.into_iter().filter(|(_, e)| !e.is_zero()).collect() }
    }

    pub fn is_canonical(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].0 < w[1].0) && self.factors.iter().all(|(_, e)| !e.is_zero())
    }

    /// Exponent of the factor `(1 − m²)` in the canonical form.
    pub fn exponent_of(&self, m: &Monomial) -> BigUint {
        self.factors.iter().filter(|(x, _)| x == m).fold(BigUint::zero(), |acc, (_, e)| acc + e)
    }

    /// Evaluates the product in `field`. Fails on the first variable (in
    /// factor order) missing from `assignment`.
    pub fn eval(&self, assignment: &Assignment, field: &PrimeField) -> Result<u64> {
        let mut acc = field.reduce(1);
        for (m, e) in &self.factors {
            let v = m.eval(assignment, field)?;
            let base = field.sub(field.reduce(1), field.mul(v, v));
            acc = field.mul(acc, field.pow_big(base, e));
        }
        Ok(acc)
    }

    /// Replaces every variable by `var` and canonicalizes.
    pub fn specialize_all(&self, var: &VariableId) -> Self {
        Self::canonical(self.factors.iter().map(|(m, e)| (m.specialize(var), e.clone())))
    }

    /// All variables occurring in the product, sorted.
    pub fn variables(&self) -> Vec<VariableId> {
        let mut vars: Vec<VariableId> = self.factors.iter().flat_map(|(m, _)| m.variables().cloned()).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Exponent-wise comparison of the canonical forms.
    pub fn diff(&self, other: &Self) -> FactoredDiff {
        let mut table: BTreeMap<Monomial, (BigUint, BigUint)> = BTreeMap::new();
        for (m, e) in self.canonicalize().factors {
            table.entry(m).or_default().0 = e;
        }
        for (m, e) in other.canonicalize().factors {
            table.entry(m).or_default().1 = e;
        }
        FactoredDiff {
            entries: table
                .into_iter()
                .filter(|(_, (l, r))| l != r)
                .map(|(monomial, (lhs, rhs))| DiffEntry { monomial, lhs, rhs })
                .collect(),
        }
    }
}

impl fmt::Display for FactoredProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (m, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "(1 - ({m})^2)^{e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffEntry {
    pub monomial: Monomial,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

/// Monomials whose canonical exponents differ between two products (an
/// absent factor counts as exponent 0). Empty iff the canonical forms agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredDiff {
    pub entries: Vec<DiffEntry>,
}

impl FactoredDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn pv(i: u32, j: u32) -> VariableId {
        VariableId::pair(i, j)
    }

    fn fp(factors: &[(Monomial, u32)]) -> FactoredProduct {
        FactoredProduct::new(factors.iter().map(|(m, e)| (m.clone(), BigUint::from(*e))).collect())
    }

    #[test]
    fn canonicalize_merges_sorts_and_drops() {
        let a = Monomial::var(pv(1, 2));
        let b = Monomial::var(pv(1, 3));
        assert_eq!(fp(&[(a.clone(), 1), (a.clone(), 1)]).canonicalize(), fp(&[(a.clone(), 2)]));
        assert_eq!(fp(&[(b.clone(), 2), (a.clone(), 2)]).canonicalize(), fp(&[(a.clone(), 2), (b, 2)]));
        assert!(fp(&[(a, 0)]).canonicalize().is_empty());
    }

    #[test]
    fn eval_examples() {
        let f = PrimeField::new(PrimeField::MERSENNE_61).unwrap();
        let prod = fp(&[(Monomial::var(pv(1, 2)), 1)]);
        let mut a = Assignment::new();
        a.insert(pv(1, 2), 0);
        assert_eq!(prod.eval(&a, &f), Ok(1));
        a.insert(pv(1, 2), 1);
        assert_eq!(prod.eval(&a, &f), Ok(0));
    }

    #[test]
    fn specialize_examples() {
        let q = VariableId::named("q").unwrap();
        let prod = fp(&[(Monomial::product([pv(1, 2), pv(1, 3), pv(2, 3)]), 1)]);
        assert_eq!(prod.specialize_all(&q), fp(&[(Monomial::var_pow(q.clone(), 3), 1)]));
        assert!(FactoredProduct::empty().specialize_all(&q).is_empty());
    }

    #[test]
    fn diff_reports_both_sides() {
        let a = Monomial::var(pv(1, 2));
        let b = Monomial::var(pv(1, 3));
        let d = fp(&[(a.clone(), 2)]).diff(&fp(&[(a.clone(), 1), (b.clone(), 3)]));
        assert_eq!(
            d.entries,
            vec![
                DiffEntry { monomial: a.clone(), lhs: 2u32.into(), rhs: 1u32.into() },
                DiffEntry { monomial: b, lhs: 0u32.into(), rhs: 3u32.into() },
            ]
        );
        assert!(fp(&[(a.clone(), 1)]).diff(&fp(&[(a, 1)])).is_empty());
    }

    fn arb_product() -> impl Strategy<Value = FactoredProduct> {
        let mono = proptest::collection::vec((1u32..4, 1u32..3), 0..3)
            .prop_map(|vs| Monomial::from_exponents(vs.into_iter().map(|(i, e)| (VariableId::pair(i, i + 1), e))));
        proptest::collection::vec((mono, 0u32..4), 0..6)
            .prop_map(|fs| FactoredProduct::new(fs.into_iter().map(|(m, e)| (m, BigUint::from(e))).collect()))
    }

    fn assignment(vals: &[u64]) -> Assignment {
        (1..4u32).zip(vals).map(|(i, &v)| (VariableId::pair(i, i + 1), v)).collect()
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent_and_preserves_value(prod in arb_product(), vals in proptest::collection::vec(0u64..1_000_000, 3)) {
            let f = PrimeField::new(1_000_003).unwrap();
            let c = prod.canonicalize();
            prop_assert!(c.is_canonical());
            prop_assert_eq!(c.canonicalize(), c.clone());
            let a = assignment(&vals);
            prop_assert_eq!(prod.eval(&a, &f), c.eval(&a, &f));
        }

        #[test]
        fn eval_ignores_variables_outside_support(prod in arb_product(), vals in proptest::collection::vec(0u64..1000, 3), extra in 0u64..1000) {
            let f = PrimeField::new(1009).unwrap();
            let a = assignment(&vals);
            let mut b = a.clone();
            b.insert(VariableId::single(7), extra);
            prop_assert_eq!(prod.eval(&a, &f), prod.eval(&b, &f));
        }

        #[test]
        fn specialize_then_eval_matches_constant_assignment(prod in arb_product(), r in 0u64..1_000_000) {
            let f = PrimeField::new(1_000_003).unwrap();
            let q = VariableId::named("q").unwrap();
            let mut single = Assignment::new();
            single.insert(q.clone(), r);
            prop_assert_eq!(prod.specialize_all(&q).eval(&single, &f), prod.eval(&assignment(&[r, r, r]), &f));
        }
    }
}
