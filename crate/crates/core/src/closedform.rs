//! Closed-form determinant factorizations for the Coxeter families.
//!
//! Every formula is emitted exactly as stated, including the cases where the
//! geometric engine disagrees; adjudication belongs to the verification
//! harness.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{FactoredProduct, Monomial, VariableId};
use crate::families::{
    canonical_signed_subsets, factorial, k_subsets, multiplicity_combinatorial, FamilyEdgeDescriptor, FamilyKind,
};

/// Lazily enumerated family of (signed) subsets of `[n]` with a minimum size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetFamily {
    /// Subsets of `{1..n}`.
    Plain { n: u32, min_size: usize },
    /// Canonical signed subsets of `[±n]`.
    Signed { n: u32, min_size: usize },
}

impl SubsetFamily {
    /// Members as sorted entry lists, by size then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = Vec<i64>> {
        let (n, min, signed) = match *self {
            SubsetFamily::Plain { n, min_size } => (n, min_size, false),
            SubsetFamily::Signed { n, min_size } => (n, min_size, true),
        };
        (min..=n as usize).flat_map(move |k| -> alloc::boxed::Box<dyn Iterator<Item = Vec<i64>>> {
            if signed {
                alloc::boxed::Box::new(canonical_signed_subsets(n, k).map(|j| j.entries().to_vec()))
            } else {
                alloc::boxed::Box::new(k_subsets(n, k).map(|s| s.into_iter().map(i64::from).collect()))
            }
        })
    }

    /// `C(n,k)` plain, `C(n,k)·2^{k−1}` signed.
    pub fn count_of_size(&self, k: usize) -> BigUint {
        let (n, signed) = match *self {
            SubsetFamily::Plain { n, .. } => (n as usize, false),
            SubsetFamily::Signed { n, .. } => (n as usize, true),
        };
        if k > n {
            return BigUint::zero();
        }
        let binom = (0..k).fold(BigUint::from(1u8), |acc, i| acc * (n - i) / (i + 1));
        if signed && k >= 1 {
            binom << (k - 1)
        } else {
            binom
        }
    }
}

fn from_descriptors(
    kind: FamilyKind,
    descriptors: impl Iterator<Item = FamilyEdgeDescriptor>,
) -> Result<FactoredProduct> {
    let mut f = FactoredProduct::empty();
    for d in descriptors {
        let m = d.weight_monomial(kind)?;
        let e = multiplicity_combinatorial(kind, &d)?;
        f.push(m, e);
    }
    Ok(f.canonicalize())
}

fn need(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::FamilyParameter(alloc::format!("closed forms need n >= 2, got {n}")));
    }
    Ok(())
}

/// `∏_{I ⊆ [n], |I| ≥ 2} (1 − ∏_{{i,j} ⊆ I} q_{i,j}²)^{(|I|−2)!(n−|I|+1)!}`.
pub fn formula_a(n: u32) -> Result<FactoredProduct> {
    need(n)?;
    let kind = FamilyKind::A(n);
    from_descriptors(kind, (2..=n as usize).flat_map(|k| k_subsets(n, k)).map(FamilyEdgeDescriptor::Equal))
}

/// Signed-subset product over canonical `|J| ≥ 2` with exponent
/// `2^{n−|J|+1}(|J|−2)!(n−|J|+1)!`, times the product over `|I| ≥ 1` of
/// `(1 − ∏q_i² ∏q_{i,j}²q_{-i,j}²)^{2^{n−1}(|I|−1)!(n−|I|)!}`.
pub fn formula_b(n: u32) -> Result<FactoredProduct> {
    need(n)?;
    let kind = FamilyKind::B(n);
    let signed = (2..=n as usize).flat_map(|k| canonical_signed_subsets(n, k)).map(FamilyEdgeDescriptor::SignedEqual);
    let zero = (1..=n as usize).flat_map(|k| k_subsets(n, k)).map(FamilyEdgeDescriptor::Zero);
    from_descriptors(kind, signed.chain(zero))
}

/// Signed-subset product over canonical `|J| ≥ 2` with exponent
/// `2^{n−|J|}(|J|−2)!(n−|J|+1)!`, times the product over `|I| ≥ 2` of
/// `(1 − ∏q_{i,j}²q_{-i,j}²)^{2^{n−1}(|I|−2)!(n−|I|)!}`.
pub fn formula_d(n: u32) -> Result<FactoredProduct> {
    need(n)?;
    let kind = FamilyKind::D(n);
    let signed = (2..=n as usize).flat_map(|k| canonical_signed_subsets(n, k)).map(FamilyEdgeDescriptor::SignedEqual);
    let zero = (2..=n as usize).flat_map(|k| k_subsets(n, k)).map(FamilyEdgeDescriptor::Zero);
    from_descriptors(kind, signed.chain(zero))
}

/// `(1 − ∏_i q_i²)^{m−2} · ∏_j (1 − q_j²)²`.
pub fn formula_i2(m: u32) -> Result<FactoredProduct> {
    need(m)?;
    let mut f = FactoredProduct::empty();
    f.push(Monomial::product((1..=m).map(VariableId::single)), BigUint::from(m - 2));
    for j in 1..=m {
        f.push(Monomial::var(VariableId::single(j)), BigUint::from(2u8));
    }
    Ok(f.canonicalize())
}

/// Closed form for any family.
pub fn formula(kind: FamilyKind) -> Result<FactoredProduct> {
    match kind {
        FamilyKind::A(n) => formula_a(n),
        FamilyKind::B(n) => formula_b(n),
        FamilyKind::D(n) => formula_d(n),
        FamilyKind::I2(m) => formula_i2(m),
    }
}

/// The variable used by [`zagier`].
pub fn zagier_variable() -> VariableId {
    VariableId::named("q").expect("valid identifier")
}

/// `∏_{i=2}^{n} (1 − q^{i²−i})^{n!(n−i+1)/(i²−i)}` as a factored product in
/// the single variable `q` (the factor monomial is `q^{(i²−i)/2}`).
pub fn zagier(n: u32) -> Result<FactoredProduct> {
    need(n)?;
    let q = zagier_variable();
    let nf = factorial(n as i64)?;
    let mut f = FactoredProduct::empty();
    for i in 2..=n {
        let d = i * i - i;
        let num = &nf * (n - i + 1);
        let den = BigUint::from(d);
        assert!((&num % &den).is_zero(), "exponent n!(n-i+1)/(i^2-i) is integral");
        f.push(Monomial::var_pow(q.clone(), d / 2), num / den);
    }
    Ok(f.canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pv(i: u32, j: u32) -> VariableId {
        VariableId::pair(i, j)
    }

    fn fp(factors: &[(Monomial, u32)]) -> FactoredProduct {
        FactoredProduct::canonical(factors.iter().map(|(m, e)| (m.clone(), BigUint::from(*e))))
    }

    #[test]
    fn formula_a_small() {
        assert_eq!(formula_a(2).unwrap(), fp(&[(Monomial::var(pv(1, 2)), 1)]));
        let expected = fp(&[
            (Monomial::var(pv(1, 2)), 2),
            (Monomial::var(pv(1, 3)), 2),
            (Monomial::var(pv(2, 3)), 2),
            (Monomial::product([pv(1, 2), pv(1, 3), pv(2, 3)]), 1),
        ]);
        assert_eq!(formula_a(3).unwrap(), expected);
        let a4 = formula_a(4).unwrap();
        assert_eq!(a4.exponent_of(&Monomial::var(pv(3, 4))), 6u32.into());
    }

    #[test]
    fn formula_b_small_factors() {
        let b2 = formula_b(2).unwrap();
        assert_eq!(b2.exponent_of(&Monomial::var(pv(1, 2))), 2u32.into());
        assert_eq!(b2.exponent_of(&Monomial::var(VariableId::single(1))), 2u32.into());
        assert_eq!(b2.len(), 5);
    }

    #[test]
    fn formula_d_small() {
        let expected = fp(&[
            (Monomial::var(pv(1, 2)), 1),
            (Monomial::var(VariableId::neg_pair(1, 2)), 1),
            (Monomial::product([pv(1, 2), VariableId::neg_pair(1, 2)]), 2),
        ]);
        assert_eq!(formula_d(2).unwrap(), expected);
        let d3 = formula_d(3).unwrap();
        assert_eq!(d3.exponent_of(&Monomial::product([pv(1, 2), pv(1, 3), pv(2, 3)])), 1u32.into());
    }

    #[test]
    fn formula_i2_small() {
        let s = VariableId::single;
        assert_eq!(formula_i2(2).unwrap(), fp(&[(Monomial::var(s(1)), 2), (Monomial::var(s(2)), 2)]));
        let i3 = formula_i2(3).unwrap();
        assert_eq!(i3.exponent_of(&Monomial::product([s(1), s(2), s(3)])), 1u32.into());
        let i5 = formula_i2(5).unwrap();
        assert_eq!(i5.exponent_of(&Monomial::product((1..=5).map(s))), 3u32.into());
    }

    #[test]
    fn zagier_small() {
        let q = zagier_variable();
        assert_eq!(zagier(2).unwrap(), fp(&[(Monomial::var(q.clone()), 1)]));
        assert_eq!(zagier(3).unwrap(), fp(&[(Monomial::var(q.clone()), 6), (Monomial::var_pow(q, 3), 1)]));
    }

    #[test]
    fn factor_counts() {
        for n in 2..=6u32 {
            assert_eq!(formula_a(n).unwrap().len(), (1usize << n) - n as usize - 1);
            let signed: usize = (2..=n as usize)
                .map(|k| {
                    let c = (0..k).fold(1usize, |acc, i| acc * (n as usize - i) / (i + 1));
                    c << (k - 1)
                })
                .sum();
            assert_eq!(formula_b(n).unwrap().len(), signed + (1usize << n) - 1, "n = {n}");
        }
    }

    #[test]
    fn subset_family_counts() {
        for n in 1..=6u32 {
            for k in 0..=n as usize {
                let plain = SubsetFamily::Plain { n, min_size: k };
                let got = plain.iter().filter(|s| s.len() == k).count();
                assert_eq!(BigUint::from(got), plain.count_of_size(k));
                if k >= 1 {
                    let signed = SubsetFamily::Signed { n, min_size: k };
                    let got = signed.iter().filter(|s| s.len() == k).count();
                    assert_eq!(BigUint::from(got), signed.count_of_size(k));
                }
            }
        }
        let v: Vec<Vec<i64>> = SubsetFamily::Signed { n: 2, min_size: 1 }.iter().collect();
        assert_eq!(v, vec![vec![1], vec![2], vec![1, 2], vec![-1, 2]]);
    }
}
