//! Coxeter arrangements of types A, B, D and I₂(m), and their combinatorial
//! chamber and edge models.
//!
//! Hyperplane order in the built arrangements:
//!
//! * `A:n`: `H_{i,j} = {x_i = x_j}` for `i < j` in lexicographic order, weight
//!   `q_{i,j}`.
//! * `B:n`: the `H_{i,j}`, then `H_{-i,j} = {−x_i = x_j}` (weight `q_{-i,j}`),
//!   then `H_i = {x_i = 0}` (weight `q_{i}`).
//! * `D:n`: the `H_{i,j}` and the `H_{-i,j}`.
//! * `I2:m`: `m` lines through the origin of ℚ², weight `q_{i}`.
//!
//! The positive side of `H_{i,j}` is `x_i > x_j`, of `H_{-i,j}` is
//! `x_i + x_j > 0`, of `H_i` is `x_i > 0`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Rational, VariableId};
use crate::geometry::{Arrangement, Chamber, Hyperplane, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
}

impl FamilyKind {
    pub fn validated(self) -> Result<Self> {
        let (name, p) = self.parts();
        if p < 2 {
            return Err(Error::FamilyParameter(format!("{name}:{p} needs a parameter >= 2")));
        }
        Ok(self)
    }

    fn parts(&self) -> (&'static str, u32) {
        match *self {
            FamilyKind::A(n) => ("A", n),
            FamilyKind::B(n) => ("B", n),
            FamilyKind::D(n) => ("D", n),
            FamilyKind::I2(m) => ("I2", m),
        }
    }

    /// The `n` of A/B/D or the `m` of I₂(m).
    pub fn parameter(&self) -> u32 {
        self.parts().1
    }

    /// Ambient dimension of the built arrangement.
    pub fn dim(&self) -> usize {
        match *self {
            FamilyKind::I2(_) => 2,
            FamilyKind::A(n) | FamilyKind::B(n) | FamilyKind::D(n) => n as usize,
        }
    }

    pub fn chamber_count(&self) -> BigUint {
        let n = self.parameter();
        match self {
            FamilyKind::A(_) => factorial_u(n),
            FamilyKind::B(_) => factorial_u(n) << n as usize,
            FamilyKind::D(_) => factorial_u(n) << (n - 1) as usize,
            FamilyKind::I2(m) => BigUint::from(2 * m),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, p) = self.parts();
        write!(f, "{name}:{p}")
    }
}

/// `"A:n"`, `"B:n"`, `"D:n"` or `"I2:m"`.
impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::FamilyParameter(format!("`{s}` is not of the form A:n, B:n, D:n or I2:m"));
        let (name, p) = s.split_once(':').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let kind = match name.trim() {
            "A" => FamilyKind::A(p),
            "B" => FamilyKind::B(p),
            "D" => FamilyKind::D(p),
            "I2" => FamilyKind::I2(p),
            _ => return Err(bad()),
        };
        kind.validated()
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn unit_combo(n: u32, terms: &[(u32, i64)]) -> Vec<Rational> {
    let mut v = vec![r(0); n as usize];
    for &(i, c) in terms {
        v[(i - 1) as usize] = r(c);
    }
    v
}

fn pairs(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// Normal of the I₂(m) line number `k` (0-based): an exact rational point
/// whose angle increases strictly with `k/m` over the half-turn, hitting
/// the true direction at every multiple of 45°.
fn dihedral_normal(k: u32, m: u32) -> Vec<Rational> {
    let f = Rational::new(k.into(), m.into());
    let four = r(4);
    let quarter = Rational::new(1.into(), 4.into());
    let three_quarters = Rational::new(3.into(), 4.into());
    if f < quarter {
        vec![r(1), &four * &f]
    } else if f < three_quarters {
        vec![r(2) - &four * &f, r(1)]
    } else {
        vec![r(-1), r(4) - &four * &f]
    }
}

pub fn build_family(kind: FamilyKind) -> Result<Arrangement> {
    let kind = kind.validated()?;
    let n = kind.parameter();
    let mut hs = Vec::new();
    let zero = r(0);
    match kind {
        FamilyKind::A(_) | FamilyKind::B(_) | FamilyKind::D(_) => {
            for (i, j) in pairs(n) {
                hs.push(Hyperplane::new(unit_combo(n, &[(i, 1), (j, -1)]), zero.clone(), VariableId::pair(i, j)));
            }
            if !matches!(kind, FamilyKind::A(_)) {
                for (i, j) in pairs(n) {
                    hs.push(Hyperplane::new(
                        unit_combo(n, &[(i, 1), (j, 1)]),
                        zero.clone(),
                        VariableId::neg_pair(i, j),
                    ));
                }
            }
            if matches!(kind, FamilyKind::B(_)) {
                for i in 1..=n {
                    hs.push(Hyperplane::new(unit_combo(n, &[(i, 1)]), zero.clone(), VariableId::single(i)));
                }
            }
        }
        FamilyKind::I2(m) => {
            for i in 1..=m {
                hs.push(Hyperplane::new(dihedral_normal(i - 1, m), zero.clone(), VariableId::single(i)));
            }
        }
    }
    Arrangement::new(kind.dim(), hs)
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn sign_of(x: i64) -> Sign {
    debug_assert!(x != 0);
    if x > 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Sign vector of an integer point under the hyperplane order of `kind`.
fn family_signs(kind: FamilyKind, x: &[i64]) -> Vec<Sign> {
    let n = kind.parameter();
    let at = |i: u32| x[(i - 1) as usize];
    let mut signs: Vec<Sign> = pairs(n).map(|(i, j)| sign_of(at(i) - at(j))).collect();
    if !matches!(kind, FamilyKind::A(_)) {
        signs.extend(pairs(n).map(|(i, j)| sign_of(at(i) + at(j))));
    }
    if matches!(kind, FamilyKind::B(_)) {
        signs.extend((1..=n).map(|i| sign_of(at(i))));
    }
    signs
}

/// Chambers from (signed) permutations, sorted by sign vector.
///
/// A permutation σ and signs ε give the integer point with
/// `x_{σ(k)} = ε_k · (n − k + 1)` (type A: all ε = +; type D: ranks shifted
/// down by one so the last coordinate is 0 and only `n − 1` signs vary).
pub fn chambers_combinatorial(kind: FamilyKind) -> Result<Vec<Chamber>> {
    let kind = kind.validated()?;
    let n = kind.parameter();
    let (free_signs, shift) = match kind {
        FamilyKind::A(_) => (0, 0),
        FamilyKind::B(_) => (n, 0),
        FamilyKind::D(_) => (n - 1, 1),
        FamilyKind::I2(_) => return Err(Error::UnsupportedFamily(kind.to_string())),
    };
    let mut out = Vec::new();
    let mut sigma: Vec<u32> = (1..=n).collect();
    loop {
        for mask in 0u64..(1u64 << free_signs) {
            let mut x = vec![0i64; n as usize];
            for (k, &s) in sigma.iter().enumerate() {
                let rank = (n as i64) - (k as i64) - shift;
                let eps = if (k as u32) < free_signs && mask >> k & 1 == 1 { -1 } else { 1 };
                x[(s - 1) as usize] = eps * rank;
            }
            out.push(Chamber { signs: family_signs(kind, &x), witness: x.into_iter().map(r).collect() });
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    out.sort_by(|a, b| a.signs.cmp(&b.signs));
    Ok(out)
}

/// Weight of the hyperplane through two signed indices: `a·x_{|a|}` and
/// `b·x_{|b|}` equal means `x_i = x_j` when the signs agree and `x_i = −x_j`
/// otherwise.
pub fn signed_pair_weight(a: i64, b: i64) -> Result<VariableId> {
    if a == 0 || b == 0 || a.unsigned_abs() == b.unsigned_abs() {
        return Err(Error::EqualAbsoluteValue(a, b));
    }
    let (i, j) = (a.unsigned_abs().min(b.unsigned_abs()), a.unsigned_abs().max(b.unsigned_abs()));
    let (i, j) = (i as u32, j as u32);
    Ok(if (a > 0) == (b > 0) { VariableId::pair(i, j) } else { VariableId::neg_pair(i, j) })
}

/// Nonzero integers with distinct absolute values, one representative per
/// `±` pair: the entry of largest absolute value is positive. Entries are
/// kept sorted by absolute value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSubset {
    entries: Vec<i64>,
}

impl SignedSubset {
    /// Canonicalizes `entries` (negating all of them if needed).
    pub fn new(mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_by_key(|e| e.unsigned_abs());
        for w in entries.windows(2) {
            if w[0].unsigned_abs() == w[1].unsigned_abs() {
                return Err(Error::EqualAbsoluteValue(w[0], w[1]));
            }
        }
        if let Some(&e) = entries.first() {
            if e == 0 {
                return Err(Error::EqualAbsoluteValue(0, 0));
            }
        }
        if entries.last().is_some_and(|&e| e < 0) {
            entries.iter_mut().for_each(|e| *e = -*e);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// k-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut current: Option<Vec<u32>> = if k as u64 <= n as u64 { Some((1..=k as u32).collect()) } else { None };
    core::iter::from_fn(move || {
        let out = current.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - (k - 1 - i) as u32 {
                    c[i] += 1;
                    for t in i + 1..k {
                        c[t] = c[t - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        current = next;
        Some(out)
    })
}

/// Canonical signed subsets of `[±n]` of size `k`: absolute values in
/// lexicographic order, then the signs of the `k − 1` smaller entries in
/// Gray-code order.
pub fn canonical_signed_subsets(n: u32, k: usize) -> impl Iterator<Item = SignedSubset> {
    k_subsets(n, k).flat_map(move |abs| {
        let free = k.saturating_sub(1);
        (0u64..(1u64 << free)).map(move |m| {
            let gray = m ^ (m >> 1);
            let entries = abs
                .iter()
                .enumerate()
                .map(|(t, &a)| if t < free && gray >> t & 1 == 1 { -(a as i64) } else { a as i64 })
                .collect();
            SignedSubset { entries }
        })
    })
}

/// A relevant edge of a Coxeter arrangement, described combinatorially.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyEdgeDescriptor {
    /// `E(I) = {x_{i₁} = … = x_{i_r}}`, `|I| ≥ 2`.
    Equal(Vec<u32>),
    /// `E(J) = {ε₁x_{i₁} = … = ε_r x_{i_r}}`, `|J| ≥ 2`.
    SignedEqual(SignedSubset),
    /// `E(I₀) = {x_{i₁} = … = x_{i_r} = 0}`, `|I| ≥ 1`.
    Zero(Vec<u32>),
}

impl fmt::Display for FamilyEdgeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilyEdgeDescriptor::Equal(i) => write!(f, "E({{{}}})", list(i)),
            FamilyEdgeDescriptor::SignedEqual(j) => write!(f, "E({j})"),
            FamilyEdgeDescriptor::Zero(i) => write!(f, "E({{{}}}_0)", list(i)),
        }
    }
}

impl FamilyEdgeDescriptor {
    fn check(&self, kind: FamilyKind) -> Result<()> {
        let n = kind.parameter() as u64;
        let in_range = |a: u64| (1..=n).contains(&a);
        let ok = match (self, kind) {
            (FamilyEdgeDescriptor::Equal(i), FamilyKind::A(_)) => i.len() >= 2 && i.iter().all(|&a| in_range(a.into())),
            (FamilyEdgeDescriptor::SignedEqual(j), FamilyKind::B(_) | FamilyKind::D(_)) => {
                j.len() >= 2 && j.entries().iter().all(|a| in_range(a.unsigned_abs()))
            }
            (FamilyEdgeDescriptor::Zero(i), FamilyKind::B(_) | FamilyKind::D(_)) => {
                !i.is_empty() && i.iter().all(|&a| in_range(a.into()))
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(kind.to_string()))
        }
    }

    /// Weights of the hyperplanes containing the edge, in the weight order of
    /// the built arrangement's variables.
    pub fn weights(&self, kind: FamilyKind) -> Result<Vec<VariableId>> {
        self.check(kind)?;
        let mut out = Vec::new();
        match self {
            FamilyEdgeDescriptor::Equal(i) => {
                for (a, &s) in i.iter().enumerate() {
                    for &t in &i[a + 1..] {
                        out.push(VariableId::pair(s.min(t), s.max(t)));
                    }
                }
            }
            FamilyEdgeDescriptor::SignedEqual(j) => {
                let e = j.entries();
                for a in 0..e.len() {
                    for b in a + 1..e.len() {
                        out.push(signed_pair_weight(e[a], e[b])?);
                    }
                }
            }
            FamilyEdgeDescriptor::Zero(i) => {
                if matches!(kind, FamilyKind::B(_)) {
                    out.extend(i.iter().map(|&u| VariableId::single(u)));
                }
                for (a, &s) in i.iter().enumerate() {
                    for &t in &i[a + 1..] {
                        out.push(VariableId::pair(s.min(t), s.max(t)));
                        out.push(VariableId::neg_pair(s.min(t), s.max(t)));
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn weight_monomial(&self, kind: FamilyKind) -> Result<Monomial> {
        Ok(Monomial::product(self.weights(kind)?))
    }

    /// Indices of the hyperplanes of `build_family(kind)` named by
    /// [`weights`](Self::weights), sorted.
    pub fn hyperplane_indices(&self, kind: FamilyKind, arrangement: &Arrangement) -> Result<Vec<usize>> {
        let mut idx: Vec<usize> = self
            .weights(kind)?
            .iter()
            .map(|w| arrangement.index_of_weight(w).ok_or_else(|| Error::DescriptorMismatch(kind.to_string())))
            .collect::<Result<_>>()?;
        idx.sort_unstable();
        Ok(idx)
    }
}

/// Relevant edges as the combinatorial model lists them, with weights.
///
/// * A: `E(I)` for `|I| ≥ 2`.
/// * B: `E(J)` for canonical `|J| ≥ 2`, and `E(I₀)` for `|I| ≥ 1`.
/// * D: `E(J)` for canonical `|J| ≥ 2`, and `E(I₀)` for `|I| ≥ 2`.
pub fn relevant_edges_combinatorial(kind: FamilyKind) -> Result<Vec<(FamilyEdgeDescriptor, Monomial)>> {
    let kind = kind.validated()?;
    let n = kind.parameter();
    let nn = n as usize;
    let mut out: Vec<FamilyEdgeDescriptor> = Vec::new();
    match kind {
        FamilyKind::A(_) => {
            for k in 2..=nn {
                out.extend(k_subsets(n, k).map(FamilyEdgeDescriptor::Equal));
            }
        }
        FamilyKind::B(_) | FamilyKind::D(_) => {
            for k in 2..=nn {
                out.extend(canonical_signed_subsets(n, k).map(FamilyEdgeDescriptor::SignedEqual));
            }
            let min_zero = if matches!(kind, FamilyKind::B(_)) { 1 } else { 2 };
            for k in min_zero..=nn {
                out.extend(k_subsets(n, k).map(FamilyEdgeDescriptor::Zero));
            }
        }
        FamilyKind::I2(_) => return Err(Error::UnsupportedFamily(kind.to_string())),
    }
    out.into_iter()
        .map(|d| {
            let m = d.weight_monomial(kind)?;
            Ok((d, m))
        })
        .collect()
}

fn factorial_u(k: u32) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

pub(crate) fn factorial(k: i64) -> Result<BigUint> {
    if k < 0 {
        return Err(Error::NegativeFactorial);
    }
    Ok(factorial_u(k as u32))
}

pub(crate) fn pow2(e: i64) -> Result<BigUint> {
    if e < 0 {
        return Err(Error::NegativeFactorial);
    }
    Ok(BigUint::one() << e as usize)
}

/// Multiplicity of a combinatorial edge as the closed-form lemmas state it:
///
/// * A, `E(I)`: `(|I|−2)!·(n−|I|+1)!`
/// * B, `E(J)`: `2^{n−|J|+1}·(|J|−2)!·(n−|J|+1)!`; `E(I₀)`: `2^{n−1}·(|I|−1)!·(n−|I|)!`
/// * D, `E(J)`: `2^{n−|J|}·(|J|−2)!·(n−|J|+1)!`; `E(I₀)`: `2^{n−1}·(|I|−2)!·(n−|I|)!`
///
/// These are the stated formulas, not necessarily the true multiplicities.
pub fn multiplicity_combinatorial(kind: FamilyKind, descriptor: &FamilyEdgeDescriptor) -> Result<BigUint> {
    let kind = kind.validated()?;
    descriptor.check(kind)?;
    let n = kind.parameter() as i64;
    match (kind, descriptor) {
        (FamilyKind::A(_), FamilyEdgeDescriptor::Equal(i)) => {
            let r = i.len() as i64;
            Ok(factorial(r - 2)? * factorial(n - r + 1)?)
        }
        (FamilyKind::B(_), FamilyEdgeDescriptor::SignedEqual(j)) => {
            let r = j.len() as i64;
            Ok(pow2(n - r + 1)? * factorial(r - 2)? * factorial(n - r + 1)?)
        }
        (FamilyKind::B(_), FamilyEdgeDescriptor::Zero(i)) => {
            let r = i.len() as i64;
            Ok(pow2(n - 1)? * factorial(r - 1)? * factorial(n - r)?)
        }
        (FamilyKind::D(_), FamilyEdgeDescriptor::SignedEqual(j)) => {
            let r = j.len() as i64;
            Ok(pow2(n - r)? * factorial(r - 2)? * factorial(n - r + 1)?)
        }
        (FamilyKind::D(_), FamilyEdgeDescriptor::Zero(i)) => {
            let r = i.len() as i64;
            Ok(pow2(n - 1)? * factorial(r - 2)? * factorial(n - r)?)
        }
        _ => Err(Error::DescriptorMismatch(kind.to_string())),
    }
}
