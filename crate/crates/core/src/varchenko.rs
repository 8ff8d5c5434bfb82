//! The Varchenko matrix over a prime field and its brute-force determinant.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactalg::{Assignment, FactoredProduct, PrimeField};
use crate::geometry::{Arrangement, Chamber};

/// Indices of the hyperplanes on which two chambers have different signs.
pub fn separating_set(c1: &Chamber, c2: &Chamber) -> Result<Vec<usize>> {
    if c1.signs.len() != c2.signs.len() {
        return Err(Error::SignLengthMismatch(c1.signs.len(), c2.signs.len()));
    }
    Ok(c1.signs.iter().zip(&c2.signs).enumerate().filter(|(_, (a, b))| a != b).map(|(i, _)| i).collect())
}

/// Dense square matrix of field elements indexed by chambers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedMatrix {
    field: PrimeField,
    order: usize,
    entries: Vec<u64>,
}

impl EvaluatedMatrix {
    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let order = rows.len();
        let entries: Vec<u64> = rows
            .into_iter()
            .flat_map(|r| {
                assert_eq!(r.len(), order, "matrix must be square");
                r.into_iter().map(|x| field.reduce(x))
            })
            .collect();
        Self { field, order, entries }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Determinant by Gaussian elimination with nonzero-pivot search. Zero
    /// when singular.
    pub fn det(&self) -> u64 {
        det_bruteforce(self)
    }
}

/// Entry `(i, j)` is the product of the assigned weights of the hyperplanes
/// separating chambers `i` and `j`.
pub fn varchenko_matrix_eval(
    arr: &Arrangement,
    chambers: &[Chamber],
    assignment: &Assignment,
    field: &PrimeField,
) -> Result<EvaluatedMatrix> {
    let weights: Vec<u64> = arr
        .weights()
        .map(|w| assignment.get(w).map(|&x| field.reduce(x)).ok_or_else(|| Error::MissingVariable(w.clone())))
        .collect::<Result<_>>()?;
    let n = chambers.len();
    let mut entries = alloc::vec![0u64; n * n];
    for i in 0..n {
        entries[i * n + i] = field.reduce(1);
        for j in 0..i {
            let a = &chambers[i].signs;
            let b = &chambers[j].signs;
            if a.len() != weights.len() || b.len() != weights.len() {
                return Err(Error::SignLengthMismatch(a.len(), weights.len()));
            }
            let mut v = field.reduce(1);
            for ((x, y), &w) in a.iter().zip(b).zip(&weights) {
                if x != y {
                    v = field.mul(v, w);
                }
            }
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    Ok(EvaluatedMatrix { field: *field, order: n, entries })
}

pub fn det_bruteforce(m: &EvaluatedMatrix) -> u64 {
    let f = m.field;
    let n = m.order;
    let mut a = m.entries.clone();
    let mut det = f.reduce(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = f.neg(det);
        }
        let p = a[col * n + col];
        det = f.mul(det, p);
        let inv = f.inv(p).expect("pivot is nonzero");
        let (head, tail) = a.split_at_mut((col + 1) * n);
        let pivot_row = &head[col * n..];
        for row in tail.chunks_exact_mut(n) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let factor = f.mul(factor, inv);
            for k in col..n {
                row[k] = f.sub(row[k], f.mul(factor, pivot_row[k]));
            }
        }
    }
    det
}

/// `Σ 2·exponent·degree(monomial)`: total degree of the expanded product,
/// which bounds the Schwartz–Zippel failure probability per trial by
/// `bound / p`.
pub fn degree_bound(f: &FactoredProduct) -> BigUint {
    f.factors().iter().fold(BigUint::from(0u8), |acc, (m, e)| acc + e * BigUint::from(2 * m.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Monomial, VariableId};
    use crate::geometry::Sign::{Minus, Plus};
    use alloc::vec;

    fn ch(signs: &[crate::geometry::Sign]) -> Chamber {
        Chamber { signs: signs.to_vec(), witness: Vec::new() }
    }

    #[test]
    fn separating_sets() {
        let a = ch(&[Plus, Plus, Plus]);
        let b = ch(&[Minus, Plus, Plus]);
        assert_eq!(separating_set(&a, &b).unwrap(), [0]);
        assert!(separating_set(&a, &a).unwrap().is_empty());
        assert_eq!(separating_set(&a, &ch(&[Minus, Minus, Minus])).unwrap(), [0, 1, 2]);
        assert_eq!(separating_set(&a, &ch(&[Plus])), Err(Error::SignLengthMismatch(3, 1)));
    }

    #[test]
    fn small_determinants() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(det_bruteforce(&EvaluatedMatrix::from_rows(f, vec![vec![1, 0], vec![0, 1]])), 1);
        let w = 7;
        let m = EvaluatedMatrix::from_rows(f, vec![vec![1, w], vec![w, 1]]);
        assert_eq!(det_bruteforce(&m), f.sub(1, 49));
        // needs a row swap
        let m = EvaluatedMatrix::from_rows(f, vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]);
        assert_eq!(det_bruteforce(&m), f.neg(5));
        let singular = EvaluatedMatrix::from_rows(f, vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(det_bruteforce(&singular), 0);
    }

    #[test]
    fn determinant_matches_leibniz_on_random_small_matrices() {
        let f = PrimeField::new(1_000_003).unwrap();
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % 1_000_003
        };
        for n in 1..=5usize {
            let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
            let m = EvaluatedMatrix::from_rows(f, rows.clone());
            assert_eq!(det_bruteforce(&m), leibniz(&f, &rows));
        }
    }

    fn leibniz(f: &PrimeField, rows: &[Vec<u64>]) -> u64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = rows.len();
        let mut total = 0;
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = 1;
            for (i, &pi) in p.iter().enumerate() {
                term = f.mul(term, rows[i][pi]);
            }
            total = if inversions % 2 == 0 { f.add(total, term) } else { f.sub(total, term) };
        }
        total
    }

    #[test]
    fn degree_bounds() {
        let one = |m: Monomial, e: u32| FactoredProduct::new(vec![(m, e.into())]);
        assert_eq!(degree_bound(&one(Monomial::var(VariableId::pair(1, 2)), 1)), 2u32.into());
        assert_eq!(degree_bound(&FactoredProduct::empty()), 0u32.into());
    }
}
