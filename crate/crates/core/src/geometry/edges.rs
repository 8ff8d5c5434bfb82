use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Rational};
use crate::geometry::arrangement::{Arrangement, Sign};
use crate::geometry::chambers::Chamber;
use crate::geometry::feasibility::{feasible_strict, LinearConstraint, Relation};

/// The face `C̄ ∩ H` of a chamber at a pivot hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub chamber: usize,
    pub pivot: usize,
    /// Hyperplanes vanishing on the whole face, sorted; always contains the
    /// pivot.
    pub zeros: Vec<usize>,
    /// A point on every hyperplane in `zeros` and strictly on the chamber's
    /// side of all others.
    pub relint_witness: Vec<Rational>,
}

/// An intersection of hyperplanes, identified by the closed set of
/// hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub containing: Vec<usize>,
    pub dim: usize,
    pub weight_monomial: Monomial,
    /// 0 until computed.
    pub multiplicity: u64,
}

/// `C̄ ∩ H_h` for `chambers[c]`, using every chamber inequality (weakened).
pub fn face_of(arr: &Arrangement, chambers: &[Chamber], c: usize, h: usize) -> Result<Face> {
    let chamber = chambers.get(c).ok_or(Error::ChamberIndex { index: c, len: chambers.len() })?;
    arr.hyperplane(h)?;
    let closure: Vec<LinearConstraint> =
        arr.hyperplanes().iter().zip(&chamber.signs).map(|(hp, &s)| hp.constraint(s, Relation::Ge)).collect();
    face_from_closure(arr, &chamber.signs, closure, c, h)
}

/// Shared face computation. `closure` must describe the closed chamber
/// (any set of weak inequalities whose intersection is `C̄`).
pub(crate) fn face_from_closure(
    arr: &Arrangement,
    signs: &[Sign],
    mut closure: Vec<LinearConstraint>,
    c: usize,
    h: usize,
) -> Result<Face> {
    let dim = arr.dim();
    let hyperplanes = arr.hyperplanes();
    closure.push(hyperplanes[h].constraint(Sign::Plus, Relation::Eq));
    let base = feasible_strict(dim, &closure)?.ok_or(Error::EmptyFace { chamber: c, hyperplane: h })?;

    // Every witness found lies in the face; a hyperplane is off the face as
    // soon as one of them is strictly on the chamber's side.
    let mut witnesses: Vec<Vec<Rational>> = alloc::vec![base];
    let mut zeros = Vec::new();
    for (i, hp) in hyperplanes.iter().enumerate() {
        if i == h {
            zeros.push(i);
            continue;
        }
        let strictly = |w: &Vec<Rational>| hp.side_of(w) == Some(signs[i]);
        if witnesses.iter().any(strictly) {
            continue;
        }
        closure.push(hp.constraint(signs[i], Relation::Gt));
        let probe = feasible_strict(dim, &closure)?;
        closure.pop();
        match probe {
            Some(w) => witnesses.push(w),
            None => zeros.push(i),
        }
    }

    let count = Rational::from_integer(witnesses.len().into());
    let mut relint = alloc::vec![Rational::zero(); dim];
    for w in &witnesses {
        for (acc, x) in relint.iter_mut().zip(w) {
            *acc += x;
        }
    }
    if !count.is_one() {
        for x in relint.iter_mut() {
            *x /= &count;
        }
    }
    Ok(Face { chamber: c, pivot: h, zeros, relint_witness: relint })
}

/// Row-reduced equations of the hyperplanes in `subset`: each row is
/// `[normal | offset]` with a pivot column.
struct Span {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    fn new(arr: &Arrangement, subset: &[usize]) -> Result<Self> {
        let dim = arr.dim();
        let mut span = Span { rows: Vec::new() };
        for &i in subset {
            let hp = arr.hyperplane(i)?;
            let mut row: Vec<Rational> = hp.normal.clone();
            row.push(hp.offset.clone());
            let row = span.reduce(row);
            match row.iter().take(dim).position(|a| !a.is_zero()) {
                Some(p) => {
                    let lead = row[p].clone();
                    let row: Vec<Rational> = row.iter().map(|a| a / &lead).collect();
                    for (_, other) in span.rows.iter_mut() {
                        let f = other[p].clone();
                        if !f.is_zero() {
                            for (o, r) in other.iter_mut().zip(&row) {
                                *o -= &f * r;
                            }
                        }
                    }
                    span.rows.push((p, row));
                }
                None if !row[dim].is_zero() => return Err(Error::EmptyIntersection),
                None => {}
            }
        }
        Ok(span)
    }

    fn reduce(&self, mut row: Vec<Rational>) -> Vec<Rational> {
        for (p, r) in &self.rows {
            let f = row[*p].clone();
            if !f.is_zero() {
                for (x, y) in row.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
        row
    }

    fn contains(&self, arr: &Arrangement, i: usize) -> bool {
        let hp = &arr.hyperplanes()[i];
        let mut row = hp.normal.clone();
        row.push(hp.offset.clone());
        self.reduce(row).iter().all(Zero::is_zero)
    }
}

/// The edge `⋂_{i ∈ subset} H_i`, closed under containment.
pub fn canonical_edge(arr: &Arrangement, subset: &[usize]) -> Result<Edge> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let span = Span::new(arr, subset)?;
    let containing: Vec<usize> = (0..arr.len()).filter(|&i| span.contains(arr, i)).collect();
    Ok(Edge {
        dim: arr.dim() - span.rows.len(),
        weight_monomial: arr.weight_monomial(&containing),
        containing,
        multiplicity: 0,
    })
}
