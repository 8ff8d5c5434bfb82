use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::geometry::arrangement::{Arrangement, Sign};
use crate::geometry::feasibility::{feasible_strict, LinearConstraint, Relation};

/// An open region of the complement, as a sign vector with a witness point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub signs: Vec<Sign>,
    pub witness: Vec<Rational>,
}

impl Chamber {
    /// `−C`: every sign flipped, witness negated. A chamber again for central
    /// arrangements.
    pub fn antipode(&self) -> Self {
        Self {
            signs: self.signs.iter().map(|s| s.flip()).collect(),
            witness: self.witness.iter().map(|x| -x.clone()).collect(),
        }
    }
}

/// Size limits for the exponential parts of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub max_hyperplanes: usize,
    pub max_chambers: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self { max_hyperplanes: 32, max_chambers: 6000 }
    }
}

/// Strict constraints for the walls `walls` of the region with sign vector
/// `signs`.
pub(crate) fn wall_constraints(
    arr: &Arrangement,
    signs: &[Sign],
    walls: &[usize],
    relation: Relation,
) -> Vec<LinearConstraint> {
    walls.iter().map(|&i| arr.hyperplanes()[i].constraint(signs[i], relation)).collect()
}

/// Walls of each region: hyperplanes whose single sign flip is again a
/// region. These are exactly the facet-defining hyperplanes.
pub(crate) fn walls_of(sign_vectors: &[Vec<Sign>]) -> Vec<Vec<usize>> {
    let set: BTreeSet<&[Sign]> = sign_vectors.iter().map(|s| s.as_slice()).collect();
    let mut scratch: Vec<Sign> = Vec::new();
    sign_vectors
        .iter()
        .map(|signs| {
            scratch.clear();
            scratch.extend_from_slice(signs);
            (0..signs.len())
                .filter(|&i| {
                    scratch[i] = scratch[i].flip();
                    let hit = set.contains(scratch.as_slice());
                    scratch[i] = scratch[i].flip();
                    hit
                })
                .collect()
        })
        .collect()
}

/// All chambers of `arr`, sorted lexicographically by sign vector.
///
/// Hyperplanes are inserted one at a time; each region of the first k
/// hyperplanes is tested against both sides of hyperplane k+1. Regions are
/// described by their walls only, which keeps the feasibility systems small.
pub fn enumerate_chambers(arr: &Arrangement, guards: &Guards) -> Result<Vec<Chamber>> {
    if arr.len() > guards.max_hyperplanes {
        return Err(Error::TooManyHyperplanes { count: arr.len(), limit: guards.max_hyperplanes });
    }
    let dim = arr.dim();
    let mut regions: Vec<Chamber> = vec![Chamber { signs: Vec::new(), witness: vec![Rational::zero(); dim] }];

    for (k, hyperplane) in arr.hyperplanes().iter().enumerate() {
        let signs: Vec<Vec<Sign>> = regions.iter().map(|c| c.signs.clone()).collect();
        let walls = walls_of(&signs);
        let mut next = Vec::with_capacity(regions.len() * 2);
        for (region, walls) in regions.into_iter().zip(walls) {
            let known = hyperplane.side_of(&region.witness);
            let base = wall_constraints(arr, &region.signs, &walls, Relation::Gt);
            for side in [Sign::Plus, Sign::Minus] {
                let witness = if known == Some(side) {
                    Some(region.witness.clone())
                } else {
                    let mut system = base.clone();
                    system.push(hyperplane.constraint(side, Relation::Gt));
                    feasible_strict(dim, &system)?
                };
                if let Some(witness) = witness {
                    let mut signs = region.signs.clone();
                    signs.push(side);
                    next.push(Chamber { signs, witness });
                }
            }
            if next.len() > guards.max_chambers {
                return Err(Error::ChamberGuard { reached: next.len(), limit: guards.max_chambers });
            }
        }
        debug_assert!(!next.is_empty(), "hyperplane {k} removed every region");
        regions = next;
    }

    regions.sort_by(|a, b| a.signs.cmp(&b.signs));
    Ok(regions)
}
