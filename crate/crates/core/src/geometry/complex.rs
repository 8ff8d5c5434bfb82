use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactalg::FactoredProduct;
use crate::geometry::arrangement::{Arrangement, Sign};
use crate::geometry::chambers::{enumerate_chambers, wall_constraints, walls_of, Chamber, Guards};
use crate::geometry::edges::{canonical_edge, face_from_closure, Edge, Face};
use crate::geometry::feasibility::Relation;

/// An arrangement together with its chambers and their walls.
#[derive(Clone, Debug)]
pub struct ChamberComplex {
    arrangement: Arrangement,
    chambers: Vec<Chamber>,
    walls: Vec<Vec<usize>>,
    index: BTreeMap<Vec<Sign>, usize>,
}

impl ChamberComplex {
    pub fn new(arrangement: &Arrangement, guards: &Guards) -> Result<Self> {
        let chambers = enumerate_chambers(arrangement, guards)?;
        let signs: Vec<Vec<Sign>> = chambers.iter().map(|c| c.signs.clone()).collect();
        let walls = walls_of(&signs);
        let index = signs.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Self { arrangement: arrangement.clone(), chambers, walls, index })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    /// Facet hyperplanes of chamber `c`.
    pub fn walls(&self, c: usize) -> &[usize] {
        &self.walls[c]
    }

    pub fn find(&self, signs: &[Sign]) -> Option<usize> {
        self.index.get(signs).copied()
    }

    /// Same result as [`face_of`](crate::geometry::face_of), with the closed
    /// chamber given by its walls only.
    pub fn face_of(&self, c: usize, h: usize) -> Result<Face> {
        let chamber = self.chambers.get(c).ok_or(Error::ChamberIndex { index: c, len: self.chambers.len() })?;
        self.arrangement.hyperplane(h)?;
        let closure = wall_constraints(&self.arrangement, &chamber.signs, &self.walls[c], Relation::Ge);
        face_from_closure(&self.arrangement, &chamber.signs, closure, c, h)
    }

    /// Computes the generated edge of every nonempty face.
    pub fn scan(&self) -> Result<FaceScan> {
        let n = self.arrangement.len();
        let mut edges: Vec<Edge> = Vec::new();
        let mut by_zeros: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut generated = Vec::with_capacity(self.chambers.len());
        for c in 0..self.chambers.len() {
            let mut row = Vec::with_capacity(n);
            for h in 0..n {
                let face = match self.face_of(c, h) {
                    Ok(face) => face,
                    Err(Error::EmptyFace { .. }) => {
                        row.push(None);
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let id = match by_zeros.get(&face.zeros) {
                    Some(&id) => id,
                    None => {
                        let edge = canonical_edge(&self.arrangement, &face.zeros)?;
                        let id = match edges.iter().position(|e| e.containing == edge.containing) {
                            Some(id) => id,
                            None => {
                                edges.push(edge);
                                edges.len() - 1
                            }
                        };
                        by_zeros.insert(face.zeros, id);
                        id
                    }
                };
                row.push(Some(id));
            }
            generated.push(row);
        }

        // Deterministic edge order: by containing set size, then the set.
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by(|&a, &b| {
            let (ea, eb) = (&edges[a].containing, &edges[b].containing);
            ea.len().cmp(&eb.len()).then_with(|| ea.cmp(eb))
        });
        let mut rank = alloc::vec![0; edges.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let edges: Vec<Edge> = order.iter().map(|&old| edges[old].clone()).collect();
        for row in generated.iter_mut() {
            for id in row.iter_mut().flatten() {
                *id = rank[*id];
            }
        }

        let mut counts = alloc::vec![BTreeMap::new(); n];
        for row in &generated {
            for (h, slot) in row.iter().enumerate() {
                if let Some(id) = slot {
                    *counts[h].entry(*id).or_insert(0u64) += 1;
                }
            }
        }
        Ok(FaceScan { chamber_count: self.chambers.len(), edges, generated, counts })
    }
}

/// Generated edges of all faces `C̄ ∩ H` of an arrangement.
#[derive(Clone, Debug)]
pub struct FaceScan {
    chamber_count: usize,
    edges: Vec<Edge>,
    /// `generated[c][h]`: index into `edges`, `None` for an empty face.
    generated: Vec<Vec<Option<usize>>>,
    /// `counts[h][e]`: chambers whose face at `h` generates edge `e`.
    counts: Vec<BTreeMap<usize, u64>>,
}

impl FaceScan {
    pub fn chamber_count(&self) -> usize {
        self.chamber_count
    }

    /// Distinct generated edges (multiplicity not filled in).
    pub fn generated_edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn generated_edge(&self, c: usize, h: usize) -> Option<&Edge> {
        self.generated.get(c)?.get(h)?.map(|id| &self.edges[id])
    }

    /// Number of chambers whose face at `pivot` generates `edge`.
    pub fn chamber_count_for(&self, edge: &Edge, pivot: usize) -> u64 {
        self.edges
            .iter()
            .position(|e| e.containing == edge.containing)
            .and_then(|id| self.counts.get(pivot)?.get(&id).copied())
            .unwrap_or(0)
    }

    /// Half the number of chambers whose face at `pivot` generates `edge`.
    /// The default pivot is the smallest hyperplane containing the edge.
    pub fn multiplicity(&self, edge: &Edge, pivot: Option<usize>) -> Result<u64> {
        let pivot = match pivot {
            Some(p) if edge.containing.contains(&p) => p,
            Some(p) => return Err(Error::PivotNotContaining(p)),
            None => *edge.containing.first().ok_or(Error::EmptySubset)?,
        };
        let count = self.chamber_count_for(edge, pivot);
        if !count.is_multiple_of(2) {
            return Err(Error::OddMultiplicity { count, pivot });
        }
        Ok(count / 2)
    }

    /// Generated edges with their multiplicities at the default pivot.
    pub fn relevant_edges(&self) -> Result<Vec<Edge>> {
        self.edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.multiplicity = self.multiplicity(&e, None)?;
                Ok(e)
            })
            .collect()
    }

    /// `∏_E (1 − a(E)²)^{l(E)}` over the relevant edges, canonical.
    pub fn factored_determinant(&self) -> Result<FactoredProduct> {
        let edges = self.relevant_edges()?;
        Ok(FactoredProduct::canonical(edges.into_iter().map(|e| (e.weight_monomial, BigUint::from(e.multiplicity)))))
    }
}

pub fn relevant_edges(arr: &Arrangement, guards: &Guards) -> Result<Vec<Edge>> {
    ChamberComplex::new(arr, guards)?.scan()?.relevant_edges()
}

pub fn multiplicity(arr: &Arrangement, edge: &Edge, pivot: Option<usize>, guards: &Guards) -> Result<u64> {
    ChamberComplex::new(arr, guards)?.scan()?.multiplicity(edge, pivot)
}

pub fn factored_determinant_general(arr: &Arrangement, guards: &Guards) -> Result<FactoredProduct> {
    ChamberComplex::new(arr, guards)?.scan()?.factored_determinant()
}
