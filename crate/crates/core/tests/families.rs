mod common;

use std::collections::BTreeSet;

use common::{complex, family};
use varchenko_core::families::{
    build_family, chambers_combinatorial, relevant_edges_combinatorial, FamilyEdgeDescriptor,
};
use varchenko_core::geometry::{canonical_edge, enumerate_chambers};
use varchenko_core::{FamilyKind, Guards};

const SMALL: [&str; 9] = ["A:2", "A:3", "A:4", "B:2", "B:3", "B:4", "D:2", "D:3", "D:4"];

#[test]
fn combinatorial_chambers_biject_with_geometric_chambers() {
    for spec in SMALL {
        let kind: FamilyKind = spec.parse().unwrap();
        let arr = build_family(kind).unwrap();
        let comb = chambers_combinatorial(kind).unwrap();
        let geo = enumerate_chambers(&arr, &Guards::default()).unwrap();
        assert_eq!(comb.len(), geo.len(), "{spec}");
        assert_eq!(kind.chamber_count(), comb.len().into());
        for (c, g) in comb.iter().zip(&geo) {
            assert_eq!(c.signs, g.signs, "{spec}");
            assert_eq!(arr.signs_at(&c.witness).as_ref(), Some(&c.signs), "{spec}");
        }
    }
}

#[test]
fn descriptor_weights_match_canonical_edges() {
    for spec in SMALL {
        let kind: FamilyKind = spec.parse().unwrap();
        let arr = build_family(kind).unwrap();
        for (d, m) in relevant_edges_combinatorial(kind).unwrap() {
            let hs = d.hyperplane_indices(kind, &arr).unwrap();
            let e = canonical_edge(&arr, &hs).unwrap();
            assert_eq!(e.containing, hs, "{spec} {d} is not closed");
            assert_eq!(e.weight_monomial, m, "{spec} {d}");
        }
    }
}

#[test]
fn combinatorial_edges_cover_the_geometric_ones() {
    // Type D also lists E(I₀) with |I| = 2, which no face generates.
    for spec in SMALL {
        let kind: FamilyKind = spec.parse().unwrap();
        let arr = build_family(kind).unwrap();
        let comb: BTreeSet<Vec<usize>> = relevant_edges_combinatorial(kind)
            .unwrap()
            .iter()
            .map(|(d, _)| d.hyperplane_indices(kind, &arr).unwrap())
            .collect();
        let scan = complex(&arr).scan().unwrap();
        let geo: BTreeSet<Vec<usize>> = scan.generated_edges().iter().map(|e| e.containing.clone()).collect();
        if kind.to_string().starts_with('D') {
            let extra: Vec<_> = comb.difference(&geo).collect();
            assert!(geo.is_subset(&comb), "{spec}");
            let n = kind.parameter() as usize;
            assert_eq!(extra.len(), n * (n - 1) / 2, "{spec}");
        } else {
            assert_eq!(comb, geo, "{spec}");
        }
    }
}

#[test]
fn b2_has_five_relevant_edges_both_ways() {
    let kind: FamilyKind = "B:2".parse().unwrap();
    assert_eq!(relevant_edges_combinatorial(kind).unwrap().len(), 5);
    assert_eq!(complex(&family("B:2")).scan().unwrap().generated_edges().len(), 5);
    let w = FamilyEdgeDescriptor::Zero(vec![1, 2]).weight_monomial(kind).unwrap();
    assert_eq!(w.to_string(), "q_{1,2}*q_{-1,2}*q_{1}*q_{2}");
}

#[test]
fn family_dimensions() {
    for (spec, dim, hs) in [("A:4", 4, 6), ("B:3", 3, 9), ("D:4", 4, 12), ("I2:7", 2, 7)] {
        let arr = family(spec);
        assert_eq!((arr.dim(), arr.len()), (dim, hs), "{spec}");
        assert!(arr.is_central());
    }
}
