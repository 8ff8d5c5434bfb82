use proptest::prelude::*;
use varchenko_core::closedform::{formula_a, formula_d};
use varchenko_core::families::build_family;
use varchenko_core::geometry::factored_determinant_general;
use varchenko_core::{FamilyKind, Guards, Monomial, VariableId};
use varchenko_harness::{compare_factored, verify_identity, HarnessError, Source, Subject, Verdict, VerifyConfig};

fn subject(spec: &str) -> Subject {
    Subject::Family(spec.parse().unwrap())
}

fn config(trials: usize, seed: u64) -> VerifyConfig {
    VerifyConfig { trials, seed, ..VerifyConfig::default() }
}

#[test]
fn geometric_matches_bruteforce_on_a4() {
    let r = verify_identity(&subject("A:4"), Source::Geometric, Source::Bruteforce, &config(5, 0)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.chambers, 24);
    assert_eq!(r.trials.len(), 5);
    assert!(r.witness.is_none());
}

#[test]
fn d2_closed_form_fails_with_a_witness() {
    let r = verify_identity(&subject("D:2"), Source::Formula, Source::Bruteforce, &config(3, 0)).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    let w = r.witness.as_ref().unwrap();
    assert_eq!(w.trial, 0);
    assert_eq!(w.assignment.as_object().unwrap().len(), 2);
    assert!(r.trials.iter().all(|t| !t.equal));
}

#[test]
fn dihedral_closed_form_passes() {
    let r = verify_identity(&subject("I2:6"), Source::Formula, Source::Bruteforce, &config(5, 0)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.factored_diff.as_ref().unwrap().identical);
}

#[test]
fn report_fields() {
    let r = verify_identity(&subject("A:3"), Source::Formula, Source::Bruteforce, &config(5, 7)).unwrap();
    assert_eq!(r.degree_bound.to_string(), "18");
    assert_eq!(r.failure_probability, "(18/2305843009213693951)^5");
    assert_eq!((r.prime, r.seed, r.subject.as_str()), (2305843009213693951, 7, "A:3"));
    let json = r.to_json();
    for key in ["\"subject\"", "\"assignment_digest\"", "\"degree_bound\": 18", "\"verdict\": \"PASS\""] {
        assert!(json.contains(key), "{key} missing from {json}");
    }
}

#[test]
fn reports_are_reproducible() {
    for (spec, lhs) in [("B:3", Source::Formula), ("D:3", Source::Formula), ("I2:5", Source::Geometric)] {
        let a = verify_identity(&subject(spec), lhs, Source::Bruteforce, &config(6, 42)).unwrap().to_json();
        let b = verify_identity(&subject(spec), lhs, Source::Bruteforce, &config(6, 42)).unwrap().to_json();
        assert_eq!(a, b);
        let c = verify_identity(&subject(spec), lhs, Source::Bruteforce, &config(6, 43)).unwrap().to_json();
        assert_ne!(a, c);
    }
}

#[test]
fn input_errors() {
    let s = subject("A:3");
    assert!(matches!(
        verify_identity(&s, Source::Formula, Source::Bruteforce, &config(0, 0)),
        Err(HarnessError::Usage(_))
    ));
    let bad_prime = VerifyConfig { prime: 1_000_000, ..VerifyConfig::default() };
    assert!(matches!(
        verify_identity(&s, Source::Formula, Source::Bruteforce, &bad_prime),
        Err(HarnessError::Core(varchenko_core::Error::NotPrime(1_000_000)))
    ));
    let guarded = VerifyConfig { guards: Guards { max_hyperplanes: 32, max_chambers: 4 }, ..VerifyConfig::default() };
    assert!(matches!(
        verify_identity(&s, Source::Geometric, Source::Bruteforce, &guarded),
        Err(HarnessError::Core(varchenko_core::Error::ChamberGuard { .. }))
    ));
    let file = Subject::File { label: "x".into(), arrangement: build_family(FamilyKind::A(3)).unwrap() };
    assert!(matches!(
        verify_identity(&file, Source::Formula, Source::Bruteforce, &config(1, 0)),
        Err(HarnessError::Usage(_))
    ));
    assert!(verify_identity(&file, Source::Geometric, Source::Bruteforce, &config(1, 0)).unwrap().passed());
}

#[test]
fn source_names() {
    assert_eq!("geometric-factored".parse::<Source>().unwrap(), Source::Geometric);
    assert_eq!("bruteforce".parse::<Source>().unwrap(), Source::Bruteforce);
    assert_eq!("formula".parse::<Source>().unwrap(), Source::Formula);
    assert!("symbolic".parse::<Source>().is_err());
}

#[test]
fn factored_comparisons() {
    let geo = |n| factored_determinant_general(&build_family(FamilyKind::A(n)).unwrap(), &Guards::default()).unwrap();
    assert!(compare_factored(&formula_a(3).unwrap(), &geo(3)).is_empty());
    let d3 = factored_determinant_general(&build_family(FamilyKind::D(3)).unwrap(), &Guards::default()).unwrap();
    let diff = compare_factored(&formula_d(3).unwrap(), &d3);
    let e = diff.entries.iter().find(|e| e.monomial == Monomial::var(VariableId::pair(1, 2))).unwrap();
    assert_eq!((e.lhs.to_string(), e.rhs.to_string()), ("4".into(), "6".into()));
    assert!(compare_factored(&d3, &d3).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn a_source_always_agrees_with_itself(
        kind in prop_oneof![
            (2u32..=4).prop_map(FamilyKind::A),
            (2u32..=3).prop_map(FamilyKind::B),
            (2u32..=3).prop_map(FamilyKind::D),
            (2u32..=8).prop_map(FamilyKind::I2),
        ],
        source in prop_oneof![Just(Source::Geometric), Just(Source::Bruteforce), Just(Source::Formula)],
        seed in any::<u64>(),
    ) {
        let r = verify_identity(&Subject::Family(kind), source, source, &config(3, seed)).unwrap();
        prop_assert!(r.passed());
        let g = verify_identity(&Subject::Family(kind), Source::Geometric, Source::Bruteforce, &config(3, seed)).unwrap();
        prop_assert!(g.passed());
    }
}
