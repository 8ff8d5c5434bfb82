use varchenko_core::{Error, FamilyKind, PrimeField};
use varchenko_harness::io::assignment_to_json;
use varchenko_harness::{
    assignment_digest, factored_from_json, factored_to_json, format_arrangement, parse_arrangement_file,
    parse_assignment_json, HarnessError,
};

const A2: &str = "\
# the braid arrangement in R^3
dim 3
hyperplane 1 -1 0 0 q_{1,2}
hyperplane 1 0 -1 0 q_{1,3}   # trailing comment
hyperplane 0 1 -1 0 q_{2,3}
";

fn parse_err(text: &str) -> (usize, String) {
    match parse_arrangement_file(text) {
        Err(HarnessError::Parse { line, message }) => (line, message),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn a2_file_round_trips() {
    let arr = parse_arrangement_file(A2).unwrap();
    assert_eq!((arr.dim(), arr.len()), (3, 3));
    let family = varchenko_core::families::build_family(FamilyKind::A(3)).unwrap();
    assert_eq!(arr, family);
    assert_eq!(parse_arrangement_file(&format_arrangement(&arr)).unwrap(), arr);
}

#[test]
fn rationals_and_names() {
    let arr = parse_arrangement_file("dim 2\nhyperplane 1/2 -3/4 5/6 w\nhyperplane 0 1 0 q_{1}\n").unwrap();
    assert_eq!(arr.hyperplanes()[0].offset.to_string(), "5/6");
    assert_eq!(arr.hyperplanes()[0].weight.to_string(), "w");
    assert_eq!(parse_arrangement_file(&format_arrangement(&arr)).unwrap(), arr);
}

#[test]
fn coefficient_count_is_a_dimension_error() {
    let (line, msg) = parse_err("dim 2\nhyperplane 1 -1 0 0 q_{1,2}\n");
    assert_eq!(line, 2);
    assert!(msg.contains("dimension"), "{msg}");
}

#[test]
fn proportional_hyperplanes_are_duplicates() {
    let (line, msg) = parse_err("dim 2\nhyperplane 1 -1 0 a\n\nhyperplane -2 2 0 b\n");
    assert_eq!(line, 4);
    assert!(msg.contains("duplicate hyperplane") && msg.contains("line 2"), "{msg}");
    // same normal, different offset: parallel, not duplicate
    assert!(parse_arrangement_file("dim 1\nhyperplane 1 0 a\nhyperplane 2 1 b\n").is_ok());
    let (line, _) = parse_err("dim 1\nhyperplane 1 1/2 a\nhyperplane 2 1 b\n");
    assert_eq!(line, 3);
}

#[test]
fn duplicate_weights() {
    let (line, msg) = parse_err("dim 2\nhyperplane 1 0 0 a\nhyperplane 0 1 0 a\n");
    assert_eq!(line, 3);
    assert!(msg.contains("duplicate weight a"), "{msg}");
}

#[test]
fn malformed_files() {
    assert_eq!(parse_err("hyperplane 1 0 a\n").0, 1);
    assert_eq!(parse_err("# nothing\n").0, 1);
    assert_eq!(parse_err("dim 2\ndim 3\n").0, 2);
    assert_eq!(parse_err("dim x\n").0, 1);
    assert_eq!(parse_err("dim 0\n").0, 1);
    assert_eq!(parse_err("dim 1\nhyperplane 1/0 0 a\n").0, 2);
    assert_eq!(parse_err("dim 1\nhyperplane 0 0 a\n").0, 2);
    assert_eq!(parse_err("dim 1\nhyperplane 1 0 q_{2,1}\n").0, 2);
    assert_eq!(parse_err("dim 1\nplane 1 0 a\n").0, 2);
}

#[test]
fn assignments() {
    let arr = parse_arrangement_file(A2).unwrap();
    let f = PrimeField::new(101).unwrap();
    let a = parse_assignment_json(r#"{"q_{1,2}": 3, "q_{1,3}": "205", "q_{2,3}": -1}"#, &arr, &f).unwrap();
    assert_eq!(a.values().copied().collect::<Vec<_>>(), [3, 3, 100]);
    let big = parse_assignment_json(r#"{"q_{1,2}": 100000000000000000000001, "q_{1,3}": 0, "q_{2,3}": 1}"#, &arr, &f);
    assert_eq!(big.unwrap().values().next(), Some(&((100000000000000000000001u128 % 101) as u64)));
    assert!(matches!(
        parse_assignment_json(r#"{"q_{1,2}": 3}"#, &arr, &f),
        Err(HarnessError::Core(Error::MissingVariable(_)))
    ));
    assert!(matches!(parse_assignment_json(r#"{"q_{1,2}": 3, "x": 1}"#, &arr, &f), Err(HarnessError::Usage(_))));
    assert!(matches!(parse_assignment_json(r#"{"q_{1,2}": 1.5}"#, &arr, &f), Err(HarnessError::Json(_))));
    assert!(matches!(parse_assignment_json("[1]", &arr, &f), Err(HarnessError::Json(_))));
    let json = assignment_to_json(&a);
    assert_eq!(json.to_string(), r#"{"q_{1,2}":3,"q_{1,3}":3,"q_{2,3}":100}"#);
}

#[test]
fn digests_are_stable() {
    let arr = parse_arrangement_file(A2).unwrap();
    let f = PrimeField::new(101).unwrap();
    let a = parse_assignment_json(r#"{"q_{1,2}": 1, "q_{1,3}": 2, "q_{2,3}": 3}"#, &arr, &f).unwrap();
    let d = assignment_digest(&a);
    assert_eq!(d.len(), 16);
    assert_eq!(d, assignment_digest(&a.clone()));
    let b = parse_assignment_json(r#"{"q_{1,2}": 1, "q_{1,3}": 2, "q_{2,3}": 4}"#, &arr, &f).unwrap();
    assert_ne!(d, assignment_digest(&b));
}

#[test]
fn factored_json_round_trips_with_big_exponents() {
    let z = varchenko_core::closedform::zagier(24).unwrap();
    let v = factored_to_json(&z);
    let text = v.to_string();
    assert!(text.starts_with(r#"{"factors":[{"monomial":[["q",1]],"exponent":7135156619932253552640000}"#), "{text}");
    assert_eq!(factored_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), z);
    let b3 = varchenko_core::closedform::formula_b(3).unwrap();
    assert_eq!(factored_from_json(&factored_to_json(&b3)).unwrap(), b3);
    assert!(factored_from_json(&serde_json::json!({"factors": [{"monomial": [["q", 1]]}]})).is_err());
}
