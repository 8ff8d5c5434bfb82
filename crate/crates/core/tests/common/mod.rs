#![allow(dead_code)]

use varchenko_core::exactalg::Assignment;
use varchenko_core::families::build_family;
use varchenko_core::varchenko::{det_bruteforce, varchenko_matrix_eval};
use varchenko_core::{Arrangement, ChamberComplex, FactoredProduct, FamilyKind, Guards, PrimeField, Rational};

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn family(spec: &str) -> Arrangement {
    build_family(spec.parse::<FamilyKind>().unwrap()).unwrap()
}

pub fn complex(arr: &Arrangement) -> ChamberComplex {
    ChamberComplex::new(arr, &Guards::default()).unwrap()
}

/// splitmix64
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

pub fn random_assignment(arr: &Arrangement, field: &PrimeField, rng: &mut Rng) -> Assignment {
    arr.weights().map(|w| (w.clone(), 1 + rng.below(field.modulus() - 1))).collect()
}

/// Compares a factored product against the brute-force determinant at
/// `points` random nonzero assignments.
pub fn agrees_with_bruteforce(
    arr: &Arrangement,
    f: &FactoredProduct,
    field: &PrimeField,
    points: usize,
    seed: u64,
) -> bool {
    let cx = complex(arr);
    let mut rng = Rng(seed);
    (0..points).all(|_| {
        let a = random_assignment(arr, field, &mut rng);
        let m = varchenko_matrix_eval(arr, cx.chambers(), &a, field).unwrap();
        det_bruteforce(&m) == f.eval(&a, field).unwrap()
    })
}
