//! Randomized identity testing of determinant sources.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Number, Value};
use varchenko_core::closedform::formula;
use varchenko_core::exactalg::Assignment;
use varchenko_core::families::build_family;
use varchenko_core::varchenko::{degree_bound, det_bruteforce, varchenko_matrix_eval};
use varchenko_core::{Arrangement, ChamberComplex, FactoredDiff, FactoredProduct, FamilyKind, Guards, PrimeField};

use crate::error::{HarnessError, Result};
use crate::io::{assignment_digest, assignment_to_json};
use crate::json::diff_to_json;

pub const DEFAULT_PRIME: u64 = PrimeField::MERSENNE_61;
pub const DEFAULT_TRIALS: usize = 5;
pub const DEFAULT_SEED: u64 = 0;

/// What a determinant is computed for.
#[derive(Clone, Debug)]
pub enum Subject {
    Family(FamilyKind),
    File { label: String, arrangement: Arrangement },
}

impl Subject {
    pub fn label(&self) -> String {
        match self {
            Subject::Family(k) => k.to_string(),
            Subject::File { label, .. } => label.clone(),
        }
    }

    pub fn arrangement(&self) -> Result<Arrangement> {
        match self {
            Subject::Family(k) => Ok(build_family(*k)?),
            Subject::File { arrangement, .. } => Ok(arrangement.clone()),
        }
    }
}

/// A way of obtaining the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Source {
    /// Factored product from the face scan.
    Geometric,
    /// Gaussian elimination of the evaluated matrix.
    Bruteforce,
    /// The family's closed form.
    Formula,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Geometric => "geometric",
            Source::Bruteforce => "bruteforce",
            Source::Formula => "formula",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Source {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geometric" | "geometric-factored" => Ok(Source::Geometric),
            "bruteforce" | "brute-force" => Ok(Source::Bruteforce),
            "formula" | "closed-form" => Ok(Source::Formula),
            _ => Err(HarnessError::Usage(format!("unknown determinant source `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub prime: u64,
    pub seed: u64,
    pub guards: Guards,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { trials: DEFAULT_TRIALS, prime: DEFAULT_PRIME, seed: DEFAULT_SEED, guards: Guards::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trial {
    pub index: usize,
    pub assignment_digest: String,
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub assignment: Value,
}

/// Exponent comparison of the two sides. A brute-force side is represented
/// by the geometric factorization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactoredComparison {
    pub lhs_factored: &'static str,
    pub rhs_factored: &'static str,
    pub identical: bool,
    pub entries: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub prime: u64,
    pub seed: u64,
    pub chambers: usize,
    pub hyperplanes: usize,
    pub trials: Vec<Trial>,
    pub degree_bound: Number,
    pub failure_probability: String,
    pub failure_probability_bound: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub factored_diff: Option<FactoredComparison>,
    #[serde(skip)]
    pub diff: Option<FactoredDiff>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn compare_factored(lhs: &FactoredProduct, rhs: &FactoredProduct) -> FactoredDiff {
    lhs.canonicalize().diff(&rhs.canonicalize())
}

/// Nonzero values for every weight of `arr`, drawn in variable order from
/// the ChaCha8 stream `stream` of `seed`.
pub fn random_assignment(arr: &Arrangement, field: &PrimeField, seed: u64, stream: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut vars: Vec<_> = arr.weights().cloned().collect();
    vars.sort();
    vars.into_iter().map(|v| (v, rng.gen_range(1..field.modulus()))).collect()
}

struct Sides {
    arrangement: Arrangement,
    complex: Option<ChamberComplex>,
    geometric: Option<FactoredProduct>,
    formula: Option<FactoredProduct>,
}

impl Sides {
    fn factored(&self, s: Source) -> Option<&FactoredProduct> {
        match s {
            Source::Geometric | Source::Bruteforce => self.geometric.as_ref(),
            Source::Formula => self.formula.as_ref(),
        }
    }

    fn eval(&self, s: Source, a: &Assignment, field: &PrimeField) -> Result<u64> {
        match s {
            Source::Bruteforce => {
                let cx = self.complex.as_ref().expect("chambers computed for brute force");
                let m = varchenko_matrix_eval(&self.arrangement, cx.chambers(), a, field)?;
                Ok(det_bruteforce(&m))
            }
            _ => Ok(self.factored(s).expect("factored side computed").eval(a, field)?),
        }
    }
}

fn prepare(subject: &Subject, sources: [Source; 2], guards: &Guards) -> Result<Sides> {
    let arrangement = subject.arrangement()?;
    let complex = Some(ChamberComplex::new(&arrangement, guards)?);
    let geometric = if sources.iter().any(|s| matches!(s, Source::Geometric | Source::Bruteforce)) {
        Some(complex.as_ref().expect("built above").scan()?.factored_determinant()?)
    } else {
        None
    };
    let formula = if sources.contains(&Source::Formula) {
        match subject {
            Subject::Family(k) => Some(formula(*k)?),
            Subject::File { .. } => {
                return Err(HarnessError::Usage("closed forms exist only for --kind subjects".into()))
            }
        }
    } else {
        None
    };
    Ok(Sides { arrangement, complex, geometric, formula })
}

fn factored_name(s: Source) -> &'static str {
    match s {
        Source::Formula => "formula",
        _ => "geometric",
    }
}

/// Evaluates both sides at `config.trials` random points of `F_prime`.
/// Trials run concurrently; trial `t` draws from ChaCha stream `t`, so the
/// report depends only on the inputs.
pub fn verify_identity(
    subject: &Subject,
    lhs: Source,
    rhs: Source,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    if config.trials == 0 {
        return Err(HarnessError::Usage("at least one trial is required".into()));
    }
    let field = PrimeField::new(config.prime)?;
    let sides = prepare(subject, [lhs, rhs], &config.guards)?;
    let trials: Vec<(Trial, Assignment)> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let a = random_assignment(&sides.arrangement, &field, config.seed, t as u64);
            let l = sides.eval(lhs, &a, &field)?;
            let r = sides.eval(rhs, &a, &field)?;
            let trial = Trial { index: t, assignment_digest: assignment_digest(&a), lhs: l, rhs: r, equal: l == r };
            Ok((trial, a))
        })
        .collect::<Result<_>>()?;

    let bound = [lhs, rhs].iter().filter_map(|&s| sides.factored(s)).map(degree_bound).max().unwrap_or_default();
    let witness = trials
        .iter()
        .find(|(t, _)| !t.equal)
        .map(|(t, a)| Witness { trial: t.index, assignment: assignment_to_json(a) });
    let verdict = if witness.is_none() { Verdict::Pass } else { Verdict::Fail };

    let diff = match (sides.factored(lhs), sides.factored(rhs)) {
        (Some(l), Some(r)) => Some(compare_factored(l, r)),
        _ => None,
    };
    let factored_diff = diff.as_ref().map(|d| FactoredComparison {
        lhs_factored: factored_name(lhs),
        rhs_factored: factored_name(rhs),
        identical: d.is_empty(),
        entries: diff_to_json(d),
    });

    Ok(VerificationReport {
        subject: subject.label(),
        lhs: lhs.name(),
        rhs: rhs.name(),
        prime: config.prime,
        seed: config.seed,
        chambers: sides.complex.as_ref().map_or(0, ChamberComplex::len),
        hyperplanes: sides.arrangement.len(),
        trials: trials.into_iter().map(|(t, _)| t).collect(),
        degree_bound: Number::from_str(&bound.to_string()).expect("decimal digits"),
        failure_probability: format!("({bound}/{})^{}", config.prime, config.trials),
        failure_probability_bound: format_probability(&bound, config.prime, config.trials),
        verdict,
        witness,
        factored_diff,
        diff,
    })
}

fn format_probability(bound: &BigUint, prime: u64, trials: usize) -> String {
    let ratio = bound.to_string().parse::<f64>().unwrap_or(f64::INFINITY) / prime as f64;
    let p = ratio.min(1.0).powi(trials as i32);
    format!("{p:.3e}")
}
