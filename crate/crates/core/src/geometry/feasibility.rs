use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `form > 0`
    Gt,
    /// `form ≥ 0`
    Ge,
    /// `form = 0`
    Eq,
}

/// `coeffs · x + constant  (relation)  0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub relation: Relation,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, relation: Relation) -> Self {
        Self { coeffs, constant, relation }
    }

    pub fn value_at(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (a, xi)| acc + a * xi)
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let v = self.value_at(x);
        match self.relation {
            Relation::Gt => v.is_positive(),
            Relation::Ge => !v.is_negative(),
            Relation::Eq => v.is_zero(),
        }
    }
}

/// Inequality row during elimination: `coeffs · x + constant > 0` (strict) or
/// `≥ 0`.
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    constant: Rational,
    strict: bool,
}

/// Deduplicated inequality system keyed by the normalized coefficient vector;
/// for each direction only the most restrictive bound survives.
#[derive(Default, Clone, Debug)]
struct System {
    rows: BTreeMap<Vec<Rational>, (Rational, bool)>,
}

enum Insert {
    Ok,
    Contradiction,
}

impl System {
    fn insert(&mut self, mut row: Row) -> Insert {
        let lead = match row.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => c.abs(),
            None => {
                let ok = if row.strict { row.constant.is_positive() } else { !row.constant.is_negative() };
                return if ok { Insert::Ok } else { Insert::Contradiction };
            }
        };
        if !lead.is_one() {
            for c in row.coeffs.iter_mut() {
                *c /= &lead;
            }
            row.constant /= &lead;
        }
        match self.rows.get_mut(&row.coeffs) {
            Some((constant, strict)) => {
                if row.constant < *constant || (row.constant == *constant && row.strict && !*strict) {
                    *constant = row.constant;
                    *strict = row.strict;
                }
            }
            None => {
                self.rows.insert(row.coeffs, (row.constant, row.strict));
            }
        }
        Insert::Ok
    }

    fn iter(&self) -> impl Iterator<Item = (&Vec<Rational>, &Rational, bool)> + '_ {
        self.rows.iter().map(|(k, (c, s))| (k, c, *s))
    }

    /// Fourier–Motzkin step removing variable `k`.
    fn eliminate(&self, k: usize) -> Option<System> {
        let mut next = System::default();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (coeffs, constant, strict) in self.iter() {
            let a = &coeffs[k];
            if a.is_zero() {
                let row = Row { coeffs: coeffs.clone(), constant: constant.clone(), strict };
                if let Insert::Contradiction = next.insert(row) {
                    return None;
                }
            } else if a.is_positive() {
                pos.push((coeffs, constant, strict));
            } else {
                neg.push((coeffs, constant, strict));
            }
        }
        for (pc, pk, ps) in &pos {
            for (nc, nk, ns) in &neg {
                let wp = -&nc[k];
                let wn = pc[k].clone();
                let mut coeffs: Vec<Rational> = pc.iter().zip(nc.iter()).map(|(a, b)| &wp * a + &wn * b).collect();
                coeffs[k] = Rational::zero();
                let row = Row { coeffs, constant: &wp * *pk + &wn * *nk, strict: *ps || *ns };
                if let Insert::Contradiction = next.insert(row) {
                    return None;
                }
            }
        }
        Some(next)
    }
}

/// Decides whether the system has a rational solution; when it does, returns
/// an exact witness point.
///
/// Equalities are removed first by Gaussian substitution; the remaining
/// inequalities go through Fourier–Motzkin elimination with strictness
/// propagated (a combination is strict iff one of its parents is), and the
/// witness is rebuilt by back-substitution, choosing small integers where the
/// bounds allow.
pub fn feasible_strict(dim: usize, constraints: &[LinearConstraint]) -> Result<Option<Vec<Rational>>> {
    for c in constraints {
        if c.coeffs.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: c.coeffs.len() });
        }
    }

    // x_var = coeffs · x + constant, with coeffs[var] = 0.
    let mut substitutions: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut ineqs: Vec<Row> = Vec::new();
    for c in constraints {
        match c.relation {
            Relation::Eq => eqs.push((c.coeffs.clone(), c.constant.clone())),
            rel => {
                ineqs.push(Row { coeffs: c.coeffs.clone(), constant: c.constant.clone(), strict: rel == Relation::Gt })
            }
        }
    }

    while let Some((coeffs, constant)) = eqs.pop() {
        let Some(k) = coeffs.iter().rposition(|a| !a.is_zero()) else {
            if constant.is_zero() {
                continue;
            }
            return Ok(None);
        };
        let scale = -Rational::one() / &coeffs[k];
        let mut expr: Vec<Rational> = coeffs.iter().map(|a| a * &scale).collect();
        expr[k] = Rational::zero();
        let expr_const = &constant * &scale;
        let substitute = |row_coeffs: &mut Vec<Rational>, row_const: &mut Rational| {
            let f = core::mem::take(&mut row_coeffs[k]);
            if f.is_zero() {
                return;
            }
            for (a, e) in row_coeffs.iter_mut().zip(&expr) {
                *a += &f * e;
            }
            *row_const += &f * &expr_const;
        };
        for (c, k0) in eqs.iter_mut() {
            substitute(c, k0);
        }
        for row in ineqs.iter_mut() {
            substitute(&mut row.coeffs, &mut row.constant);
        }
        substitutions.push((k, expr, expr_const));
    }

    let mut system = System::default();
    for row in ineqs {
        if let Insert::Contradiction = system.insert(row) {
            return Ok(None);
        }
    }

    // levels[k] involves only variables 0..=k.
    let mut levels: Vec<System> = vec![System::default(); dim];
    for k in (0..dim).rev() {
        let next = match system.eliminate(k) {
            Some(s) => s,
            None => return Ok(None),
        };
        levels[k] = core::mem::replace(&mut system, next);
    }

    let mut x: Vec<Rational> = vec![Rational::zero(); dim];
    for k in 0..dim {
        let mut lower: Option<(Rational, bool)> = None;
        let mut upper: Option<(Rational, bool)> = None;
        for (coeffs, constant, strict) in levels[k].iter() {
            let a = &coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest = coeffs[..k].iter().zip(&x[..k]).fold(constant.clone(), |acc, (c, xi)| acc + c * xi);
            let bound = -rest / a;
            if a.is_positive() {
                tighten(&mut lower, bound, strict, true);
            } else {
                tighten(&mut upper, bound, strict, false);
            }
        }
        x[k] = pick_value(lower.as_ref(), upper.as_ref());
    }

    for (k, expr, expr_const) in substitutions.iter().rev() {
        x[*k] = expr.iter().zip(&x).fold(expr_const.clone(), |acc, (e, xi)| acc + e * xi);
    }

    debug_assert!(constraints.iter().all(|c| c.holds_at(&x)), "witness violates the system");
    Ok(Some(x))
}

fn tighten(slot: &mut Option<(Rational, bool)>, bound: Rational, strict: bool, is_lower: bool) {
    let replace = match slot {
        None => true,
        Some((b, s)) => {
            let better = if is_lower { bound > *b } else { bound < *b };
            better || (bound == *b && strict && !*s)
        }
    };
    if replace {
        *slot = Some((bound, strict));
    }
}

fn satisfies(v: &Rational, lower: Option<&(Rational, bool)>, upper: Option<&(Rational, bool)>) -> bool {
    let lo = lower.is_none_or(|(b, s)| if *s { v > b } else { v >= b });
    let hi = upper.is_none_or(|(b, s)| if *s { v < b } else { v <= b });
    lo && hi
}

/// Integer closest to zero inside the bounds if one exists, otherwise the
/// midpoint.
fn pick_value(lower: Option<&(Rational, bool)>, upper: Option<&(Rational, bool)>) -> Rational {
    let zero = Rational::zero();
    if satisfies(&zero, lower, upper) {
        return zero;
    }
    if let Some((b, s)) = lower {
        if !b.is_negative() {
            let v = if *s { b.floor() + Rational::one() } else { b.ceil() };
            if satisfies(&v, lower, upper) {
                return v;
            }
        }
    }
    if let Some((b, s)) = upper {
        if !b.is_positive() {
            let v = if *s { b.ceil() - Rational::one() } else { b.floor() };
            if satisfies(&v, lower, upper) {
                return v;
            }
        }
    }
    match (lower, upper) {
        (Some((l, _)), Some((u, _))) => (l + u) / Rational::from_integer(2.into()),
        // a one-sided interval always contains an integer
        _ => unreachable!("one-sided bound without an integer point"),
    }
}
