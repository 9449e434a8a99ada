//! Exact feasibility of mixed strict/non-strict/equality linear systems.
//!
//! Equalities are eliminated by substitution, inequalities by Fourier–Motzkin
//! elimination with duplicate-direction pruning. A witness is recovered by
//! back substitution, preferring small integers where the bounds allow.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rational::{ceil_strict, floor_strict, int, Rational};

/// How `a·x + c` compares with zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Relation {
    Strict,
    NonStrict,
    Equal,
}

/// The constraint `coeffs·x + constant (> | ≥ | =) 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, relation: Relation) -> Self {
        Self { coeffs, constant, relation }
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let value = self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (a, v)| acc + a * v);
        match self.relation {
            Relation::Strict => value.is_positive(),
            Relation::NonStrict => !value.is_negative(),
            Relation::Equal => value.is_zero(),
        }
    }
}

/// A conjunction of linear constraints over `dim` rational variables.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        Self { dim, constraints: Vec::new() }
    }

    pub fn push(&mut self, constraint: Constraint) {
        debug_assert_eq!(constraint.coeffs.len(), self.dim);
        self.constraints.push(constraint);
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// A point satisfying every constraint, or `None` if there is none.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let point = solve_rec(self.dim, self.constraints.clone())?;
        debug_assert!(self.constraints.iter().all(|c| c.is_satisfied_by(&point)));
        Some(point)
    }
}

fn solve_rec(dim: usize, constraints: Vec<Constraint>) -> Option<Vec<Rational>> {
    let constraints = simplify(constraints)?;

    if let Some(pos) = constraints.iter().position(|c| c.relation == Relation::Equal) {
        return eliminate_equality(dim, constraints, pos);
    }
    if dim == 0 {
        // simplify() already rejected violated constant constraints
        return Some(Vec::new());
    }

    let last = dim - 1;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut reduced = Vec::new();
    for c in constraints {
        let a = &c.coeffs[last];
        if a.is_positive() {
            lower.push(c);
        } else if a.is_negative() {
            upper.push(c);
        } else {
            let mut c = c;
            c.coeffs.pop();
            reduced.push(c);
        }
    }
    for lo in &lower {
        for up in &upper {
            let wl = Rational::one() / &lo.coeffs[last];
            let wu = Rational::one() / -&up.coeffs[last];
            let coeffs = lo.coeffs[..last].iter().zip(&up.coeffs[..last]).map(|(a, b)| a * &wl + b * &wu).collect();
            let constant = &lo.constant * &wl + &up.constant * &wu;
            let relation = if lo.relation == Relation::Strict || up.relation == Relation::Strict {
                Relation::Strict
            } else {
                Relation::NonStrict
            };
            reduced.push(Constraint::new(coeffs, constant, relation));
        }
    }

    let mut point = solve_rec(last, reduced)?;
    let bound = |c: &Constraint| {
        let rest = c.coeffs[..last].iter().zip(&point).fold(c.constant.clone(), |acc, (a, v)| acc + a * v);
        (-rest / &c.coeffs[last], c.relation == Relation::Strict)
    };
    let lo = tightest(lower.iter().map(bound), true);
    let hi = tightest(upper.iter().map(bound), false);
    let value = pick_value(lo, hi)?;
    point.push(value);
    Some(point)
}

/// Substitutes away one variable using the equality at `pos`.
fn eliminate_equality(dim: usize, mut constraints: Vec<Constraint>, pos: usize) -> Option<Vec<Rational>> {
    let eq = constraints.swap_remove(pos);
    let var = (0..dim).rev().find(|&i| !eq.coeffs[i].is_zero())?;
    let pivot = eq.coeffs[var].clone();
    let substituted = constraints
        .into_iter()
        .map(|c| {
            let factor = &c.coeffs[var] / &pivot;
            let coeffs = (0..dim).filter(|&i| i != var).map(|i| &c.coeffs[i] - &factor * &eq.coeffs[i]).collect();
            let constant = &c.constant - &factor * &eq.constant;
            Constraint::new(coeffs, constant, c.relation)
        })
        .collect();
    let mut point = solve_rec(dim - 1, substituted)?;
    let rest =
        (0..dim).filter(|&i| i != var).zip(&point).fold(eq.constant.clone(), |acc, (i, v)| acc + &eq.coeffs[i] * v);
    point.insert(var, -rest / pivot);
    Some(point)
}

/// Drops constant constraints (failing if any is violated), scales each
/// constraint so its leading coefficient has absolute value one, and keeps
/// only the tightest inequality per direction.
fn simplify(constraints: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut inequalities: BTreeMap<Vec<Rational>, (Rational, Relation)> = BTreeMap::new();
    let mut equalities: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
    for c in constraints {
        let Some(lead) = c.coeffs.iter().find(|v| !v.is_zero()).cloned() else {
            if !c.is_satisfied_by(&[]) {
                return None;
            }
            continue;
        };
        let scale = if c.relation == Relation::Equal { Rational::one() / lead } else { Rational::one() / lead.abs() };
        let coeffs: Vec<_> = c.coeffs.iter().map(|v| v * &scale).collect();
        let constant = c.constant * &scale;
        if c.relation == Relation::Equal {
            match equalities.get(&coeffs) {
                Some(existing) if *existing != constant => return None,
                Some(_) => {}
                None => {
                    equalities.insert(coeffs, constant);
                }
            }
            continue;
        }
        match inequalities.get_mut(&coeffs) {
            Some(entry) => {
                // smaller constant is tighter; on ties strict wins
                if constant < entry.0 || (constant == entry.0 && c.relation == Relation::Strict) {
                    *entry = (constant, c.relation);
                }
            }
            None => {
                inequalities.insert(coeffs, (constant, c.relation));
            }
        }
    }
    let mut out: Vec<Constraint> =
        equalities.into_iter().map(|(coeffs, constant)| Constraint::new(coeffs, constant, Relation::Equal)).collect();
    out.extend(
        inequalities.into_iter().map(|(coeffs, (constant, relation))| Constraint::new(coeffs, constant, relation)),
    );
    Some(out)
}

/// Greatest lower bound (`lower = true`) or least upper bound, with the
/// strictness of the binding constraint.
fn tightest(bounds: impl Iterator<Item = (Rational, bool)>, lower: bool) -> Option<(Rational, bool)> {
    bounds.fold(None, |best, (v, strict)| match best {
        None => Some((v, strict)),
        Some((b, bs)) => {
            let better = if lower { v > b } else { v < b };
            if better {
                Some((v, strict))
            } else if v == b {
                Some((b, bs || strict))
            } else {
                Some((b, bs))
            }
        }
    })
}

fn pick_value(lo: Option<(Rational, bool)>, hi: Option<(Rational, bool)>) -> Option<Rational> {
    let above = |v: &Rational| match &lo {
        None => true,
        Some((b, true)) => v > b,
        Some((b, false)) => v >= b,
    };
    let below = |v: &Rational| match &hi {
        None => true,
        Some((b, true)) => v < b,
        Some((b, false)) => v <= b,
    };
    let zero = Rational::zero();
    if above(&zero) && below(&zero) {
        return Some(zero);
    }
    let candidate = match (&lo, &hi) {
        (Some((l, _)), None) => ceil_strict(l),
        (None, Some((u, _))) => floor_strict(u),
        (Some((l, _)), Some((u, _))) => {
            let mid = (l + u) / int(2);
            let rounded = mid.round();
            if above(&rounded) && below(&rounded) {
                rounded
            } else if l == u {
                l.clone()
            } else {
                mid
            }
        }
        (None, None) => zero,
    };
    (above(&candidate) && below(&candidate)).then_some(candidate)
}
