//! Bounded-integer linear feasibility.
//!
//! A [`FeasibilityProgram`] has integer variables with finite bounds and
//! constraints `Σ a_j·x_j ≤ b` or `Σ a_j·x_j = b`. [`solve_feasibility`] is a
//! depth-first branch and bound with interval propagation at every node.

use std::fmt::Write as _;

use crate::budget::{Budget, BudgetExceeded};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    /// `(variable, coefficient)`, one entry per variable, no zero coefficients.
    pub terms: Vec<(usize, i64)>,
    pub cmp: Cmp,
    pub rhs: i64,
}

impl Constraint {
    fn lhs(&self, x: &[i64]) -> i128 {
        self.terms
            .iter()
            .map(|&(j, a)| a as i128 * x[j] as i128)
            .sum()
    }

    pub fn holds(&self, x: &[i64]) -> bool {
        let lhs = self.lhs(x);
        match self.cmp {
            Cmp::Le => lhs <= self.rhs as i128,
            Cmp::Eq => lhs == self.rhs as i128,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeasibilityProgram {
    vars: Vec<Variable>,
    constraints: Vec<Constraint>,
}

impl FeasibilityProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a variable with domain `[lo, hi]` and returns its index.
    pub fn add_var(&mut self, name: impl Into<String>, lo: i64, hi: i64) -> usize {
        self.vars.push(Variable {
            name: name.into(),
            lo,
            hi,
        });
        self.vars.len() - 1
    }

    fn push(&mut self, terms: &[(usize, i64)], cmp: Cmp, rhs: i64) {
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
        let mut sorted = terms.to_vec();
        sorted.sort_by_key(|&(j, _)| j);
        for (j, a) in sorted {
            assert!(j < self.vars.len(), "unknown variable {j}");
            match merged.last_mut() {
                Some((k, b)) if *k == j => *b += a,
                _ => merged.push((j, a)),
            }
        }
        merged.retain(|&(_, a)| a != 0);
        self.constraints.push(Constraint {
            terms: merged,
            cmp,
            rhs,
        });
    }

    pub fn add_le(&mut self, terms: &[(usize, i64)], rhs: i64) {
        self.push(terms, Cmp::Le, rhs);
    }

    /// `Σ a_j·x_j ≥ b`, stored as `Σ -a_j·x_j ≤ -b`.
    pub fn add_ge(&mut self, terms: &[(usize, i64)], rhs: i64) {
        let neg: Vec<(usize, i64)> = terms.iter().map(|&(j, a)| (j, -a)).collect();
        self.push(&neg, Cmp::Le, -rhs);
    }

    pub fn add_eq(&mut self, terms: &[(usize, i64)], rhs: i64) {
        self.push(terms, Cmp::Eq, rhs);
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Every bound and every constraint holds.
    pub fn is_satisfied(&self, x: &[i64]) -> bool {
        x.len() == self.vars.len()
            && self.vars.iter().zip(x).all(|(v, &xi)| v.lo <= xi && xi <= v.hi)
            && self.constraints.iter().all(|c| c.holds(x))
    }

    /// Human-readable listing, one bound or constraint per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for v in &self.vars {
            let _ = writeln!(out, "{} <= {} <= {}", v.lo, v.name, v.hi);
        }
        for c in &self.constraints {
            let mut lhs = String::new();
            for (i, &(j, a)) in c.terms.iter().enumerate() {
                let sign = match (i, a < 0) {
                    (0, true) => "-",
                    (0, false) => "",
                    (_, true) => " - ",
                    (_, false) => " + ",
                };
                let mag = a.unsigned_abs();
                let coef = if mag == 1 { String::new() } else { format!("{mag} ") };
                let _ = write!(lhs, "{sign}{coef}{}", self.vars[j].name);
            }
            if lhs.is_empty() {
                lhs.push('0');
            }
            let op = match c.cmp {
                Cmp::Le => "<=",
                Cmp::Eq => "=",
            };
            let _ = writeln!(out, "{lhs} {op} {}", c.rhs);
        }
        out
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -floor_div(-a, b)
}

/// Tightens `dom` using `Σ a_j·x_j ≤ rhs`. Returns false on a wipe-out.
fn tighten_le(terms: &[(usize, i64)], rhs: i128, dom: &mut [(i64, i64)], changed: &mut bool) -> bool {
    fn min_term(dom: &[(i64, i64)], j: usize, a: i64) -> i128 {
        let (lo, hi) = dom[j];
        (a as i128 * lo as i128).min(a as i128 * hi as i128)
    }
    let min_act: i128 = terms.iter().map(|&(j, a)| min_term(dom, j, a)).sum();
    if min_act > rhs {
        return false;
    }
    for &(j, a) in terms {
        let slack = rhs - (min_act - min_term(dom, j, a));
        let a = a as i128;
        let (lo, hi) = dom[j];
        if a > 0 {
            let new_hi = floor_div(slack, a);
            if new_hi < hi as i128 {
                if new_hi < lo as i128 {
                    return false;
                }
                dom[j].1 = new_hi as i64;
                *changed = true;
            }
        } else {
            let new_lo = ceil_div(slack, a);
            if new_lo > lo as i128 {
                if new_lo > hi as i128 {
                    return false;
                }
                dom[j].0 = new_lo as i64;
                *changed = true;
            }
        }
    }
    true
}

/// Runs interval propagation on `dom` to a fixpoint. Returns false if some
/// domain becomes empty.
fn propagate(p: &FeasibilityProgram, dom: &mut [(i64, i64)]) -> bool {
    if dom.iter().any(|&(lo, hi)| lo > hi) {
        return false;
    }
    let mut neg = Vec::new();
    loop {
        let mut changed = false;
        for c in &p.constraints {
            if !tighten_le(&c.terms, c.rhs as i128, dom, &mut changed) {
                return false;
            }
            if c.cmp == Cmp::Eq {
                neg.clear();
                neg.extend(c.terms.iter().map(|&(j, a)| (j, -a)));
                if !tighten_le(&neg, -(c.rhs as i128), dom, &mut changed) {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Bounds consistency to a fixpoint. `None` means infeasible.
pub fn propagate_bounds(p: &FeasibilityProgram) -> Option<FeasibilityProgram> {
    let mut dom: Vec<(i64, i64)> = p.vars.iter().map(|v| (v.lo, v.hi)).collect();
    if !propagate(p, &mut dom) {
        return None;
    }
    let mut out = p.clone();
    for (v, (lo, hi)) in out.vars.iter_mut().zip(dom) {
        v.lo = lo;
        v.hi = hi;
    }
    Some(out)
}

fn search(
    p: &FeasibilityProgram,
    mut dom: Vec<(i64, i64)>,
    budget: &Budget,
) -> Result<Option<Vec<i64>>, BudgetExceeded> {
    budget.tick()?;
    if !propagate(p, &mut dom) {
        return Ok(None);
    }
    let branch = dom
        .iter()
        .enumerate()
        .filter(|(_, &(lo, hi))| lo < hi)
        .min_by_key(|(j, &(lo, hi))| (hi - lo, *j))
        .map(|(j, _)| j);
    let Some(j) = branch else {
        let x: Vec<i64> = dom.iter().map(|&(lo, _)| lo).collect();
        return Ok(p.is_satisfied(&x).then_some(x));
    };
    let (lo, hi) = dom[j];
    for val in lo..=hi {
        let mut child = dom.clone();
        child[j] = (val, val);
        if let Some(x) = search(p, child, budget)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Finds a satisfying assignment, or `None` if there is none within the
/// bounds. Complete: only the budget can cut the search short.
pub fn solve_feasibility(
    p: &FeasibilityProgram,
    budget: &Budget,
) -> Result<Option<Vec<i64>>, BudgetExceeded> {
    let dom: Vec<(i64, i64)> = p.vars.iter().map(|v| (v.lo, v.hi)).collect();
    search(p, dom, budget)
}

/// All assignments in the Cartesian product of the domains that satisfy
/// `p`, by plain enumeration.
pub fn enumerate_solutions(p: &FeasibilityProgram) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut x: Vec<i64> = p.vars.iter().map(|v| v.lo).collect();
    if p.vars.iter().any(|v| v.lo > v.hi) {
        return out;
    }
    loop {
        if p.is_satisfied(&x) {
            out.push(x.clone());
        }
        let mut i = 0;
        loop {
            if i == x.len() {
                return out;
            }
            if x[i] < p.vars[i].hi {
                x[i] += 1;
                break;
            }
            x[i] = p.vars[i].lo;
            i += 1;
        }
    }
}

/// A random program with `vars` variables and domains of size at most
/// `max_dom`, for cross-checking against [`enumerate_solutions`].
pub fn random_program<R: rand::Rng>(rng: &mut R, vars: usize, max_dom: i64) -> FeasibilityProgram {
    let mut p = FeasibilityProgram::new();
    for j in 0..vars {
        let lo = rng.gen_range(-3..=3);
        let size = rng.gen_range(1..=max_dom);
        p.add_var(format!("x{j}"), lo, lo + size - 1);
    }
    let count = rng.gen_range(0..=vars + 2);
    for _ in 0..count {
        let arity = rng.gen_range(1..=vars.min(4));
        let mut terms = Vec::new();
        for _ in 0..arity {
            terms.push((rng.gen_range(0..vars), rng.gen_range(-3..=3)));
        }
        let rhs = rng.gen_range(-8..=12);
        match rng.gen_range(0..5) {
            0 => p.add_eq(&terms, rhs),
            1 => p.add_ge(&terms, rhs),
            _ => p.add_le(&terms, rhs),
        }
    }
    p
}
