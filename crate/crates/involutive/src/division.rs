//! Involutive divisions: Pommaret (global), Janet and Thomas (set relative).

use crate::exponent::Exponent;
use crate::order::OrderKind;
use crate::poly::Term;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Division {
    Pommaret,
    Janet,
    Thomas,
}

impl Division {
    pub fn parse(s: &str) -> Option<Division> {
        match s {
            "pommaret" => Some(Division::Pommaret),
            "janet" => Some(Division::Janet),
            "thomas" => Some(Division::Thomas),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Division::Pommaret => "pommaret",
            Division::Janet => "janet",
            Division::Thomas => "thomas",
        }
    }
}

/// Multiplicative variables for each generator of a fixed term list;
/// Janet and Thomas assignments are computed within each module component.
#[derive(Clone, Debug)]
pub struct MultAssignment {
    pub division: Division,
    /// 1-based multiplicative variable indices, parallel to the term list.
    pub mult: Vec<BTreeSet<usize>>,
}

impl MultAssignment {
    /// Total number of multiplicative variables over all generators.
    pub fn involutive_size(&self) -> usize {
        self.mult.iter().map(|s| s.len()).sum()
    }

    pub fn nonmult(&self, i: usize, n: usize) -> Vec<usize> {
        (1..=n).filter(|k| !self.mult[i].contains(k)).collect()
    }
}

/// Pommaret multiplicative variables of a single exponent: {1, …, cls ν}.
pub fn pommaret_mult(exp: &Exponent) -> BTreeSet<usize> {
    (1..=exp.cls()).collect()
}

/// Assign multiplicative variables for `kind` to the leading terms `lts`.
pub fn assign_multiplicative(kind: Division, lts: &[Term]) -> MultAssignment {
    let mult = match kind {
        Division::Pommaret => lts.iter().map(|t| pommaret_mult(&t.exp)).collect(),
        Division::Janet => per_component(lts, janet_assign),
        Division::Thomas => per_component(lts, thomas_assign),
    };
    MultAssignment { division: kind, mult }
}

/// Run a set-relative assignment separately on each component group.
fn per_component(
    lts: &[Term],
    assign: fn(&[&Exponent]) -> Vec<BTreeSet<usize>>,
) -> Vec<BTreeSet<usize>> {
    let mut out = vec![BTreeSet::new(); lts.len()];
    let comps: BTreeSet<usize> = lts.iter().map(|t| t.comp).collect();
    for comp in comps {
        let idx: Vec<usize> = (0..lts.len()).filter(|&i| lts[i].comp == comp).collect();
        let exps: Vec<&Exponent> = idx.iter().map(|&i| &lts[i].exp).collect();
        let sets = assign(&exps);
        for (slot, set) in idx.into_iter().zip(sets) {
            out[slot] = set;
        }
    }
    out
}

/// Janet assignment: xₙ is multiplicative for ν iff νₙ = max{μₙ : μ ∈ N};
/// for k < n, x_k is multiplicative iff ν_k = max{μ_k : μ ∈ N, μ_j = ν_j
/// for all j > k}.
fn janet_assign(exps: &[&Exponent]) -> Vec<BTreeSet<usize>> {
    let n = exps[0].n();
    exps.iter()
        .map(|nu| {
            let mut set = BTreeSet::new();
            for k in (1..=n).rev() {
                let max = exps
                    .iter()
                    .filter(|mu| (k..n).all(|j| mu.0[j] == nu.0[j]))
                    .map(|mu| mu.0[k - 1])
                    .max()
                    .unwrap_or(0);
                if nu.0[k - 1] == max {
                    set.insert(k);
                }
            }
            set
        })
        .collect()
}

/// Thomas assignment: x_i multiplicative for ν iff ν_i = max{μ_i : μ ∈ N}.
fn thomas_assign(exps: &[&Exponent]) -> Vec<BTreeSet<usize>> {
    let n = exps[0].n();
    let maxima: Vec<u32> = (0..n)
        .map(|i| exps.iter().map(|mu| mu.0[i]).max().unwrap_or(0))
        .collect();
    exps.iter()
        .map(|nu| {
            (1..=n)
                .filter(|&i| nu.0[i - 1] == maxima[i - 1])
                .collect()
        })
        .collect()
}

/// Find an involutive divisor of `target` among `lts`: a generator μ with
/// the same component, μ | ν and ν − μ supported on μ's multiplicative
/// indices.  If several exist (weak sets), the one with the maximal exponent
/// under `ord` is returned for determinism.
pub fn involutive_divisor(
    lts: &[Term],
    assignment: &MultAssignment,
    target: &Term,
    ord: OrderKind,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, t) in lts.iter().enumerate() {
        if t.comp != target.comp || !t.exp.divides(&target.exp) {
            continue;
        }
        let quot = target.exp.sub(&t.exp);
        if quot
            .support()
            .iter()
            .all(|k| assignment.mult[i].contains(k))
        {
            best = match best {
                None => Some(i),
                Some(b) => {
                    if ord.cmp_exp(&t.exp, &lts[b].exp) == Ordering::Greater {
                        Some(i)
                    } else {
                        Some(b)
                    }
                }
            };
        }
    }
    best
}

/// Local involution test for a monomial set: every product of a generator
/// with one of its non-multiplicative variables must have an involutive
/// divisor in the set.  Returns the first failing (generator index,
/// variable) when not involutive.
pub fn is_involutive_monomial_set(
    kind: Division,
    lts: &[Term],
    ord: OrderKind,
) -> Result<(), (usize, usize)> {
    if lts.is_empty() {
        return Ok(());
    }
    let n = lts[0].exp.n();
    let assignment = assign_multiplicative(kind, lts);
    for (i, t) in lts.iter().enumerate() {
        for j in assignment.nonmult(i, n) {
            let prod = Term { exp: t.exp.mul_var(j), comp: t.comp };
            if involutive_divisor(lts, &assignment, &prod, ord).is_none() {
                return Err((i, j));
            }
        }
    }
    Ok(())
}
