//! Term orders: lex, deglex, degrevlex, extended to free modules
//! term-over-position with the lower component index preferred.

use crate::exponent::Exponent;
use crate::poly::Term;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub fn parse(s: &str) -> Option<OrderKind> {
        match s {
            "lex" => Some(OrderKind::Lex),
            "deglex" => Some(OrderKind::DegLex),
            "degrevlex" => Some(OrderKind::DegRevLex),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    /// A class respecting order coincides on terms of equal degree with the
    /// reverse lexicographic order; deglex and degrevlex qualify.
    pub fn is_class_respecting(&self) -> bool {
        matches!(self, OrderKind::DegLex | OrderKind::DegRevLex)
    }

    /// Compare two exponent vectors; `Greater` means `a ≻ b`.
    pub fn cmp_exp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        match self {
            OrderKind::Lex => lex_cmp(a, b),
            OrderKind::DegLex => a.deg().cmp(&b.deg()).then_with(|| lex_cmp(a, b)),
            OrderKind::DegRevLex => a.deg().cmp(&b.deg()).then_with(|| revlex_cmp(a, b)),
        }
    }

    /// Module comparison: term over position, with the *lower* component
    /// index yielding the greater term on monomial ties.
    pub fn cmp_term(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp_exp(&a.exp, &b.exp)
            .then_with(|| b.comp.cmp(&a.comp))
    }
}

/// Lex: μ ≻ ν iff the last non-vanishing entry of μ − ν is positive.
fn lex_cmp(a: &Exponent, b: &Exponent) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// Reverse lex tie-break: μ ≻ ν iff the first non-vanishing entry of μ − ν
/// is negative.
fn revlex_cmp(a: &Exponent, b: &Exponent) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
