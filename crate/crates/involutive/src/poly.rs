//! Sparse polynomials and free-module elements over ℚ.

use crate::exponent::Exponent;
use crate::order::OrderKind;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Arbitrary-precision rational coefficient.
pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// A monomial term x^μ·e_comp of a free module Pᵐ; `comp` is 0-based
/// internally (component e₁ is `comp == 0`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub exp: Exponent,
    pub comp: usize,
}

impl Term {
    pub fn ring(exp: Exponent) -> Term {
        Term { exp, comp: 0 }
    }

    pub fn deg(&self) -> u32 {
        self.exp.deg()
    }
}

/// A normalized element of Pᵐ: terms sorted strictly descending under the
/// active order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub terms: Vec<(Term, Q)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(t: Term, c: Q) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(t, c)] }
        }
    }

    pub fn monomial(exp: Exponent) -> Poly {
        Poly::term(Term::ring(exp), Q::one())
    }

    pub fn constant(n: usize, c: Q) -> Poly {
        Poly::term(Term::ring(Exponent::zero(n)), c)
    }

    /// Build from an arbitrary term list: sort, merge, drop zeros.
    pub fn from_terms(mut terms: Vec<(Term, Q)>, ord: OrderKind) -> Poly {
        terms.sort_by(|a, b| ord.cmp_term(&b.0, &a.0));
        let mut out: Vec<(Term, Q)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => out.push((t, c)),
            }
            if let Some((_, lc)) = out.last() {
                if lc.is_zero() {
                    out.pop();
                }
            }
        }
        Poly { terms: out }
    }

    /// Leading term and coefficient; `None` for the zero element.
    pub fn lt(&self) -> Option<(&Term, &Q)> {
        self.terms.first().map(|(t, c)| (t, c))
    }

    /// Leading exponent.
    pub fn le(&self) -> Option<&Exponent> {
        self.terms.first().map(|(t, _)| &t.exp)
    }

    /// Maximal total degree of a term.
    pub fn deg(&self) -> u32 {
        self.terms.iter().map(|(t, _)| t.deg()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.deg() == w[1].0.deg())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Merge-add of two normalized elements under the same order.
    pub fn add(&self, other: &Poly, ord: OrderKind) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.cmp_term(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly, ord: OrderKind) -> Poly {
        self.add(&other.neg(), ord)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(t, q)| (t.clone(), q * c)).collect(),
        }
    }

    /// Multiply by the scalar term c·x^σ (component untouched); order is
    /// preserved by multiplicativity, so no re-sort is needed.
    pub fn mul_scalar_term(&self, sigma: &Exponent, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, q)| {
                    (
                        Term { exp: t.exp.add(sigma), comp: t.comp },
                        q * c,
                    )
                })
                .collect(),
        }
    }

    pub fn mul_var(&self, k: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, q)| (Term { exp: t.exp.mul_var(k), comp: t.comp }, q.clone()))
                .collect(),
        }
    }

    /// Ring product; `self` must be a rank-1 (component-0) polynomial acting
    /// as a scalar on `other`.
    pub fn mul_poly(&self, other: &Poly, ord: OrderKind) -> Poly {
        let mut acc = Poly::zero();
        for (t, c) in &self.terms {
            assert_eq!(t.comp, 0, "scalar factor must live in the ring");
            acc = acc.add(&other.mul_scalar_term(&t.exp, c), ord);
        }
        acc
    }

    /// Divide every term by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.lt() {
            None => Poly::zero(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact division by x_k^m; panics if some term is not divisible.
    pub fn div_var_power(&self, k: usize, m: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    assert!(t.exp.0[k - 1] >= m, "inexact division by variable power");
                    let mut v = t.exp.0.clone();
                    v[k - 1] -= m;
                    (Term { exp: Exponent(v), comp: t.comp }, c.clone())
                })
                .collect(),
        }
    }

    /// Maximal component index appearing (for rank bookkeeping).
    pub fn max_comp(&self) -> usize {
        self.terms.iter().map(|(t, _)| t.comp).max().unwrap_or(0)
    }

    /// Render with variable names; module components printed as `e_i`
    /// (1-based) when `rank > 1`.
    pub fn render(&self, vars: &[String], rank: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = t.exp.render(vars);
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || mono == "1" {
                parts.push(abs.to_string());
            }
            if mono != "1" {
                parts.push(mono);
            }
            let mut body = parts.join("*");
            if rank > 1 {
                if body == "1" {
                    body = format!("e_{}", t.comp + 1);
                } else {
                    body = format!("{}*e_{}", body, t.comp + 1);
                }
            }
            s.push_str(&body);
        }
        s
    }
}

/// Σ cᵢ·x^{σᵢ}·fᵢ with exact normalization.
pub fn linear_combine(parts: &[(Q, Exponent, &Poly)], ord: OrderKind) -> Poly {
    let mut acc = Poly::zero();
    for (c, sigma, f) in parts {
        acc = acc.add(&f.mul_scalar_term(sigma, c), ord);
    }
    acc
}
