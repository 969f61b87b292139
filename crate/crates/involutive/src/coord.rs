//! Exact linear coordinate changes x_i ↦ Σ_j A_{ij} x̃_j.

use crate::exponent::Exponent;
use crate::order::OrderKind;
use crate::poly::{Poly, Q, Term};
use num_traits::{One, Zero};

/// An invertible substitution matrix: the variable x_i is replaced by the
/// linear form Σ_j A[i][j]·x̃_j.  The inverse is computed (and the matrix
/// validated) at construction.
#[derive(Clone, Debug)]
pub struct CoordinateChange {
    pub matrix: Vec<Vec<Q>>,
    pub inverse: Vec<Vec<Q>>,
}

impl CoordinateChange {
    pub fn new(matrix: Vec<Vec<Q>>) -> Result<CoordinateChange, String> {
        let inverse = invert(&matrix).ok_or_else(|| "singular coordinate change".to_string())?;
        Ok(CoordinateChange { matrix, inverse })
    }

    pub fn identity(n: usize) -> CoordinateChange {
        let m = identity_matrix(n);
        CoordinateChange { inverse: m.clone(), matrix: m }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity_matrix(self.matrix.len())
    }

    /// Elementary change x_k ↦ x_k + a·x_ℓ (1-based indices).
    pub fn elementary(n: usize, k: usize, l: usize, a: Q) -> CoordinateChange {
        let mut m = identity_matrix(n);
        m[k - 1][l - 1] = a;
        CoordinateChange::new(m).expect("elementary change is invertible")
    }

    pub fn inverted(&self) -> CoordinateChange {
        CoordinateChange {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// The change that first applies `self`, then `other`.
    pub fn then(&self, other: &CoordinateChange) -> CoordinateChange {
        // substituting self then other means each x̃ in self's forms is
        // replaced by other's forms: matrix product self · other
        CoordinateChange {
            matrix: mat_mul(&self.matrix, &other.matrix),
            inverse: mat_mul(&other.inverse, &self.inverse),
        }
    }

    /// Apply the substitution to a module element.
    pub fn apply(&self, f: &Poly, ord: OrderKind) -> Poly {
        let n = self.matrix.len();
        // linear forms for each variable
        let forms: Vec<Poly> = (0..n)
            .map(|i| {
                Poly::from_terms(
                    (0..n)
                        .filter(|&j| !self.matrix[i][j].is_zero())
                        .map(|j| {
                            (
                                Term::ring(Exponent::unit(n, j + 1)),
                                self.matrix[i][j].clone(),
                            )
                        })
                        .collect(),
                    ord,
                )
            })
            .collect();
        let mut acc = Poly::zero();
        for (t, c) in &f.terms {
            let mut prod = Poly::term(
                Term { exp: Exponent::zero(n), comp: t.comp },
                c.clone(),
            );
            for (i, &e) in t.exp.0.iter().enumerate() {
                for _ in 0..e {
                    prod = forms[i].mul_poly(&prod, ord);
                }
            }
            acc = acc.add(&prod, ord);
        }
        acc
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Exact Gaussian inversion; `None` for singular matrices.
fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv = identity_matrix(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Some(inv)
}
