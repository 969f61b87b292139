//! Exponent vectors (multi indices) in ℕ₀ⁿ.

use std::fmt;

/// A multi index μ ∈ ℕ₀ⁿ encoding the monomial x^μ = x₁^{μ₁}⋯xₙ^{μₙ}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The unit multi index 1ₖ (1-based variable index).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        Exponent(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Total degree |μ|.
    pub fn deg(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Class: 1-based index of the first non-vanishing entry; `n` for the
    /// zero vector by convention.
    pub fn cls(&self) -> usize {
        self.0
            .iter()
            .position(|&e| e != 0)
            .map(|i| i + 1)
            .unwrap_or(self.n())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the non-vanishing entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum μ + ν.
    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference μ − ν; requires ν | μ.
    pub fn sub(&self, other: &Exponent) -> Exponent {
        debug_assert!(other.divides(self));
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// μ + 1ₖ for a 1-based variable index k.
    pub fn mul_var(&self, k: usize) -> Exponent {
        let mut v = self.0.clone();
        v[k - 1] += 1;
        Exponent(v)
    }

    /// μ with the k-th entry (1-based) set to zero, i.e. the result of
    /// substituting x_k = 1 in a monomial.
    pub fn erase_var(&self, k: usize) -> Exponent {
        let mut v = self.0.clone();
        v[k - 1] = 0;
        Exponent(v)
    }

    /// Render with the given variable names, e.g. `x^2*y`.
    pub fn render(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 1 {
                parts.push(vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", vars[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// All exponent vectors in n variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(n: usize, i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if i == n - 1 {
            cur[i] = rem;
            out.push(Exponent(cur.clone()));
            return;
        }
        for v in 0..=rem {
            cur[i] = v;
            rec(n, i + 1, rem - v, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Exponent(vec![]));
        }
        return out;
    }
    rec(n, 0, d, &mut cur, &mut out);
    out
}

/// All exponent vectors in n variables of total degree at most `d`.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Exponent> {
    (0..=d).flat_map(|q| monomials_of_degree(n, q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_convention() {
        assert_eq!(Exponent(vec![0, 0, 2]).cls(), 3);
        assert_eq!(Exponent(vec![1, 0, 1]).cls(), 1);
        assert_eq!(Exponent(vec![0, 1, 1]).cls(), 2);
        // the zero vector has class n by convention
        assert_eq!(Exponent(vec![0, 0, 0]).cls(), 3);
    }

    #[test]
    fn degree_and_divisibility() {
        let a = Exponent(vec![1, 2, 0]);
        let b = Exponent(vec![1, 3, 1]);
        assert_eq!(a.deg(), 3);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.sub(&a), Exponent(vec![0, 1, 1]));
        assert_eq!(a.lcm(&Exponent(vec![0, 1, 2])), Exponent(vec![1, 2, 2]));
    }

    #[test]
    fn enumeration_counts() {
        // C(d+n-1, n-1) monomials of degree d
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_up_to_degree(2, 4).len(), 15);
    }
}
