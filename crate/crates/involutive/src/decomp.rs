//! Combinatorial decompositions of P/I and the invariants derived from them:
//! Hilbert series and polynomial, Krull dimension, depth, Cohen-Macaulayness,
//! standard pairs, primary decomposition of quasi-stable monomial ideals,
//! saturation, satiety and regularity bounds.

use crate::basis::{
    colon_variable_saturation, complete, involutive_head_autoreduce, minimal_monomial_basis,
    monomial_ideal_contains, CompletionLimits, InvolutiveBasis,
};
use crate::division::Division;
use crate::exponent::{monomials_of_degree, monomials_up_to_degree, Exponent};
use crate::order::OrderKind;
use crate::poly::{Poly, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// Cone decompositions
// ---------------------------------------------------------------------------

/// A shifted coordinate cone ν + ℕⁿ_N: all monomials x^ν·x^σ with σ supported
/// on the multiplicative index set N (1-based variable indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub vertex: Exponent,
    pub mult: BTreeSet<usize>,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.mult.len()
    }

    pub fn contains(&self, mu: &Exponent) -> bool {
        if !self.vertex.divides(mu) {
            return false;
        }
        (1..=mu.n()).all(|i| mu.0[i - 1] == self.vertex.0[i - 1] || self.mult.contains(&i))
    }
}

/// The flavour only documents provenance; the cone data is self-contained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionFlavor {
    Complementary,
    Rees,
    Stanley,
    Hironaka,
}

/// A finite list of cones decomposing the complement of a monomial ideal
/// (disjointly, except where noted by the producing operation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecomposition {
    pub n: usize,
    pub cones: Vec<Cone>,
    pub flavor: DecompositionFlavor,
}

impl ConeDecomposition {
    /// D = max over cones of the number of multiplicative variables.
    pub fn dimension(&self) -> usize {
        self.cones.iter().map(Cone::dim).max().unwrap_or(0)
    }

    /// Number of monomials of total degree `s` covered by the cones
    /// (with multiplicity, so only meaningful for disjoint decompositions).
    pub fn count_degree(&self, s: u32) -> BigInt {
        let mut total = BigInt::zero();
        for c in &self.cones {
            let q = c.vertex.deg();
            if c.mult.is_empty() {
                if q == s {
                    total += 1;
                }
            } else if s >= q {
                total += binomial((s - q) as u64 + c.dim() as u64 - 1, c.dim() as u64 - 1);
            }
        }
        total
    }

    /// Exhaustively verify up to `degcap` that the cones are pairwise disjoint
    /// and cover exactly the monomials outside the ideal ⟨gens⟩.
    pub fn verifies_against(&self, gens: &[Exponent], degcap: u32) -> bool {
        for mu in monomials_up_to_degree(self.n, degcap) {
            let hits = self.cones.iter().filter(|c| c.contains(&mu)).count();
            let expected = if monomial_ideal_contains(gens, &mu) { 0 } else { 1 };
            if hits != expected {
                return false;
            }
        }
        true
    }
}

/// Complementary decomposition of the monomial ideal ⟨gens⟩ by recursion over
/// the values of the last variable: the complement splits into slices with a
/// fixed x_m-degree q below the largest occurring one, each handled in one
/// variable less, and the top slice in which x_m becomes multiplicative.
pub fn complementary_decomposition_janet(gens: &[Exponent], n: usize) -> ConeDecomposition {
    let min = minimal_monomial_basis(gens);
    ConeDecomposition {
        n,
        cones: janet_complement(&min, n, n),
        flavor: DecompositionFlavor::Complementary,
    }
}

fn janet_complement(gens: &[Exponent], m: usize, n: usize) -> Vec<Cone> {
    if gens.iter().any(Exponent::is_zero) {
        // the ideal is the whole ring: empty complement
        return Vec::new();
    }
    if gens.is_empty() {
        return vec![Cone {
            vertex: Exponent::zero(n),
            mult: (1..=m).collect(),
        }];
    }
    debug_assert!(m >= 1, "nonzero generators need at least one variable");
    let q_max = gens.iter().map(|g| g.0[m - 1]).max().unwrap();
    let mut out = Vec::new();
    for q in 0..=q_max {
        let slice: Vec<Exponent> = gens
            .iter()
            .filter(|g| g.0[m - 1] <= q)
            .map(|g| g.erase_var(m))
            .collect();
        let projected = minimal_monomial_basis(&slice);
        for mut cone in janet_complement(&projected, m - 1, n) {
            cone.vertex.0[m - 1] = q;
            if q == q_max {
                cone.mult.insert(m);
            }
            out.push(cone);
        }
    }
    out
}

/// Degree-q complementary decomposition read off a monomial Pommaret basis:
/// the complement is the set N̄₀ of monomials below degree q outside the
/// ideal (bare vertices) together with Pommaret cones over the degree-q
/// complement N̄₁.  Returns the plain decomposition and its Rees refinement
/// whose minimal cone dimension is d−1 with d the minimal class of the basis.
pub fn complementary_decomposition_pommaret(
    basis: &InvolutiveBasis,
    q: u32,
) -> (ConeDecomposition, ConeDecomposition) {
    assert!(basis.is_monomial(), "expected a monomial Pommaret basis");
    assert_eq!(basis.division, Division::Pommaret);
    assert!(q >= basis.deg(), "q must be at least the basis degree");
    let n = basis.n;
    let lts = basis.les();
    let mut cones = Vec::new();
    for s in 0..q {
        for mu in monomials_of_degree(n, s) {
            if !monomial_ideal_contains(&lts, &mu) {
                cones.push(Cone { vertex: mu, mult: BTreeSet::new() });
            }
        }
    }
    let mut top = Vec::new();
    for mu in monomials_of_degree(n, q) {
        if !monomial_ideal_contains(&lts, &mu) {
            let cls = mu.cls();
            top.push(Cone { vertex: mu, mult: (1..=cls).collect() });
        }
    }
    let plain = ConeDecomposition {
        n,
        cones: cones.iter().cloned().chain(top.iter().cloned()).collect(),
        flavor: DecompositionFlavor::Stanley,
    };

    // Rees refinement: widen each degree-q cone of class k < d to the cone
    // with vertex ν̃ (the class entry zeroed) over x₁..x_k; after that every
    // cone of dimension below d−1 is absorbed by a wider one and is dropped.
    let d = basis.min_class();
    let rees = if d <= 1 {
        ConeDecomposition { n, cones: plain.cones.clone(), flavor: DecompositionFlavor::Rees }
    } else {
        let mut kept = Vec::new();
        for cone in top {
            let k = cone.vertex.cls();
            if k >= d {
                kept.push(cone);
            } else if k == d - 1 {
                kept.push(Cone { vertex: cone.vertex.erase_var(k), mult: cone.mult });
            }
        }
        ConeDecomposition { n, cones: kept, flavor: DecompositionFlavor::Rees }
    };
    debug_assert!(rees
        .cones
        .iter()
        .all(|c| c.mult.iter().copied().eq(1..=c.dim())));
    (plain, rees)
}

// ---------------------------------------------------------------------------
// Hilbert series, polynomial, dimension, multiplicity
// ---------------------------------------------------------------------------

/// Hilbert data of a disjoint cone decomposition of P/I: the series
/// Σ_t λ^{q_t}/(1−λ)^{k_t} over the common reduced denominator, the Hilbert
/// polynomial, the dimension D = max k_t, the multiplicity (number of
/// top-dimensional cones) and the index of regularity.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertData {
    /// Coefficients of the numerator polynomial in λ, ascending.
    pub numerator: Vec<BigInt>,
    /// The series equals numerator / (1−λ)^denominator_power, fully reduced.
    pub denominator_power: usize,
    pub dimension: usize,
    pub multiplicity: BigInt,
    /// Coefficients of the Hilbert polynomial in s, ascending (empty ⇒ 0).
    pub hilbert_polynomial: Vec<Q>,
    /// Smallest s₀ ≥ 0 with HF(s) = HP(s) for all s ≥ s₀.
    pub index_of_regularity: i64,
}

pub fn hilbert(dec: &ConeDecomposition) -> HilbertData {
    let dim = dec.dimension();
    // numerator over (1−λ)^dim: Σ_t λ^{q_t} (1−λ)^{dim−k_t}
    let mut numerator = vec![BigInt::zero()];
    for c in &dec.cones {
        let mut term = vec![BigInt::zero(); c.vertex.deg() as usize + 1];
        *term.last_mut().unwrap() = BigInt::one();
        for _ in 0..(dim - c.dim()) {
            term = int_poly_mul(&term, &[BigInt::one(), -BigInt::one()]);
        }
        numerator = int_poly_add(&numerator, &term);
    }
    int_poly_trim(&mut numerator);
    let mut denominator_power = dim;
    // cancel common factors of (1−λ)
    while denominator_power > 0 && !numerator.is_empty() {
        match int_poly_divide_one_minus_lambda(&numerator) {
            Some(quot) => {
                numerator = quot;
                denominator_power -= 1;
            }
            None => break,
        }
    }

    let multiplicity: BigInt = if dim == 0 {
        dec.cones.len().into()
    } else {
        dec.cones.iter().filter(|c| c.dim() == dim).count().into()
    };

    // HP(s) = Σ_{k_t ≥ 1} C(s − q_t + k_t − 1, k_t − 1)
    let mut hp: Vec<Q> = Vec::new();
    for c in &dec.cones {
        if c.dim() >= 1 {
            let a = c.dim() as i64 - 1 - c.vertex.deg() as i64;
            hp = q_poly_add(&hp, &binom_poly(a, c.dim() - 1));
        }
    }
    q_poly_trim(&mut hp);

    let s_max = dec.cones.iter().map(|c| c.vertex.deg()).max().unwrap_or(0) as i64;
    let mut index_of_regularity = 0i64;
    for s in (0..=s_max + 1).rev() {
        let hf = dec.count_degree(s as u32);
        let hp_val = q_poly_eval(&hp, s);
        if Q::from_integer(hf) != hp_val {
            index_of_regularity = s + 1;
            break;
        }
    }

    HilbertData {
        numerator,
        denominator_power,
        dimension: dim,
        multiplicity,
        hilbert_polynomial: hp,
        index_of_regularity,
    }
}

fn int_poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_poly_trim(a: &mut Vec<BigInt>) {
    while a.last().map_or(false, Zero::is_zero) {
        a.pop();
    }
}

/// Exact quotient by (1 − λ), or None when λ = 1 is not a root.
fn int_poly_divide_one_minus_lambda(a: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.iter().sum::<BigInt>() != BigInt::zero() {
        return None;
    }
    // synthetic division: a(λ) = (1 − λ)·q(λ) with q_i = Σ_{j>i} a_j reversed
    let mut out = vec![BigInt::zero(); a.len() - 1];
    let mut carry = BigInt::zero();
    for i in (0..a.len() - 1).rev() {
        carry = &carry - &a[i + 1];
        out[i] = -carry.clone();
    }
    let mut quot = out;
    int_poly_trim(&mut quot);
    Some(quot)
}

fn q_poly_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn q_poly_trim(a: &mut Vec<Q>) {
    while a.last().map_or(false, Zero::is_zero) {
        a.pop();
    }
}

pub fn q_poly_eval(a: &[Q], s: i64) -> Q {
    let x = Q::from_integer(s.into());
    let mut acc = Q::zero();
    for c in a.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Coefficients of the polynomial C(s + a, b) in the variable s.
fn binom_poly(a: i64, b: usize) -> Vec<Q> {
    let mut out = vec![Q::one()];
    for i in 0..b {
        // multiply by (s + a − i)
        let shift = Q::from_integer((a - i as i64).into());
        let mut next = vec![Q::zero(); out.len() + 1];
        for (j, c) in out.iter().enumerate() {
            next[j + 1] += c;
            next[j] += c * &shift;
        }
        out = next;
    }
    let fact: BigInt = (1..=b as u64).map(BigInt::from).product();
    let fact = Q::from_integer(fact);
    out.into_iter().map(|c| c / &fact).collect()
}

pub fn binomial(m: u64, r: u64) -> BigInt {
    if r > m {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r.min(m - r) {
        num *= m - i;
        den *= i + 1;
    }
    num / den
}

// ---------------------------------------------------------------------------
// Dimension, depth, Cohen-Macaulayness, Noether normalisation
// ---------------------------------------------------------------------------

/// Krull dimension of P/I from a Pommaret basis of degree q:
/// D = min{i : every degree-q monomial in the variables x_{i+1}..x_n lies in
/// lt I}, together with the maximal strongly independent set {x₁..x_D}.
pub fn krull_dimension(basis: &InvolutiveBasis) -> (usize, Vec<usize>) {
    let n = basis.n;
    if basis.gens.is_empty() {
        return (n, (1..=n).collect());
    }
    let q = basis.deg();
    let lts = basis.les();
    for i in 0..=n {
        let all_in = monomials_of_degree(n, q)
            .into_iter()
            .filter(|mu| mu.cls() > i || mu.is_zero())
            .all(|mu| monomial_ideal_contains(&lts, &mu));
        if all_in {
            return (i, (1..=i).collect());
        }
    }
    unreachable!("degree-q monomials in zero variables form an empty set");
}

/// Depth data from a Pommaret basis for a class-respecting order:
/// d = minimal class of a generator; (x₁,…,x_d) is a maximal I-regular
/// sequence and depth P/I = d − 1.
pub fn depth(basis: &InvolutiveBasis) -> (usize, Vec<usize>) {
    assert!(!basis.gens.is_empty(), "depth of the zero ideal is handled by the caller");
    let d = basis.min_class();
    (d, (1..=d).collect())
}

#[derive(Clone, Debug)]
pub struct NoetherData {
    /// The subring 𝕜[x₁..x_D] is a Noether normalisation of P/I.
    pub dimension: usize,
    /// Module generators of P/I over the normalisation, read off a
    /// complementary decomposition.
    pub module_generators: Vec<Exponent>,
}

#[derive(Clone, Debug)]
pub struct CohenMacaulayReport {
    pub is_cohen_macaulay: bool,
    /// For CM quotients: the decomposition into cones that all share the
    /// class d − 1 (a Hironaka decomposition).
    pub hironaka: Option<ConeDecomposition>,
    pub noether: NoetherData,
}

/// Cohen-Macaulay test for P/I from a degrevlex monomial Pommaret basis:
/// P/I is CM iff ⟨lt H, x₁..x_{d−1}⟩_q = P_q where q is the basis degree and
/// d the minimal class.
pub fn cohen_macaulay(basis: &InvolutiveBasis) -> CohenMacaulayReport {
    assert!(basis.is_monomial(), "expected a monomial Pommaret basis");
    let n = basis.n;
    let q = basis.deg();
    let d = basis.min_class();
    let lts = basis.les();
    let is_cm = monomials_of_degree(n, q)
        .into_iter()
        .filter(|mu| mu.cls() >= d)
        .all(|mu| monomial_ideal_contains(&lts, &mu));
    let hironaka = if is_cm {
        // vertices: monomials outside lt I supported on x_d..x_n; all of
        // degree q are inside, so the enumeration below is exhaustive
        let mut cones = Vec::new();
        for s in 0..q {
            for mu in monomials_of_degree(n, s) {
                if (mu.cls() >= d || mu.is_zero()) && !monomial_ideal_contains(&lts, &mu) {
                    cones.push(Cone { vertex: mu, mult: (1..d).collect() });
                }
            }
        }
        Some(ConeDecomposition { n, cones, flavor: DecompositionFlavor::Hironaka })
    } else {
        None
    };
    let complementary = complementary_decomposition_janet(&lts, n);
    let (dim, _) = krull_dimension(basis);
    let noether = NoetherData {
        dimension: dim,
        module_generators: complementary.cones.into_iter().map(|c| c.vertex).collect(),
    };
    CohenMacaulayReport { is_cohen_macaulay: is_cm, hironaka, noether }
}

// ---------------------------------------------------------------------------
// Standard pairs, irreducible decomposition, associated primes
// ---------------------------------------------------------------------------

/// An admissible pair (ν, N_ν) with supp ν ∩ N_ν = ∅ whose restricted cone
/// ν + ℕⁿ_{N_ν} avoids the ideal and is maximal among such cones.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StandardPair {
    pub vertex: Exponent,
    pub mult: BTreeSet<usize>,
}

#[derive(Clone, Debug)]
pub struct StandardPairReport {
    pub pairs: Vec<StandardPair>,
    /// One irreducible ideal ⟨x_i^{ν_i+1} : i ∉ N_ν⟩ per standard pair;
    /// their intersection is the ideal.
    pub irreducible_components: Vec<Vec<Exponent>>,
    /// Indices into `pairs` of the irredundant irreducible decomposition:
    /// per multiplicative set only the divisibility-maximal vertices matter.
    pub irredundant: Vec<usize>,
    /// Associated primes ⟨x_i : i ∉ N⟩, one per distinct multiplicative set.
    pub associated_primes: Vec<BTreeSet<usize>>,
    /// Number of standard pairs = arithmetic degree of the ideal.
    pub arithmetic_degree: usize,
}

/// Partial order on admissible pairs: a ≤ b iff the cone of b is contained in
/// the cone of a.
fn pair_leq(a: &StandardPair, b: &StandardPair) -> bool {
    a.vertex.divides(&b.vertex)
        && (1..=a.vertex.n()).all(|i| {
            let grows = b.vertex.0[i - 1] > a.vertex.0[i - 1] || b.mult.contains(&i);
            !grows || a.mult.contains(&i)
        })
}

/// Standard pairs of the monomial ideal ⟨gens⟩, derived from a complementary
/// decomposition: make each cone admissible by zeroing the multiplicative
/// entries of its vertex, discard cones that then meet the ideal and keep the
/// minimal pairs (those with maximal cones).
pub fn standard_pairs(dec: &ConeDecomposition, gens: &[Exponent]) -> StandardPairReport {
    let min = minimal_monomial_basis(gens);
    let mut candidates: Vec<StandardPair> = Vec::new();
    for c in &dec.cones {
        let mut v = c.vertex.clone();
        for &i in &c.mult {
            v.0[i - 1] = 0;
        }
        let pair = StandardPair { vertex: v, mult: c.mult.clone() };
        // cone ∩ I ≠ ∅ iff some generator divides a cone member, i.e. its
        // non-multiplicative entries are bounded by the vertex
        let meets_ideal = min
            .iter()
            .any(|g| (1..=dec.n).all(|i| pair.mult.contains(&i) || g.0[i - 1] <= pair.vertex.0[i - 1]));
        if !meets_ideal && !candidates.contains(&pair) {
            candidates.push(pair);
        }
    }
    let mut pairs: Vec<StandardPair> = candidates
        .iter()
        .filter(|p| {
            !candidates
                .iter()
                .any(|q| q != *p && pair_leq(q, p))
        })
        .cloned()
        .collect();
    pairs.sort();

    let irreducible_components: Vec<Vec<Exponent>> = pairs
        .iter()
        .map(|p| {
            (1..=dec.n)
                .filter(|i| !p.mult.contains(i))
                .map(|i| {
                    let mut e = Exponent::zero(dec.n);
                    e.0[i - 1] = p.vertex.0[i - 1] + 1;
                    e
                })
                .collect()
        })
        .collect();

    let mut irredundant: Vec<usize> = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        let dominated = pairs
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.mult == p.mult && p.vertex.divides(&q.vertex));
        if !dominated {
            irredundant.push(i);
        }
    }

    let mut associated_primes: Vec<BTreeSet<usize>> = Vec::new();
    for p in &pairs {
        let prime: BTreeSet<usize> = (1..=dec.n).filter(|i| !p.mult.contains(i)).collect();
        if !associated_primes.contains(&prime) {
            associated_primes.push(prime);
        }
    }
    associated_primes.sort();

    let arithmetic_degree = pairs.len();
    StandardPairReport {
        pairs,
        irreducible_components,
        irredundant,
        associated_primes,
        arithmetic_degree,
    }
}

// ---------------------------------------------------------------------------
// Primary decomposition of quasi-stable monomial ideals
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    /// Minimal generators of 𝔮_k = I : x_k^∞ + ⟨x_{k+1}^{s_{k+1}}, …, x_D^{s_D}⟩.
    pub generators: Vec<Exponent>,
    pub k: usize,
    /// The associated prime ⟨x_{k+1}, …, x_n⟩.
    pub associated_prime: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
    /// Sequential chain I = I₀ ⊊ I₁ ⊊ … ⊊ P with I_{j+1} = I_j : x_{d_j}^∞,
    /// d_j the minimal class of the minimal generators of I_j (minimal bases).
    pub sequential_chain: Vec<Vec<Exponent>>,
    pub depth_index: usize,
    pub dimension: usize,
}

/// Irredundant primary decomposition of a nonzero quasi-stable monomial
/// ideal; on failure of the quasi-stability chain the first offending
/// variable index is returned.
pub fn primary_decomposition(gens: &[Exponent], n: usize) -> Result<PrimaryDecomposition, usize> {
    let min = minimal_monomial_basis(gens);
    assert!(!min.is_empty() && !min.iter().any(Exponent::is_zero),
        "expected a nonzero proper monomial ideal");
    crate::basis::is_quasi_stable(&min, n)?;

    // colon chain I : x_k^∞ for k = 0..n (k = 0 is the ideal itself)
    let mut colons: Vec<Vec<Exponent>> = vec![min.clone()];
    for k in 1..=n {
        colons.push(colon_variable_saturation(&min, k));
    }
    let dimension = (1..=n)
        .find(|&k| colons[k].iter().any(Exponent::is_zero))
        .expect("a quasi-stable ideal contains a pure power of the last variable")
        - 1;
    let d = min.iter().map(|g| g.cls()).min().unwrap() - 1;

    let s: Vec<u32> = (1..=n)
        .map(|j| min.iter().map(|g| g.0[j - 1]).max().unwrap())
        .collect();

    let mut components = Vec::new();
    for k in d..=dimension {
        if k < dimension && colons[k] == colons[k + 1] {
            continue;
        }
        let mut comp = colons[k].clone();
        for j in k + 1..=dimension {
            assert!(s[j - 1] >= 1, "quasi-stability forces every variable up to x_D to occur");
            let mut e = Exponent::zero(n);
            e.0[j - 1] = s[j - 1];
            comp.push(e);
        }
        components.push(PrimaryComponent {
            generators: minimal_monomial_basis(&comp),
            k,
            associated_prime: (k + 1..=n).collect(),
        });
    }

    let mut sequential_chain = vec![min.clone()];
    let mut current = min;
    while !current.iter().any(Exponent::is_zero) {
        let dk = current.iter().map(|g| g.cls()).min().unwrap();
        current = colon_variable_saturation(&current, dk);
        sequential_chain.push(current.clone());
    }

    Ok(PrimaryDecomposition { components, sequential_chain, depth_index: d, dimension })
}

// ---------------------------------------------------------------------------
// Saturation and satiety
// ---------------------------------------------------------------------------

/// Saturation I : P₊^∞ from a Pommaret basis H for a class-respecting order:
/// each class-1 generator h is replaced by h / x₁^{deg_{x₁} lt h} and the
/// result head-autoreduced into a strong Pommaret basis.  The satiety is the
/// maximal degree of a class-1 generator; `None` means I is saturated.
pub fn saturate(basis: &InvolutiveBasis) -> (InvolutiveBasis, Option<u32>) {
    assert!(basis.order.is_class_respecting(), "saturation needs a class-respecting order");
    let mut gens: Vec<Poly> = Vec::new();
    let mut satiety: Option<u32> = None;
    for g in &basis.gens {
        let le = g.le().expect("basis generators are nonzero");
        if le.cls() == 1 {
            satiety = Some(satiety.unwrap_or(0).max(le.deg()));
            gens.push(g.div_var_power(1, le.0[0]));
        } else {
            gens.push(g.clone());
        }
    }
    let strong = involutive_head_autoreduce(&gens, Division::Pommaret, basis.order);
    (
        InvolutiveBasis::new(strong, Division::Pommaret, basis.order, basis.n, basis.rank),
        satiety,
    )
}

// ---------------------------------------------------------------------------
// Trung invariants and regularity bounds
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrungInvariants {
    /// c_0, …, c_D: for j < D the number c_j = sup{q : (Ĩ⁽ʲ⁾/I⁽ʲ⁾)_q ≠ 0} + 1
    /// with Ĩ⁽ʲ⁾ = I⁽ʲ⁾ : x_{j+1}^∞ and I⁽ʲ⁾ the elimination ideal in
    /// 𝕜[x_{j+1}..x_n]; c_D measures the finite quotient P⁽ᴰ⁾/I⁽ᴰ⁾.
    /// Empty suprema use the convention sup ∅ = −1, so c_j = 0.
    pub c: Vec<u32>,
    pub regularity: u32,
    /// Minimal class of the minimal generators; c_0..c_{depth−2} vanish, so
    /// under the tighter reading only c_{depth−1}..c_D need inspection.  Both
    /// readings give the same maximum and are recorded via this index.
    pub depth_index: usize,
}

/// Trung invariants of a quasi-stable monomial ideal.  Each c_j is computed
/// from the Pommaret class formula (maximal degree of the class-(j+1) basis
/// elements) and cross-checked against the elimination/satiety definition.
pub fn trung_invariants(gens: &[Exponent], n: usize, ord: OrderKind) -> Result<TrungInvariants, usize> {
    let min = minimal_monomial_basis(gens);
    assert!(!min.is_empty() && !min.iter().any(Exponent::is_zero),
        "expected a nonzero proper monomial ideal");
    crate::basis::is_quasi_stable(&min, n)?;
    let basis = monomial_pommaret_basis(&min, n, ord);
    let (dim, _) = krull_dimension(&basis);
    let les = basis.les();

    let mut c: Vec<u32> = Vec::with_capacity(dim + 1);
    for j in 0..dim {
        let cj = les
            .iter()
            .filter(|e| e.cls() == j + 1)
            .map(Exponent::deg)
            .max()
            .unwrap_or(0);
        c.push(cj);
    }
    let cd = les
        .iter()
        .filter(|e| e.cls() > dim)
        .map(Exponent::deg)
        .max()
        .expect("the zero-dimensional part of a quasi-stable ideal is nonempty");
    c.push(cd);

    // cross-check against the elimination definition: the elimination ideal
    // I⁽ʲ⁾ drops the generators divisible by x₁..x_j, its satiety is read off
    // its own Pommaret basis in the smaller ring
    for j in 0..dim {
        let elim: Vec<Exponent> = min
            .iter()
            .filter(|e| (1..=j).all(|i| e.0[i - 1] == 0))
            .map(|e| Exponent(e.0[j..].to_vec()))
            .collect();
        let sub = monomial_pommaret_basis(&minimal_monomial_basis(&elim), n - j, ord);
        let sat = sub
            .les()
            .iter()
            .filter(|e| e.cls() == 1)
            .map(Exponent::deg)
            .max()
            .unwrap_or(0);
        assert_eq!(sat, c[j], "class formula and elimination satiety disagree at c_{}", j);
    }
    {
        // c_D: smallest q with I⁽ᴰ⁾_q = P⁽ᴰ⁾_q, found by enumeration
        let elim: Vec<Exponent> = min
            .iter()
            .filter(|e| (1..=dim).all(|i| e.0[i - 1] == 0))
            .map(|e| Exponent(e.0[dim..].to_vec()))
            .collect();
        let elim = minimal_monomial_basis(&elim);
        let q0 = (0..).find(|&q| {
            monomials_of_degree(n - dim, q)
                .into_iter()
                .all(|mu| monomial_ideal_contains(&elim, &mu))
        });
        assert_eq!(q0, Some(c[dim]), "zero-dimensional satiety disagrees with the class formula");
    }

    let regularity = *c.iter().max().unwrap();
    assert_eq!(regularity, basis.deg(), "Trung maximum must equal the Pommaret basis degree");
    let depth_index = min.iter().map(|g| g.cls()).min().unwrap();
    Ok(TrungInvariants { c, regularity, depth_index })
}

fn monomial_pommaret_basis(min: &[Exponent], n: usize, ord: OrderKind) -> InvolutiveBasis {
    let gens: Vec<Poly> = min.iter().map(|e| Poly::monomial(e.clone())).collect();
    complete(&gens, Division::Pommaret, ord, n, 1, CompletionLimits::none())
        .expect_basis("quasi-stable monomial ideals have finite Pommaret bases")
}

/// Regularity bounds for a quasi-stable monomial ideal from its minimal
/// generators m₁,…,m_r: the lcm bound |λ| + d − n with x^λ = lcm(m₁,…,m_r)
/// and d the minimal class, and the generator-degree bound (n−d+1)(q−1) + 1
/// with q the maximal generator degree.
pub fn regularity_bounds(gens: &[Exponent], n: usize) -> (i64, i64) {
    let min = minimal_monomial_basis(gens);
    assert!(!min.is_empty() && !min.iter().any(Exponent::is_zero),
        "expected a nonzero proper monomial ideal");
    let lambda = min.iter().fold(Exponent::zero(n), |acc, g| acc.lcm(g));
    let d = min.iter().map(|g| g.cls()).min().unwrap() as i64;
    let q = min.iter().map(Exponent::deg).max().unwrap() as i64;
    let lcm_bound = lambda.deg() as i64 + d - n as i64;
    let degree_bound = (n as i64 - d + 1) * (q - 1) + 1;
    (lcm_bound, degree_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::complete;

    const ORD: OrderKind = OrderKind::DegRevLex;

    fn e(v: &[u32]) -> Exponent {
        Exponent(v.to_vec())
    }

    fn pommaret(gens: &[Exponent], n: usize) -> InvolutiveBasis {
        monomial_pommaret_basis(&minimal_monomial_basis(gens), n, ORD)
    }

    /// ⟨z³, yz², y²z, y²⟩ in x < y < z.
    fn staircase() -> Vec<Exponent> {
        vec![e(&[0, 0, 3]), e(&[0, 1, 2]), e(&[0, 2, 1]), e(&[0, 2, 0])]
    }

    #[test]
    fn janet_complement_of_staircase() {
        let dec = complementary_decomposition_janet(&staircase(), 3);
        let vertices: Vec<Exponent> = dec.cones.iter().map(|c| c.vertex.clone()).collect();
        assert_eq!(
            vertices,
            vec![e(&[0, 0, 0]), e(&[0, 1, 0]), e(&[0, 0, 1]), e(&[0, 1, 1]), e(&[0, 0, 2])]
        );
        assert!(dec.cones.iter().all(|c| c.mult.iter().copied().eq([1])));
        assert!(dec.verifies_against(&staircase(), 8));
    }

    #[test]
    fn janet_complement_edge_cases() {
        // whole ring
        let dec = complementary_decomposition_janet(&[e(&[0, 0])], 2);
        assert!(dec.cones.is_empty());
        // zero ideal
        let dec = complementary_decomposition_janet(&[], 2);
        assert_eq!(dec.cones.len(), 1);
        assert_eq!(dec.cones[0].dim(), 2);
        // a principal ideal
        let gens = vec![e(&[1, 1])];
        let dec = complementary_decomposition_janet(&gens, 2);
        assert!(dec.verifies_against(&gens, 9));
    }

    #[test]
    fn pommaret_complement_and_rees() {
        // ⟨y², xy⟩ in x < y: min class 1 keeps the plain decomposition
        let gens = vec![e(&[0, 2]), e(&[1, 1])];
        let basis = pommaret(&gens, 2);
        let (plain, rees) = complementary_decomposition_pommaret(&basis, basis.deg());
        assert!(plain.verifies_against(&gens, 8));
        assert_eq!(plain.cones, rees.cones);

        // ⟨y², yz, z²⟩ in x < y < z: min class 2, refined to class-1 cones
        let gens = vec![e(&[0, 2, 0]), e(&[0, 1, 1]), e(&[0, 0, 2])];
        let basis = pommaret(&gens, 3);
        assert_eq!(basis.min_class(), 2);
        let (plain, rees) = complementary_decomposition_pommaret(&basis, basis.deg());
        assert!(plain.verifies_against(&gens, 8));
        assert!(rees.verifies_against(&gens, 8));
        let mut vertices: Vec<Exponent> = rees.cones.iter().map(|c| c.vertex.clone()).collect();
        vertices.sort();
        assert_eq!(vertices, vec![e(&[0, 0, 0]), e(&[0, 0, 1]), e(&[0, 1, 0])]);
        assert!(rees.cones.iter().all(|c| c.dim() == 1));
    }

    #[test]
    fn hilbert_data_of_staircase() {
        let dec = complementary_decomposition_janet(&staircase(), 3);
        let h = hilbert(&dec);
        let one = BigInt::from(1);
        let two = BigInt::from(2);
        assert_eq!(h.numerator, vec![one, two.clone(), two]);
        assert_eq!(h.denominator_power, 1);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, BigInt::from(5));
        assert_eq!(h.hilbert_polynomial, vec![Q::from_integer(5.into())]);
        assert_eq!(h.index_of_regularity, 2);
        // Hilbert function 1, 3, 5, 5, …
        assert_eq!(dec.count_degree(0), BigInt::from(1));
        assert_eq!(dec.count_degree(1), BigInt::from(3));
        assert_eq!(dec.count_degree(2), BigInt::from(5));
        assert_eq!(dec.count_degree(7), BigInt::from(5));
    }

    #[test]
    fn hilbert_function_matches_enumeration() {
        for gens in [
            staircase(),
            vec![e(&[0, 2, 0]), e(&[1, 1, 0]), e(&[0, 0, 3])],
            vec![e(&[2, 0, 0])],
        ] {
            let dec = complementary_decomposition_janet(&gens, 3);
            for s in 0..=7u32 {
                let brute = monomials_of_degree(3, s)
                    .into_iter()
                    .filter(|mu| !monomial_ideal_contains(&gens, mu))
                    .count();
                assert_eq!(dec.count_degree(s), BigInt::from(brute));
            }
        }
    }

    #[test]
    fn hilbert_of_full_ring_and_zero_quotient() {
        let zero_ideal = complementary_decomposition_janet(&[], 2);
        let h = hilbert(&zero_ideal);
        assert_eq!(h.numerator, vec![BigInt::from(1)]);
        assert_eq!(h.denominator_power, 2);
        assert_eq!(h.dimension, 2);
        assert_eq!(h.index_of_regularity, 0);
        // HP(s) = s + 1
        assert_eq!(q_poly_eval(&h.hilbert_polynomial, 10), Q::from_integer(11.into()));

        let whole = complementary_decomposition_janet(&[e(&[0, 0])], 2);
        let h = hilbert(&whole);
        assert!(h.numerator.is_empty());
        assert_eq!(h.dimension, 0);
    }

    #[test]
    fn krull_dimension_and_depth() {
        let basis = pommaret(&staircase(), 3);
        let (dim, set) = krull_dimension(&basis);
        assert_eq!((dim, set), (1, vec![1]));
        // depth of the monomial ideal ⟨y², yz, z²⟩: minimal class 2
        let basis = pommaret(&[e(&[0, 2, 0]), e(&[0, 1, 1]), e(&[0, 0, 2])], 3);
        assert_eq!(depth(&basis), (2, vec![1, 2]));
        assert_eq!(krull_dimension(&basis).0, 1);
    }

    #[test]
    fn cohen_macaulay_report() {
        // ⟨y², yz, z²⟩: depth P/I = 1 = dim, CM with three class-1 cones
        let basis = pommaret(&[e(&[0, 2, 0]), e(&[0, 1, 1]), e(&[0, 0, 2])], 3);
        let report = cohen_macaulay(&basis);
        assert!(report.is_cohen_macaulay);
        let hironaka = report.hironaka.unwrap();
        assert!(hironaka.cones.iter().all(|c| c.dim() == 1));
        assert!(hironaka.verifies_against(&basis.les(), 8));
        assert_eq!(report.noether.dimension, 1);

        // ⟨y², xy⟩: depth P/I = 0 < dim = 1, not CM
        let basis = pommaret(&[e(&[0, 2]), e(&[1, 1])], 2);
        let report = cohen_macaulay(&basis);
        assert!(!report.is_cohen_macaulay);
        assert!(report.hironaka.is_none());
    }

    #[test]
    fn standard_pairs_of_staircase() {
        let dec = complementary_decomposition_janet(&staircase(), 3);
        let report = standard_pairs(&dec, &staircase());
        let vertices: Vec<Exponent> = report.pairs.iter().map(|p| p.vertex.clone()).collect();
        assert_eq!(report.arithmetic_degree, 5);
        assert!(report.pairs.iter().all(|p| p.mult.iter().copied().eq([1])));
        let mut sorted = vertices.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![e(&[0, 0, 0]), e(&[0, 0, 1]), e(&[0, 0, 2]), e(&[0, 1, 0]), e(&[0, 1, 1])]
        );
        // irredundant components come from the divisibility-maximal vertices
        // yz and z²: I = ⟨y², z²⟩ ∩ ⟨y, z³⟩
        let mut components: Vec<Vec<Exponent>> = report
            .irredundant
            .iter()
            .map(|&i| report.irreducible_components[i].clone())
            .collect();
        components.sort();
        assert_eq!(
            components,
            vec![
                vec![e(&[0, 1, 0]), e(&[0, 0, 3])],
                vec![e(&[0, 2, 0]), e(&[0, 0, 2])],
            ]
        );
        assert_eq!(report.associated_primes, vec![[2, 3].into_iter().collect()]);
        // the intersection of all components reproduces the ideal
        for mu in monomials_up_to_degree(3, 7) {
            let in_all = report
                .irreducible_components
                .iter()
                .all(|c| monomial_ideal_contains(c, &mu));
            assert_eq!(in_all, monomial_ideal_contains(&staircase(), &mu));
        }
    }

    #[test]
    fn standard_pairs_trivial_cases() {
        let dec = complementary_decomposition_janet(&[], 2);
        let report = standard_pairs(&dec, &[]);
        assert_eq!(report.arithmetic_degree, 1);
        assert_eq!(report.pairs[0].vertex, e(&[0, 0]));
        assert_eq!(report.pairs[0].mult, [1, 2].into_iter().collect());
        assert!(report.irreducible_components[0].is_empty());

        let whole = complementary_decomposition_janet(&[e(&[0, 0])], 2);
        let report = standard_pairs(&whole, &[e(&[0, 0])]);
        assert_eq!(report.arithmetic_degree, 0);
    }

    #[test]
    fn primary_decomposition_of_plane_curve_germ() {
        // ⟨y², xy⟩ in x < y: 𝔮₀ = ⟨x, y²⟩, 𝔮₁ = ⟨y⟩
        let gens = vec![e(&[0, 2]), e(&[1, 1])];
        let dec = primary_decomposition(&gens, 2).unwrap();
        assert_eq!(dec.depth_index, 0);
        assert_eq!(dec.dimension, 1);
        assert_eq!(dec.components.len(), 2);
        assert_eq!(dec.components[0].generators, vec![e(&[0, 2]), e(&[1, 0])]);
        assert_eq!(dec.components[0].associated_prime, vec![1, 2]);
        assert_eq!(dec.components[1].generators, vec![e(&[0, 1])]);
        assert_eq!(dec.components[1].associated_prime, vec![2]);
        // intersection check by enumeration
        for mu in monomials_up_to_degree(2, 7) {
            let in_all = dec
                .components
                .iter()
                .all(|c| monomial_ideal_contains(&c.generators, &mu));
            assert_eq!(in_all, monomial_ideal_contains(&gens, &mu));
        }
        // sequential chain ⟨xy, y²⟩ ⊊ ⟨y⟩ ⊊ P
        assert_eq!(dec.sequential_chain.len(), 3);
        assert_eq!(dec.sequential_chain[1], vec![e(&[0, 1])]);
        assert_eq!(dec.sequential_chain[2], vec![e(&[0, 0])]);
    }

    #[test]
    fn primary_decomposition_drops_redundant_components() {
        // ⟨z⟩ in x < y < z: colon stalls at ⟨z⟩ until x₃, single component
        let gens = vec![e(&[0, 0, 1])];
        let dec = primary_decomposition(&gens, 3).unwrap();
        assert_eq!(dec.dimension, 2);
        assert_eq!(dec.depth_index, 2);
        assert_eq!(dec.components.len(), 1);
        assert_eq!(dec.components[0].generators, vec![e(&[0, 0, 1])]);
        assert_eq!(dec.components[0].associated_prime, vec![3]);
    }

    #[test]
    fn primary_components_are_primary() {
        // every variable of a component's support occurs as a pure power
        let gens = vec![e(&[0, 2, 0]), e(&[1, 1, 0]), e(&[0, 0, 3])];
        let dec = primary_decomposition(&gens, 3).unwrap();
        for comp in &dec.components {
            for i in 1..=3usize {
                let occurs = comp.generators.iter().any(|g| g.0[i - 1] > 0);
                let pure = comp
                    .generators
                    .iter()
                    .any(|g| g.0[i - 1] > 0 && g.deg() == g.0[i - 1]);
                assert!(!occurs || pure, "component not primary at x_{}", i);
                assert_eq!(comp.associated_prime.contains(&i), pure);
            }
        }
    }

    #[test]
    fn rejects_non_quasi_stable_input() {
        assert_eq!(primary_decomposition(&[e(&[1, 1])], 2).unwrap_err(), 1);
        assert!(trung_invariants(&[e(&[1, 1])], 2, ORD).is_err());
    }

    #[test]
    fn saturation_of_monomial_ideal() {
        let basis = pommaret(&[e(&[0, 2]), e(&[1, 1])], 2);
        let (sat, satiety) = saturate(&basis);
        assert_eq!(sat.les(), vec![e(&[0, 1])]);
        assert_eq!(satiety, Some(2));
        // the saturation is saturated
        let (resat, s2) = saturate(&sat);
        assert_eq!(resat.les(), sat.les());
        assert_eq!(s2, None);
        // already saturated ideal: ⟨y², yz, z²⟩ has no class-1 generator
        let basis = pommaret(&[e(&[0, 2, 0]), e(&[0, 1, 1]), e(&[0, 0, 2])], 3);
        let (sat, satiety) = saturate(&basis);
        assert_eq!(satiety, None);
        assert_eq!(sat.les(), basis.les());
    }

    #[test]
    fn saturation_of_polynomial_ideal() {
        // ⟨x², xy, xz − y·x …⟩ — use a homogeneous ideal with a Pommaret basis:
        // I = ⟨y³, x y², x² y⟩ in x < y; Pommaret basis adds nothing beyond
        // the x-multiples and the class-1 elements divide down to ⟨y⟩-powers
        let gens: Vec<Poly> = vec![
            Poly::monomial(e(&[0, 3])),
            Poly::monomial(e(&[1, 2])),
            Poly::monomial(e(&[2, 1])),
        ];
        let basis = complete(&gens, Division::Pommaret, ORD, 2, 1, CompletionLimits::none())
            .expect_basis("quasi-stable");
        let (sat, satiety) = saturate(&basis);
        assert_eq!(sat.les(), vec![e(&[0, 1])]);
        assert_eq!(satiety, Some(3));
    }

    #[test]
    fn trung_invariants_fixture() {
        // ⟨y², yz², z³⟩: Pommaret basis {y², y²z, yz², z³}, c = (0, 3), reg 3
        let gens = vec![e(&[0, 2, 0]), e(&[0, 1, 2]), e(&[0, 0, 3])];
        let t = trung_invariants(&gens, 3, ORD).unwrap();
        assert_eq!(t.c, vec![0, 3]);
        assert_eq!(t.regularity, 3);
        assert_eq!(t.depth_index, 2);

        // ⟨y², xy⟩: c₀ = deg of class-1 part {xy} = 2; c₁ from ⟨y²⟩ ⊂ 𝕜[y]: 2
        let t = trung_invariants(&[e(&[0, 2]), e(&[1, 1])], 2, ORD).unwrap();
        assert_eq!(t.c, vec![2, 2]);
        assert_eq!(t.regularity, 2);
    }

    #[test]
    fn regularity_bounds_fixture() {
        let gens = vec![e(&[0, 2, 0]), e(&[0, 1, 2]), e(&[0, 0, 3])];
        let (lcm_bound, degree_bound) = regularity_bounds(&gens, 3);
        assert_eq!(lcm_bound, 4); // |y²z³| + 2 − 3
        assert_eq!(degree_bound, 5); // (3 − 2 + 1)(3 − 1) + 1
        let t = trung_invariants(&gens, 3, ORD).unwrap();
        assert!(i64::from(t.regularity) <= lcm_bound);
        assert!(i64::from(t.regularity) <= degree_bound);
    }

    #[test]
    fn series_reduction_is_exact() {
        // ⟨y⟩ in x < y: series 1/(1−λ) after cancelling (1−λ)
        let dec = complementary_decomposition_janet(&[e(&[0, 1])], 2);
        let h = hilbert(&dec);
        assert_eq!(h.numerator, vec![BigInt::from(1)]);
        assert_eq!(h.denominator_power, 1);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, BigInt::from(1));
    }
}
