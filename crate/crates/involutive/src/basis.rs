//! Involutive normal forms, head autoreduction, completion to Janet or
//! Pommaret bases, δ-singularity detection, δ-regular coordinates and
//! quasi-stability of monomial ideals.

use crate::coord::CoordinateChange;
use crate::division::{
    assign_multiplicative, involutive_divisor, Division, MultAssignment,
};
use crate::exponent::Exponent;
use crate::order::OrderKind;
use crate::poly::{Poly, Q, Term};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An involutive basis: ordered generators with their multiplicative
/// variables for `division` under `order`.
#[derive(Clone, Debug)]
pub struct InvolutiveBasis {
    pub gens: Vec<Poly>,
    pub division: Division,
    pub order: OrderKind,
    pub assignment: MultAssignment,
    pub n: usize,
    pub rank: usize,
}

impl InvolutiveBasis {
    pub fn new(gens: Vec<Poly>, division: Division, order: OrderKind, n: usize, rank: usize) -> Self {
        let lts: Vec<Term> = gens.iter().map(|g| g.lt().unwrap().0.clone()).collect();
        let assignment = assign_multiplicative(division, &lts);
        InvolutiveBasis { gens, division, order, assignment, n, rank }
    }

    pub fn lts(&self) -> Vec<Term> {
        self.gens.iter().map(|g| g.lt().unwrap().0.clone()).collect()
    }

    pub fn les(&self) -> Vec<Exponent> {
        self.gens.iter().map(|g| g.le().unwrap().clone()).collect()
    }

    /// deg H: maximal leading-term degree of a generator.
    pub fn deg(&self) -> u32 {
        self.gens
            .iter()
            .map(|g| g.lt().unwrap().0.deg())
            .max()
            .unwrap_or(0)
    }

    /// Minimal class of a leading exponent (n for an empty basis).
    pub fn min_class(&self) -> usize {
        self.gens
            .iter()
            .map(|g| g.le().unwrap().cls())
            .min()
            .unwrap_or(self.n)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }
}

/// Involutive normal form of `f` with respect to `basis`, together with the
/// recorded standard representation: f = Σ rep[i]·gens[i] + remainder, with
/// each rep[i] supported on the multiplicative variables of generator i.
/// The identity is re-expanded and asserted on every call.
pub fn involutive_normal_form(f: &Poly, basis: &InvolutiveBasis) -> (Poly, Vec<Poly>) {
    let ord = basis.order;
    let lts = basis.lts();
    let mut rep: Vec<Poly> = vec![Poly::zero(); basis.gens.len()];
    let mut remainder = Poly::zero();
    let mut work = f.clone();
    while let Some((t, c)) = work.lt().map(|(t, c)| (t.clone(), c.clone())) {
        match involutive_divisor(&lts, &basis.assignment, &t, ord) {
            Some(i) => {
                let (lt_i, lc_i) = basis.gens[i].lt().unwrap();
                let sigma = t.exp.sub(&lt_i.exp);
                let coef = &c / lc_i;
                work = work.sub(&basis.gens[i].mul_scalar_term(&sigma, &coef), ord);
                rep[i] = rep[i].add(&Poly::term(Term::ring(sigma), coef), ord);
            }
            None => {
                // the leading term is irreducible: move it to the remainder
                remainder = remainder.add(&Poly::term(t.clone(), c.clone()), ord);
                work.terms.remove(0);
            }
        }
    }
    // re-expansion check: Σ rep·gens + remainder = f
    let mut check = remainder.clone();
    for (r, g) in rep.iter().zip(&basis.gens) {
        check = check.add(&r.mul_poly(g, ord), ord);
    }
    assert_eq!(check, *f, "normal form re-expansion failed");
    (remainder, rep)
}

/// Involutively head autoreduce a set: afterwards no generator's leading
/// term is involutively divisible by another generator's leading term.
/// Elements are returned monic; zero reductions are dropped.
pub fn involutive_head_autoreduce(set: &[Poly], kind: Division, ord: OrderKind) -> Vec<Poly> {
    let mut gens: Vec<Poly> = set
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    'outer: loop {
        let lts: Vec<Term> = gens.iter().map(|g| g.lt().unwrap().0.clone()).collect();
        let assignment = assign_multiplicative(kind, &lts);
        for i in 0..gens.len() {
            if let Some(j) = head_reducer(&lts, &assignment, i, ord) {
                let sigma = lts[i].exp.sub(&lts[j].exp);
                let reduced = gens[i].sub(&gens[j].mul_scalar_term(&sigma, &Q::one()), ord);
                if reduced.is_zero() {
                    gens.remove(i);
                } else {
                    gens[i] = reduced.monic();
                }
                continue 'outer;
            }
        }
        return gens;
    }
}

/// An involutive divisor of lts[i] among the other generators.
fn head_reducer(
    lts: &[Term],
    assignment: &MultAssignment,
    i: usize,
    _ord: OrderKind,
) -> Option<usize> {
    for (j, t) in lts.iter().enumerate() {
        if j == i || t.comp != lts[i].comp || !t.exp.divides(&lts[i].exp) {
            continue;
        }
        // equal leading terms: the earlier element reduces the later one
        if t.exp == lts[i].exp && j > i {
            continue;
        }
        let quot = lts[i].exp.sub(&t.exp);
        if quot.support().iter().all(|k| assignment.mult[j].contains(k)) {
            return Some(j);
        }
    }
    None
}

/// A witness that the coordinates are δ-singular: `variable` is Janet- but
/// not Pommaret-multiplicative for generator `generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaWitness {
    pub generator: usize,
    pub variable: usize,
}

/// Compare the Janet and Pommaret assignments of a Pommaret head
/// autoreduced set; a strictly larger Janet set exhibits δ-singularity.
pub fn detect_delta_singularity(set: &[Poly]) -> Option<DeltaWitness> {
    let lts: Vec<Term> = set.iter().map(|g| g.lt().unwrap().0.clone()).collect();
    let janet = assign_multiplicative(Division::Janet, &lts);
    let pommaret = assign_multiplicative(Division::Pommaret, &lts);
    for i in 0..lts.len() {
        if let Some(&v) = janet.mult[i].difference(&pommaret.mult[i]).next() {
            return Some(DeltaWitness { generator: i, variable: v });
        }
    }
    None
}

#[derive(Clone, Copy, Debug)]
pub struct CompletionLimits {
    pub degcap: Option<u32>,
    pub itercap: Option<usize>,
}

impl CompletionLimits {
    pub fn none() -> Self {
        CompletionLimits { degcap: None, itercap: None }
    }

    /// Default iteration cap: 10·(input degree) + 50.
    fn effective_itercap(&self, input_deg: u32) -> usize {
        self.itercap.unwrap_or(10 * input_deg as usize + 50)
    }
}

impl Default for CompletionLimits {
    fn default() -> Self {
        Self::none()
    }
}

#[derive(Clone, Debug)]
pub enum CompletionOutcome {
    Basis(InvolutiveBasis),
    /// Pommaret completion cannot terminate in these coordinates; the
    /// partial basis is the Pommaret head autoreduced Janet basis on which
    /// the witness was found.
    Diverged { witness: DeltaWitness, partial: InvolutiveBasis },
    LimitExceeded { partial: InvolutiveBasis },
}

impl CompletionOutcome {
    pub fn basis(self) -> Option<InvolutiveBasis> {
        match self {
            CompletionOutcome::Basis(b) => Some(b),
            _ => None,
        }
    }

    pub fn expect_basis(self, what: &str) -> InvolutiveBasis {
        match self {
            CompletionOutcome::Basis(b) => b,
            CompletionOutcome::Diverged { witness, .. } => {
                panic!("{what}: completion diverged with witness {witness:?}")
            }
            CompletionOutcome::LimitExceeded { .. } => {
                panic!("{what}: completion hit its cap")
            }
        }
    }
}

enum LoopStop {
    Done(Vec<Poly>),
    Capped(Vec<Poly>),
}

/// Generic completion loop: autoreduce (with `autoreduce_div`), then
/// repeatedly adjoin the involutive normal form of the ≺-smallest
/// non-multiplicative product (for `completion_div`) that does not reduce
/// to zero.
fn completion_loop(
    gens: &[Poly],
    completion_div: Division,
    autoreduce_div: Division,
    ord: OrderKind,
    n: usize,
    rank: usize,
    limits: CompletionLimits,
) -> LoopStop {
    let mut h = involutive_head_autoreduce(gens, autoreduce_div, ord);
    if h.is_empty() {
        return LoopStop::Done(h);
    }
    let input_deg = h.iter().map(|g| g.lt().unwrap().0.deg()).max().unwrap_or(0);
    let itercap = limits.effective_itercap(input_deg);
    let mut adjoined = 0usize;
    'outer: loop {
        let lts: Vec<Term> = h.iter().map(|g| g.lt().unwrap().0.clone()).collect();
        let assignment = assign_multiplicative(completion_div, &lts);
        // all non-multiplicative products, ≺-smallest leading term first
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for i in 0..h.len() {
            for j in assignment.nonmult(i, n) {
                candidates.push((i, j));
            }
        }
        candidates.sort_by(|&(i1, j1), &(i2, j2)| {
            let a = Term { exp: lts[i1].exp.mul_var(j1), comp: lts[i1].comp };
            let b = Term { exp: lts[i2].exp.mul_var(j2), comp: lts[i2].comp };
            ord.cmp_term(&a, &b)
        });
        let view = InvolutiveBasis {
            gens: h.clone(),
            division: completion_div,
            order: ord,
            assignment,
            n,
            rank,
        };
        for (i, j) in candidates {
            let prod = h[i].mul_var(j);
            let (nf, _) = involutive_normal_form(&prod, &view);
            if !nf.is_zero() {
                adjoined += 1;
                let over_deg = limits
                    .degcap
                    .map(|cap| nf.lt().unwrap().0.deg() > cap)
                    .unwrap_or(false);
                if over_deg || adjoined > itercap {
                    return LoopStop::Capped(h);
                }
                h.push(nf.monic());
                h = involutive_head_autoreduce(&h, autoreduce_div, ord);
                continue 'outer;
            }
        }
        return LoopStop::Done(h);
    }
}

/// Complete `gens` to a strong involutive basis for `kind` under `ord`.
///
/// Janet and Thomas completions always terminate (caps only guard runaway
/// input).  Pommaret completion over a class-respecting order runs the
/// terminating Janet completion with Pommaret head autoreductions and then
/// compares the Janet and Pommaret assignments: equality certifies a
/// Pommaret basis, a difference certifies δ-singular coordinates and is
/// reported as divergence with a witness.
pub fn complete(
    gens: &[Poly],
    kind: Division,
    ord: OrderKind,
    n: usize,
    rank: usize,
    limits: CompletionLimits,
) -> CompletionOutcome {
    let nonzero: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if kind == Division::Pommaret && ord.is_class_respecting() {
        let stop = completion_loop(&nonzero, Division::Janet, Division::Pommaret, ord, n, rank, limits);
        return match stop {
            LoopStop::Capped(h) => CompletionOutcome::LimitExceeded {
                partial: InvolutiveBasis::new(h, Division::Janet, ord, n, rank),
            },
            LoopStop::Done(h) => match detect_delta_singularity(&h) {
                Some(witness) => CompletionOutcome::Diverged {
                    witness,
                    partial: InvolutiveBasis::new(h, Division::Janet, ord, n, rank),
                },
                None => CompletionOutcome::Basis(InvolutiveBasis::new(
                    h,
                    Division::Pommaret,
                    ord,
                    n,
                    rank,
                )),
            },
        };
    }
    let stop = completion_loop(&nonzero, kind, kind, ord, n, rank, limits);
    match stop {
        LoopStop::Done(h) => {
            CompletionOutcome::Basis(InvolutiveBasis::new(h, kind, ord, n, rank))
        }
        LoopStop::Capped(h) => CompletionOutcome::LimitExceeded {
            partial: InvolutiveBasis::new(h, kind, ord, n, rank),
        },
    }
}

/// Janet completion with Pommaret head autoreductions.  The flag is true
/// iff the resulting Janet basis is simultaneously a Pommaret basis (the
/// coordinates are then δ-regular for the leading ideal).
pub fn janet_pommaret_completion(
    gens: &[Poly],
    ord: OrderKind,
    n: usize,
    rank: usize,
    limits: CompletionLimits,
) -> Option<(InvolutiveBasis, bool)> {
    let nonzero: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    match completion_loop(&nonzero, Division::Janet, Division::Pommaret, ord, n, rank, limits) {
        LoopStop::Capped(_) => None,
        LoopStop::Done(h) => {
            let flag = detect_delta_singularity(&h).is_none();
            Some((InvolutiveBasis::new(h, Division::Janet, ord, n, rank), flag))
        }
    }
}

/// Outcome of the δ-regular coordinate search.
pub struct RegularCoordinates {
    pub change: CoordinateChange,
    pub basis: InvolutiveBasis,
    pub seed: u64,
    pub rounds: usize,
}

/// Search for coordinates in which the ideal has a finite Pommaret basis.
///
/// Witness-driven elementary transformations x_k ← x_k + a·x_ℓ are tried
/// first with parameters 1, −1, 2, −2, …; after `5n²` elementary rounds the
/// search escalates to dense unipotent lower-triangular changes with small
/// pseudo-random entries from the seeded generator.
pub fn find_delta_regular_coordinates(
    gens: &[Poly],
    ord: OrderKind,
    n: usize,
    rank: usize,
    limits: CompletionLimits,
    seed: u64,
) -> Result<RegularCoordinates, InvolutiveBasis> {
    assert!(
        ord.is_class_respecting(),
        "δ-regularity search requires a class respecting order"
    );
    let mut change = CoordinateChange::identity(n);
    let mut current: Vec<Poly> = gens.to_vec();
    let elementary_rounds = 5 * n * n;
    let mut param_idx = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..(elementary_rounds + 20) {
        match complete(&current, Division::Pommaret, ord, n, rank, limits) {
            CompletionOutcome::Basis(b) => {
                return Ok(RegularCoordinates { change, basis: b, seed, rounds: round });
            }
            CompletionOutcome::LimitExceeded { partial } => return Err(partial),
            CompletionOutcome::Diverged { witness, partial } => {
                let next = if round < elementary_rounds {
                    // elementary transformation driven by the witness:
                    // x_k = x̃_k + a·x̃_ℓ with k = cls of the witness
                    // generator, ℓ the witness variable
                    let k = partial.gens[witness.generator].le().unwrap().cls();
                    let l = witness.variable;
                    let a = parameter(param_idx);
                    param_idx += 1;
                    CoordinateChange::elementary(n, k, l, a)
                } else {
                    // escalate: dense unipotent upper-triangular change
                    // mixing each variable with all larger ones
                    let mut m = (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    if i == j {
                                        Q::one()
                                    } else if j > i {
                                        Q::from_integer(rng.gen_range(-3i64..=3).into())
                                    } else {
                                        Q::from_integer(0.into())
                                    }
                                })
                                .collect::<Vec<Q>>()
                        })
                        .collect::<Vec<_>>();
                    for (i, row) in m.iter_mut().enumerate() {
                        row[i] = Q::one();
                    }
                    CoordinateChange::new(m).expect("unipotent change is invertible")
                };
                current = gens
                    .iter()
                    .map(|g| change.then(&next).apply(g, ord))
                    .collect();
                change = change.then(&next);
            }
        }
    }
    // exceeded every retry budget: report the last partial basis
    match complete(&current, Division::Pommaret, ord, n, rank, limits) {
        CompletionOutcome::Basis(b) => Ok(RegularCoordinates {
            change,
            basis: b,
            seed,
            rounds: elementary_rounds + 20,
        }),
        CompletionOutcome::Diverged { partial, .. }
        | CompletionOutcome::LimitExceeded { partial } => Err(partial),
    }
}

/// Deterministic parameter sequence 1, −1, 2, −2, …
fn parameter(idx: usize) -> Q {
    let k = (idx / 2 + 1) as i64;
    Q::from_integer(if idx % 2 == 0 { k } else { -k }.into())
}

// ---------------------------------------------------------------------------
// Monomial ideals: minimal bases, colon ideals, quasi-stability
// ---------------------------------------------------------------------------

/// Minimal basis of the monomial ideal generated by `exps`.
pub fn minimal_monomial_basis(exps: &[Exponent]) -> Vec<Exponent> {
    let mut sorted: Vec<Exponent> = exps.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<Exponent> = Vec::new();
    sorted.sort_by_key(|e| e.deg());
    for e in sorted {
        if !out.iter().any(|m| m.divides(&e)) {
            out.push(e);
        }
    }
    out.sort();
    out
}

/// Minimal basis of I : x_k^∞ (substitute x_k = 1 and minimalize).
pub fn colon_variable_saturation(min_basis: &[Exponent], k: usize) -> Vec<Exponent> {
    let erased: Vec<Exponent> = min_basis.iter().map(|e| e.erase_var(k)).collect();
    minimal_monomial_basis(&erased)
}

/// Monomial membership x^μ ∈ ⟨exps⟩.
pub fn monomial_ideal_contains(gens: &[Exponent], mu: &Exponent) -> bool {
    gens.iter().any(|g| g.divides(mu))
}

/// Inclusion of monomial ideals by comparing minimal bases.
pub fn monomial_ideal_subset(a: &[Exponent], b: &[Exponent]) -> bool {
    a.iter().all(|g| monomial_ideal_contains(b, g))
}

/// Quasi-stability via the ascending colon chain
/// I : x₁^∞ ⊆ I : x₂^∞ ⊆ … ⊆ I : xₙ^∞; on failure the first offending k
/// is returned.
pub fn is_quasi_stable(exps: &[Exponent], n: usize) -> Result<(), usize> {
    let min = minimal_monomial_basis(exps);
    let colons: Vec<Vec<Exponent>> = (1..=n)
        .map(|k| colon_variable_saturation(&min, k))
        .collect();
    for k in 1..n {
        if !monomial_ideal_subset(&colons[k - 1], &colons[k]) {
            return Err(k);
        }
    }
    Ok(())
}

/// Weak Pommaret basis of I : x_k^∞ from a monomial Pommaret basis of I:
/// keep the generators of class > k, substitute x_k = 1 into those of class
/// exactly k, and head autoreduce to a strong basis.
pub fn colon_basis(basis: &InvolutiveBasis, k: usize) -> InvolutiveBasis {
    assert!(basis.is_monomial(), "colon_basis expects a monomial basis");
    assert!(k >= 1 && k <= basis.n, "variable index out of range");
    let mut gens: Vec<Poly> = Vec::new();
    for g in &basis.gens {
        let le = g.le().unwrap();
        let cls = le.cls();
        if cls > k {
            gens.push(g.clone());
        } else if cls == k {
            gens.push(Poly::monomial(le.erase_var(k)));
        }
    }
    if gens.is_empty() {
        // no generators of class ≥ k: the colon ideal equals I
        gens = basis.gens.clone();
    }
    let strong = involutive_head_autoreduce(&gens, Division::Pommaret, basis.order);
    InvolutiveBasis::new(strong, Division::Pommaret, basis.order, basis.n, basis.rank)
}
