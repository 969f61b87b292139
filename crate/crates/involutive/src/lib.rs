//! Exact involutive-basis computations over the rationals.
//!
//! The crate computes involutive (Pommaret, Janet, Thomas) bases of polynomial
//! ideals and submodules of free modules over ℚ[x₁,…,xₙ], and derives from them
//! structural invariants: complementary cone decompositions, Hilbert series,
//! dimension, depth, Cohen-Macaulayness, standard pairs, primary decompositions
//! of quasi-stable monomial ideals, saturation, syzygies, free resolutions,
//! Betti tables, projective dimension and Castelnuovo-Mumford regularity.
//!
//! # Variable convention
//!
//! **Variables listed first are smallest**: the input order `x, y, z` means
//! x₁ = x < x₂ = y < x₃ = z.  The class of a monomial is the index of its
//! *first* non-vanishing exponent, and the Pommaret division assigns the
//! multiplicative variables {x₁, …, x_cls}.  Keep this in mind when comparing
//! with sources that use the reversed labelling.

pub mod basis;
pub mod coord;
pub mod decomp;
pub mod division;
pub mod exponent;
pub mod io;
pub mod order;
pub mod poly;
pub mod syzygy;

pub use basis::{
    complete, find_delta_regular_coordinates, CompletionLimits, CompletionOutcome, DeltaWitness,
    InvolutiveBasis, RegularCoordinates,
};
pub use coord::CoordinateChange;
pub use division::Division;
pub use exponent::Exponent;
pub use io::{emit, parse_problem, run, ProblemSpec, Report, RunOptions};
pub use order::OrderKind;
pub use poly::{Poly, Term, Q};
pub use syzygy::{free_resolution, minimize, regularity, syzygy_basis, FreeResolution};
