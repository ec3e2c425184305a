//! Subspace assignments for bipartite graphs at desk scale.
//!
//! A bipartite graph `G(U, V, E)` is *realized* by a map `phi` from vertices to
//! linear subspaces of `F_q^d` when `(u, v)` is an edge exactly if
//! `phi(u) ∩ phi(v) ≠ {0}`. The smallest such `d` is the projective dimension
//! of `G`. This crate provides the exact machinery around that notion:
//!
//! * [`gf`] — linear algebra over small prime fields, subspace enumeration,
//!   Gaussian binomial coefficients, and exact rational rank.
//! * [`functions`] — Boolean functions with a fixed input partition, their
//!   bipartite realizations, and the subspace-intersection families.
//! * [`bp`] — deterministic branching programs, builders, and the transforms
//!   that turn a program into a subspace assignment.
//! * [`assign`] — assignment types at all restriction levels and their
//!   verifiers, compositions and conversions.
//! * [`solve`] — exact exponential-time solvers for minimum dimension and
//!   minimum biclique cover/partition on small instances.
//! * [`bounds`] — rank- and counting-based lower-bound calculators.
//! * [`reconstruct`] — evaluating a function from a bitwise-decomposable
//!   assignment by cycle detection.
//!
//! Everything is exact (no floating point in any linear algebra path) and all
//! values are immutable once built, so they can be freely shared across
//! threads.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod assign;
pub mod bounds;
pub mod bp;
pub mod functions;
pub mod gf;
pub mod reconstruct;
pub mod solve;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Which half of the input partition a variable belongs to.
///
/// `Left` variables are conventionally written `x_1..x_n` and index rows of
/// the bipartite realization; `Right` variables are `y_1..y_n` and index
/// columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Extract bit `i` (0-based, `x_1` first) of an `n`-bit input word.
///
/// Inputs are packed so that the binary rendering of the word reads
/// `x_1 x_2 … x_n` left to right.
#[inline]
pub fn input_bit(word: u32, i: usize, n: usize) -> bool {
    debug_assert!(i < n);
    (word >> (n - 1 - i)) & 1 == 1
}

/// Set bit `i` (0-based, `x_1` first) of an `n`-bit input word.
#[inline]
pub fn with_input_bit(word: u32, i: usize, n: usize, value: bool) -> u32 {
    let mask = 1u32 << (n - 1 - i);
    if value {
        word | mask
    } else {
        word & !mask
    }
}
