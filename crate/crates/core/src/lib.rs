//! Zeta and Möbius functions of the generalized subword order `P*`.
//!
//! For a finite poset `P`, words over `P` are ordered by `u ≤ w` when some
//! subsequence of `w` dominates `u` letter by letter. Chains give the
//! composition order `[n]*`, antichains give the classical subword order.
//!
//! The crate computes these functions several independent ways and checks
//! them against each other:
//!
//! - [`incidence`]: brute-force interval enumeration and the Möbius recursion;
//! - [`words`]: embeddings, runs, normal embeddings and their defects;
//! - [`ncseries`]: truncated noncommutative power series and the rational
//!   builders `z(a)`, `m(a)` whose products give `Z(u)` and `M(u)`;
//! - [`automata`]: weighted automata over pair letters accepting `Z⊗`, `M⊗`;
//! - [`genfun`]: exact univariate rational functions and the commutative
//!   generating functions (norm and length), including multichain counts;
//! - [`chebyshev`]: Chebyshev polynomials and the `Λ` poset conjecture.
//!
//! Everything is exact; coefficients are arbitrary-precision integers.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod automata;
pub mod chebyshev;
mod error;
pub mod genfun;
pub mod incidence;
pub mod ncseries;
pub mod poset;
pub mod verify;
pub mod words;

pub use error::Error;
pub use poset::{Elem, Poset};
pub use words::{Embedding, Grading, Word};

pub type Result<T> = core::result::Result<T, Error>;
