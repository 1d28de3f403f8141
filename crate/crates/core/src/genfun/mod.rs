//! Exact univariate generating functions.
//!
//! Norm generating functions use the variable `x` (letter `k` ↦ `x^k`),
//! length generating functions the variable `t` (every letter ↦ `t`). All
//! multivariate objects are specialized at the seeds, so only univariate
//! rational functions ever appear.

mod formulas;
mod multichain;
mod poly;
mod ratfn;

pub use formulas::{
    m_len, m_len_general, m_len_general_as_printed, m_len_general_closed, m_norm, m_p_norm, z_len,
    z_len_general, z_len_general_as_printed, z_norm, z_p_norm,
};
pub use multichain::{
    abar_len, abar_norm, binomial, binomial_extended, closed_am_bm_len, closed_am_bm_norm, d_len,
    d_norm, f_iterate, f_iterates, verify_sum_identity, zeta_power_genfun,
};
pub use poly::{PolyDisplay, Polynomial};
pub use ratfn::{RatDisplay, RationalFn};

use alloc::vec::Vec;

use crate::words::{Grading, Word};

/// Letter multiplicities `(l_1, …, l_n)`; `counts()[k]` belongs to the
/// element with index `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeVector(Vec<usize>);

impl TypeVector {
    pub fn new(counts: Vec<usize>) -> Self {
        TypeVector(counts)
    }

    pub fn of(w: &Word, size: usize) -> Self {
        TypeVector(w.type_counts(size))
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `l_k` for the 1-based chain letter `k`, zero past the end.
    pub fn get(&self, k: usize) -> usize {
        k.checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `ℓ(u)`.
    pub fn length(&self) -> usize {
        self.0.iter().sum()
    }

    /// `|u|`, reading index `k` as the part `k + 1`.
    pub fn norm(&self) -> usize {
        self.0.iter().enumerate().map(|(k, l)| (k + 1) * l).sum()
    }

    /// The sorted word with this type, e.g. `(2,0,1)` ↦ `113`.
    pub fn representative(&self) -> Word {
        let mut parts = Vec::new();
        for (k, &l) in self.0.iter().enumerate() {
            parts.extend(core::iter::repeat_n(k + 1, l));
        }
        Word::from_parts(&parts)
    }
}

/// The variable conventionally used for a grading.
pub fn variable(grading: Grading) -> char {
    match grading {
        Grading::Norm => 'x',
        Grading::Length => 't',
    }
}
