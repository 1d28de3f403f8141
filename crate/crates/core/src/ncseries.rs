//! Truncated formal power series in noncommuting letters.
//!
//! A series keeps every coefficient of grade at most its bound; products drop
//! anything heavier. Since every letter has positive grade, truncation
//! commutes with the algebra operations and with `star`, so all retained
//! coefficients are exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poset::{Elem, Poset};
use crate::words::{Grading, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSeries {
    coeffs: BTreeMap<Word, BigInt>,
    grading: Grading,
    bound: usize,
}

impl NCSeries {
    pub fn zero(grading: Grading, bound: usize) -> Self {
        NCSeries {
            coeffs: BTreeMap::new(),
            grading,
            bound,
        }
    }

    /// The empty word ε, the multiplicative identity.
    pub fn one(grading: Grading, bound: usize) -> Self {
        Self::monomial(Word::empty(), BigInt::one(), grading, bound)
    }

    pub fn monomial(w: Word, coeff: BigInt, grading: Grading, bound: usize) -> Self {
        let mut s = Self::zero(grading, bound);
        s.add_term(w, coeff);
        s
    }

    pub fn letter(a: Elem, grading: Grading, bound: usize) -> Self {
        Self::monomial(Word::new(alloc::vec![a]), BigInt::one(), grading, bound)
    }

    /// The sum of the given letters; an empty set gives the zero series.
    pub fn letter_sum(letters: &[Elem], grading: Grading, bound: usize) -> Self {
        let mut s = Self::zero(grading, bound);
        for &a in letters {
            s.add_term(Word::new(alloc::vec![a]), BigInt::one());
        }
        s
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms ordered by grade, then lexicographically.
    pub fn terms(&self) -> Vec<(&Word, &BigInt)> {
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|(w, _)| self.grading.grade(w));
        terms
    }

    fn add_term(&mut self, w: Word, coeff: BigInt) {
        if coeff.is_zero() || self.grading.grade(&w) > self.bound {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.coeffs.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &NCSeries) -> Result<()> {
        if self.grading == other.grading && self.bound == other.bound {
            Ok(())
        } else {
            Err(Error::SeriesMismatch)
        }
    }

    pub fn add(&self, other: &NCSeries) -> Result<NCSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCSeries) -> Result<NCSeries> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> NCSeries {
        let mut out = Self::zero(self.grading, self.bound);
        for (w, x) in &self.coeffs {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &NCSeries) -> Result<NCSeries> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.grading, self.bound);
        let right: Vec<_> = other
            .coeffs
            .iter()
            .map(|(w, c)| (w, c, self.grading.grade(w)))
            .collect();
        for (u, a) in &self.coeffs {
            let gu = self.grading.grade(u);
            for &(w, b, gw) in &right {
                if gu + gw <= self.bound {
                    out.add_term(u.concat(w), a * b);
                }
            }
        }
        Ok(out)
    }

    /// `f* = ε + f + f² + ⋯`, by iterating `acc ← ε + f·acc` to a fixed point.
    pub fn star(&self) -> Result<NCSeries> {
        if !self.coefficient(&Word::empty()).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let one = Self::one(self.grading, self.bound);
        let mut acc = one.clone();
        loop {
            let next = one.add(&self.mul(&acc)?)?;
            if next == acc {
                return Ok(acc);
            }
            acc = next;
        }
    }

    /// `f⁺ = f + f² + ⋯ = f* − ε`.
    pub fn plus(&self) -> Result<NCSeries> {
        self.star()?.sub(&Self::one(self.grading, self.bound))
    }

    /// Applies the continuous algebra map sending each letter `a` to
    /// `images[a.index()]`. Sound under truncation when every image has no
    /// terms of grade below its letter's grade.
    pub fn substitute(&self, images: &[NCSeries]) -> Result<NCSeries> {
        for image in images {
            self.check_compatible(image)?;
        }
        let mut out = Self::zero(self.grading, self.bound);
        for (w, c) in &self.coeffs {
            let mut product = Self::one(self.grading, self.bound).scale(c);
            for a in w.letters() {
                product = product.mul(&images[a.index()])?;
            }
            out = out.add(&product)?;
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> SeriesDisplay<'a> {
        SeriesDisplay {
            series: self,
            poset,
        }
    }
}

/// `coef*word` lines, ordered by grade then lexicographically.
pub struct SeriesDisplay<'a> {
    series: &'a NCSeries,
    poset: &'a Poset,
}

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.series.terms() {
            writeln!(f, "{}*{}", c, w.display(self.poset))?;
        }
        Ok(())
    }
}

/// The whole alphabet `P` as a series.
pub fn alphabet(poset: &Poset, grading: Grading, bound: usize) -> NCSeries {
    let letters: Vec<Elem> = poset.elements().collect();
    NCSeries::letter_sum(&letters, grading, bound)
}

/// `z(a) = I_a · J_a*`.
pub fn z_builder(a: Elem, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    let upper = NCSeries::letter_sum(&poset.upper_ideal(a), grading, bound);
    let rest = NCSeries::letter_sum(&poset.upper_ideal_complement(a), grading, bound);
    upper.mul(&rest.star()?)
}

/// `G_P = (ε + Σ_{o ∈ O_P} o⁺)⁻¹`: the signed sum `Σ (−1)^{ℓ(v)} v` over
/// words `v` in the minimal elements with no two equal adjacent letters.
/// With a single minimal element `o` it is `ε − o`.
pub fn gap_series(poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    let mut roots_plus = NCSeries::zero(grading, bound);
    for &o in poset.minimal_elements() {
        roots_plus = roots_plus.add(&NCSeries::letter(o, grading, bound).plus()?)?;
    }
    roots_plus.scale(&BigInt::from(-1)).star()
}

fn cover_plus(a: Elem, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    let mut acc = NCSeries::zero(grading, bound);
    for &c in poset.covers_of(a) {
        acc = acc.add(&NCSeries::letter(c, grading, bound).plus()?)?;
    }
    Ok(acc)
}

/// `m(a) = (a⁺ − Σ_{c ∈ C_a} c⁺) G_P`. Rooted forests only.
pub fn m_builder(a: Elem, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    if !poset.is_rooted_forest() {
        return Err(Error::NotRootedForest);
    }
    NCSeries::letter(a, grading, bound)
        .plus()?
        .sub(&cover_plus(a, poset, grading, bound)?)?
        .mul(&gap_series(poset, grading, bound)?)
}

/// `m(a) = a − (Σ_{c ∈ C_a} c⁺)(ε − O_P)` for minimal `a`, and
/// `(a⁺ − Σ_{c ∈ C_a} c⁺)(ε − O_P)` otherwise. Equal to [`m_builder`]
/// exactly when `P` has one minimal element.
pub fn m_builder_one_root(
    a: Elem,
    poset: &Poset,
    grading: Grading,
    bound: usize,
) -> Result<NCSeries> {
    if !poset.is_rooted_forest() {
        return Err(Error::NotRootedForest);
    }
    let tail = roots_tail(poset, grading, bound)?;
    let covers = cover_plus(a, poset, grading, bound)?;
    let letter = NCSeries::letter(a, grading, bound);
    if poset.is_minimal(a) {
        letter.sub(&covers.mul(&tail)?)
    } else {
        letter.plus()?.sub(&covers)?.mul(&tail)
    }
}

/// `ε − O_P`.
fn roots_tail(poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    NCSeries::one(grading, bound).sub(&NCSeries::letter_sum(
        poset.minimal_elements(),
        grading,
        bound,
    ))
}

fn product_over(
    u: &Word,
    grading: Grading,
    bound: usize,
    mut factor: impl FnMut(Elem) -> Result<NCSeries>,
) -> Result<NCSeries> {
    let mut acc = NCSeries::one(grading, bound);
    for &a in u.letters() {
        acc = acc.mul(&factor(a)?)?;
    }
    Ok(acc)
}

/// `z(u) = z(u(1)) ⋯ z(u(l))`.
pub fn z_word(u: &Word, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    product_over(u, grading, bound, |a| z_builder(a, poset, grading, bound))
}

/// `m(u) = m(u(1)) ⋯ m(u(l))`.
pub fn m_word(u: &Word, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    product_over(u, grading, bound, |a| m_builder(a, poset, grading, bound))
}

/// `Z(u) = P* z(u)`, whose coefficients are `ζ(u, ·)`.
pub fn series_z(u: &Word, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    alphabet(poset, grading, bound)
        .star()?
        .mul(&z_word(u, poset, grading, bound)?)
}

/// `M(u) = G_P m(u)`, whose coefficients are `μ(u, ·)`.
pub fn series_m(u: &Word, poset: &Poset, grading: Grading, bound: usize) -> Result<NCSeries> {
    gap_series(poset, grading, bound)?.mul(&m_word(u, poset, grading, bound)?)
}

/// `(ε − O_P) m(u)` built from [`m_builder_one_root`]. Equals `μ(u, ·)` on
/// rooted trees and fails once there are two minimal elements.
pub fn series_m_one_root(
    u: &Word,
    poset: &Poset,
    grading: Grading,
    bound: usize,
) -> Result<NCSeries> {
    let m = product_over(u, grading, bound, |a| {
        m_builder_one_root(a, poset, grading, bound)
    })?;
    roots_tail(poset, grading, bound)?.mul(&m)
}

/// `(ε − O_P) z(u)`: the generalized `M(u)` as it is sometimes printed.
/// Kept only so reports can show that it disagrees with `μ`.
pub fn series_m_misprint(
    u: &Word,
    poset: &Poset,
    grading: Grading,
    bound: usize,
) -> Result<NCSeries> {
    roots_tail(poset, grading, bound)?.mul(&z_word(u, poset, grading, bound)?)
}

/// Outcome of checking one series identity up to the truncation bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: alloc::string::String,
    /// First word (by grade, then lexicographically) whose coefficients
    /// differ, with `(expected, actual)`.
    pub first_offender: Option<(Word, BigInt, BigInt)>,
}

impl IdentityCheck {
    pub fn compare(name: alloc::string::String, expected: &NCSeries, actual: &NCSeries) -> Self {
        let diff = actual
            .sub(expected)
            .expect("identity sides share grading and bound");
        let first_offender = diff
            .terms()
            .first()
            .map(|(w, _)| ((*w).clone(), expected.coefficient(w), actual.coefficient(w)));
        IdentityCheck {
            name,
            first_offender,
        }
    }

    pub fn passed(&self) -> bool {
        self.first_offender.is_none()
    }
}

/// Checks `(ε − 1) m(ℙ)* = ε`, `m(ℙ) = 1` and `m(z(k)) = k` for every `k`
/// in the chain `[n]`.
///
/// `ℙ` is replaced by `[n]`; under norm grading with `n ≥ bound` every letter
/// above `n` is heavier than the bound, so the truncated identities are
/// exactly those of `ℙ*`.
pub fn verify_telescoping(n: usize, grading: Grading, bound: usize) -> Result<Vec<IdentityCheck>> {
    let poset = crate::poset::make_chain(n)?;
    let one = NCSeries::one(grading, bound);
    let first = NCSeries::letter(Elem::new(0), grading, bound);
    let images = poset
        .elements()
        .map(|a| m_builder(a, &poset, grading, bound))
        .collect::<Result<Vec<_>>>()?;

    let mut m_of_p = NCSeries::zero(grading, bound);
    for image in &images {
        m_of_p = m_of_p.add(image)?;
    }
    let mut checks = Vec::new();
    checks.push(IdentityCheck::compare("m(P) = 1".into(), &first, &m_of_p));
    let lhs = one.sub(&first)?.mul(&m_of_p.star()?)?;
    checks.push(IdentityCheck::compare("(ε-1) m(P)* = ε".into(), &one, &lhs));
    for k in poset.elements() {
        let image = z_builder(k, &poset, grading, bound)?.substitute(&images)?;
        let expected = NCSeries::letter(k, grading, bound);
        checks.push(IdentityCheck::compare(
            format!("m(z({0})) = {0}", k.index() + 1),
            &expected,
            &image,
        ));
    }
    Ok(checks)
}
