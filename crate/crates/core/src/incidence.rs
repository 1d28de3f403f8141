//! Incidence-algebra ground truth for `P*`: intervals, the Möbius recursion,
//! the normal-embedding formula, and multichain counts.
//!
//! Two oracle containers are provided. [`IntervalCache`] answers single
//! `μ(u, w)` queries by enumerating `[u, w]` and memoizing. [`BoundedWords`]
//! materializes every word up to a grade bound (a down-closed subset of `P*`,
//! so its intervals are the true ones) and runs the same recursion row by row,
//! which is what the exhaustive suites want.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poset::{Elem, Poset};
use crate::words::{defect, leq_words, normal_embeddings, Grading, Word};
use crate::Result;

/// A sort key compatible with the order: `v < v'` implies `key(v) < key(v')`.
fn extension_key(w: &Word, poset: &Poset) -> (usize, usize) {
    let heights = w.letters().iter().map(|&a| poset.height(a)).sum();
    (w.len(), heights)
}

fn sort_linear_extension(words: &mut [Word], poset: &Poset) {
    words.sort_by_cached_key(|w| (extension_key(w, poset), w.clone()));
}

/// All `v` with `u ≤ v ≤ w`, listed once each in a linear extension order.
pub fn interval(u: &Word, w: &Word, poset: &Poset) -> Vec<Word> {
    fn go(w: &[Elem], poset: &Poset, i: usize, prefix: &mut Vec<Elem>, out: &mut BTreeSet<Word>) {
        if i == w.len() {
            out.insert(Word::new(prefix.clone()));
            return;
        }
        go(w, poset, i + 1, prefix, out);
        for a in poset.elements().filter(|&a| poset.leq(a, w[i])) {
            prefix.push(a);
            go(w, poset, i + 1, prefix, out);
            prefix.pop();
        }
    }

    if !leq_words(u, w, poset) {
        return Vec::new();
    }
    let mut below = BTreeSet::new();
    go(w.letters(), poset, 0, &mut Vec::new(), &mut below);
    let mut members: Vec<Word> = below
        .into_iter()
        .filter(|v| leq_words(u, v, poset))
        .collect();
    sort_linear_extension(&mut members, poset);
    members
}

/// Which Möbius computation to trust.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MobiusMethod {
    /// Signed count of normal embeddings; rooted forests only.
    Normal,
    /// The defining recursion over the enumerated interval.
    Oracle,
}

/// Memoized interval and Möbius computations over one poset.
pub struct IntervalCache<'p> {
    poset: &'p Poset,
    mobius: BTreeMap<(Word, Word), BigInt>,
    intervals: BTreeMap<(Word, Word), Vec<Word>>,
}

impl<'p> IntervalCache<'p> {
    pub fn new(poset: &'p Poset) -> Self {
        IntervalCache {
            poset,
            mobius: BTreeMap::new(),
            intervals: BTreeMap::new(),
        }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn interval(&mut self, u: &Word, w: &Word) -> &[Word] {
        let poset = self.poset;
        self.intervals
            .entry((u.clone(), w.clone()))
            .or_insert_with(|| interval(u, w, poset))
    }

    /// `μ(u, w)` by `μ(u,u) = 1`, `μ(u,w) = -Σ_{u ≤ v < w} μ(u,v)`; zero
    /// when `u ≰ w`.
    pub fn mobius(&mut self, u: &Word, w: &Word) -> BigInt {
        if let Some(value) = self.mobius.get(&(u.clone(), w.clone())) {
            return value.clone();
        }
        let members = self.interval(u, w).to_vec();
        if members.is_empty() {
            return BigInt::zero();
        }
        let poset = self.poset;
        for (k, v) in members.iter().enumerate() {
            let key = (u.clone(), v.clone());
            if self.mobius.contains_key(&key) {
                continue;
            }
            let value = if v == u {
                BigInt::one()
            } else {
                let mut sum = BigInt::zero();
                for lower in &members[..k] {
                    if leq_words(lower, v, poset) {
                        sum += &self.mobius[&(u.clone(), lower.clone())];
                    }
                }
                -sum
            };
            self.mobius.insert(key, value);
        }
        self.mobius[&(u.clone(), w.clone())].clone()
    }

    /// `ζᵐ(u, w)`: multichains `u = v_0 ≤ v_1 ≤ ⋯ ≤ v_m = w`.
    pub fn zeta_power(&mut self, u: &Word, w: &Word, m: usize) -> BigInt {
        let poset = self.poset;
        let members = self.interval(u, w).to_vec();
        if members.is_empty() {
            return BigInt::zero();
        }
        if m == 0 {
            return if u == w {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        // counts[k] = chains of the current length from u ending at members[k].
        let mut counts: Vec<BigInt> = members
            .iter()
            .map(|v| {
                if v == u {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        for _ in 0..m {
            counts = (0..members.len())
                .map(|k| {
                    (0..=k)
                        .filter(|&j| leq_words(&members[j], &members[k], poset))
                        .map(|j| &counts[j])
                        .sum()
                })
                .collect();
        }
        counts.pop().expect("w is the last member of its interval")
    }

    pub fn mobius_by(&mut self, method: MobiusMethod, u: &Word, w: &Word) -> Result<BigInt> {
        match method {
            MobiusMethod::Oracle => Ok(self.mobius(u, w)),
            MobiusMethod::Normal => mobius_normal(u, w, self.poset),
        }
    }

    /// Checks `Σ_{u ≤ v ≤ w} ζ(u,v) μ(v,w) = δ(u,w)`.
    pub fn convolution_check(&mut self, u: &Word, w: &Word, method: MobiusMethod) -> Result<bool> {
        let members = self.interval(u, w).to_vec();
        let mut sum = BigInt::zero();
        for v in &members {
            sum += self.mobius_by(method, v, w)?;
        }
        let expected = if u == w {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        Ok(members.is_empty() || sum == expected)
    }
}

/// One-shot oracle Möbius value.
pub fn mobius_oracle(u: &Word, w: &Word, poset: &Poset) -> BigInt {
    IntervalCache::new(poset).mobius(u, w)
}

/// `Σ (-1)^{d(η)}` over the normal embeddings of `u` into `w`.
pub fn mobius_normal(u: &Word, w: &Word, poset: &Poset) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for eta in normal_embeddings(u, w, poset)? {
        if defect(&eta, poset)? % 2 == 0 {
            total += 1;
        } else {
            total -= 1;
        }
    }
    Ok(total)
}

pub fn zeta_power(u: &Word, w: &Word, m: usize, poset: &Poset) -> BigInt {
    IntervalCache::new(poset).zeta_power(u, w, m)
}

pub fn convolution_check(u: &Word, w: &Word, poset: &Poset, method: MobiusMethod) -> Result<bool> {
    IntervalCache::new(poset).convolution_check(u, w, method)
}

/// Every word over `poset` of grade at most `bound`, with its order relation.
pub struct BoundedWords<'p> {
    poset: &'p Poset,
    grading: Grading,
    bound: usize,
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    /// Strictly smaller members of each word, by index.
    below: Vec<Vec<usize>>,
}

impl<'p> BoundedWords<'p> {
    pub fn new(poset: &'p Poset, grading: Grading, bound: usize) -> Self {
        let mut words = vec![Word::empty()];
        let mut frontier = vec![(Word::empty(), 0usize)];
        while let Some((w, grade)) = frontier.pop() {
            for a in poset.elements() {
                let g = grade + grading.letter_weight(a);
                if g <= bound {
                    let mut letters = w.letters().to_vec();
                    letters.push(a);
                    let next = Word::new(letters);
                    words.push(next.clone());
                    frontier.push((next, g));
                }
            }
        }
        sort_linear_extension(&mut words, poset);
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let below = (0..words.len())
            .map(|k| {
                (0..k)
                    .filter(|&j| leq_words(&words[j], &words[k], poset))
                    .collect()
            })
            .collect();
        BoundedWords {
            poset,
            grading,
            bound,
            words,
            index,
            below,
        }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || (i < j && self.below[j].binary_search(&i).is_ok())
    }

    /// `ζ(u, ·)` over all members.
    pub fn zeta_row(&self, u: usize) -> Vec<BigInt> {
        (0..self.words.len())
            .map(|v| {
                if self.leq(u, v) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    }

    /// `μ(u, ·)` over all members, by the defining recursion.
    pub fn mobius_row(&self, u: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); self.words.len()];
        row[u] = BigInt::one();
        for v in u + 1..self.words.len() {
            if !self.leq(u, v) {
                continue;
            }
            let mut sum = BigInt::zero();
            for &lower in &self.below[v] {
                if lower >= u {
                    sum += &row[lower];
                }
            }
            row[v] = -sum;
        }
        row
    }

    /// `ζᵐ(u, ·)` over all members.
    pub fn zeta_power_row(&self, u: usize, m: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); self.words.len()];
        row[u] = BigInt::one();
        for _ in 0..m {
            row = (0..self.words.len())
                .map(|v| {
                    let mut sum = row[v].clone();
                    for &lower in &self.below[v] {
                        sum += &row[lower];
                    }
                    sum
                })
                .collect();
        }
        row
    }

    /// Collapses a row into coefficients by grade `0..=bound`.
    pub fn sum_by_grade(&self, row: &[BigInt]) -> Vec<BigInt> {
        let mut sums = vec![BigInt::zero(); self.bound + 1];
        for (w, value) in self.words.iter().zip(row) {
            sums[self.grading.grade(w)] += value;
        }
        sums
    }
}
