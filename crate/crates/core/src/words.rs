//! Words over a poset, the generalized subword order, and embeddings.
//!
//! Positions are 0-based throughout; runs report inclusive index ranges.
//! An embedding entry of `None` is the bottom sentinel 0̂.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::poset::{Elem, Poset};
use crate::{Error, Result};

/// How a word is graded when truncating series and reading off generating
/// functions. `Norm` weighs the letter with index `k` as `k + 1`, which is
/// the part size for the chains `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    Length,
    Norm,
}

impl Grading {
    pub fn letter_weight(self, a: Elem) -> usize {
        match self {
            Grading::Length => 1,
            Grading::Norm => a.index() + 1,
        }
    }

    pub fn grade(self, w: &Word) -> usize {
        match self {
            Grading::Length => w.len(),
            Grading::Norm => w.norm(),
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word(Vec<Elem>);

impl Word {
    pub fn new(letters: Vec<Elem>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Word over a chain from part sizes, e.g. `[2, 1, 1]` is `211`.
    pub fn from_parts(parts: &[usize]) -> Self {
        Word(parts.iter().map(|&k| Elem::new(k - 1)).collect())
    }

    /// Parses comma-separated element names; the empty string (or `ε`) is
    /// the empty word.
    pub fn parse(text: &str, poset: &Poset) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        text.split(',')
            .map(|name| {
                let name = name.trim();
                poset
                    .elem(name)
                    .ok_or_else(|| Error::UnknownElement(name.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Elem] {
        &self.0
    }

    /// Sum of the parts, reading the letter with index `k` as `k + 1`.
    pub fn norm(&self) -> usize {
        self.0.iter().map(|a| a.index() + 1).sum()
    }

    /// Letter multiplicities `(l_1, …, l_n)` over a poset of `size` elements.
    pub fn type_counts(&self, size: usize) -> Vec<usize> {
        let mut counts = vec![0; size];
        for a in &self.0 {
            counts[a.index()] += 1;
        }
        counts
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> WordDisplay<'a> {
        WordDisplay { word: self, poset }
    }
}

impl From<Vec<Elem>> for Word {
    fn from(letters: Vec<Elem>) -> Self {
        Word(letters)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    poset: &'a Poset,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("ε");
        }
        for (i, &a) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.poset.name(a))?;
        }
        Ok(())
    }
}

/// An embedding of `u` into `target`: one entry per position of the target,
/// `None` for 0̂, with every entry below the target letter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Embedding {
    target: Word,
    entries: Vec<Option<Elem>>,
}

impl Embedding {
    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn entries(&self) -> &[Option<Elem>] {
        &self.entries
    }

    /// Positions holding a letter of `u`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| self.entries[i].is_some())
            .collect()
    }

    /// Restriction to the support, i.e. the embedded word.
    pub fn embedded_word(&self) -> Word {
        Word(self.entries.iter().flatten().copied().collect())
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> EmbeddingDisplay<'a> {
        EmbeddingDisplay {
            embedding: self,
            poset,
        }
    }
}

pub struct EmbeddingDisplay<'a> {
    embedding: &'a Embedding,
    poset: &'a Poset,
}

impl fmt::Display for EmbeddingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, entry) in self.embedding.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match entry {
                Some(a) => f.write_str(self.poset.name(*a))?,
                None => f.write_str("0̂")?,
            }
        }
        Ok(())
    }
}

/// Generalized subword order: does some subsequence of `w` dominate `u`?
pub fn leq_words(u: &Word, w: &Word, poset: &Poset) -> bool {
    rightmost_positions(u, w, poset).is_some()
}

/// Greedy right-to-left matching: each letter of `u`, last first, takes the
/// rightmost free position of `w` that dominates it.
fn rightmost_positions(u: &Word, w: &Word, poset: &Poset) -> Option<Vec<usize>> {
    let mut positions = vec![0; u.len()];
    let mut limit = w.len();
    for (j, &a) in u.letters().iter().enumerate().rev() {
        let i = (0..limit).rev().find(|&i| poset.leq(a, w.letters()[i]))?;
        positions[j] = i;
        limit = i;
    }
    Some(positions)
}

/// The embedding whose support dominates every other embedding's support
/// componentwise, when `u ≤ w`.
pub fn rightmost_embedding(u: &Word, w: &Word, poset: &Poset) -> Option<Embedding> {
    let positions = rightmost_positions(u, w, poset)?;
    let mut entries = vec![None; w.len()];
    for (j, &i) in positions.iter().enumerate() {
        entries[i] = Some(u.letters()[j]);
    }
    Some(Embedding {
        target: w.clone(),
        entries,
    })
}

/// Every embedding of `u` into `w`, in lexicographic order of supports.
pub fn all_embeddings(u: &Word, w: &Word, poset: &Poset) -> Vec<Embedding> {
    fn go(
        u: &[Elem],
        w: &[Elem],
        poset: &Poset,
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let j = chosen.len();
        if j == u.len() {
            out.push(chosen.clone());
            return;
        }
        for i in start..=w.len() - (u.len() - j) {
            if poset.leq(u[j], w[i]) {
                chosen.push(i);
                go(u, w, poset, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }

    if u.len() > w.len() {
        return Vec::new();
    }
    let mut supports = Vec::new();
    go(
        u.letters(),
        w.letters(),
        poset,
        0,
        &mut Vec::new(),
        &mut supports,
    );
    supports
        .into_iter()
        .map(|support| {
            let mut entries = vec![None; w.len()];
            for (j, i) in support.into_iter().enumerate() {
                entries[i] = Some(u.letters()[j]);
            }
            Embedding {
                target: w.clone(),
                entries,
            }
        })
        .collect()
}

/// A maximal block `start..=end` of equal letters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Run {
    pub letter: Elem,
    pub start: usize,
    pub end: usize,
}

pub fn runs(w: &Word) -> Vec<Run> {
    let mut out: Vec<Run> = Vec::new();
    for (i, &a) in w.letters().iter().enumerate() {
        match out.last_mut() {
            Some(run) if run.letter == a => run.end = i,
            _ => out.push(Run {
                letter: a,
                start: i,
                end: i,
            }),
        }
    }
    out
}

/// Positions that every normal embedding into `w` must put in its support:
/// `(r, t]` of each run of a minimal letter and `r` of every other run.
fn forced_support(w: &Word, poset: &Poset) -> Vec<bool> {
    let mut forced = vec![false; w.len()];
    for run in runs(w) {
        if poset.is_minimal(run.letter) {
            for slot in &mut forced[run.start + 1..=run.end] {
                *slot = true;
            }
        } else {
            forced[run.start] = true;
        }
    }
    forced
}

/// The normal embeddings of `u` into `w` over a rooted forest: every entry is
/// `w(i)`, `w(i)⁻` or 0̂, and the run conditions of `forced_support` hold.
pub fn normal_embeddings(u: &Word, w: &Word, poset: &Poset) -> Result<Vec<Embedding>> {
    struct Search<'a> {
        u: &'a [Elem],
        w: &'a [Elem],
        parents: &'a [Option<Elem>],
        forced: Vec<bool>,
        entries: Vec<Option<Elem>>,
        out: Vec<Vec<Option<Elem>>>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, j: usize) {
            if self.u.len() - j > self.w.len() - i {
                return;
            }
            if i == self.w.len() {
                self.out.push(self.entries.clone());
                return;
            }
            if !self.forced[i] {
                self.entries[i] = None;
                self.go(i + 1, j);
            }
            if j < self.u.len() {
                let wi = self.w[i];
                let next = self.u[j];
                if next == wi || self.parents[wi.index()] == Some(next) {
                    self.entries[i] = Some(next);
                    self.go(i + 1, j + 1);
                }
            }
            self.entries[i] = None;
        }
    }

    let parents = poset.parent_table()?;
    let mut search = Search {
        u: u.letters(),
        w: w.letters(),
        parents,
        forced: forced_support(w, poset),
        entries: vec![None; w.len()],
        out: Vec::new(),
    };
    search.go(0, 0);
    Ok(search
        .out
        .into_iter()
        .map(|entries| Embedding {
            target: w.clone(),
            entries,
        })
        .collect())
}

/// Number of positions, in the support or not, where the entry equals
/// `w(i)⁻`. A 0̂ entry under a minimal letter counts.
pub fn defect(embedding: &Embedding, poset: &Poset) -> Result<usize> {
    let parents = poset.parent_table()?;
    Ok(embedding
        .entries
        .iter()
        .zip(embedding.target.letters())
        .filter(|(entry, wi)| **entry == parents[wi.index()])
        .count())
}
