//! Finite posets given by a cover relation.
//!
//! Elements are dense indices `0..len()` with a display-name table. The order
//! relation is closed once at construction into a boolean matrix, and the
//! true Hasse diagram is recovered from it, so redundant input pairs such as
//! `(1,3)` next to `(1,2),(2,3)` are harmless.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A poset element, an index into its poset's element table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u16);

impl Elem {
    pub fn new(index: usize) -> Self {
        Elem(u16::try_from(index).expect("poset element index exceeds u16"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    lookup: BTreeMap<String, Elem>,
    leq: Vec<bool>,
    upper_covers: Vec<Vec<Elem>>,
    lower_covers: Vec<Vec<Elem>>,
    minimal: Vec<Elem>,
    height: Vec<usize>,
    /// `Some` iff the poset is a rooted forest; `None` entries stand for 0̂.
    parents: Option<Vec<Option<Elem>>>,
}

impl Poset {
    /// Builds a poset from element names and `(lower, upper)` relation pairs.
    pub fn from_relations(names: Vec<String>, relations: &[(Elem, Elem)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut lookup = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if lookup.insert(name.clone(), Elem::new(i)).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        for &(a, b) in relations {
            if a.index() >= n || b.index() >= n {
                return Err(Error::InvalidArgument(format!(
                    "relation ({a:?}, {b:?}) outside a poset of {n} elements"
                )));
            }
        }

        // Kahn's algorithm: every element must be removable for acyclicity.
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in relations {
            succ[a.index()].push(b.index());
            indegree[b.index()] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = ready.pop() {
            order.push(i);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
        if order.len() != n {
            return Err(Error::CyclicCovers);
        }

        // Closure in reverse topological order: up(i) = {i} ∪ up(succ(i)).
        let mut leq = vec![false; n * n];
        for &i in order.iter().rev() {
            leq[i * n + i] = true;
            for &j in &succ[i] {
                for k in 0..n {
                    if leq[j * n + k] {
                        leq[i * n + k] = true;
                    }
                }
            }
        }

        let lt = |a: usize, b: usize| a != b && leq[a * n + b];
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            for c in 0..n {
                if lt(a, c) && !(0..n).any(|b| lt(a, b) && lt(b, c)) {
                    upper_covers[a].push(Elem::new(c));
                    lower_covers[c].push(Elem::new(a));
                }
            }
        }
        let minimal: Vec<Elem> = (0..n)
            .filter(|&a| lower_covers[a].is_empty())
            .map(Elem::new)
            .collect();

        let mut height = vec![0usize; n];
        for &i in &order {
            height[i] = lower_covers[i]
                .iter()
                .map(|b| height[b.index()] + 1)
                .max()
                .unwrap_or(0);
        }

        let parents = lower_covers
            .iter()
            .all(|lc| lc.len() <= 1)
            .then(|| lower_covers.iter().map(|lc| lc.first().copied()).collect());

        Ok(Poset {
            names,
            lookup,
            leq,
            upper_covers,
            lower_covers,
            minimal,
            height,
            parents,
        })
    }

    /// Builds a poset from element names and cover pairs given by name.
    pub fn from_named_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let index = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .map(Elem::new)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let relations = covers
            .iter()
            .map(|(a, b)| Ok((index(a.as_ref())?, index(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::from_relations(names, &relations)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.len()).map(Elem::new)
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a.index()]
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.lookup.get(name).copied()
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.len() + b.index()]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    /// The upper order ideal `I_a = {c : c ≥ a}`.
    pub fn upper_ideal(&self, a: Elem) -> Vec<Elem> {
        self.elements().filter(|&c| self.leq(a, c)).collect()
    }

    /// `J_a`, the complement of the upper ideal of `a`.
    pub fn upper_ideal_complement(&self, a: Elem) -> Vec<Elem> {
        self.elements().filter(|&c| !self.leq(a, c)).collect()
    }

    /// `C_a`, the elements covering `a`.
    pub fn covers_of(&self, a: Elem) -> &[Elem] {
        &self.upper_covers[a.index()]
    }

    /// The elements covered by `a`.
    pub fn lower_covers(&self, a: Elem) -> &[Elem] {
        &self.lower_covers[a.index()]
    }

    /// The Hasse diagram as `(lower, upper)` pairs.
    pub fn cover_pairs(&self) -> Vec<(Elem, Elem)> {
        self.elements()
            .flat_map(|a| self.covers_of(a).iter().map(move |&c| (a, c)))
            .collect()
    }

    /// `O_P`, the minimal elements.
    pub fn minimal_elements(&self) -> &[Elem] {
        &self.minimal
    }

    pub fn is_minimal(&self, a: Elem) -> bool {
        self.lower_covers[a.index()].is_empty()
    }

    /// Length of the longest chain ending at `a`; minimal elements have height 0.
    pub fn height(&self, a: Elem) -> usize {
        self.height[a.index()]
    }

    pub fn is_rooted_forest(&self) -> bool {
        self.parents.is_some()
    }

    /// True when the elements, in index order, form the chain `0 < 1 < ⋯`.
    pub fn is_index_chain(&self) -> bool {
        self.elements().all(|a| self.height(a) == a.index()) && self.minimal.len() == 1
    }

    /// `a⁻`: the unique lower cover of `a`, or `None` (standing for 0̂) when
    /// `a` is minimal. Only defined on rooted forests.
    pub fn parent(&self, a: Elem) -> Result<Option<Elem>> {
        self.parents
            .as_ref()
            .map(|p| p[a.index()])
            .ok_or(Error::NotRootedForest)
    }

    pub(crate) fn parent_table(&self) -> Result<&[Option<Elem>]> {
        self.parents.as_deref().ok_or(Error::NotRootedForest)
    }
}

/// The chain `[n] = {1 < 2 < ⋯ < n}`; the element named `k` has index `k-1`.
pub fn make_chain(n: usize) -> Result<Poset> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let names = (1..=n).map(|k| k.to_string()).collect();
    let covers: Vec<_> = (1..n).map(|k| (Elem::new(k - 1), Elem::new(k))).collect();
    Poset::from_relations(names, &covers)
}

/// An antichain of `q` letters named `a, b, c, …` (or `x1, x2, …` past 26).
pub fn make_antichain(q: usize) -> Result<Poset> {
    if q == 0 {
        return Err(Error::EmptyPoset);
    }
    let names = if q <= 26 {
        (0..q)
            .map(|i| char::from(b'a' + i as u8).to_string())
            .collect()
    } else {
        (1..=q).map(|i| format!("x{i}")).collect()
    };
    Poset::from_relations(names, &[])
}

/// The poset `Λ`: `a < c` and `b < c`.
pub fn make_lambda() -> Poset {
    Poset::from_named_covers(&["a", "b", "c"], &[("a", "c"), ("b", "c")])
        .expect("Λ is a valid poset")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Elem {
        Elem::new(i)
    }

    #[test]
    fn chain_primitives() {
        let p = make_chain(1).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.cover_pairs().is_empty());
        assert!(p.is_rooted_forest());

        let p = make_chain(3).unwrap();
        assert!(p.leq(e(0), e(2)));
        assert!(!p.leq(e(2), e(0)));
        assert_eq!(p.upper_ideal(e(1)), [e(1), e(2)]);
        assert_eq!(p.upper_ideal_complement(e(1)), [e(0)]);
        assert_eq!(p.covers_of(e(1)), [e(2)]);
        assert_eq!(p.parent(e(1)), Ok(Some(e(0))));
        assert_eq!(p.parent(e(0)), Ok(None));
        assert!(p.is_index_chain());
    }

    #[test]
    fn zero_sized_posets_rejected() {
        assert_eq!(make_chain(0).unwrap_err(), Error::EmptyPoset);
        assert_eq!(make_antichain(0).unwrap_err(), Error::EmptyPoset);
    }

    #[test]
    fn antichain_primitives() {
        let p = make_antichain(2).unwrap();
        assert!(!p.leq(e(0), e(1)) && !p.leq(e(1), e(0)));
        assert_eq!(p.upper_ideal(e(0)), [e(0)]);
        assert_eq!(p.upper_ideal_complement(e(0)).len(), 1);
        assert_eq!(p.minimal_elements(), [e(0), e(1)]);
        assert!(p.is_rooted_forest());

        let one = make_antichain(1).unwrap();
        let chain = make_chain(1).unwrap();
        assert_eq!(one.is_rooted_forest(), chain.is_rooted_forest());
        assert_eq!(one.cover_pairs(), chain.cover_pairs());
    }

    #[test]
    fn lambda_is_not_a_forest() {
        let p = make_lambda();
        let [a, b, c] = ["a", "b", "c"].map(|n| p.elem(n).unwrap());
        assert!(!p.is_rooted_forest());
        assert!(p.leq(a, c));
        assert!(!p.leq(a, b));
        assert_eq!(p.minimal_elements(), [a, b]);
        assert_eq!(p.covers_of(a), [c]);
        assert_eq!(p.parent(c), Err(Error::NotRootedForest));
    }

    #[test]
    fn named_covers_round_trip() {
        let p = Poset::from_named_covers(&["1", "2", "3"], &[("1", "2"), ("2", "3")]).unwrap();
        assert_eq!(p.cover_pairs(), make_chain(3).unwrap().cover_pairs());
        assert!(p.is_index_chain());

        let cyc = Poset::from_named_covers(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(cyc.unwrap_err(), Error::CyclicCovers);
        let unknown = Poset::from_named_covers(&["a"], &[("a", "z")]);
        assert_eq!(unknown.unwrap_err(), Error::UnknownElement("z".into()));
    }

    #[test]
    fn redundant_relations_reduce_to_hasse_diagram() {
        let p = Poset::from_named_covers(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")])
            .unwrap();
        assert_eq!(p.covers_of(e(0)), [e(1)]);
        assert!(p.is_rooted_forest());
    }
}
