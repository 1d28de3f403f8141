//! Weighted automata over pair letters `x ⊗ y` accepting `Z⊗` and `M⊗` for
//! the chains `[n]`.
//!
//! Arc labels are stored as signed monomial lists. Every arc not entering ω
//! writes exactly one letter on the right, so after `s` steps a walk has
//! written a right word of length `s`; evaluation runs one layer per step.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poset::{make_chain, Elem, Poset};
use crate::words::Word;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Vertex {
    Alpha,
    Omega,
    /// `β_k`, with `k` the 1-based letter it remembers.
    Beta(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Alpha => f.write_str("alpha"),
            Vertex::Omega => f.write_str("omega"),
            Vertex::Beta(k) => write!(f, "b{k}"),
        }
    }
}

/// `coeff · (left ⊗ right)` with `None` standing for ε on either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub left: Option<Elem>,
    pub right: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub source: Vertex,
    pub target: Vertex,
    pub label: Vec<Monomial>,
}

#[derive(Clone, Debug)]
pub struct Automaton {
    poset: Poset,
    vertices: Vec<Vertex>,
    arcs: Vec<Arc>,
}

impl Automaton {
    /// Collects arcs, merging parallel ones and summing equal monomials.
    pub fn new(poset: Poset, vertices: Vec<Vertex>, arcs: Vec<Arc>) -> Self {
        let mut merged: BTreeMap<(Vertex, Vertex), Vec<Monomial>> = BTreeMap::new();
        let mut order = Vec::new();
        for arc in arcs {
            let key = (arc.source, arc.target);
            let label = merged.entry(key).or_insert_with(|| {
                order.push(key);
                Vec::new()
            });
            for mono in arc.label {
                match label
                    .iter_mut()
                    .find(|m| m.left == mono.left && m.right == mono.right)
                {
                    Some(existing) => existing.coeff += mono.coeff,
                    None => label.push(mono),
                }
            }
            label.retain(|m| m.coeff != 0);
        }
        let arcs = order
            .into_iter()
            .map(|key| Arc {
                source: key.0,
                target: key.1,
                label: merged.remove(&key).unwrap_or_default(),
            })
            .collect();
        Automaton {
            poset,
            vertices,
            arcs,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, source: Vertex, target: Vertex) -> Option<&Arc> {
        self.arcs
            .iter()
            .find(|a| a.source == source && a.target == target)
    }

    fn validate(&self) -> Result<()> {
        for arc in &self.arcs {
            if arc.source == Vertex::Omega {
                return Err(Error::MalformedAutomaton("arc leaving omega"));
            }
            if arc.target == Vertex::Omega {
                let unit = arc.label.len() == 1
                    && arc.label[0].left.is_none()
                    && arc.label[0].right.is_none();
                if !unit {
                    return Err(Error::MalformedAutomaton("arc into omega must be ε⊗ε"));
                }
            } else if arc.label.iter().any(|m| m.right.is_none()) {
                return Err(Error::MalformedAutomaton(
                    "arc not entering omega has an ε right component",
                ));
            }
        }
        Ok(())
    }

    /// Lines `src -> dst : ±x⊗y ± …`.
    pub fn dump(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for arc in &self.arcs {
            let _ = write!(out, "{} -> {} :", arc.source, arc.target);
            for (i, m) in arc.label.iter().enumerate() {
                let sign = if m.coeff < 0 { '-' } else { '+' };
                if i == 0 {
                    let _ = write!(out, " {sign}");
                } else {
                    let _ = write!(out, " {sign} ");
                }
                if m.coeff.abs() != 1 {
                    let _ = write!(out, "{}*", m.coeff.abs());
                }
                let side = |x: Option<Elem>| x.map_or("ε", |a| self.poset.name(a));
                let _ = write!(out, "{}⊗{}", side(m.left), side(m.right));
            }
            out.push('\n');
        }
        out
    }
}

fn mono(coeff: i64, left: Option<usize>, right: Option<usize>) -> Monomial {
    Monomial {
        coeff,
        left: left.map(|k| Elem::new(k - 1)),
        right: right.map(|k| Elem::new(k - 1)),
    }
}

fn vertex_set(n: usize) -> Vec<Vertex> {
    let mut vs = vec![Vertex::Alpha, Vertex::Omega];
    vs.extend((1..=n).map(Vertex::Beta));
    vs
}

fn exit_arcs(n: usize) -> impl Iterator<Item = Arc> {
    core::iter::once(Vertex::Alpha)
        .chain((1..=n).map(Vertex::Beta))
        .map(|v| Arc {
            source: v,
            target: Vertex::Omega,
            label: vec![mono(1, None, None)],
        })
}

/// The automaton accepting `Z⊗ = Σ ζ(u,w) u⊗w` over `[n]`.
pub fn build_z_automaton(n: usize) -> Result<Automaton> {
    let poset = make_chain(n)?;
    let mut arcs = vec![Arc {
        source: Vertex::Alpha,
        target: Vertex::Alpha,
        label: (1..=n).map(|j| mono(1, None, Some(j))).collect(),
    }];
    for k in 1..=n {
        let sources = core::iter::once(Vertex::Alpha).chain((1..=n).map(Vertex::Beta));
        for source in sources {
            let mut label = Vec::new();
            if source == Vertex::Beta(k) {
                label.extend((1..k).map(|j| mono(1, None, Some(j))));
            }
            label.extend((k..=n).map(|j| mono(1, Some(k), Some(j))));
            arcs.push(Arc {
                source,
                target: Vertex::Beta(k),
                label,
            });
        }
    }
    arcs.extend(exit_arcs(n));
    Ok(Automaton::new(poset, vertex_set(n), arcs))
}

/// The automaton accepting `M⊗ = Σ μ(u,w) u⊗w` over `[n]`.
///
/// A run of `k ≥ 2` must start at a support position holding `k` or `k-1`,
/// so every arc into `β_k` carries `(k - (k-1))⊗k`; the loop adds `ε⊗k`.
pub fn build_m_automaton(n: usize) -> Result<Automaton> {
    m_automaton(n, true)
}

/// The `M⊗` automaton with the commonly printed labels, where only the loop
/// at `β_k` carries `-(k-1)⊗k`. It misses e.g. `μ(1,2) = -1`.
pub fn build_m_automaton_as_printed(n: usize) -> Result<Automaton> {
    m_automaton(n, false)
}

fn m_automaton(n: usize, defect_on_entry: bool) -> Result<Automaton> {
    let poset = make_chain(n)?;
    let mut arcs = Vec::new();
    for k in 1..=n {
        let sources = core::iter::once(Vertex::Alpha).chain((1..=n).map(Vertex::Beta));
        for source in sources {
            let looping = source == Vertex::Beta(k);
            let label = match (k, looping) {
                (1, true) => vec![mono(1, Some(1), Some(1))],
                (1, false) => vec![mono(1, Some(1), Some(1)), mono(-1, None, Some(1))],
                (_, true) => vec![
                    mono(1, Some(k), Some(k)),
                    mono(-1, Some(k - 1), Some(k)),
                    mono(1, None, Some(k)),
                ],
                (_, false) if defect_on_entry => {
                    vec![mono(1, Some(k), Some(k)), mono(-1, Some(k - 1), Some(k))]
                }
                (_, false) => vec![mono(1, Some(k), Some(k))],
            };
            arcs.push(Arc {
                source,
                target: Vertex::Beta(k),
                label,
            });
        }
    }
    arcs.extend(exit_arcs(n));
    Ok(Automaton::new(poset, vertex_set(n), arcs))
}

/// A truncated series `Σ c_{u,w} u⊗w` keeping pairs with `ℓ(w) ≤ bound`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSeries {
    coeffs: BTreeMap<(Word, Word), BigInt>,
    bound: usize,
}

impl PairSeries {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coefficient(&self, u: &Word, w: &Word) -> BigInt {
        self.coeffs
            .get(&(u.clone(), w.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms ordered by `ℓ(w)`, then `w`, then `u`.
    pub fn terms(&self) -> Vec<(&Word, &Word, &BigInt)> {
        let mut terms: Vec<_> = self.coeffs.iter().map(|((u, w), c)| (u, w, c)).collect();
        terms.sort_by(|a, b| (a.1.len(), a.1, a.0).cmp(&(b.1.len(), b.1, b.0)));
        terms
    }

    fn add_term(&mut self, key: (Word, Word), c: BigInt) {
        use alloc::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> PairSeriesDisplay<'a> {
        PairSeriesDisplay {
            series: self,
            poset,
        }
    }
}

/// `coef*u⊗w` lines.
pub struct PairSeriesDisplay<'a> {
    series: &'a PairSeries,
    poset: &'a Poset,
}

impl fmt::Display for PairSeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (u, w, c) in self.series.terms() {
            writeln!(
                f,
                "{}*{}⊗{}",
                c,
                u.display(self.poset),
                w.display(self.poset)
            )?;
        }
        Ok(())
    }
}

fn evaluate(
    automaton: &Automaton,
    bound: usize,
    weight: impl Fn(&Monomial) -> BigInt,
) -> Result<PairSeries> {
    automaton.validate()?;
    let vertices = automaton.vertices();
    let slot = |v: Vertex| vertices.iter().position(|&x| x == v);
    let alpha = slot(Vertex::Alpha).ok_or(Error::MalformedAutomaton("missing alpha"))?;

    let mut accepted = PairSeries {
        coeffs: BTreeMap::new(),
        bound,
    };
    // layer[v]: weighted pairs reaching v after exactly `step` letter steps.
    let mut layer: Vec<BTreeMap<(Word, Word), BigInt>> = vec![BTreeMap::new(); vertices.len()];
    layer[alpha].insert((Word::empty(), Word::empty()), BigInt::one());
    for step in 0..=bound {
        let mut next: Vec<BTreeMap<(Word, Word), BigInt>> = vec![BTreeMap::new(); vertices.len()];
        for arc in automaton.arcs() {
            let src = slot(arc.source).ok_or(Error::MalformedAutomaton("unknown vertex"))?;
            if layer[src].is_empty() {
                continue;
            }
            if arc.target == Vertex::Omega {
                for (key, c) in &layer[src] {
                    accepted.add_term(key.clone(), c * weight(&arc.label[0]));
                }
                continue;
            }
            if step == bound {
                continue;
            }
            let dst = slot(arc.target).ok_or(Error::MalformedAutomaton("unknown vertex"))?;
            for m in &arc.label {
                let w_mono = weight(m);
                for ((u, w), c) in &layer[src] {
                    let mut u2 = u.letters().to_vec();
                    u2.extend(m.left);
                    let mut w2 = w.letters().to_vec();
                    w2.extend(m.right);
                    let entry = next[dst]
                        .entry((Word::new(u2), Word::new(w2)))
                        .or_insert_with(BigInt::zero);
                    *entry += c * &w_mono;
                }
            }
        }
        for map in &mut next {
            map.retain(|_, c| !c.is_zero());
        }
        layer = next;
    }
    Ok(accepted)
}

/// The accepted series `Σ_W f(W)` over walks from α to ω, up to `ℓ(w) ≤ bound`.
pub fn accept_series(automaton: &Automaton, bound: usize) -> Result<PairSeries> {
    evaluate(automaton, bound, |m| BigInt::from(m.coeff))
}

/// Number of monomial walks producing each pair, ignoring signs.
pub fn count_walks(automaton: &Automaton, bound: usize) -> Result<PairSeries> {
    evaluate(automaton, bound, |_| BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cw(p: &[usize]) -> Word {
        Word::from_parts(p)
    }

    #[test]
    fn z_automaton_labels() {
        let d = build_z_automaton(3).unwrap();
        assert_eq!(
            d.arc(Vertex::Alpha, Vertex::Beta(2)).unwrap().label,
            [mono(1, Some(2), Some(2)), mono(1, Some(2), Some(3))]
        );
        assert_eq!(
            d.arc(Vertex::Beta(2), Vertex::Beta(2)).unwrap().label,
            [
                mono(1, None, Some(1)),
                mono(1, Some(2), Some(2)),
                mono(1, Some(2), Some(3))
            ]
        );
        let d1 = build_z_automaton(1).unwrap();
        assert_eq!(
            d1.arc(Vertex::Beta(1), Vertex::Beta(1)).unwrap().label,
            [mono(1, Some(1), Some(1))]
        );
    }

    #[test]
    fn m_automaton_labels() {
        let d = build_m_automaton(3).unwrap();
        assert_eq!(
            d.arc(Vertex::Beta(3), Vertex::Beta(3)).unwrap().label,
            [
                mono(1, Some(3), Some(3)),
                mono(-1, Some(2), Some(3)),
                mono(1, None, Some(3))
            ]
        );
        assert_eq!(
            d.arc(Vertex::Alpha, Vertex::Beta(1)).unwrap().label,
            [mono(1, Some(1), Some(1)), mono(-1, None, Some(1))]
        );
        assert_eq!(
            d.arc(Vertex::Alpha, Vertex::Beta(2)).unwrap().label,
            [mono(1, Some(2), Some(2)), mono(-1, Some(1), Some(2))]
        );
        assert!(d.arcs().iter().all(|a| a.target != Vertex::Alpha));

        let d1 = build_m_automaton(1).unwrap();
        assert_eq!(
            d1.arc(Vertex::Beta(1), Vertex::Beta(1)).unwrap().label,
            [mono(1, Some(1), Some(1))]
        );
    }

    #[test]
    fn printed_m_automaton_misses_run_starts() {
        let printed = build_m_automaton_as_printed(3).unwrap();
        assert_eq!(
            printed.arc(Vertex::Alpha, Vertex::Beta(2)).unwrap().label,
            [mono(1, Some(2), Some(2))]
        );
        let printed = accept_series(&printed, 2).unwrap();
        let fixed = accept_series(&build_m_automaton(3).unwrap(), 2).unwrap();
        assert_eq!(printed.coefficient(&cw(&[1]), &cw(&[2])), BigInt::zero());
        assert_eq!(fixed.coefficient(&cw(&[1]), &cw(&[2])), BigInt::from(-1));
        let chain = make_chain(3).unwrap();
        let u = cw(&[1]);
        for w in [cw(&[3, 2]), cw(&[2, 2]), cw(&[1, 2])] {
            assert_eq!(
                fixed.coefficient(&u, &w),
                crate::incidence::mobius_oracle(&u, &w, &chain)
            );
        }
    }

    #[test]
    fn accepted_coefficients() {
        let z = accept_series(&build_z_automaton(3).unwrap(), 3).unwrap();
        assert_eq!(z.coefficient(&Word::empty(), &Word::empty()), BigInt::one());
        assert_eq!(z.coefficient(&cw(&[2]), &cw(&[1, 2])), BigInt::one());
        assert_eq!(z.coefficient(&cw(&[2]), &cw(&[1, 1])), BigInt::zero());

        let m = accept_series(&build_m_automaton(3).unwrap(), 3).unwrap();
        assert_eq!(m.coefficient(&cw(&[1]), &cw(&[1, 1])), BigInt::from(-1));
    }

    #[test]
    fn malformed_automata_rejected() {
        let poset = make_chain(1).unwrap();
        let bad = Automaton::new(
            poset.clone(),
            vertex_set(1),
            vec![Arc {
                source: Vertex::Alpha,
                target: Vertex::Beta(1),
                label: vec![mono(1, Some(1), None)],
            }],
        );
        assert!(matches!(
            accept_series(&bad, 2),
            Err(Error::MalformedAutomaton(_))
        ));
        let bad_exit = Automaton::new(
            poset,
            vertex_set(1),
            vec![Arc {
                source: Vertex::Alpha,
                target: Vertex::Omega,
                label: vec![mono(1, Some(1), Some(1))],
            }],
        );
        assert!(accept_series(&bad_exit, 2).is_err());
    }

    #[test]
    fn parallel_arcs_merge() {
        let poset = make_chain(1).unwrap();
        let arc = |c| Arc {
            source: Vertex::Alpha,
            target: Vertex::Beta(1),
            label: vec![mono(c, Some(1), Some(1))],
        };
        let d = Automaton::new(poset, vertex_set(1), vec![arc(1), arc(2), arc(-3)]);
        assert!(d
            .arc(Vertex::Alpha, Vertex::Beta(1))
            .unwrap()
            .label
            .is_empty());
    }

    #[test]
    fn dump_format() {
        let d = build_m_automaton(2).unwrap();
        let dump = d.dump();
        assert!(dump.contains("alpha -> b1 : +1⊗1 - ε⊗1\n"));
        assert!(dump.contains("b2 -> b2 : +2⊗2 - 1⊗2 + ε⊗2\n"));
        assert!(dump.contains("b1 -> omega : +ε⊗ε\n"));
        let z = build_z_automaton(2).unwrap();
        assert!(z
            .dump()
            .to_string()
            .starts_with("alpha -> alpha : +ε⊗1 + ε⊗2\n"));
    }
}
