//! Pass/fail reports that cross-check the independent computations.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::automata::{accept_series, build_m_automaton, build_m_automaton_as_printed};
use crate::genfun::{
    abar_len, abar_norm, closed_am_bm_len, closed_am_bm_norm, d_len, d_norm, f_iterate, m_len,
    m_len_general, m_len_general_as_printed, m_len_general_closed, verify_sum_identity,
    z_len_general, z_len_general_as_printed, Polynomial, RationalFn, TypeVector,
};
use crate::incidence::{mobius_normal, BoundedWords};
use crate::ncseries::{
    series_m, series_m_misprint, series_m_one_root, verify_telescoping, NCSeries,
};
use crate::poset::{make_antichain, make_chain, Poset};
use crate::words::{Grading, Word};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            lines: Vec::new(),
        }
    }

    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for line in &self.lines {
            let verdict = if line.passed { "PASS" } else { "FAIL" };
            if line.detail.is_empty() {
                writeln!(f, "{verdict} {}", line.name)?;
            } else {
                writeln!(f, "{verdict} {}: {}", line.name, line.detail)?;
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} overall")
    }
}

/// `m(ℙ) = 1`, `(ε-1) m(ℙ)* = ε` and `m(z(k)) = k` over `[n]`.
pub fn telescoping_report(n: usize, grading: Grading, bound: usize) -> Result<Report> {
    let poset = make_chain(n)?;
    let mut report = Report::new(format!(
        "telescoping identities, n={n}, {grading:?} grading, bound {bound}"
    ));
    for check in verify_telescoping(n, grading, bound)? {
        let detail = match &check.first_offender {
            None => format!("exact through grade {bound}"),
            Some((w, expected, actual)) => format!(
                "coefficient of {} is {actual}, expected {expected}",
                w.display(&poset)
            ),
        };
        report.push(CheckLine::new(check.name.clone(), check.passed(), detail));
    }
    Ok(report)
}

/// Both sides of the binomial sum identity for `0 ≤ m, k ≤ max`; the
/// right side gains 1 when `k = 1`.
pub fn sum_identity_report(max: usize) -> Report {
    let mut report = Report::new(format!("binomial sum identity, 0 <= m,k <= {max}"));
    for k in 0..=max {
        let offset = BigInt::from(u8::from(k == 1));
        let bad: Vec<String> = (0..=max)
            .filter_map(|m| {
                let (lhs, rhs) = verify_sum_identity(m, k);
                (lhs != &rhs + &offset).then(|| format!("m={m}: {lhs} vs {rhs}"))
            })
            .collect();
        let name = if k == 1 {
            String::from("k=1: lhs = rhs + 1")
        } else {
            format!("k={k}: lhs = rhs")
        };
        let detail = if bad.is_empty() {
            format!("all m <= {max}")
        } else {
            bad.join(", ")
        };
        report.push(CheckLine::new(name, bad.is_empty(), detail));
    }
    report
}

fn failing(ms: impl Iterator<Item = usize>, ok: impl Fn(usize) -> bool) -> Vec<usize> {
    ms.filter(|&m| !ok(m)).collect()
}

fn list_detail(bad: &[usize], max: usize) -> String {
    if bad.is_empty() {
        format!("all m <= {max}")
    } else {
        format!("fails at m = {bad:?}")
    }
}

/// Closed forms of `a_m`, `b_m` against the recurrence, both gradings, and
/// `x ā_{m-1} + d_{m+1} - d_{m-1} = 0`.
pub fn closed_forms_report(max: usize) -> Report {
    let mut report = Report::new(format!("two-letter multichain closed forms, m <= {max}"));
    let norm = failing(0..=max, |m| {
        let it = f_iterate(2, Grading::Norm, m);
        closed_am_bm_norm(m) == (it[0].clone(), it[1].clone())
    });
    report.push(CheckLine::new(
        "norm: closed a_m, b_m = recurrence",
        norm.is_empty(),
        list_detail(&norm, max),
    ));
    let len = failing(0..=max, |m| {
        let it = f_iterate(2, Grading::Length, m);
        closed_am_bm_len(m) == (it[0].clone(), it[1].clone())
    });
    report.push(CheckLine::new(
        "length: closed a_m, b_m = recurrence",
        len.is_empty(),
        list_detail(&len, max),
    ));
    let x = Polynomial::x_pow(1);
    type Family = (fn(usize) -> Polynomial, fn(usize) -> Polynomial);
    let families: [(&str, Family); 2] =
        [("norm", (abar_norm, d_norm)), ("length", (abar_len, d_len))];
    for (label, (abar, d)) in families {
        let bad = failing(1..=max, |m| {
            (&(&(&x * &abar(m - 1)) + &d(m + 1)) - &d(m - 1)).is_zero()
        });
        report.push(CheckLine::new(
            format!("{label}: x abar_(m-1) + d_(m+1) - d_(m-1) = 0"),
            bad.is_empty(),
            list_detail(&bad, max),
        ));
    }
    report
}

/// `mobius_normal = mobius_oracle` on every comparable pair with
/// `ℓ(w) ≤ max_len`.
pub fn oracle_suite_line(label: &str, poset: &Poset, max_len: usize) -> Result<CheckLine> {
    let words = BoundedWords::new(poset, Grading::Length, max_len);
    let mut pairs = 0usize;
    for (i, u) in words.words().iter().enumerate() {
        let row = words.mobius_row(i);
        for (j, w) in words.words().iter().enumerate() {
            if !words.leq(i, j) {
                continue;
            }
            pairs += 1;
            let formula = mobius_normal(u, w, poset)?;
            if formula != row[j] {
                return Ok(CheckLine::new(
                    format!("{label}, length <= {max_len}"),
                    false,
                    format!(
                        "mu({}, {}): formula {formula}, oracle {}",
                        u.display(poset),
                        w.display(poset),
                        row[j]
                    ),
                ));
            }
        }
    }
    Ok(CheckLine::new(
        format!("{label}, length <= {max_len}"),
        true,
        format!("{pairs} pairs agree"),
    ))
}

/// Two disjoint two-element chains `1 < 2`, `3 < 4`.
pub fn two_chains() -> Poset {
    Poset::from_named_covers(&["1", "2", "3", "4"], &[("1", "2"), ("3", "4")])
        .expect("valid forest")
}

/// The normal-embedding formula against the recursion on three posets.
pub fn oracle_suite_report() -> Result<Report> {
    let mut report = Report::new("Möbius formula vs recursion, all comparable pairs");
    report.push(oracle_suite_line("chain [3]", &make_chain(3)?, 5)?);
    report.push(oracle_suite_line(
        "antichain {a,b}",
        &make_antichain(2)?,
        6,
    )?);
    report.push(oracle_suite_line("two chains 1<2, 3<4", &two_chains(), 4)?);
    Ok(report)
}

/// First word at which a series disagrees with an oracle row, if any.
fn series_vs_row(words: &BoundedWords<'_>, series: &NCSeries, row: &[BigInt]) -> Option<Word> {
    words
        .words()
        .iter()
        .zip(row)
        .find(|(w, value)| series.coefficient(w) != **value)
        .map(|(w, _)| w.clone())
}

fn taylor_matches(f: &RationalFn, sums: &[BigInt]) -> bool {
    f.taylor(sums.len() - 1).is_ok_and(|c| c == sums)
}

struct LengthSample<'p> {
    words: BoundedWords<'p>,
    /// `(u, Σ_{ℓ(w)=N} μ(u,w), Σ_{ℓ(w)=N} ζ(u,w))` for the sampled `u`.
    rows: Vec<(Word, Vec<BigInt>, Vec<BigInt>)>,
}

impl<'p> LengthSample<'p> {
    fn new(poset: &'p Poset, bound: usize, max_u: usize) -> Self {
        let words = BoundedWords::new(poset, Grading::Length, bound);
        let rows = (0..words.words().len())
            .filter(|&i| words.words()[i].len() <= max_u)
            .map(|i| {
                (
                    words.words()[i].clone(),
                    words.sum_by_grade(&words.mobius_row(i)),
                    words.sum_by_grade(&words.zeta_row(i)),
                )
            })
            .collect();
        LengthSample { words, rows }
    }
}

fn tally(label: &str, total: usize, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{label}: all {total} words agree")
    } else {
        format!(
            "{label}: {} of {total} words disagree, e.g. u = {}",
            bad.len(),
            bad[0]
        )
    }
}

fn series_line(
    sample: &LengthSample<'_>,
    poset: &Poset,
    build: impl Fn(&Word) -> Result<NCSeries>,
) -> Result<(usize, Vec<String>)> {
    let mut bad = Vec::new();
    for (u, _, _) in &sample.rows {
        let idx = sample.words.index_of(u).expect("sampled word");
        let row = sample.words.mobius_row(idx);
        if let Some(w) = series_vs_row(&sample.words, &build(u)?, &row) {
            bad.push(format!("{} at w = {}", u.display(poset), w.display(poset)));
        }
    }
    Ok((sample.rows.len(), bad))
}

/// Where printed formulas for rooted forests disagree with the oracles, and
/// the corrected forms that agree.
///
/// 1. `M(u) = (ε - O_P) z(u)` should use `m(u)`; and even `(ε - O_P) m(u)`
///    only holds when `P` has one minimal element. In general the factor
///    `ε - O_P` becomes `G_P = (ε + Σ_{o∈O_P} o⁺)⁻¹` and
///    `m(a) = (a⁺ - Σ_{c∈C_a} c⁺) G_P` for every `a`.
/// 2. The length generating functions: the `Z(u;t)` product needs
///    exponents `l_a`, and `M(u;t)` is
///    `(1-t) t^{ℓ(u)} ∏_a (1-|C_a|)^{l_a} / (1+(|O_P|-1)t)^{ℓ(u)+1}`.
/// 3. In `[n]*`, `M(u;t)` is `(1-t) t^k` for `u = n^k`, not only for `u = ε`.
/// 4. The `M⊗` automaton needs `-(k-1)⊗k` on every arc into `β_k`, not
///    only on the loop.
pub fn display_discrepancies_report() -> Result<Report> {
    let mut report = Report::new("printed formulas vs oracle");
    let bound = 5;
    let g = Grading::Length;
    let posets: [(&str, Poset); 4] = [
        (
            "tree r<s, r<t",
            Poset::from_named_covers(&["r", "s", "t"], &[("r", "s"), ("r", "t")])
                .expect("valid tree"),
        ),
        ("two chains 1<2, 3<4", two_chains()),
        (
            "forest r<s, r<t, q",
            Poset::from_named_covers(&["r", "s", "t", "q"], &[("r", "s"), ("r", "t")])
                .expect("valid forest"),
        ),
        ("antichain {a,b}", make_antichain(2)?),
    ];

    for (label, poset) in &posets {
        let sample = LengthSample::new(poset, bound, 2);
        let one_root = poset.minimal_elements().len() == 1;

        let (total, bad) = series_line(&sample, poset, |u| series_m(u, poset, g, bound))?;
        report.push(CheckLine::new(
            format!("{label}: M(u) = G_P m(u) equals μ(u, ·)"),
            bad.is_empty(),
            tally("corrected series", total, &bad),
        ));
        let (total, bad) = series_line(&sample, poset, |u| series_m_misprint(u, poset, g, bound))?;
        report.push(CheckLine::new(
            format!("{label}: printed M(u) = (ε - O_P) z(u) differs from μ(u, ·)"),
            !bad.is_empty(),
            tally("printed series", total, &bad),
        ));
        let (total, bad) = series_line(&sample, poset, |u| series_m_one_root(u, poset, g, bound))?;
        if one_root {
            report.push(CheckLine::new(
                format!("{label}: one root, so (ε - O_P) m(u) equals μ(u, ·)"),
                bad.is_empty(),
                tally("(ε - O_P) m(u)", total, &bad),
            ));
        } else {
            report.push(CheckLine::new(
                format!("{label}: several roots, so (ε - O_P) m(u) differs from μ(u, ·)"),
                !bad.is_empty(),
                tally("(ε - O_P) m(u)", total, &bad),
            ));
        }

        let mut z_bad = Vec::new();
        let mut z_printed_bad = Vec::new();
        let mut m_bad = Vec::new();
        let mut m_printed_bad = Vec::new();
        let mut closed_bad = Vec::new();
        let mut cover_bad = Vec::new();
        let mut cover_cases = 0usize;
        let z_printed = z_len_general_as_printed(poset);
        let m_printed = m_len_general_as_printed(poset);
        for (u, mu_sums, zeta_sums) in &sample.rows {
            let t = TypeVector::of(u, poset.len());
            let shown = u.display(poset).to_string();
            if !taylor_matches(&z_len_general(poset, &t)?, zeta_sums) {
                z_bad.push(shown.clone());
            }
            if !taylor_matches(&z_printed, zeta_sums) {
                z_printed_bad.push(shown.clone());
            }
            let m = m_len_general(poset, &t)?;
            if !taylor_matches(&m, mu_sums) {
                m_bad.push(shown.clone());
            }
            if m_len_general_closed(poset, &t)? != m {
                closed_bad.push(shown.clone());
            }
            if !taylor_matches(&m_printed, mu_sums) {
                m_printed_bad.push(shown.clone());
            }
            if u.letters().iter().any(|&a| poset.covers_of(a).len() == 1) {
                cover_cases += 1;
                if mu_sums.iter().any(|c| *c != BigInt::from(0)) {
                    cover_bad.push(shown);
                }
            }
        }
        let total = sample.rows.len();
        report.push(CheckLine::new(
            format!("{label}: Z(u;t) = 1/(1-|P|t) prod_a (|I_a|t/(1-|J_a|t))^l_a matches oracle"),
            z_bad.is_empty(),
            tally("with exponents l_a", total, &z_bad),
        ));
        report.push(CheckLine::new(
            format!("{label}: printed Z(u;t) without exponents l_a differs from oracle"),
            !z_printed_bad.is_empty(),
            tally("printed", total, &z_printed_bad),
        ));
        report.push(CheckLine::new(
            format!(
                "{label}: M(u;t) = (1-t) t^l(u) prod_a (1-|C_a|)^l_a / (1+(|O_P|-1)t)^(l(u)+1) \
                 matches oracle"
            ),
            m_bad.is_empty() && closed_bad.is_empty(),
            format!(
                "{}; product form {}",
                tally("from m(a;t)", total, &m_bad),
                if closed_bad.is_empty() {
                    "identical"
                } else {
                    "differs"
                }
            ),
        ));
        report.push(CheckLine::new(
            format!("{label}: printed M(u;t) with exponents |P|, |P-O_P| differs from oracle"),
            !m_printed_bad.is_empty(),
            tally("printed", total, &m_printed_bad),
        ));
        if cover_cases > 0 {
            report.push(CheckLine::new(
                format!("{label}: a letter with exactly one cover forces M(u;t) = 0"),
                cover_bad.is_empty(),
                tally("oracle sums", cover_cases, &cover_bad),
            ));
        }
    }

    let chain = make_chain(3)?;
    let sample = LengthSample::new(&chain, 6, 2);
    let mut bad = Vec::new();
    let mut printed_bad = Vec::new();
    for (u, mu_sums, _) in &sample.rows {
        let t = TypeVector::of(u, 3);
        let shown = u.display(&chain).to_string();
        if !taylor_matches(&m_len(&t, 3)?, mu_sums) {
            bad.push(shown.clone());
        }
        let printed = if u.is_empty() {
            RationalFn::from_poly(Polynomial::from_i64(&[1, -1]))
        } else {
            RationalFn::zero()
        };
        if !taylor_matches(&printed, mu_sums) {
            printed_bad.push(shown);
        }
    }
    let total = sample.rows.len();
    report.push(CheckLine::new(
        "chain [3]: M(u;t) = (1-t) t^l(u) if every letter of u is 3, else 0, matches oracle",
        bad.is_empty(),
        tally("corrected", total, &bad),
    ));
    report.push(CheckLine::new(
        "chain [3]: printed M(u;t) = 0 for u != ε differs from oracle",
        !printed_bad.is_empty(),
        tally("printed", total, &printed_bad),
    ));

    let words = BoundedWords::new(&chain, g, 4);
    let fixed = accept_series(&build_m_automaton(3)?, 4)?;
    let printed = accept_series(&build_m_automaton_as_printed(3)?, 4)?;
    let (mut fixed_bad, mut printed_bad) = (0usize, 0usize);
    for (i, u) in words.words().iter().enumerate() {
        let row = words.mobius_row(i);
        for (w, mu) in words.words().iter().zip(&row) {
            fixed_bad += usize::from(fixed.coefficient(u, w) != *mu);
            printed_bad += usize::from(printed.coefficient(u, w) != *mu);
        }
    }
    let pairs = words.words().len().pow(2);
    report.push(CheckLine::new(
        "chain [3]: M⊗ automaton with (k - (k-1))⊗k on every arc into β_k matches oracle",
        fixed_bad == 0,
        format!("{fixed_bad} of {pairs} pairs (u, w) with l(w) <= 4 disagree"),
    ));
    report.push(CheckLine::new(
        "chain [3]: printed M⊗ automaton, k⊗k alone on arcs entering β_k, differs from oracle",
        printed_bad > 0,
        format!("{printed_bad} of {pairs} pairs disagree, e.g. mu(1, 2)"),
    ));
    Ok(report)
}
