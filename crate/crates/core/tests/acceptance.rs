//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Run with `cargo test -p composet --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use composet::automata::{accept_series, build_m_automaton, build_z_automaton};
use composet::chebyshev::lambda_table;
use composet::genfun::{
    closed_am_bm_len, closed_am_bm_norm, f_iterate, m_len, m_norm, m_p_norm, z_len, z_norm,
    z_p_norm, zeta_power_genfun, RationalFn, TypeVector,
};
use composet::incidence::{mobius_normal, mobius_oracle, BoundedWords};
use composet::ncseries::{series_m, series_z};
use composet::poset::{make_antichain, make_chain};
use composet::verify::{self, Report};
use composet::{Grading, Word};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_report(report: Report) -> Outcome {
    let failed: Vec<String> = report
        .lines
        .iter()
        .filter(|l| !l.passed)
        .map(|l| format!("{}: {}", l.name, l.detail))
        .collect();
    if failed.is_empty() {
        Ok(format!("{} lines pass", report.lines.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn err(e: composet::Error) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let cases = [
        (
            make_antichain(2).map_err(err)?,
            "a,b,b,a",
            "a,b,a,b,b,b,a,a",
        ),
        (make_chain(3).map_err(err)?, "2,1,1,1,3", "2,2,1,1,1,3,3"),
    ];
    let mut details = Vec::new();
    for (poset, u, w) in &cases {
        let u = Word::parse(u, poset).map_err(err)?;
        let w = Word::parse(w, poset).map_err(err)?;
        let start = Instant::now();
        let normal = mobius_normal(&u, &w, poset).map_err(err)?;
        let t_normal = start.elapsed();
        let start = Instant::now();
        let oracle = mobius_oracle(&u, &w, poset);
        let t_oracle = start.elapsed();
        let two = BigInt::from(2);
        let fast = t_normal < Duration::from_secs(1) && t_oracle < Duration::from_secs(1);
        if normal != two || oracle != two || !fast {
            return Err(format!(
                "mu({}, {}): normal {normal} in {t_normal:?}, oracle {oracle} in {t_oracle:?}",
                u.display(poset),
                w.display(poset)
            ));
        }
        details.push(format!("{} -> 2", w.display(poset)));
    }
    Ok(details.join(", "))
}

fn criterion_2() -> Outcome {
    from_report(verify::oracle_suite_report().map_err(err)?)
}

fn criterion_3() -> Outcome {
    let poset = make_chain(3).map_err(err)?;
    let words = BoundedWords::new(&poset, Grading::Length, 5);
    let mut checked = 0;
    for (i, u) in words.words().iter().enumerate() {
        if u.len() > 3 {
            continue;
        }
        let z = series_z(u, &poset, Grading::Length, 5).map_err(err)?;
        let m = series_m(u, &poset, Grading::Length, 5).map_err(err)?;
        let zeta = words.zeta_row(i);
        let mu = words.mobius_row(i);
        for (j, w) in words.words().iter().enumerate() {
            if z.coefficient(w) != zeta[j] || m.coefficient(w) != mu[j] {
                return Err(format!(
                    "u = {}, w = {}",
                    u.display(&poset),
                    w.display(&poset)
                ));
            }
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} words u, {} words w each",
        words.words().len()
    ))
}

fn automata_case(n: usize, bound: usize) -> Outcome {
    let poset = make_chain(n).map_err(err)?;
    let words = BoundedWords::new(&poset, Grading::Length, bound);
    let z = accept_series(&build_z_automaton(n).map_err(err)?, bound).map_err(err)?;
    let m = accept_series(&build_m_automaton(n).map_err(err)?, bound).map_err(err)?;
    let (mut zeta_terms, mut mu_terms) = (0, 0);
    for (i, u) in words.words().iter().enumerate() {
        let zeta = words.zeta_row(i);
        let mu = words.mobius_row(i);
        for (j, w) in words.words().iter().enumerate() {
            if z.coefficient(u, w) != zeta[j] || m.coefficient(u, w) != mu[j] {
                return Err(format!(
                    "n = {n}: u = {}, w = {}",
                    u.display(&poset),
                    w.display(&poset)
                ));
            }
            zeta_terms += usize::from(zeta[j] != BigInt::from(0));
            mu_terms += usize::from(mu[j] != BigInt::from(0));
        }
    }
    if z.len() != zeta_terms || m.len() != mu_terms {
        return Err(format!(
            "n = {n}: accepted series has terms outside the range"
        ));
    }
    Ok(format!(
        "n = {n}, L = {bound}: {} pairs",
        words.words().len().pow(2)
    ))
}

fn criterion_4() -> Outcome {
    Ok(format!(
        "{}; {}",
        automata_case(3, 5)?,
        automata_case(2, 6)?
    ))
}

fn criterion_5() -> Outcome {
    from_report(verify::telescoping_report(8, Grading::Norm, 8).map_err(err)?)
}

fn check_taylor(label: &str, f: &RationalFn, sums: &[BigInt]) -> Result<(), String> {
    let coeffs = f.taylor(sums.len() - 1).map_err(err)?;
    if coeffs != sums {
        return Err(format!("{label}: taylor {coeffs:?}, oracle {sums:?}"));
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        let poset = make_chain(n).map_err(err)?;
        for (grading, degree) in [(Grading::Norm, 10), (Grading::Length, 6)] {
            let words = BoundedWords::new(&poset, grading, degree);
            for (i, u) in words.words().iter().enumerate() {
                if u.len() > 3 {
                    continue;
                }
                let t = TypeVector::of(u, n);
                let (z, m) = match grading {
                    Grading::Norm => (z_norm(&t, n), m_norm(&t, n)),
                    Grading::Length => (z_len(&t, n), m_len(&t, n)),
                };
                let label = format!("n = {n}, {grading:?}, u = {}", u.display(&poset));
                check_taylor(
                    &label,
                    &z.map_err(err)?,
                    &words.sum_by_grade(&words.zeta_row(i)),
                )?;
                check_taylor(
                    &label,
                    &m.map_err(err)?,
                    &words.sum_by_grade(&words.mobius_row(i)),
                )?;
                checked += 1;
            }
        }
    }
    let poset = make_chain(8).map_err(err)?;
    let words = BoundedWords::new(&poset, Grading::Norm, 8);
    for (i, u) in words.words().iter().enumerate() {
        if u.len() > 3 || u.letters().iter().any(|a| a.index() >= 3) {
            continue;
        }
        let t = TypeVector::of(u, 3);
        let label = format!("P, u = {}", u.display(&poset));
        check_taylor(
            &label,
            &z_p_norm(&t),
            &words.sum_by_grade(&words.zeta_row(i)),
        )?;
        check_taylor(
            &label,
            &m_p_norm(&t),
            &words.sum_by_grade(&words.mobius_row(i)),
        )?;
        checked += 1;
    }
    Ok(format!("{checked} (u, grading) cases"))
}

fn criterion_7() -> Outcome {
    let f = RationalFn::new(
        composet::genfun::Polynomial::from_i64(&[1, -1]),
        composet::genfun::Polynomial::from_i64(&[1, -2]),
    )
    .map_err(err)?;
    let coeffs = f.taylor(16).map_err(err)?;
    for (n, c) in coeffs.iter().enumerate().skip(1) {
        if *c != BigInt::from(1u32) << (n - 1) {
            return Err(format!("coefficient {n} is {c}"));
        }
    }
    Ok("1 <= N <= 16".into())
}

fn criterion_8() -> Outcome {
    let poset = make_chain(2).map_err(err)?;
    let us = ["", "1", "2", "1,2"];
    for (grading, degree) in [(Grading::Norm, 8), (Grading::Length, 5)] {
        let words = BoundedWords::new(&poset, grading, degree);
        for u in us {
            let u = Word::parse(u, &poset).map_err(err)?;
            let i = words.index_of(&u).expect("u in range");
            for m in 0..=3 {
                let f = zeta_power_genfun(&TypeVector::of(&u, 2), 2, m, grading).map_err(err)?;
                let sums = words.sum_by_grade(&words.zeta_power_row(i, m));
                let label = format!("{grading:?}, u = {}, m = {m}", u.display(&poset));
                check_taylor(&label, &f, &sums)?;
            }
        }
    }
    Ok("4 words, m <= 3, both gradings".into())
}

fn criterion_9() -> Outcome {
    for m in 0..=12 {
        let norm = f_iterate(2, Grading::Norm, m);
        let len = f_iterate(2, Grading::Length, m);
        if [closed_am_bm_norm(m).0, closed_am_bm_norm(m).1] != [norm[0].clone(), norm[1].clone()] {
            return Err(format!("norm, m = {m}"));
        }
        if [closed_am_bm_len(m).0, closed_am_bm_len(m).1] != [len[0].clone(), len[1].clone()] {
            return Err(format!("length, m = {m}"));
        }
    }
    from_report(verify::closed_forms_report(12))
}

fn criterion_10() -> Outcome {
    for m in 0..=12 {
        for k in 0..=12 {
            let (lhs, rhs) = composet::genfun::verify_sum_identity(m, k);
            let expected = if k == 1 { &rhs + 1 } else { rhs.clone() };
            if lhs != expected {
                return Err(format!("m = {m}, k = {k}: lhs {lhs}, rhs {rhs}"));
            }
        }
    }
    Ok("0 <= m, k <= 12".into())
}

fn criterion_11() -> Outcome {
    let table = lambda_table(4);
    let bad: Vec<String> = table
        .iter()
        .filter(|c| !c.agree)
        .map(|c| format!("MISMATCH at (i, j) = ({}, {}): {}", c.i, c.j, c.cell()))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} cells agree", table.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_12() -> Outcome {
    let report = verify::display_discrepancies_report().map_err(err)?;
    let names: Vec<&str> = report.lines.iter().map(|l| l.name.as_str()).collect();
    let mentions = |needle: &str| names.iter().any(|n| n.contains(needle));
    if !(mentions("z(u)") && mentions("Z(u;t)") && mentions("M(u;t)")) {
        return Err(format!("report is missing a display issue: {names:?}"));
    }
    from_report(report)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 worked examples", criterion_1),
        ("2 formula vs oracle", criterion_2),
        ("3 Z/M series", criterion_3),
        ("4 automata", criterion_4),
        ("5 telescoping", criterion_5),
        ("6 generating functions", criterion_6),
        ("7 rank generating function", criterion_7),
        ("8 zeta powers", criterion_8),
        ("9 closed forms", criterion_9),
        ("10 sum identity", criterion_10),
        ("11 lambda conjecture", criterion_11),
        ("12 display discrepancies", criterion_12),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failures += 1;
                println!("FAIL {name}: {detail} ({elapsed:.2?})");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
