use std::fmt::Write;

use composet::automata::{accept_series, build_m_automaton, build_z_automaton};
use composet::chebyshev::lambda_table;
use composet::genfun::{self, RationalFn, TypeVector};
use composet::incidence::{interval, mobius_normal, IntervalCache};
use composet::ncseries::{series_m, series_z};
use composet::verify::{self, Report};
use composet::words::{all_embeddings, defect, normal_embeddings};
use composet::{Grading, Poset, Word};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{Cli, Command, GenfunKind, Method, SeriesKind, VerifyKind};
use crate::input::{parse_type, parse_word, resolve_poset, select_poset};
use crate::Failure;

/// What a command produced. `ok` is false when a check ran but failed.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn ints(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(int).collect())
}

fn word_pair(cli: &Cli, u: &str, w: &str) -> Result<(Poset, Word, Word), Failure> {
    let poset = resolve_poset(cli.poset.as_deref(), &[u, w])?;
    let u = parse_word(u, &poset)?;
    let w = parse_word(w, &poset)?;
    Ok((poset, u, w))
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Mobius { u, w, method } => mobius(cli, u, w, *method),
        Command::ZetaPower { u, w, m } => {
            let (poset, u, w) = word_pair(cli, u, w)?;
            let value = IntervalCache::new(&poset).zeta_power(&u, &w, *m);
            Ok(Output::new(
                format!("zeta^{m}={value}"),
                json!({ "m": m, "value": int(&value) }),
            ))
        }
        Command::Interval { u, w } => {
            let (poset, u, w) = word_pair(cli, u, w)?;
            let members: Vec<String> = interval(&u, &w, &poset)
                .iter()
                .map(|v| v.display(&poset).to_string())
                .collect();
            Ok(Output::new(
                members.join("\n"),
                json!({ "interval": members }),
            ))
        }
        Command::Embeddings { u, w, normal } => embeddings(cli, u, w, *normal),
        Command::Series { kind, u } => series(cli, *kind, u),
        Command::Automaton {
            kind, n, accept, ..
        } => automaton(*kind, *n, *accept),
        Command::Genfun {
            kind,
            type_vector,
            n,
            m,
            taylor,
        } => genfun_cmd(cli, *kind, type_vector.as_deref(), *n, *m, *taylor),
        Command::Verify { check, n, max } => verify_cmd(cli, *check, *n, *max),
        Command::Lambda { max } => Ok(lambda(*max)),
    }
}

fn mobius(cli: &Cli, u: &str, w: &str, method: Method) -> Result<Output, Failure> {
    let (poset, u, w) = word_pair(cli, u, w)?;
    let method_name = match method {
        Method::Normal => "normal",
        Method::Oracle => "oracle",
        Method::Both => "both",
    };
    match method {
        Method::Normal | Method::Oracle => {
            let mu = if method == Method::Normal {
                mobius_normal(&u, &w, &poset)?
            } else {
                IntervalCache::new(&poset).mobius(&u, &w)
            };
            Ok(Output::new(
                format!("mu={mu}"),
                json!({ "method": method_name, "mu": int(&mu) }),
            ))
        }
        Method::Both => {
            let normal = mobius_normal(&u, &w, &poset)?;
            let oracle = IntervalCache::new(&poset).mobius(&u, &w);
            let agree = normal == oracle;
            let text = if agree {
                format!("mu={oracle} agree=true")
            } else {
                format!("mu={oracle} normal={normal} agree=false")
            };
            Ok(Output::new(
                text,
                json!({
                    "method": method_name,
                    "mu": int(&oracle),
                    "normal": int(&normal),
                    "agree": agree,
                }),
            ))
        }
    }
}

fn embeddings(cli: &Cli, u: &str, w: &str, normal: bool) -> Result<Output, Failure> {
    let (poset, u, w) = word_pair(cli, u, w)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    if normal {
        let mut sum = BigInt::from(0);
        for e in normal_embeddings(&u, &w, &poset)? {
            let d = defect(&e, &poset)?;
            sum += if d % 2 == 0 { 1 } else { -1 };
            let shown = e.display(&poset).to_string();
            let _ = writeln!(text, "{shown} defect={d}");
            rows.push(json!({ "embedding": shown, "defect": d }));
        }
        let _ = write!(text, "mu={sum}");
        Ok(Output::new(
            text,
            json!({ "normal": rows, "mu": int(&sum) }),
        ))
    } else {
        let all = all_embeddings(&u, &w, &poset);
        for e in &all {
            let shown = e.display(&poset).to_string();
            let _ = writeln!(text, "{shown}");
            rows.push(Value::String(shown));
        }
        let _ = write!(text, "count={}", all.len());
        Ok(Output::new(text, json!({ "embeddings": rows })))
    }
}

fn series(cli: &Cli, kind: SeriesKind, u: &str) -> Result<Output, Failure> {
    let poset = resolve_poset(cli.poset.as_deref(), &[u])?;
    let u = parse_word(u, &poset)?;
    let grading = cli.grading.map_or(Grading::Length, Grading::from);
    let bound = cli.bound.unwrap_or(5);
    let s = match kind {
        SeriesKind::Z => series_z(&u, &poset, grading, bound)?,
        SeriesKind::M => series_m(&u, &poset, grading, bound)?,
    };
    let terms: Vec<Value> = s
        .terms()
        .into_iter()
        .map(|(w, c)| json!({ "word": w.display(&poset).to_string(), "coeff": int(c) }))
        .collect();
    let text = s.display(&poset).to_string();
    Ok(Output::new(
        text.trim_end().to_string(),
        json!({ "bound": bound, "terms": terms }),
    ))
}

fn automaton(kind: SeriesKind, n: usize, accept: Option<usize>) -> Result<Output, Failure> {
    let a = match kind {
        SeriesKind::Z => build_z_automaton(n)?,
        SeriesKind::M => build_m_automaton(n)?,
    };
    match accept {
        None => {
            let dump = a.dump();
            let arcs: Vec<&str> = dump.lines().collect();
            Ok(Output::new(
                dump.trim_end().to_string(),
                json!({ "arcs": arcs }),
            ))
        }
        Some(bound) => {
            let s = accept_series(&a, bound)?;
            let poset = a.poset();
            let terms: Vec<Value> = s
                .terms()
                .into_iter()
                .map(|(u, w, c)| {
                    json!({
                        "u": u.display(poset).to_string(),
                        "w": w.display(poset).to_string(),
                        "coeff": int(c),
                    })
                })
                .collect();
            Ok(Output::new(
                s.display(poset).to_string().trim_end().to_string(),
                json!({ "bound": bound, "terms": terms }),
            ))
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("this genfun kind needs {flag}")))
}

fn function_output(
    labelled: Vec<(String, RationalFn)>,
    var: char,
    taylor: Option<usize>,
) -> Result<Output, Failure> {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for (label, f) in &labelled {
        let shown = f.display(var).to_string();
        let series = match taylor {
            Some(d) => Some(f.taylor(d)?),
            None => None,
        };
        let prefix = if label.is_empty() {
            String::new()
        } else {
            format!("{label} = ")
        };
        lines.push(format!("{prefix}{shown}"));
        if let Some(c) = &series {
            let joined: Vec<String> = c.iter().map(BigInt::to_string).collect();
            lines.push(joined.join(","));
        }
        let mut entry = json!({
            "function": shown,
            "numerator": ints(f.numerator().coeffs()),
            "denominator": ints(f.denominator().coeffs()),
        });
        if !label.is_empty() {
            entry["name"] = Value::String(label.clone());
        }
        if let Some(c) = &series {
            entry["taylor"] = ints(c);
        }
        entries.push(entry);
    }
    let json = if entries.len() == 1 {
        entries.pop().expect("one entry")
    } else {
        json!({ "functions": entries })
    };
    Ok(Output::new(lines.join("\n"), json))
}

fn genfun_cmd(
    cli: &Cli,
    kind: GenfunKind,
    type_text: Option<&str>,
    n: Option<usize>,
    m: Option<usize>,
    taylor: Option<usize>,
) -> Result<Output, Failure> {
    let chain_type = || -> Result<(TypeVector, usize), Failure> {
        let text = need(type_text, "--type")?;
        let raw = parse_type(text, None)?;
        let n = n.unwrap_or(raw.size().max(1));
        Ok((parse_type(text, Some(n))?, n))
    };
    let grading = cli.grading.map_or(Grading::Norm, Grading::from);
    let single = |f: RationalFn, var: char| function_output(vec![(String::new(), f)], var, taylor);
    match kind {
        GenfunKind::Znorm => {
            let (t, n) = chain_type()?;
            single(genfun::z_norm(&t, n)?, 'x')
        }
        GenfunKind::Mnorm => {
            let (t, n) = chain_type()?;
            single(genfun::m_norm(&t, n)?, 'x')
        }
        GenfunKind::Zlen => {
            let (t, n) = chain_type()?;
            single(genfun::z_len(&t, n)?, 't')
        }
        GenfunKind::Mlen => {
            let (t, n) = chain_type()?;
            single(genfun::m_len(&t, n)?, 't')
        }
        GenfunKind::ZPnorm => {
            let t = parse_type(need(type_text, "--type")?, None)?;
            single(genfun::z_p_norm(&t), 'x')
        }
        GenfunKind::MPnorm => {
            let t = parse_type(need(type_text, "--type")?, None)?;
            single(genfun::m_p_norm(&t), 'x')
        }
        GenfunKind::Zgen | GenfunKind::Mgen => {
            let poset = match (&cli.poset, n) {
                (Some(s), _) => select_poset(s)?,
                (None, Some(n)) => select_poset(&format!("chain:{n}"))?,
                (None, None) => return Err(Failure::Usage("pass --poset or --n".into())),
            };
            let t = parse_type(type_text.unwrap_or(""), Some(poset.len()))?;
            let f = if kind == GenfunKind::Zgen {
                genfun::z_len_general(&poset, &t)?
            } else {
                genfun::m_len_general(&poset, &t)?
            };
            single(f, 't')
        }
        GenfunKind::Zetapow => {
            let (t, n) = chain_type()?;
            let m = need(m, "--m")?;
            single(
                genfun::zeta_power_genfun(&t, n, m, grading)?,
                genfun::variable(grading),
            )
        }
        GenfunKind::AmBm => {
            let m = need(m, "--m")?;
            let (a, b) = match grading {
                Grading::Norm => genfun::closed_am_bm_norm(m),
                Grading::Length => genfun::closed_am_bm_len(m),
            };
            function_output(
                vec![(format!("a_{m}"), a), (format!("b_{m}"), b)],
                genfun::variable(grading),
                taylor,
            )
        }
        GenfunKind::Fiterate => {
            let n = need(n, "--n")?;
            let m = need(m, "--m")?;
            if n == 0 {
                return Err(Failure::Usage("--n must be positive".into()));
            }
            let labelled = genfun::f_iterate(n, grading, m)
                .into_iter()
                .enumerate()
                .map(|(k, f)| (format!("A_{}", k + 1), f))
                .collect();
            function_output(labelled, genfun::variable(grading), taylor)
        }
    }
}

fn report_output(report: Report) -> Output {
    let lines: Vec<Value> = report
        .lines
        .iter()
        .map(|l| json!({ "name": l.name, "passed": l.passed, "detail": l.detail }))
        .collect();
    let ok = report.passed();
    Output {
        text: report.to_string(),
        json: json!({ "title": report.title, "passed": ok, "lines": lines }),
        ok,
    }
}

fn verify_cmd(
    cli: &Cli,
    check: VerifyKind,
    n: Option<usize>,
    max: Option<usize>,
) -> Result<Output, Failure> {
    let report = match check {
        VerifyKind::Telescoping => verify::telescoping_report(
            n.unwrap_or(8),
            cli.grading.map_or(Grading::Norm, Grading::from),
            cli.bound.unwrap_or(8),
        )?,
        VerifyKind::SumIdentity => verify::sum_identity_report(max.unwrap_or(12)),
        VerifyKind::ClosedForms => verify::closed_forms_report(max.unwrap_or(12)),
        VerifyKind::OracleSuite => verify::oracle_suite_report()?,
        VerifyKind::Displays => verify::display_discrepancies_report()?,
    };
    Ok(report_output(report))
}

fn lambda(max: usize) -> Output {
    let cells = lambda_table(max);
    let width = cells
        .iter()
        .map(|c| c.cell().chars().count())
        .max()
        .unwrap_or(1)
        .max(3);
    let mut text = format!("{:>3}", "i\\j");
    for j in 0..=max {
        let _ = write!(text, "  {j:>width$}");
    }
    for i in 0..=max {
        let _ = write!(text, "\n{i:>3}");
        for j in 0..=max {
            let cell = cells
                .iter()
                .find(|c| c.i == i && c.j == j)
                .map_or_else(|| "-".to_string(), |c| c.cell());
            let _ = write!(text, "  {cell:>width$}");
        }
    }
    let all_agree = cells.iter().all(|c| c.agree);
    let rows: Vec<Value> = cells
        .iter()
        .map(|c| {
            json!({
                "i": c.i,
                "j": c.j,
                "mu": int(&c.mu),
                "coeff": int(&c.coeff),
                "agree": c.agree,
            })
        })
        .collect();
    if !all_agree {
        text.push_str("\nMISMATCH found");
    }
    Output::new(text, json!({ "cells": rows, "all_agree": all_agree }))
}
