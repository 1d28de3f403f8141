//! Poset selectors, poset files, words and type vectors from the command line.

use std::fs;
use std::path::Path;

use composet::genfun::TypeVector;
use composet::poset::{make_antichain, make_chain, make_lambda};
use composet::{Poset, Word};
use serde::Deserialize;

use crate::Failure;

/// On-disk poset: element names and cover pairs `[lower, upper]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

pub fn parse_poset(text: &str) -> Result<Poset, Failure> {
    let file: PosetFile =
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("poset file: {e}")))?;
    Ok(Poset::from_named_covers(&file.elements, &file.covers)?)
}

pub fn load_poset(path: &Path) -> Result<Poset, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_poset(&text)
}

fn size_arg(text: &str, what: &str) -> Result<usize, Failure> {
    text.parse()
        .map_err(|_| Failure::Usage(format!("{what} needs a positive integer, got {text:?}")))
}

/// `chain:N | antichain:Q | lambda | file:PATH`.
pub fn select_poset(selector: &str) -> Result<Poset, Failure> {
    match selector.split_once(':') {
        Some(("chain", n)) => Ok(make_chain(size_arg(n, "chain")?)?),
        Some(("antichain", q)) => Ok(make_antichain(size_arg(q, "antichain")?)?),
        Some(("file", path)) => load_poset(Path::new(path)),
        None if selector == "lambda" => Ok(make_lambda()),
        _ => Err(Failure::Usage(format!(
            "unknown poset {selector:?}; expected chain:N, antichain:Q, lambda or file:PATH"
        ))),
    }
}

fn is_empty_word(text: &str) -> bool {
    let t = text.trim();
    t.is_empty() || t == "ε"
}

/// The explicit poset, or the chain on the largest letter in `words`.
pub fn resolve_poset(selector: Option<&str>, words: &[&str]) -> Result<Poset, Failure> {
    if let Some(s) = selector {
        return select_poset(s);
    }
    let mut largest = 1;
    for w in words.iter().filter(|w| !is_empty_word(w)) {
        for part in w.split(',') {
            let k: usize = part.trim().parse().map_err(|_| {
                Failure::Usage(format!(
                    "letter {part:?} is not a positive integer; pass --poset"
                ))
            })?;
            largest = largest.max(k);
        }
    }
    Ok(make_chain(largest)?)
}

pub fn parse_word(text: &str, poset: &Poset) -> Result<Word, Failure> {
    Word::parse(text, poset).map_err(|e| Failure::Usage(e.to_string()))
}

/// Comma-separated multiplicities, zero-padded to `size` when given.
pub fn parse_type(text: &str, size: Option<usize>) -> Result<TypeVector, Failure> {
    let mut counts = Vec::new();
    if !text.trim().is_empty() {
        for part in text.split(',') {
            counts.push(part.trim().parse::<usize>().map_err(|_| {
                Failure::Usage(format!(
                    "type entries are nonnegative integers, got {part:?}"
                ))
            })?);
        }
    }
    if let Some(n) = size {
        if counts.len() > n {
            if counts[n..].iter().any(|&c| c > 0) {
                return Err(Failure::Usage(format!(
                    "type vector has a nonzero entry past n = {n}"
                )));
            }
            counts.truncate(n);
        }
        counts.resize(n, 0);
    }
    Ok(TypeVector::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!(select_poset("chain:3").unwrap().len(), 3);
        assert_eq!(select_poset("antichain:2").unwrap().len(), 2);
        assert!(!select_poset("lambda").unwrap().is_rooted_forest());
        assert!(matches!(select_poset("chain:x"), Err(Failure::Usage(_))));
        assert!(matches!(select_poset("tree"), Err(Failure::Usage(_))));
    }

    #[test]
    fn default_poset_is_largest_letter() {
        assert_eq!(resolve_poset(None, &["2,1", "1,4"]).unwrap().len(), 4);
        assert_eq!(resolve_poset(None, &["", "ε"]).unwrap().len(), 1);
        assert!(resolve_poset(None, &["a"]).is_err());
    }

    #[test]
    fn poset_file_round_trips() {
        let lambda =
            parse_poset(r#"{"elements":["a","b","c"],"covers":[["a","c"],["b","c"]]}"#).unwrap();
        assert_eq!(lambda.cover_pairs(), make_lambda().cover_pairs());
        let chain =
            parse_poset(r#"{"elements":["1","2","3"],"covers":[["1","2"],["2","3"]]}"#).unwrap();
        assert!(chain.is_index_chain());
        let cyclic = parse_poset(r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#);
        assert!(matches!(
            cyclic,
            Err(Failure::Domain(composet::Error::CyclicCovers))
        ));
        assert!(parse_poset(r#"{"elements":["a"]}"#).is_err());
    }

    #[test]
    fn type_padding() {
        assert_eq!(parse_type("0,0", Some(3)).unwrap().counts(), &[0, 0, 0]);
        assert_eq!(parse_type("1,2", None).unwrap().counts(), &[1, 2]);
        assert_eq!(parse_type("1,0,0", Some(1)).unwrap().counts(), &[1]);
        assert!(parse_type("1,0,2", Some(2)).is_err());
        assert!(parse_type("x", None).is_err());
    }
}
