use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A poset must have at least one element.
    EmptyPoset,
    UnknownElement(String),
    DuplicateElement(String),
    /// The cover relation contains a directed cycle.
    CyclicCovers,
    /// The operation needs a rooted forest (every element has at most one
    /// lower cover).
    NotRootedForest,
    /// Two series with different grading or bound were combined.
    SeriesMismatch,
    /// Star or plus of a series with a nonzero constant term.
    NonzeroConstantTerm,
    DivisionByZero,
    /// A rational function without an integer power series expansion at 0.
    NotExpandable,
    /// An automaton violates a structural invariant.
    MalformedAutomaton(&'static str),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPoset => f.write_str("poset must have at least one element"),
            Error::UnknownElement(name) => write!(f, "unknown poset element `{name}`"),
            Error::DuplicateElement(name) => write!(f, "duplicate poset element `{name}`"),
            Error::CyclicCovers => f.write_str("cover relation contains a cycle"),
            Error::NotRootedForest => {
                f.write_str("unsupported poset: operation requires a rooted forest")
            }
            Error::SeriesMismatch => f.write_str("series have different grading or bound"),
            Error::NonzeroConstantTerm => f.write_str("series has a nonzero constant term"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NotExpandable => {
                f.write_str("rational function has no integer power series expansion at 0")
            }
            Error::MalformedAutomaton(why) => write!(f, "malformed automaton: {why}"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

impl core::error::Error for Error {}
