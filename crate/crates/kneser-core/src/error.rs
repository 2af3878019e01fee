//! Error type shared by all operations.

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed arguments: out-of-range vertex ids, dimension mismatches,
    /// invalid parameters, improper colorings passed where proper ones are
    /// required, and so on.
    Input(String),
    /// The hypergraph has a singleton edge, so no proper coloring exists.
    /// Deliberately distinct from every numeric outcome.
    Uncolorable { vertex: usize },
    /// A resource guard refused the computation.
    Guard {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    /// An object whose existence is guaranteed could not be produced; this
    /// always indicates a bug, never a property of the input.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Uncolorable { vertex } => {
                write!(f, "uncolorable: singleton edge on vertex {vertex}")
            }
            Error::Guard {
                what,
                limit,
                requested,
            } => write!(f, "guard exceeded: {what} limit {limit}, needed {requested}"),
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl fmt::Display) -> Result<T> {
    Err(Error::Input(alloc::format!("{msg}")))
}
