//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by automaton construction, text parsing, and the group
/// and quotient operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word contains a letter outside the automaton's alphabet.
    #[error("letter '{0}' is not in the alphabet")]
    UnknownLetter(char),

    /// A binary operation was given automata over different alphabets.
    #[error("automata must share the same alphabet")]
    AlphabetMismatch,

    /// Two permutations (or a permutation set and a final set) disagree on
    /// the size of the carrier.
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    /// A letter of the automaton does not act as a bijection on the states.
    #[error("every letter must act as a bijection on the state set")]
    NotPermutation,

    /// An orbit or stabilizer was requested from a set that is not verified
    /// closed under composition.
    #[error("operation requires a composition-closed permutation set")]
    NotClosed,

    /// A closure computation grew past its element cap.
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    /// A point index lies outside `1..=degree`.
    #[error("index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    /// Witness parameters violate `m >= 1`, `n >= 1`, or `alpha >= m`.
    #[error("invalid parameters: {0}")]
    BadParams(String),

    /// A witness triple re-measurement did not reproduce the requested
    /// complexities. This signals an implementation bug, never an expected
    /// outcome.
    #[error("witness check failed: expected asc triple {expected:?}, measured {measured:?}")]
    WitnessCheckFailed {
        expected: (usize, usize, usize),
        measured: (usize, usize, usize),
    },

    /// A `Dfa` constructor argument violates the representation invariants.
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    /// A permutation constructor argument is not a bijection of `1..=k`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// The text format could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
