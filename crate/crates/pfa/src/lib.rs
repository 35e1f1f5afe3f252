//! Permutation automata, accepting-state complexity, and right quotients.
//!
//! A permutation automaton is a complete DFA in which every letter acts as
//! a bijection on the states; the accepting-state complexity `asc(L)` of a
//! regular language is the least number of final states any DFA for it can
//! have, which equals the final count of the minimal DFA. This crate
//! implements the automata, the group actions their words induce, and the
//! right-quotient construction `K L^{-1}` via final-set saturation, plus
//! brute-force searches that pin down which quotient complexities small
//! inputs can reach.
//!
//! The pieces:
//!
//! - [`dfa`]: complete DFAs over `1..=n`, execution, accessibility,
//!   canonical minimization, product-based equivalence, `asc`, and the
//!   permutation-automaton refinement with induced word permutations.
//! - [`perm`]: permutations of `[k]`, generated closures, orbits, point
//!   stabilizers, and positive-word realization over the two-generator
//!   action (full cycle and swap).
//! - [`quotient`]: the saturated-final-set quotient `A/B`, a membership
//!   oracle that bypasses it, and the divisor's induced permutation set.
//! - [`witness`]: the ternary witness pair hitting`(m, n, alpha)` exactly,
//!   plus unary cycle automata.
//! - [`spectrum`]: exhaustive desk-scale scans and verification reports.
//! - [`format`](mod@format): the line-oriented text format all tools read
//!   and write.
//!
//! Every operation is a pure function over immutable values, so shared
//! inputs can be used from multiple threads freely.
//!
//! # Example
//!
//! ```
//! use pfa::witness::{witness_triple, WitnessParams};
//!
//! // a pair of permutation automata with asc 2 and 3 whose right quotient
//! // has asc 5
//! let params = WitnessParams::new(2, 3, 5).unwrap();
//! let triple = witness_triple(&params).unwrap();
//! assert_eq!(triple.measured, (2, 3, 5));
//! assert_eq!(triple.quotient.saturated_finals, (1..=5).collect());
//! ```

pub mod dfa;
pub mod error;
pub mod format;
pub mod perm;
pub mod quotient;
pub mod spectrum;
pub mod witness;

pub use dfa::{Dfa, PermutationDfa, StateId};
pub use error::Error;
pub use perm::{Permutation, PermutationSet};
pub use quotient::{right_quotient, QuotientResult};
pub use witness::{witness_triple, WitnessParams, WitnessTriple};
