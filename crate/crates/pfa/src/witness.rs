//! Generators for the explicit witness families: the ternary high-range
//! pair, the unary cycles, and the empty-language acceptor.
//!
//! The pair is parameterized by `(m, n, alpha)` with `k = alpha + 1`. The
//! source automaton acts on `[k]` by the full cycle `a`, the swap `b`, and
//! the identity `c`, with finals `{1, ..., m}`. The divisor acts on
//! `[k] x Z_{n+1}`: `a` and `b` move the first coordinate only, `c` cycles
//! the second, the initial state is `(k, 0)`, and finals are the `(k, i)`
//! with `i != n`. The triple builder re-measures all three complexities
//! instead of trusting the construction.

use crate::dfa::{Dfa, PermutationDfa};
use crate::error::Error;
use crate::quotient::{right_quotient, QuotientResult};

/// Parameters of a witness pair: target complexities `m` for the dividend,
/// `n` for the divisor, and `alpha` for the quotient; `k = alpha + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessParams {
    m: usize,
    n: usize,
    alpha: usize,
}

impl WitnessParams {
    /// Requires `m >= 1`, `n >= 1`, and `alpha >= m` (so the dividend's
    /// final set fits inside `[k-1]` and the top state stays nonfinal).
    pub fn new(m: usize, n: usize, alpha: usize) -> Result<Self, Error> {
        if m < 1 {
            return Err(Error::BadParams(format!("m must be at least 1, got {m}")));
        }
        if n < 1 {
            return Err(Error::BadParams(format!("n must be at least 1, got {n}")));
        }
        if alpha < m {
            return Err(Error::BadParams(format!(
                "alpha must be at least m, got alpha={alpha} < m={m}"
            )));
        }
        Ok(WitnessParams { m, n, alpha })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// The carrier size `k = alpha + 1`.
    pub fn k(&self) -> usize {
        self.alpha + 1
    }
}

fn full_cycle_row(k: usize) -> Vec<usize> {
    (1..=k).map(|p| if p == k { 1 } else { p + 1 }).collect()
}

fn swap_row(k: usize) -> Vec<usize> {
    (1..=k)
        .map(|p| match p {
            1 => 2,
            2 => 1,
            other => other,
        })
        .collect()
}

/// The dividend witness: `k` states, alphabet `{a, b, c}`, finals
/// `{1, ..., m}`; `a` the full cycle, `b` the swap of 1 and 2 (which
/// coincides with `a` when `k = 2`), `c` the identity.
pub fn quotient_source(params: &WitnessParams) -> PermutationDfa {
    let k = params.k();
    let dfa = Dfa::new(
        k,
        vec!['a', 'b', 'c'],
        vec![full_cycle_row(k), swap_row(k), (1..=k).collect()],
        1,
        (1..=params.m()).collect(),
    )
    .expect("witness parameters were validated");
    PermutationDfa::try_from(dfa).expect("all three letters act bijectively")
}

/// The divisor witness on `[k] x Z_{n+1}`, flattened by
/// `(p, i) -> (p-1)(n+1) + i + 1` so golden files are stable.
pub fn quotient_divisor(params: &WitnessParams) -> PermutationDfa {
    let k = params.k();
    let n = params.n();
    let period = n + 1;
    let flat = |p: usize, i: usize| (p - 1) * period + i + 1;

    let cycle = full_cycle_row(k);
    let swap = swap_row(k);
    let mut row_a = Vec::with_capacity(k * period);
    let mut row_b = Vec::with_capacity(k * period);
    let mut row_c = Vec::with_capacity(k * period);
    for p in 1..=k {
        for i in 0..period {
            row_a.push(flat(cycle[p - 1], i));
            row_b.push(flat(swap[p - 1], i));
            row_c.push(flat(p, (i + 1) % period));
        }
    }
    let dfa = Dfa::new(
        k * period,
        vec!['a', 'b', 'c'],
        vec![row_a, row_b, row_c],
        flat(k, 0),
        (0..n).map(|i| flat(k, i)).collect(),
    )
    .expect("witness parameters were validated");
    PermutationDfa::try_from(dfa).expect("all three letters act bijectively")
}

/// The unary cycle automaton: for `t >= 1`, `t + 1` states with
/// `p · a = p + 1 (mod t+1)` and finals `{1, ..., t}`; for `t = 0`, the
/// one-state nonfinal automaton accepting the empty language.
pub fn unary_cycle(t: usize) -> PermutationDfa {
    let states = t + 1;
    let dfa = Dfa::new(
        states,
        vec!['a'],
        vec![full_cycle_row(states)],
        1,
        (1..=t).collect(),
    )
    .expect("cycle tables are valid");
    PermutationDfa::try_from(dfa).expect("a single cycle is bijective")
}

/// A witness pair together with its quotient and the re-measured
/// complexities.
#[derive(Debug, Clone)]
pub struct WitnessTriple {
    pub params: WitnessParams,
    pub source: PermutationDfa,
    pub divisor: PermutationDfa,
    pub quotient: QuotientResult,
    /// Measured `(asc(K), asc(L), asc(K L^{-1}))`.
    pub measured: (usize, usize, usize),
}

/// Builds the pair, quotients them, and measures all three complexities.
/// A mismatch against `(m, n, alpha)` is reported as `WitnessCheckFailed`;
/// it would signal an implementation bug, never an expected outcome.
pub fn witness_triple(params: &WitnessParams) -> Result<WitnessTriple, Error> {
    let source = quotient_source(params);
    let divisor = quotient_divisor(params);
    let quotient = right_quotient(source.as_dfa(), divisor.as_dfa())?;
    let measured = (
        source.asc(),
        divisor.asc(),
        quotient.automaton.asc(),
    );
    let expected = (params.m(), params.n(), params.alpha());
    if measured != expected {
        return Err(Error::WitnessCheckFailed { expected, measured });
    }
    Ok(WitnessTriple {
        params: *params,
        source,
        divisor,
        quotient,
        measured,
    })
}
