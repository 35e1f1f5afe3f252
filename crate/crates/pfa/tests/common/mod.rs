//! Shared corpus and generators for the integration suites.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pfa::dfa::{Dfa, StateId};
use pfa::quotient::right_quotient;
use pfa::witness::{self, WitnessParams};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn build(
    states: usize,
    alphabet: &str,
    rows: &[&[StateId]],
    initial: StateId,
    finals: &[StateId],
) -> Dfa {
    Dfa::new(
        states,
        alphabet.chars().collect(),
        rows.iter().map(|r| r.to_vec()).collect(),
        initial,
        finals.iter().copied().collect(),
    )
    .unwrap()
}

pub fn random_dfa(rng: &mut ChaCha8Rng, max_states: usize, max_letters: usize) -> Dfa {
    let states = rng.random_range(1..=max_states);
    let letters = rng.random_range(1..=max_letters);
    let alphabet: Vec<char> = ('a'..).take(letters).collect();
    let rows = (0..letters)
        .map(|_| (0..states).map(|_| rng.random_range(1..=states)).collect())
        .collect();
    let initial = rng.random_range(1..=states);
    let finals: BTreeSet<StateId> = (1..=states).filter(|_| rng.random_bool(0.4)).collect();
    Dfa::new(states, alphabet, rows, initial, finals).unwrap()
}

/// Random complete DFA over a fixed alphabet size, for same-alphabet pairs.
pub fn random_dfa_over(rng: &mut ChaCha8Rng, letters: usize, max_states: usize) -> Dfa {
    let states = rng.random_range(1..=max_states);
    let alphabet: Vec<char> = ('a'..).take(letters).collect();
    let rows = (0..letters)
        .map(|_| (0..states).map(|_| rng.random_range(1..=states)).collect())
        .collect();
    let initial = rng.random_range(1..=states);
    let finals: BTreeSet<StateId> = (1..=states).filter(|_| rng.random_bool(0.4)).collect();
    Dfa::new(states, alphabet, rows, initial, finals).unwrap()
}

pub fn random_permutation_dfa(
    rng: &mut ChaCha8Rng,
    max_states: usize,
    max_letters: usize,
) -> Dfa {
    let states = rng.random_range(1..=max_states);
    let letters = rng.random_range(1..=max_letters);
    let alphabet: Vec<char> = ('a'..).take(letters).collect();
    let rows = (0..letters)
        .map(|_| {
            let mut row: Vec<StateId> = (1..=states).collect();
            for i in (1..states).rev() {
                let j = rng.random_range(0..=i);
                row.swap(i, j);
            }
            row
        })
        .collect();
    let initial = rng.random_range(1..=states);
    let finals: BTreeSet<StateId> = (1..=states).filter(|_| rng.random_bool(0.4)).collect();
    Dfa::new(states, alphabet, rows, initial, finals).unwrap()
}

/// The fixed test corpus: witnesses, their quotients, unary cycles, edge
/// cases, and seeded random automata. Everything stays at 12 states or
/// fewer over at most 3 letters.
pub fn corpus() -> Vec<Dfa> {
    let mut automata = Vec::new();

    for (m, n, alpha) in [(1, 1, 1), (1, 1, 2), (2, 1, 3), (2, 2, 3), (3, 1, 4)] {
        let params = WitnessParams::new(m, n, alpha).unwrap();
        let source = witness::quotient_source(&params);
        let divisor = witness::quotient_divisor(&params);
        let quotient = right_quotient(source.as_dfa(), divisor.as_dfa()).unwrap();
        automata.push(quotient.automaton);
        automata.push(source.into_dfa());
        if divisor.state_count() <= 12 {
            automata.push(divisor.into_dfa());
        }
    }
    for t in 0..=6 {
        automata.push(witness::unary_cycle(t).into_dfa());
    }

    // edge cases: empty language, full language, a sink, duplicated states,
    // an unreachable orbit
    automata.push(build(1, "ab", &[&[1], &[1]], 1, &[]));
    automata.push(build(1, "ab", &[&[1], &[1]], 1, &[1]));
    automata.push(build(3, "ab", &[&[2, 3, 3], &[1, 3, 3]], 1, &[2]));
    automata.push(build(3, "ab", &[&[2, 1, 1], &[3, 1, 1]], 1, &[2, 3]));
    automata.push(build(4, "a", &[&[2, 1, 4, 3]], 1, &[1, 3]));

    let mut rng = seeded_rng(0x5eed);
    for _ in 0..12 {
        automata.push(random_dfa(&mut rng, 8, 3));
        automata.push(random_permutation_dfa(&mut rng, 8, 3));
    }
    automata
}

/// All words over the automaton's alphabet up to the given length,
/// shortest first.
pub fn words_up_to(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &frontier {
            for &letter in alphabet {
                let mut longer = word.clone();
                longer.push(letter);
                next.push(longer);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words
}
