//! Plain-text serialization of automata.
//!
//! ```text
//! # comments run from '#' to the end of the line
//! alphabet: a b c
//! states: 4
//! initial: 1
//! finals: 1 2
//! trans a: 2 3 4 1
//! trans b: 2 1 3 4
//! trans c: 1 2 3 4
//! ```
//!
//! Tokens are whitespace-separated, lines may appear in any order, and every
//! alphabet letter needs exactly one `trans` line giving the image of states
//! `1..=n` in order. Letters are single characters. The writer always emits
//! the layout above with single spaces and a trailing newline, so output is
//! byte-stable.

use std::collections::BTreeSet;

use crate::dfa::{Dfa, StateId};
use crate::error::Error;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(token: &str, line: usize, what: &str) -> Result<usize, Error> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("{what} must be a number, found {token:?}")))
}

/// Parses the text format into a [`Dfa`].
pub fn parse(input: &str) -> Result<Dfa, Error> {
    let mut alphabet: Option<(Vec<char>, usize)> = None;
    let mut states: Option<(usize, usize)> = None;
    let mut initial: Option<(StateId, usize)> = None;
    let mut finals: Option<(BTreeSet<StateId>, usize)> = None;
    let mut trans: Vec<(char, Vec<StateId>, usize)> = Vec::new();

    for (number, raw) in input.lines().enumerate() {
        let number = number + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(parse_error(number, format!("expected 'key: values', found {line:?}")));
        };
        let key_tokens: Vec<&str> = key.split_whitespace().collect();
        let values: Vec<&str> = rest.split_whitespace().collect();
        match key_tokens.as_slice() {
            ["alphabet"] => {
                if alphabet.is_some() {
                    return Err(parse_error(number, "duplicate 'alphabet' line"));
                }
                let mut letters = Vec::new();
                for token in &values {
                    let mut chars = token.chars();
                    match (chars.next(), chars.next()) {
                        (Some(letter), None) => letters.push(letter),
                        _ => {
                            return Err(parse_error(
                                number,
                                format!("letters are single characters, found {token:?}"),
                            ))
                        }
                    }
                }
                alphabet = Some((letters, number));
            }
            ["states"] => {
                if states.is_some() {
                    return Err(parse_error(number, "duplicate 'states' line"));
                }
                let [token] = values.as_slice() else {
                    return Err(parse_error(number, "'states' takes exactly one number"));
                };
                states = Some((parse_number(token, number, "state count")?, number));
            }
            ["initial"] => {
                if initial.is_some() {
                    return Err(parse_error(number, "duplicate 'initial' line"));
                }
                let [token] = values.as_slice() else {
                    return Err(parse_error(number, "'initial' takes exactly one state"));
                };
                initial = Some((parse_number(token, number, "initial state")?, number));
            }
            ["finals"] => {
                if finals.is_some() {
                    return Err(parse_error(number, "duplicate 'finals' line"));
                }
                let mut set = BTreeSet::new();
                for token in &values {
                    set.insert(parse_number(token, number, "final state")?);
                }
                finals = Some((set, number));
            }
            ["trans", letter_token] => {
                let mut chars = letter_token.chars();
                let letter = match (chars.next(), chars.next()) {
                    (Some(letter), None) => letter,
                    _ => {
                        return Err(parse_error(
                            number,
                            format!("letters are single characters, found {letter_token:?}"),
                        ))
                    }
                };
                if trans.iter().any(|(l, _, _)| *l == letter) {
                    return Err(parse_error(
                        number,
                        format!("duplicate 'trans {letter}' line"),
                    ));
                }
                let row = values
                    .iter()
                    .map(|token| parse_number(token, number, "transition target"))
                    .collect::<Result<Vec<_>, _>>()?;
                trans.push((letter, row, number));
            }
            _ => {
                return Err(parse_error(number, format!("unknown key {key:?}")));
            }
        }
    }

    let (alphabet, _) = alphabet.ok_or_else(|| parse_error(0, "missing 'alphabet' line"))?;
    let (state_count, _) = states.ok_or_else(|| parse_error(0, "missing 'states' line"))?;
    let (initial, _) = initial.ok_or_else(|| parse_error(0, "missing 'initial' line"))?;
    let (finals, _) = finals.ok_or_else(|| parse_error(0, "missing 'finals' line"))?;

    let mut rows = Vec::with_capacity(alphabet.len());
    for &letter in &alphabet {
        match trans.iter().find(|(l, _, _)| *l == letter) {
            Some((_, row, _)) => rows.push(row.clone()),
            None => return Err(parse_error(0, format!("missing 'trans {letter}' line"))),
        }
    }
    if let Some((letter, _, number)) = trans
        .iter()
        .find(|(l, _, _)| !alphabet.contains(l))
    {
        return Err(parse_error(
            *number,
            format!("'trans {letter}' names a letter outside the alphabet"),
        ));
    }

    Dfa::new(state_count, alphabet, rows, initial, finals)
}

/// Writes the text format, bit-exact: fields in fixed order, single spaces,
/// `trans` lines in alphabet order, trailing newline.
pub fn write(dfa: &Dfa) -> String {
    let mut out = String::new();
    out.push_str("alphabet:");
    for letter in dfa.alphabet() {
        out.push(' ');
        out.push(*letter);
    }
    out.push('\n');
    out.push_str(&format!("states: {}\n", dfa.state_count()));
    out.push_str(&format!("initial: {}\n", dfa.initial()));
    out.push_str("finals:");
    for state in dfa.finals() {
        out.push_str(&format!(" {state}"));
    }
    out.push('\n');
    for &letter in dfa.alphabet() {
        out.push_str(&format!("trans {letter}:"));
        for state in 1..=dfa.state_count() {
            let target = dfa.transition(state, letter).expect("letter in alphabet");
            out.push_str(&format!(" {target}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{self, WitnessParams};
    use proptest::prelude::*;

    const SAMPLE: &str = "\
# a four-state example
alphabet: a b c
states: 4
initial: 1
finals: 1 2          # two final states
trans a: 2 3 4 1
trans b: 2 1 3 4
trans c: 1 2 3 4
";

    #[test]
    fn parses_the_documented_layout() {
        let dfa = parse(SAMPLE).unwrap();
        assert_eq!(dfa.state_count(), 4);
        assert_eq!(dfa.alphabet(), &['a', 'b', 'c']);
        assert_eq!(dfa.initial(), 1);
        assert_eq!(dfa.finals(), &[1, 2].into());
        assert_eq!(dfa.run(1, "ab").unwrap(), 1);
    }

    #[test]
    fn lines_in_any_order_and_empty_finals() {
        let shuffled = "\
trans a: 1
finals:
states: 1
alphabet: a
initial: 1
";
        let dfa = parse(shuffled).unwrap();
        assert!(dfa.finals().is_empty());
        assert_eq!(write(&dfa), "alphabet: a\nstates: 1\ninitial: 1\nfinals:\ntrans a: 1\n");
    }

    #[test]
    fn writer_output_is_bit_exact() {
        let dfa = parse(SAMPLE).unwrap();
        let expected = "\
alphabet: a b c
states: 4
initial: 1
finals: 1 2
trans a: 2 3 4 1
trans b: 2 1 3 4
trans c: 1 2 3 4
";
        assert_eq!(write(&dfa), expected);
    }

    #[test]
    fn rejects_malformed_inputs() {
        let multichar = "alphabet: ab\nstates: 1\ninitial: 1\nfinals:\ntrans ab: 1\n";
        assert!(matches!(parse(multichar), Err(Error::Parse { line: 1, .. })));

        let missing_trans = "alphabet: a b\nstates: 1\ninitial: 1\nfinals:\ntrans a: 1\n";
        assert!(parse(missing_trans).is_err());

        let stray_trans = "alphabet: a\nstates: 1\ninitial: 1\nfinals:\ntrans a: 1\ntrans b: 1\n";
        assert!(parse(stray_trans).is_err());

        let duplicate = "states: 1\nstates: 2\n";
        assert!(matches!(parse(duplicate), Err(Error::Parse { line: 2, .. })));

        let bad_target = "alphabet: a\nstates: 2\ninitial: 1\nfinals:\ntrans a: 2 3\n";
        assert!(matches!(parse(bad_target), Err(Error::InvalidAutomaton(_))));

        let bad_number = "alphabet: a\nstates: x\ninitial: 1\nfinals:\ntrans a: 1\n";
        assert!(matches!(parse(bad_number), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn witness_automata_round_trip() {
        for (m, n, alpha) in [(1, 1, 1), (2, 2, 3), (2, 1, 4)] {
            let params = WitnessParams::new(m, n, alpha).unwrap();
            for dfa in [
                witness::quotient_source(&params).into_dfa(),
                witness::quotient_divisor(&params).into_dfa(),
            ] {
                assert_eq!(parse(&write(&dfa)).unwrap(), dfa);
            }
        }
    }

    prop_compose! {
        fn arb_dfa()(states in 1usize..6, letters in 1usize..4)(
            states in Just(states),
            letters in Just(letters),
            rows in proptest::collection::vec(
                proptest::collection::vec(1..=states, states),
                letters,
            ),
            initial in 1..=states,
            finals in proptest::collection::btree_set(1..=states, 0..=states),
        ) -> Dfa {
            let alphabet = ('a'..).take(letters).collect();
            Dfa::new(states, alphabet, rows, initial, finals).unwrap()
        }
    }

    proptest! {
        #[test]
        fn write_parse_round_trip(dfa in arb_dfa()) {
            prop_assert_eq!(parse(&write(&dfa)).unwrap(), dfa);
        }
    }
}
