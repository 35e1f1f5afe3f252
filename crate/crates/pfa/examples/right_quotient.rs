//! Right-quotient two languages and cross-check the construction against
//! the independent membership oracle.
//!
//! The quotient automaton is the dividend with its final set replaced by
//! the saturated set: the states from which some divisor word reaches an
//! original final state.
//!
//! ```bash
//! cargo run -p pfa --example right_quotient
//! ```

use pfa::format;
use pfa::quotient::{member_of_quotient, right_quotient};

// words over {a, b} whose length is divisible by 3
const DIVIDEND: &str = "
alphabet: a b
states: 3
initial: 1
finals: 1
trans a: 2 3 1
trans b: 2 3 1
";

// words of length exactly 1
const DIVISOR: &str = "
alphabet: a b
states: 3
initial: 1
finals: 2
trans a: 2 3 3
trans b: 2 3 3
";

fn main() {
    let dividend = format::parse(DIVIDEND).unwrap();
    let divisor = format::parse(DIVISOR).unwrap();

    let result = right_quotient(&dividend, &divisor).unwrap();
    println!("saturated finals: {:?}", result.saturated_finals);
    println!("asc of the quotient: {}", result.automaton.asc());
    println!("quotient automaton:\n{}", format::write(&result.automaton));

    // the quotient should accept exactly the words of length = 2 mod 3
    for word in ["", "a", "ab", "aba", "babba"] {
        let via_automaton = result.automaton.accepts(word).unwrap();
        let via_search = member_of_quotient(&dividend, &divisor, word).unwrap();
        assert_eq!(via_automaton, via_search);
        println!("  {word:?} in K L^-1: {via_automaton}");
    }
}
