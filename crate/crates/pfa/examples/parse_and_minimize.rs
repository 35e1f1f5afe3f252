//! Parse an automaton from the text format, minimize it, and measure its
//! accepting-state complexity.
//!
//! ```bash
//! cargo run -p pfa --example parse_and_minimize
//! ```

use pfa::format;

// Three states, but states 2 and 3 accept exactly the same suffixes.
const PADDED: &str = "
# accepts every word with at least one letter
alphabet: a b
states: 3
initial: 1
finals: 2 3
trans a: 2 3 2
trans b: 3 2 3
";

fn main() {
    let dfa = format::parse(PADDED).expect("example input parses");
    println!("parsed {} states over {:?}", dfa.state_count(), dfa.alphabet());

    for word in ["", "a", "ba", "abab"] {
        println!("  accepts({word:?}) = {}", dfa.accepts(word).unwrap());
    }

    let minimal = dfa.minimize();
    println!(
        "minimal automaton has {} states and {} finals (asc = {})",
        minimal.state_count(),
        minimal.finals().len(),
        dfa.asc()
    );
    assert!(dfa.equivalent(&minimal).unwrap());

    println!("canonical text form:\n{}", format::write(&minimal));
}
