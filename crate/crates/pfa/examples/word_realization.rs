//! Realize permutations as positive words over the two-generator action:
//! `a` the full cycle on [k], `b` the swap of 1 and 2.
//!
//! The word a^{k-(i-1)} b a^{i-1} acts as the adjacent transposition
//! (i i+1), and chaining such words along a bubble-sort decomposition
//! realizes any permutation. Elements fixing k never need to move it,
//! which is why the divisor witness accepts a word for every stabilizer
//! element.
//!
//! ```bash
//! cargo run -p pfa --example word_realization
//! ```

use pfa::perm::{
    adjacent_transposition_word, word_action, word_for_permutation, Permutation,
    PermutationSet,
};
use pfa::witness::{quotient_source, WitnessParams};

fn main() {
    let k = 5;
    println!("adjacent transpositions on [{k}]:");
    for i in 1..k {
        let word = adjacent_transposition_word(i, k).unwrap();
        let induced = word_action(&word, k).unwrap();
        println!("  ({i} {}) realized by {word:?} -> {induced}", i + 1);
    }

    // round-trip every element of S_4 through its realizing word, checking
    // on the abstract action and on the witness automaton
    let source = quotient_source(&WitnessParams::new(1, 1, 3).unwrap());
    let mut longest = (String::new(), Permutation::identity(4));
    for target in PermutationSet::symmetric(4).unwrap().iter() {
        let word = word_for_permutation(target);
        assert_eq!(&word_action(&word, 4).unwrap(), target);
        assert_eq!(&source.induced_permutation(&word).unwrap(), target);
        if word.len() > longest.0.len() {
            longest = (word, target.clone());
        }
    }
    println!("\nall 24 elements of S_4 round-trip through their words");
    println!(
        "longest word: {:?} ({} letters) for {}",
        longest.0,
        longest.0.len(),
        longest.1
    );
}
