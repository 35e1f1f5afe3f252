//! Build a witness pair hitting prescribed complexities and re-measure it.
//!
//! For any m, n >= 1 and alpha >= m there is a pair of ternary permutation
//! automata with asc(K) = m, asc(L) = n, and asc(K L^{-1}) = alpha. The
//! triple builder measures all three values from scratch instead of
//! trusting the construction.
//!
//! ```bash
//! cargo run -p pfa --example witness_triple
//! ```

use pfa::format;
use pfa::witness::{witness_triple, WitnessParams};

fn main() {
    for (m, n, alpha) in [(1, 1, 1), (2, 2, 3), (2, 1, 4), (3, 2, 6)] {
        let params = WitnessParams::new(m, n, alpha).unwrap();
        let triple = witness_triple(&params).unwrap();
        let (asc_k, asc_l, asc_q) = triple.measured;
        println!(
            "m={m} n={n} alpha={alpha}: dividend {} states, divisor {} states, \
             measured asc = ({asc_k}, {asc_l}, {asc_q})",
            triple.source.state_count(),
            triple.divisor.state_count(),
        );
        assert_eq!(triple.measured, (m, n, alpha));
    }

    // the smallest instance in full
    let triple = witness_triple(&WitnessParams::new(1, 1, 2).unwrap()).unwrap();
    println!("\ndividend (asc 1):\n{}", format::write(&triple.source));
    println!("divisor (asc 1):\n{}", format::write(&triple.divisor));
    println!("quotient (asc 2):\n{}", format::write(&triple.quotient.automaton));
}
