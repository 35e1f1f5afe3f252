//! Brute-force the unary right-quotient spectrum.
//!
//! Unary permutation automata are single cycles; a cycle with final set F
//! is minimal exactly when F's least cyclic period equals the cycle
//! length. Enumerating all minimal cycles up to a length bound and
//! quotienting every pair reveals which complexities are attainable: for
//! positive m and n the attained set covers [1, mn].
//!
//! ```bash
//! cargo run -p pfa --example unary_spectrum
//! ```

use pfa::spectrum::unary_bruteforce;

fn main() {
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        let report = unary_bruteforce(m, n, 10);
        println!("{}", report.to_text());
    }
}
