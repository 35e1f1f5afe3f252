//! Exhaustively check that a right quotient of two nonempty
//! permutation-automaton languages is never empty.
//!
//! Bijective transitions force the saturated final set to stay nonempty:
//! for any final state f and divisor word w some state maps onto f under
//! w, and on the accessible part that state is reachable. The scan
//! enumerates every small permutation automaton, dedupes by language, and
//! quotients all pairs looking for a counterexample it should never find.
//!
//! ```bash
//! cargo run -p pfa --example zero_scan
//! ```

use pfa::spectrum::zero_scan;

fn main() {
    // 3 states keeps the run quick; the CLI defaults to 4
    let report = zero_scan(3, 2);
    print!("{}", report.to_text());
    assert!(report.passed);
}
