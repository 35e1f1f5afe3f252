//! The full verification run for one (m, n): witness triples for the high
//! range, the unary search for the low range, and the zero scan, combined
//! into a single pass/fail report.
//!
//! ```bash
//! cargo run -p pfa --example verify_theorem
//! ```

use pfa::spectrum::{verify_theorem, TheoremConfig};

fn main() {
    let config = TheoremConfig {
        alpha_max: 6,
        cycle_bound: 10,
        state_bound: 3,
        alphabet_bound: 2,
    };
    let report = verify_theorem(2, 2, config).unwrap();
    print!("{}", report.to_text());
    assert!(report.passed);
}
