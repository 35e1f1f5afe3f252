//! The group-theoretic core of the quotient construction: the words
//! accepted by the divisor witness induce exactly the point stabilizer of
//! k in the symmetric group S_k.
//!
//! ```bash
//! cargo run -p pfa --example stabilizer_group
//! ```

use pfa::perm::PermutationSet;
use pfa::quotient::{final_set_via_group, induced_language_group, quotient_final_set};
use pfa::witness::{quotient_divisor, quotient_source, WitnessParams};

fn main() {
    let params = WitnessParams::new(2, 2, 3).unwrap();
    let k = params.k();
    let source = quotient_source(&params);
    let divisor = quotient_divisor(&params);

    // collect { pi_w | w in L(divisor) } as permutations of the dividend
    let induced = induced_language_group(&source, &divisor, 100_000).unwrap();
    println!("induced permutations of [{k}] ({} elements):", induced.len());
    for p in induced.iter() {
        println!("  {p}");
    }

    let symmetric = PermutationSet::symmetric(k).unwrap();
    let stabilizer = symmetric.stabilizer(k).unwrap();
    assert_eq!(induced, stabilizer);
    println!("equals Stab_S{k}({k}) of size (k-1)! = {}", stabilizer.len());

    // the stabilizer moves [k-1] transitively, which is what saturates the
    // final set to the full orbit
    println!("orbit of 1 under the stabilizer: {:?}", stabilizer.orbit(1).unwrap());
    let direct = quotient_final_set(&source, &divisor).unwrap();
    let via_group = final_set_via_group(source.finals(), &induced).unwrap();
    assert_eq!(direct, via_group);
    println!(
        "saturated final set, both routes: {:?} (dividend finals were {:?})",
        direct,
        source.finals()
    );
}
