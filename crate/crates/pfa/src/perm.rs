//! Permutations of `[k] = {1, ..., k}` and finite sets of them.
//!
//! Composition follows word application order: `first.compose(&then)` maps
//! `i` to `(i · first) · then`, so the permutation induced by a word `uv`
//! is `compose(pi_u, pi_v)`. Permutations are stored as image arrays;
//! cycle notation exists only in the printer and parser.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::Error;

/// Default cap on closure sizes: 10!.
pub const DEFAULT_CLOSURE_CAP: usize = 3_628_800;

/// A bijection of `[k]`, stored as the image array `images[i-1] = i·p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `[degree]`.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds a permutation from its image array; `images[i-1]` is the image
    /// of `i`. Fails unless the array is a bijection of `1..=len`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let k = images.len();
        if k == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; k];
        for &v in &images {
            if v < 1 || v > k || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "image array {images:?} is not a bijection of 1..={k}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The full cycle `(1 2 ... k)`.
    pub fn full_cycle(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).map(|i| if i == degree { 1 } else { i + 1 }).collect(),
        }
    }

    /// The transposition `(i j)` on `[degree]`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self, Error> {
        for point in [i, j] {
            if point < 1 || point > degree {
                return Err(Error::IndexOutOfRange {
                    index: point,
                    degree,
                });
            }
        }
        if i == j {
            return Err(Error::InvalidPermutation(
                "transposition needs two distinct points".into(),
            ));
        }
        let mut images: Vec<usize> = (1..=degree).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point; panics if `i` is outside `1..=degree`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.apply(i) == i
    }

    /// Application-order composition: the result maps `i` to
    /// `(i · self) · then`.
    pub fn compose(&self, then: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != then.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: then.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| then.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Parses the cycle notation emitted by [`fmt::Display`], e.g.
    /// `"(1 2 3)(5 6)"`; `"id"` is the identity. Points not mentioned are
    /// fixed.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, Error> {
        let trimmed = text.trim();
        if trimmed == "id" {
            return Ok(Permutation::identity(degree));
        }
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = trimmed;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            let Some(after_open) = rest_trim.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in cycle notation, found {rest_trim:?}"
                )));
            };
            let Some(close) = after_open.find(')') else {
                return Err(Error::InvalidPermutation("unterminated cycle".into()));
            };
            let mut cycle = Vec::new();
            for token in after_open[..close].split_whitespace() {
                let point: usize = token.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point {token:?}"))
                })?;
                if point < 1 || point > degree {
                    return Err(Error::IndexOutOfRange {
                        index: point,
                        degree,
                    });
                }
                if moved[point - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} appears twice"
                    )));
                }
                moved[point - 1] = true;
                cycle.push(point);
            }
            for (pos, &point) in cycle.iter().enumerate() {
                images[point - 1] = cycle[(pos + 1) % cycle.len()];
            }
            rest = &after_open[close + 1..];
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as
    /// `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let k = self.degree();
        let mut done = vec![false; k];
        for start in 1..=k {
            if done[start - 1] || self.apply(start) == start {
                continue;
            }
            write!(f, "({start}")?;
            done[start - 1] = true;
            let mut point = self.apply(start);
            while point != start {
                write!(f, " {point}")?;
                done[point - 1] = true;
                point = self.apply(point);
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A finite set of permutations of a common degree. The `closed` flag is
/// only set after the set has been verified closed under composition, which
/// for a nonempty finite set of permutations makes it a group.
#[derive(Debug, Clone)]
pub struct PermutationSet {
    degree: usize,
    elements: BTreeSet<Permutation>,
    closed: bool,
}

impl PartialEq for PermutationSet {
    /// Set equality; the closure flag is bookkeeping, not content.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationSet {}

impl PermutationSet {
    /// The empty set of the given degree.
    pub fn empty(degree: usize) -> Self {
        PermutationSet {
            degree,
            elements: BTreeSet::new(),
            closed: false,
        }
    }

    /// Collects elements, checking degrees and verifying the closure flag
    /// by testing all pairwise compositions.
    pub fn from_elements(
        degree: usize,
        elements: impl IntoIterator<Item = Permutation>,
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for p in elements {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
            set.insert(p);
        }
        Ok(PermutationSet {
            degree,
            closed: verify_closed(&set, degree),
            elements: set,
        })
    }

    /// Breadth-first monoid closure of the generators under composition,
    /// seeded with the identity. For permutations of a finite set the
    /// monoid closure equals the generated group, so the result contains
    /// inverses as well. Fails with `CapExceeded` if more than `cap`
    /// elements would be collected.
    pub fn generate(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self, Error> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut elements = BTreeSet::new();
        let mut queue = VecDeque::new();
        let push = |p: Permutation,
                        elements: &mut BTreeSet<Permutation>,
                        queue: &mut VecDeque<Permutation>|
         -> Result<(), Error> {
            if !elements.contains(&p) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                elements.insert(p.clone());
                queue.push_back(p);
            }
            Ok(())
        };
        push(Permutation::identity(degree), &mut elements, &mut queue)?;
        for g in generators {
            push(g.clone(), &mut elements, &mut queue)?;
        }
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let next = p.compose(g).expect("equal degrees");
                push(next, &mut elements, &mut queue)?;
            }
        }
        Ok(PermutationSet {
            degree,
            elements,
            closed: true,
        })
    }

    /// The full symmetric group on `[degree]`, generated by the full cycle
    /// and the transposition `(1 2)`.
    pub fn symmetric(degree: usize) -> Result<Self, Error> {
        if degree == 1 {
            return Self::generate(1, &[], DEFAULT_CLOSURE_CAP);
        }
        let generators = [
            Permutation::full_cycle(degree),
            Permutation::transposition(degree, 1, 2)?,
        ];
        Self::generate(degree, &generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    /// The orbit `{point · p | p in set}` of a point under a closed set.
    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>, Error> {
        if !self.closed {
            return Err(Error::NotClosed);
        }
        assert!(
            point >= 1 && point <= self.degree,
            "point {point} out of range"
        );
        Ok(self.elements.iter().map(|p| p.apply(point)).collect())
    }

    /// The point stabilizer `{p in set | point · p = point}`; a subgroup
    /// whenever the input is one.
    pub fn stabilizer(&self, point: usize) -> Result<PermutationSet, Error> {
        if !self.closed {
            return Err(Error::NotClosed);
        }
        assert!(
            point >= 1 && point <= self.degree,
            "point {point} out of range"
        );
        Ok(PermutationSet {
            degree: self.degree,
            elements: self
                .elements
                .iter()
                .filter(|p| p.fixes(point))
                .cloned()
                .collect(),
            closed: true,
        })
    }
}

/// A nonempty finite set of permutations is closed under composition iff
/// it equals the group its elements generate. Growing a generating set
/// greedily keeps this far below the quadratic all-pairs check: every new
/// generator at least doubles the generated subgroup, and a closure that
/// outgrows the set at hand disproves closedness immediately.
fn verify_closed(set: &BTreeSet<Permutation>, degree: usize) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut generators: Vec<Permutation> = Vec::new();
    loop {
        let generated = match PermutationSet::generate(degree, &generators, set.len()) {
            Ok(generated) => generated,
            Err(_) => return false, // the generated group is already bigger
        };
        match set.iter().find(|p| !generated.contains(p)) {
            Some(missing) => generators.push(missing.clone()),
            None => return generated.len() == set.len(),
        }
    }
}

/// The word `a^(k-(i-1)) b a^(i-1)` over `{a, b}`, which acts as the
/// adjacent transposition `(i i+1)` when `a` is the full cycle on `[k]`
/// and `b` swaps 1 and 2. Requires `1 <= i < k`.
pub fn adjacent_transposition_word(i: usize, k: usize) -> Result<String, Error> {
    if i < 1 || i >= k {
        return Err(Error::IndexOutOfRange { index: i, degree: k });
    }
    let mut word = "a".repeat(k - (i - 1));
    word.push('b');
    word.push_str(&"a".repeat(i - 1));
    Ok(word)
}

/// A word over `{a, b}` whose action (`a` the full cycle, `b` the swap of
/// 1 and 2) equals `target`. The word is the bubble-sort decomposition into
/// adjacent transpositions, each expanded via
/// [`adjacent_transposition_word`]; it makes no attempt to be short. If
/// `target` fixes the top point `k`, the decomposition never touches `k`,
/// so the word realizes the permutation within the stabilizer of `k`.
pub fn word_for_permutation(target: &Permutation) -> String {
    let k = target.degree();
    let mut array: Vec<usize> = target.images().to_vec();
    let mut word = String::new();
    // Bubble sort records the swaps that undo `target`; replaying the same
    // swap positions in recorded order rebuilds it from the identity.
    loop {
        let mut swapped = false;
        for pos in 0..k.saturating_sub(1) {
            if array[pos] > array[pos + 1] {
                array.swap(pos, pos + 1);
                word.push_str(
                    &adjacent_transposition_word(pos + 1, k).expect("pos + 1 < k"),
                );
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word
}

/// Evaluates a word over `{a, b, c}` as a permutation of `[degree]`:
/// `a` is the full cycle, `b` swaps 1 and 2 (the identity when the degree
/// is 1), and `c` is the identity.
pub fn word_action(word: &str, degree: usize) -> Result<Permutation, Error> {
    let cycle = Permutation::full_cycle(degree);
    let swap = if degree >= 2 {
        Permutation::transposition(degree, 1, 2)?
    } else {
        Permutation::identity(1)
    };
    let mut result = Permutation::identity(degree);
    for letter in word.chars() {
        let step = match letter {
            'a' => &cycle,
            'b' => &swap,
            'c' => continue,
            other => return Err(Error::UnknownLetter(other)),
        };
        result = result.compose(step).expect("equal degrees");
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_first_then_second() {
        // (1 2 3) followed by (1 2) is (2 3): pinned so the word-application
        // order can never silently flip.
        let three_cycle = perm(&[2, 3, 1]);
        let swap = perm(&[2, 1, 3]);
        let composed = three_cycle.compose(&swap).unwrap();
        assert_eq!(composed, perm(&[1, 3, 2]));
        assert_eq!(composed.to_string(), "(2 3)");
    }

    #[test]
    fn compose_identity_laws() {
        let p = perm(&[3, 1, 2]);
        let id = Permutation::identity(3);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
        let swap = perm(&[2, 1]);
        assert!(swap.compose(&swap).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert_eq!(
            p.compose(&q),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p = perm(&[2, 3, 1]); // (1 2 3)
        assert_eq!(p.inverse(), perm(&[3, 1, 2])); // (1 3 2)
        assert!(Permutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn cycle_notation_round_trips() {
        let p = perm(&[2, 3, 1, 4, 6, 5]);
        assert_eq!(p.to_string(), "(1 2 3)(5 6)");
        assert_eq!(Permutation::parse_cycles("(1 2 3)(5 6)", 6).unwrap(), p);
        assert_eq!(
            Permutation::parse_cycles("id", 4).unwrap(),
            Permutation::identity(4)
        );
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
    }

    #[test]
    fn generate_symmetric_group_s4() {
        let group = PermutationSet::symmetric(4).unwrap();
        assert_eq!(group.len(), 24);
        assert!(group.is_closed());
        assert!(group.contains(&Permutation::identity(4)));
    }

    #[test]
    fn generate_identity_and_a_three_cycle() {
        let only_id =
            PermutationSet::generate(3, &[Permutation::identity(3)], 10).unwrap();
        assert_eq!(only_id.len(), 1);
        assert_eq!(only_id.orbit(2).unwrap(), [2].into());

        let powers = PermutationSet::generate(3, &[perm(&[2, 3, 1])], 10).unwrap();
        assert_eq!(powers.len(), 3);
        assert!(powers.contains(&perm(&[3, 1, 2])));
    }

    #[test]
    fn generate_respects_cap() {
        let gens = [Permutation::full_cycle(5), perm(&[2, 1, 3, 4, 5])];
        assert_eq!(
            PermutationSet::generate(5, &gens, 100),
            Err(Error::CapExceeded { cap: 100 })
        );
    }

    #[test]
    fn orbit_of_symmetric_group_is_everything() {
        let group = PermutationSet::symmetric(4).unwrap();
        assert_eq!(
            group.orbit(1).unwrap(),
            (1..=4).collect::<BTreeSet<usize>>()
        );
    }

    #[test]
    fn orbit_requires_closed_set() {
        let unclosed =
            PermutationSet::from_elements(3, [perm(&[2, 3, 1])]).unwrap();
        assert!(!unclosed.is_closed());
        assert_eq!(unclosed.orbit(1), Err(Error::NotClosed));
    }

    #[test]
    fn stabilizer_sizes_and_transitivity() {
        let s3 = PermutationSet::symmetric(3).unwrap();
        let stab = s3.stabilizer(3).unwrap();
        assert_eq!(stab.len(), 2);
        assert!(stab.contains(&perm(&[2, 1, 3])));

        for k in 2..=5 {
            let sym = PermutationSet::symmetric(k).unwrap();
            let stab = sym.stabilizer(k).unwrap();
            assert_eq!(stab.len() * sym.orbit(k).unwrap().len(), sym.len());
            // the stabilizer of k moves [k-1] transitively
            for point in 1..k {
                assert_eq!(
                    stab.orbit(point).unwrap(),
                    (1..k).collect::<BTreeSet<usize>>()
                );
            }
        }
    }

    #[test]
    fn monoid_closure_contains_inverses() {
        let gens = [perm(&[2, 3, 4, 1]), perm(&[2, 1, 3, 4])];
        let group = PermutationSet::generate(4, &gens, 100).unwrap();
        for p in group.iter() {
            assert!(group.contains(&p.inverse()));
        }
    }

    #[test]
    fn adjacent_transposition_words() {
        assert_eq!(adjacent_transposition_word(1, 4).unwrap(), "aaaab");
        assert_eq!(adjacent_transposition_word(2, 3).unwrap(), "aaba");
        assert_eq!(adjacent_transposition_word(3, 4).unwrap(), "aabaa");
        assert!(adjacent_transposition_word(4, 4).is_err());
        assert!(adjacent_transposition_word(0, 4).is_err());

        for k in 2..=5 {
            for i in 1..k {
                let word = adjacent_transposition_word(i, k).unwrap();
                let expected = Permutation::transposition(k, i, i + 1).unwrap();
                assert_eq!(word_action(&word, k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn word_realization_round_trips_small_symmetric_groups() {
        for k in 1..=5 {
            let group = PermutationSet::symmetric(k).unwrap();
            for target in group.iter() {
                let word = word_for_permutation(target);
                assert!(word.chars().all(|c| c == 'a' || c == 'b'));
                assert_eq!(&word_action(&word, k).unwrap(), target);
                if target.fixes(k) {
                    assert!(word_action(&word, k).unwrap().fixes(k));
                }
            }
        }
    }

    #[test]
    fn word_for_identity_is_empty() {
        assert_eq!(word_for_permutation(&Permutation::identity(4)), "");
    }

    fn arb_permutation(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut images: Vec<usize> = (1..=degree).collect();
            for i in (1..degree).rev() {
                let j = rng.random_range(0..=i);
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        })
    }

    proptest! {
        #[test]
        fn compose_is_associative(
            p in arb_permutation(6),
            q in arb_permutation(6),
            r in arb_permutation(6),
        ) {
            let left = p.compose(&q).unwrap().compose(&r).unwrap();
            let right = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_cancels(p in arb_permutation(7)) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
            prop_assert_eq!(p.inverse().inverse(), p);
        }

        #[test]
        fn display_parse_round_trip(p in arb_permutation(8)) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse_cycles(&text, 8).unwrap(), p);
        }

        #[test]
        fn word_realization_is_sound(p in arb_permutation(5)) {
            let word = word_for_permutation(&p);
            prop_assert_eq!(word_action(&word, 5).unwrap(), p);
        }
    }
}
