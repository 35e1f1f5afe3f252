//! The right-quotient construction.
//!
//! `right_quotient` builds `A/B` by swapping A's final set for the
//! saturated set `F~ = { q | exists w in L(B): q·w in F }`, computed by
//! backward reachability on the product of the two automata. The module
//! also carries two independent cross-checks: a membership oracle that
//! searches the product forward instead of going through `F~`, and a
//! group-theoretic second route that recomputes `F~` as a union of
//! permutation preimages when the dividend is a permutation automaton.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::dfa::{Dfa, PermutationDfa, StateId};
use crate::error::Error;
use crate::perm::{Permutation, PermutationSet, DEFAULT_CLOSURE_CAP};

/// Result of `A/B`: the dividend with its final set replaced, plus the
/// induced divisor permutations when available.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    /// `A` with its finals replaced by the saturated set; nothing else
    /// differs from the dividend.
    pub automaton: Dfa,
    /// The saturated final set `F~`.
    pub saturated_finals: BTreeSet<StateId>,
    /// `{ pi_w | w in L(B) }` as permutations of the dividend's states;
    /// populated iff the dividend is a permutation automaton and the
    /// collection fits the closure cap.
    pub divisor_group: Option<PermutationSet>,
}

/// The saturated final set `F~ = { q | exists w in L(B): q·w in F_A }`,
/// computed by backward reachability on the product `Q_A x Q_B`: state `q`
/// belongs iff some pair in `F_A x F_B` is reachable from `(q, s_B)`.
pub fn quotient_final_set(a: &Dfa, b: &Dfa) -> Result<BTreeSet<StateId>, Error> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let na = a.state_count();
    let nb = b.state_count();
    let letters = a.alphabet().len();
    let index = |p: StateId, q: StateId| (p - 1) * nb + (q - 1);

    let mut predecessors = vec![Vec::new(); na * nb];
    for p in 1..=na {
        for q in 1..=nb {
            for l in 0..letters {
                predecessors[index(a.succ(p, l), b.succ(q, l))].push(index(p, q));
            }
        }
    }
    let mut reaches_target = vec![false; na * nb];
    let mut queue = VecDeque::new();
    for &f in a.finals() {
        for &g in b.finals() {
            let pair = index(f, g);
            if !reaches_target[pair] {
                reaches_target[pair] = true;
                queue.push_back(pair);
            }
        }
    }
    while let Some(pair) = queue.pop_front() {
        for &pred in &predecessors[pair] {
            if !reaches_target[pred] {
                reaches_target[pred] = true;
                queue.push_back(pred);
            }
        }
    }
    Ok((1..=na)
        .filter(|&q| reaches_target[index(q, b.initial())])
        .collect())
}

/// `A/B` with the default closure cap for the divisor group.
pub fn right_quotient(a: &Dfa, b: &Dfa) -> Result<QuotientResult, Error> {
    right_quotient_with_cap(a, b, DEFAULT_CLOSURE_CAP)
}

/// `A/B`. The quotient automaton itself is always returned; if collecting
/// the divisor permutations would blow the cap, `divisor_group` is left
/// empty rather than failing the quotient.
pub fn right_quotient_with_cap(
    a: &Dfa,
    b: &Dfa,
    cap: usize,
) -> Result<QuotientResult, Error> {
    let saturated_finals = quotient_final_set(a, b)?;
    let automaton = a
        .with_finals(saturated_finals.clone())
        .expect("saturated finals are valid states of the dividend");
    let divisor_group = match PermutationDfa::try_from(a.clone()) {
        Ok(pa) => match induced_language_group(&pa, b, cap) {
            Ok(group) => Some(group),
            Err(Error::CapExceeded { .. }) => None,
            Err(other) => return Err(other),
        },
        Err(_) => None,
    };
    Ok(QuotientResult {
        automaton,
        saturated_finals,
        divisor_group,
    })
}

/// Membership of `x` in `L(A)L(B)^{-1}`, decided independently of the
/// saturated-final-set construction: run `x` through `A`, then search the
/// product forward from `(s_A·x, s_B)` for a suffix `y in L(B)` with
/// `xy in L(A)`. A witness of length below `|Q_A|·|Q_B|` suffices by
/// pigeonhole, which the breadth-first search realizes implicitly.
pub fn member_of_quotient(a: &Dfa, b: &Dfa, x: &str) -> Result<bool, Error> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let start = a.run(a.initial(), x)?;
    let nb = b.state_count();
    let letters = a.alphabet().len();
    let index = |p: StateId, q: StateId| (p - 1) * nb + (q - 1);
    let mut seen = vec![false; a.state_count() * nb];
    let mut queue = VecDeque::from([(start, b.initial())]);
    seen[index(start, b.initial())] = true;
    while let Some((p, q)) = queue.pop_front() {
        if a.finals().contains(&p) && b.finals().contains(&q) {
            return Ok(true);
        }
        for l in 0..letters {
            let pair = (a.succ(p, l), b.succ(q, l));
            if !seen[index(pair.0, pair.1)] {
                seen[index(pair.0, pair.1)] = true;
                queue.push_back(pair);
            }
        }
    }
    Ok(false)
}

/// The set `{ pi_w restricted to Q_A | w in L(B) }`: breadth-first search
/// over pairs (permutation of `Q_A`, state of `B`) from the identity and
/// `B`'s initial state, collecting the permutations paired with a final
/// `B`-state. The pair space is finite, so the search terminates; `cap`
/// bounds the number of distinct permutations explored.
pub fn induced_language_group(
    a: &PermutationDfa,
    b: &Dfa,
    cap: usize,
) -> Result<PermutationSet, Error> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let letter_perms = a
        .alphabet()
        .iter()
        .map(|&l| a.letter_permutation(l))
        .collect::<Result<Vec<_>, _>>()?;
    let degree = a.state_count();
    let letters = letter_perms.len();
    let nb = b.state_count();

    // permutations are interned: the pair space is walked over (id, state),
    // and each (id, letter) composition is computed once
    let mut perms = vec![Permutation::identity(degree)];
    let mut perm_ids: HashMap<Permutation, usize> = HashMap::from([(perms[0].clone(), 0)]);
    let mut successor: Vec<Vec<Option<usize>>> = vec![vec![None; letters]];
    let mut visited: Vec<Vec<bool>> = vec![vec![false; nb]];
    let mut accepted_ids = BTreeSet::new();
    let mut queue = VecDeque::from([(0usize, b.initial())]);
    visited[0][b.initial() - 1] = true;
    while let Some((id, state)) = queue.pop_front() {
        if b.finals().contains(&state) {
            accepted_ids.insert(id);
        }
        for (l, letter_perm) in letter_perms.iter().enumerate() {
            let next_id = match successor[id][l] {
                Some(known) => known,
                None => {
                    let composed = perms[id].compose(letter_perm).expect("equal degrees");
                    let next_id = match perm_ids.get(&composed) {
                        Some(&known) => known,
                        None => {
                            if perms.len() >= cap {
                                return Err(Error::CapExceeded { cap });
                            }
                            let fresh = perms.len();
                            perms.push(composed.clone());
                            perm_ids.insert(composed, fresh);
                            successor.push(vec![None; letters]);
                            visited.push(vec![false; nb]);
                            fresh
                        }
                    };
                    successor[id][l] = Some(next_id);
                    next_id
                }
            };
            let next_state = b.succ(state, l);
            if !visited[next_id][next_state - 1] {
                visited[next_id][next_state - 1] = true;
                queue.push_back((next_id, next_state));
            }
        }
    }
    PermutationSet::from_elements(degree, accepted_ids.into_iter().map(|id| perms[id].clone()))
}

/// Second route to the saturated final set for permutation dividends:
/// the union of preimages `pi^{-1}(F)` over the divisor permutations.
pub fn final_set_via_group(
    finals: &BTreeSet<StateId>,
    group: &PermutationSet,
) -> Result<BTreeSet<StateId>, Error> {
    let degree = group.degree();
    if let Some(&bad) = finals.iter().find(|&&f| f < 1 || f > degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: bad,
        });
    }
    Ok((1..=degree)
        .filter(|&q| group.iter().any(|p| finals.contains(&p.apply(q))))
        .collect())
}
