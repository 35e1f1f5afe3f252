//! Complete deterministic finite automata and the permutation-automaton
//! refinement.
//!
//! States are the integers `1..=state_count`, so final sets like
//! `{1, ..., k-1}` read off literally. All operations are pure functions
//! over immutable values; nothing mutates its input.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use crate::error::Error;
use crate::perm::Permutation;

/// 1-based state index.
pub type StateId = usize;

/// A complete DFA: exactly one successor per state and letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    state_count: usize,
    alphabet: Vec<char>,
    /// `transitions[l][q-1]` is the successor of state `q` on `alphabet[l]`.
    transitions: Vec<Vec<StateId>>,
    initial: StateId,
    finals: BTreeSet<StateId>,
}

impl Dfa {
    /// Builds a DFA, validating totality of the transition table and the
    /// range of every state reference. `transitions` is parallel to
    /// `alphabet`.
    pub fn new(
        state_count: usize,
        alphabet: Vec<char>,
        transitions: Vec<Vec<StateId>>,
        initial: StateId,
        finals: BTreeSet<StateId>,
    ) -> Result<Self, Error> {
        if state_count == 0 {
            return Err(Error::InvalidAutomaton(
                "state count must be positive".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &letter in &alphabet {
            if !seen.insert(letter) {
                return Err(Error::InvalidAutomaton(format!(
                    "duplicate letter '{letter}' in alphabet"
                )));
            }
            // reserved by the text format
            if letter.is_whitespace() || letter == '#' || letter == ':' {
                return Err(Error::InvalidAutomaton(format!(
                    "letter {letter:?} cannot be represented in the text format"
                )));
            }
        }
        if transitions.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton(format!(
                "{} transition rows for {} letters",
                transitions.len(),
                alphabet.len()
            )));
        }
        for (row, &letter) in transitions.iter().zip(&alphabet) {
            if row.len() != state_count {
                return Err(Error::InvalidAutomaton(format!(
                    "transition row for '{letter}' has {} entries, expected {state_count}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&t| t < 1 || t > state_count) {
                return Err(Error::InvalidAutomaton(format!(
                    "transition target {bad} for '{letter}' out of range 1..={state_count}"
                )));
            }
        }
        if initial < 1 || initial > state_count {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range 1..={state_count}"
            )));
        }
        if let Some(&bad) = finals.iter().find(|&&f| f < 1 || f > state_count) {
            return Err(Error::InvalidAutomaton(format!(
                "final state {bad} out of range 1..={state_count}"
            )));
        }
        Ok(Dfa {
            state_count,
            alphabet,
            transitions,
            initial,
            finals,
        })
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    /// The same automaton with a different final set.
    pub fn with_finals(&self, finals: BTreeSet<StateId>) -> Result<Dfa, Error> {
        Dfa::new(
            self.state_count,
            self.alphabet.clone(),
            self.transitions.clone(),
            self.initial,
            finals,
        )
    }

    pub(crate) fn letter_index(&self, letter: char) -> Option<usize> {
        self.alphabet.iter().position(|&l| l == letter)
    }

    /// Successor by alphabet index; internal fast path.
    pub(crate) fn succ(&self, state: StateId, letter_index: usize) -> StateId {
        self.transitions[letter_index][state - 1]
    }

    /// Successor of `state` on `letter`.
    pub fn transition(&self, state: StateId, letter: char) -> Result<StateId, Error> {
        assert!(
            state >= 1 && state <= self.state_count,
            "state {state} out of range"
        );
        let l = self
            .letter_index(letter)
            .ok_or(Error::UnknownLetter(letter))?;
        Ok(self.succ(state, l))
    }

    /// Runs the automaton from `from`, applying letters left to right;
    /// the empty word returns `from`.
    pub fn run(&self, from: StateId, word: &str) -> Result<StateId, Error> {
        assert!(
            from >= 1 && from <= self.state_count,
            "state {from} out of range"
        );
        let mut state = from;
        for letter in word.chars() {
            let l = self
                .letter_index(letter)
                .ok_or(Error::UnknownLetter(letter))?;
            state = self.succ(state, l);
        }
        Ok(state)
    }

    /// Whether the word is accepted from the initial state.
    pub fn accepts(&self, word: &str) -> Result<bool, Error> {
        Ok(self.finals.contains(&self.run(self.initial, word)?))
    }

    /// True iff every letter acts as a bijection on the state set.
    pub fn is_permutation_automaton(&self) -> bool {
        self.transitions.iter().all(|row| {
            let mut seen = vec![false; self.state_count];
            row.iter().all(|&t| !std::mem::replace(&mut seen[t - 1], true))
        })
    }

    /// True iff no final state is reachable from the initial state.
    pub fn language_is_empty(&self) -> bool {
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial - 1] = true;
        while let Some(state) = queue.pop_front() {
            if self.finals.contains(&state) {
                return false;
            }
            for row in &self.transitions {
                let t = row[state - 1];
                if !seen[t - 1] {
                    seen[t - 1] = true;
                    queue.push_back(t);
                }
            }
        }
        true
    }

    /// The restriction to states reachable from the initial state, with
    /// states renumbered canonically: breadth-first from the initial state,
    /// exploring letters in alphabet order. The language is unchanged.
    pub fn accessible_part(&self) -> Dfa {
        let mut new_id = vec![0usize; self.state_count]; // 0 = unvisited
        let mut order = vec![self.initial];
        let mut queue = VecDeque::from([self.initial]);
        new_id[self.initial - 1] = 1;
        while let Some(state) = queue.pop_front() {
            for row in &self.transitions {
                let t = row[state - 1];
                if new_id[t - 1] == 0 {
                    new_id[t - 1] = order.len() + 1;
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        let transitions = self
            .transitions
            .iter()
            .map(|row| order.iter().map(|&q| new_id[row[q - 1] - 1]).collect())
            .collect();
        let finals = self
            .finals
            .iter()
            .filter(|&&f| new_id[f - 1] != 0)
            .map(|&f| new_id[f - 1])
            .collect();
        Dfa {
            state_count: order.len(),
            alphabet: self.alphabet.clone(),
            transitions,
            initial: 1,
            finals,
        }
    }

    /// The canonical minimal DFA of the language: accessible, no two states
    /// equivalent, states in breadth-first order. Uses Moore's partition
    /// refinement. The minimal DFA of the empty language is the one-state
    /// nonfinal sink.
    pub fn minimize(&self) -> Dfa {
        let acc = self.accessible_part();
        let n = acc.state_count;
        // start from the final/nonfinal split, refine by successor classes
        let mut class: Vec<usize> = (1..=n)
            .map(|q| usize::from(acc.finals.contains(&q)))
            .collect();
        let mut class_count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut next = Vec::with_capacity(n);
            for q in 0..n {
                let signature = (
                    class[q],
                    acc.transitions
                        .iter()
                        .map(|row| class[row[q] - 1])
                        .collect::<Vec<_>>(),
                );
                let fresh = ids.len();
                next.push(*ids.entry(signature).or_insert(fresh));
            }
            // a refinement with the same part count is the same partition,
            // so adopting `next` also normalizes ids to 0..count
            let stable = ids.len() == class_count;
            class_count = ids.len();
            class = next;
            if stable {
                break;
            }
        }
        // quotient automaton on the classes
        let mut representative = vec![usize::MAX; class_count];
        for q in 0..n {
            if representative[class[q]] == usize::MAX {
                representative[class[q]] = q;
            }
        }
        let transitions = acc
            .transitions
            .iter()
            .map(|row| {
                (0..class_count)
                    .map(|c| class[row[representative[c]] - 1] + 1)
                    .collect()
            })
            .collect();
        let finals = acc.finals.iter().map(|&f| class[f - 1] + 1).collect();
        let quotient = Dfa {
            state_count: class_count,
            alphabet: acc.alphabet,
            transitions,
            initial: class[0] + 1,
            finals,
        };
        quotient.accessible_part()
    }

    /// Language equality, decided by product reachability of a state pair
    /// that disagrees on acceptance. Deliberately does not minimize, so it
    /// can serve as an independent oracle for `minimize`.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, Error> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let index = |p: StateId, q: StateId| (p - 1) * other.state_count + (q - 1);
        let mut seen = vec![false; self.state_count * other.state_count];
        let mut queue = VecDeque::from([(self.initial, other.initial)]);
        seen[index(self.initial, other.initial)] = true;
        while let Some((p, q)) = queue.pop_front() {
            if self.finals.contains(&p) != other.finals.contains(&q) {
                return Ok(false);
            }
            for l in 0..self.alphabet.len() {
                let pair = (self.succ(p, l), other.succ(q, l));
                if !seen[index(pair.0, pair.1)] {
                    seen[index(pair.0, pair.1)] = true;
                    queue.push_back(pair);
                }
            }
        }
        Ok(true)
    }

    /// Accepting-state complexity of the language: the number of final
    /// states of the canonical minimal DFA.
    pub fn asc(&self) -> usize {
        self.minimize().finals.len()
    }

    /// True iff the accessible parts are isomorphic. Breadth-first
    /// renumbering is a complete invariant for accessible DFAs, so this
    /// compares canonical forms; unreachable states are ignored.
    pub fn isomorphic_to(&self, other: &Dfa) -> bool {
        self.accessible_part() == other.accessible_part()
    }
}

/// A DFA in which every letter acts as a bijection on the state set, so
/// every word induces a permutation of the states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationDfa(Dfa);

impl TryFrom<Dfa> for PermutationDfa {
    type Error = Error;

    fn try_from(dfa: Dfa) -> Result<Self, Error> {
        if dfa.is_permutation_automaton() {
            Ok(PermutationDfa(dfa))
        } else {
            Err(Error::NotPermutation)
        }
    }
}

impl Deref for PermutationDfa {
    type Target = Dfa;

    fn deref(&self) -> &Dfa {
        &self.0
    }
}

impl PermutationDfa {
    pub fn as_dfa(&self) -> &Dfa {
        &self.0
    }

    pub fn into_dfa(self) -> Dfa {
        self.0
    }

    /// The accessible part of a permutation automaton is again a
    /// permutation automaton: the reachable set is the orbit of the initial
    /// state, and a bijection restricted to a finite invariant set stays
    /// bijective.
    pub fn accessible_part(&self) -> PermutationDfa {
        PermutationDfa::try_from(self.0.accessible_part())
            .expect("restriction to the reachable orbit stays bijective")
    }

    /// The permutation `pi_w` induced by the word: state `q` maps to
    /// `q · w`. The empty word induces the identity.
    pub fn induced_permutation(&self, word: &str) -> Result<Permutation, Error> {
        let images = (1..=self.0.state_count)
            .map(|q| self.0.run(q, word))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Permutation::from_images(images).expect("bijective letters compose to a bijection"))
    }

    /// The permutation a single letter induces.
    pub fn letter_permutation(&self, letter: char) -> Result<Permutation, Error> {
        let l = self
            .0
            .letter_index(letter)
            .ok_or(Error::UnknownLetter(letter))?;
        Ok(Permutation::from_images(self.0.transitions[l].clone())
            .expect("letter rows are bijections"))
    }
}
