//! Seeded generators for random instances.
//!
//! Every generator produces instances that satisfy their preconditions by
//! construction: piecewise-testable languages are boolean combinations of
//! principal filters, acyclic DFAs only move forward in a fixed state order.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Letter, LetterSet};
use crate::automata::{complement, intersection, minimal_dfa, union, Dfa, Nfa};
use crate::subwords::filter_automaton;

/// The generator of trial `trial` under `seed`: ChaCha8 seeded with `seed`
/// on stream `trial`, so trials are independent of evaluation order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_alphabet(rng: &mut impl Rng, max_letters: usize) -> Alphabet {
    Alphabet::first_n(rng.gen_range(1..=max_letters.max(1))).expect("small alphabet")
}

pub fn random_word(rng: &mut impl Rng, alphabet: &Alphabet, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..alphabet.len())).collect()
}

pub fn random_words(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    max_count: usize,
    max_len: usize,
) -> Vec<Vec<Letter>> {
    let count = rng.gen_range(1..=max_count.max(1));
    (0..count).map(|_| random_word(rng, alphabet, max_len)).collect()
}

pub fn random_share_set(rng: &mut impl Rng, alphabet: &Alphabet) -> LetterSet {
    LetterSet(rng.gen_range(0..(1u64 << alphabet.len())))
}

/// A language together with a readable description.
#[derive(Clone, Debug)]
pub struct Described {
    pub nfa: Nfa,
    pub description: String,
}

/// Random boolean combination (tree of ∩, ∪, complement of depth at most
/// `max_depth`) over at most `max_filters` principal filters `L_u` with
/// `|u| ≤ max_filter_len`.
pub fn random_pt_language(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    max_filters: usize,
    max_filter_len: usize,
    max_depth: usize,
) -> Described {
    let count = rng.gen_range(1..=max_filters.max(1));
    let pool: Vec<Vec<Letter>> =
        (0..count).map(|_| random_word(rng, alphabet, max_filter_len)).collect();
    let tree = gen_tree(rng, alphabet, &pool, max_depth);
    let nfa = minimal_dfa(&tree.nfa).to_nfa();
    Described { nfa, description: tree.description }
}

fn gen_tree(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    pool: &[Vec<Letter>],
    depth: usize,
) -> Described {
    if depth == 0 || rng.gen_bool(0.35) {
        let u = pool.choose(rng).expect("nonempty pool");
        let text = alphabet.decode(u);
        return Described {
            nfa: filter_automaton(&text, alphabet).expect("letters in alphabet").to_nfa(),
            description: format!("L_{}", if text.is_empty() { "ε".into() } else { text }),
        };
    }
    match rng.gen_range(0..3) {
        0 => {
            let inner = gen_tree(rng, alphabet, pool, depth - 1);
            Described {
                nfa: complement(&inner.nfa),
                description: format!("¬{}", inner.description),
            }
        }
        op => {
            let l = gen_tree(rng, alphabet, pool, depth - 1);
            let r = gen_tree(rng, alphabet, pool, depth - 1);
            let (nfa, sym) = if op == 1 {
                (intersection(&l.nfa, &r.nfa).expect("same alphabet"), "∩")
            } else {
                (union(&l.nfa, &r.nfa).expect("same alphabet"), "∪")
            };
            Described { nfa, description: format!("({} {sym} {})", l.description, r.description) }
        }
    }
}

/// Complete DFA with states in a fixed topological order: each transition
/// either loops or goes to a strictly later state.
pub fn random_acyclic_dfa(rng: &mut impl Rng, alphabet: &Alphabet, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states.max(1));
    let table = (0..n)
        .map(|p| alphabet.letters().map(|_| rng.gen_range(p..n)).collect())
        .collect();
    let accepting = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Dfa::from_table(alphabet.clone(), table, 0, accepting).expect("valid table")
}

/// Arbitrary complete DFA.
pub fn random_dfa(rng: &mut impl Rng, alphabet: &Alphabet, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states.max(1));
    let table = (0..n)
        .map(|_| alphabet.letters().map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Dfa::from_table(alphabet.clone(), table, 0, accepting).expect("valid table")
}

/// Arbitrary NFA with each possible transition present with probability `density`.
pub fn random_nfa(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    max_states: usize,
    density: f64,
) -> Nfa {
    let n = rng.gen_range(1..=max_states.max(1));
    let mut nfa = Nfa::new(alphabet.clone(), n);
    for p in 0..n {
        for a in alphabet.letters() {
            for q in 0..n {
                if rng.gen_bool(density) {
                    nfa.add_transition(p, a, q);
                }
            }
        }
        if rng.gen_bool(0.4) {
            nfa.set_accepting(p, true);
        }
    }
    nfa.add_initial(0);
    if n > 1 && rng.gen_bool(0.3) {
        nfa.add_initial(rng.gen_range(1..n));
    }
    nfa
}
