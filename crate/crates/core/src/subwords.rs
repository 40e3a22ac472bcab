//! The subword order, Simon's congruence and principal filters.

use std::cmp::Ordering;

use crate::alphabet::Alphabet;
use crate::automata::{equivalent, Dfa, Nfa, Verdict};
use crate::error::Result;
use crate::products::upward_closure;

/// Is `u` a scattered subsequence of `v`? Greedy left-to-right scan.
pub fn is_subsequence<T: PartialEq>(u: &[T], v: &[T]) -> bool {
    let mut rest = v.iter();
    u.iter().all(|x| rest.any(|y| y == x))
}

/// `u ≼ v`.
pub fn is_subword(u: &str, v: &str) -> bool {
    let u: Vec<char> = u.chars().collect();
    let v: Vec<char> = v.chars().collect();
    is_subsequence(&u, &v)
}

/// `u ≼₁ v`: a subword exactly one letter shorter.
pub fn is_direct_subword(u: &str, v: &str) -> bool {
    u.chars().count() + 1 == v.chars().count() && is_subword(u, v)
}

fn shortlex(a: &[char], b: &[char]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// The subwords of length at most `k` of some word, kept as the antichain
/// of its maximal elements in shortlex order. Two words are `~_k`-equivalent
/// exactly when their profiles are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubwordProfile {
    k: usize,
    maximal: Vec<Vec<char>>,
}

impl SubwordProfile {
    /// Profile of the empty word.
    pub fn empty(k: usize) -> Self {
        SubwordProfile { k, maximal: vec![Vec::new()] }
    }

    pub fn bound(&self) -> usize {
        self.k
    }

    pub fn maximal_elements(&self) -> &[Vec<char>] {
        &self.maximal
    }

    /// Does the downward closure contain `w`?
    pub fn contains(&self, w: &[char]) -> bool {
        w.len() <= self.k && self.maximal.iter().any(|m| is_subsequence(w, m))
    }

    /// Profile of `u·letter` given the profile of `u`.
    pub fn append(&self, letter: char) -> SubwordProfile {
        // Maximal elements of the part of length < k, extended by `letter`.
        let mut candidates: Vec<Vec<char>> = self.maximal.clone();
        for m in &self.maximal {
            if m.len() < self.k {
                let mut w = m.clone();
                w.push(letter);
                candidates.push(w);
            } else if self.k > 0 {
                for skip in 0..m.len() {
                    let mut w: Vec<char> = m
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &c)| c)
                        .collect();
                    w.push(letter);
                    candidates.push(w);
                }
            }
        }
        SubwordProfile { k: self.k, maximal: antichain(candidates) }
    }

    /// Every subword of length at most `k`, in shortlex order.
    pub fn downward_closure(&self) -> Vec<Vec<char>> {
        let mut out: Vec<Vec<char>> = Vec::new();
        for m in &self.maximal {
            let n = m.len();
            for mask in 0u64..(1u64 << n) {
                out.push((0..n).filter(|i| mask >> i & 1 == 1).map(|i| m[i]).collect());
            }
        }
        out.sort_by(|a, b| shortlex(a, b));
        out.dedup();
        out
    }
}

/// Keep the elements not strictly below another one; shortlex order, no duplicates.
fn antichain(mut words: Vec<Vec<char>>) -> Vec<Vec<char>> {
    // Longest first so that every dominating word is seen before the words it dominates.
    words.sort_by(|a, b| shortlex(b, a));
    words.dedup();
    let mut kept: Vec<Vec<char>> = Vec::new();
    for w in words {
        if !kept.iter().any(|m| is_subsequence(&w, m)) {
            kept.push(w);
        }
    }
    kept.sort_by(|a, b| shortlex(a, b));
    kept
}

/// Profile of `u`, built letter by letter from the empty word.
pub fn profile(u: &str, k: usize) -> SubwordProfile {
    u.chars().fold(SubwordProfile::empty(k), |p, c| p.append(c))
}

/// `u ~_k v`.
pub fn sim_k(u: &str, v: &str, k: usize) -> bool {
    profile(u, k) == profile(v, k)
}

/// DFA for `L_u`, the words having `u` as a subword: a chain of `|u|+1`
/// states where state `i` advances on `u[i]` and loops on every other
/// letter; the last state accepts and loops on everything.
pub fn filter_automaton(u: &str, alphabet: &Alphabet) -> Result<Dfa> {
    let u = alphabet.encode(u)?;
    let n = u.len();
    let table = (0..=n)
        .map(|i| {
            alphabet
                .letters()
                .map(|a| if i < n && u[i] == a { i + 1 } else { i })
                .collect()
        })
        .collect();
    let accepting = (0..=n).map(|i| i == n).collect();
    Dfa::from_table(alphabet.clone(), table, 0, accepting)
}

/// Is `L(x)` upward closed for `≼`? The witness, if any, is a word of the
/// upward closure missing from `L(x)`.
pub fn is_shuffle_ideal(x: &Nfa) -> Verdict {
    equivalent(x, &upward_closure(x)).expect("same alphabet")
}
