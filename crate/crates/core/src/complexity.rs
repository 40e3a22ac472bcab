//! Piecewise complexity: the least `k` such that a language is a union of
//! `~_k` classes.
//!
//! Closure under `~_k` is decided exactly by exploring the product of the
//! DFA with the automaton of subword profiles, whose states are the `~_k`
//! classes reachable from the class of the empty word.

use std::collections::hash_map::{Entry, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::alphabet::{Alphabet, Letter};
use crate::automata::{depth, determinize, minimize, Dfa, Nfa, Verdict, Witness};
use crate::error::{Error, Result};
use crate::pt::analyze;

/// Default bound on the number of (profile, DFA state) pairs explored.
pub const DEFAULT_STATE_CAP: usize = 2_000_000;

/// Largest subword table (number of words of length at most `k`) accepted.
pub const MAX_SUBWORD_TABLE: usize = 1 << 16;

/// Budget for the bitsets of all interned profiles.
pub const MAX_PROFILE_BYTES: usize = 1 << 30;

/// Indexing of all words of length at most `k` in shortlex order.
struct SubwordTable {
    letters: usize,
    words: usize,
    // extend[i * letters + a] = index of word_i · a, or NONE when |word_i| = k
    extend: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl SubwordTable {
    fn new(letters: usize, k: usize) -> Result<Self> {
        let mut level = 1usize;
        let mut words = 1usize;
        for _ in 0..k {
            level = level.saturating_mul(letters);
            words = words.saturating_add(level);
            if words > MAX_SUBWORD_TABLE {
                return Err(Error::ResourceLimit {
                    what: "subword table size",
                    limit: MAX_SUBWORD_TABLE,
                });
            }
        }
        let mut extend = vec![NONE; words * letters];
        // Words of length l occupy [start, start + letters^l); the extension
        // of the j-th of them by a is the (j*letters + a)-th word of length l+1.
        let (mut start, mut size) = (0usize, 1usize);
        for _ in 0..k {
            let next = start + size;
            for j in 0..size {
                for a in 0..letters {
                    extend[(start + j) * letters + a] = (next + j * letters + a) as u32;
                }
            }
            start = next;
            size *= letters;
        }
        Ok(SubwordTable { letters, words, extend })
    }

    fn blocks(&self) -> usize {
        self.words.div_ceil(64)
    }

    fn empty_word(&self) -> Box<[u64]> {
        let mut s = vec![0u64; self.blocks()].into_boxed_slice();
        s[0] = 1;
        s
    }

    fn append(&self, set: &[u64], letter: Letter) -> Box<[u64]> {
        let mut out: Box<[u64]> = set.into();
        for (b, &bits) in set.iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let i = b * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let j = self.extend[i * self.letters + letter];
                if j != NONE {
                    out[j as usize / 64] |= 1u64 << (j % 64);
                }
            }
        }
        out
    }
}

/// Interned profiles with a lazily filled transition table.
struct ProfileAutomaton {
    table: SubwordTable,
    index: HashMap<Box<[u64]>, u32>,
    sets: Vec<Box<[u64]>>,
    next: Vec<u32>,
}

impl ProfileAutomaton {
    fn new(letters: usize, k: usize) -> Result<Self> {
        let table = SubwordTable::new(letters, k)?;
        let mut p = ProfileAutomaton { table, index: HashMap::new(), sets: Vec::new(), next: Vec::new() };
        let e = p.table.empty_word();
        p.intern(e)?;
        Ok(p)
    }

    fn intern(&mut self, set: Box<[u64]>) -> Result<u32> {
        if let Some(&id) = self.index.get(&set) {
            return Ok(id);
        }
        // each set is held twice: in `sets` and as a key of `index`
        if (self.sets.len() + 1) * set.len() * 16 > MAX_PROFILE_BYTES {
            return Err(Error::ResourceLimit { what: "profile storage bytes", limit: MAX_PROFILE_BYTES });
        }
        let id = self.sets.len() as u32;
        self.sets.push(set.clone());
        self.index.insert(set, id);
        self.next.extend(std::iter::repeat_n(NONE, self.table.letters));
        Ok(id)
    }

    fn step(&mut self, profile: u32, letter: Letter) -> Result<u32> {
        let slot = profile as usize * self.table.letters + letter;
        if self.next[slot] == NONE {
            let set = self.table.append(&self.sets[profile as usize], letter);
            let id = self.intern(set)?;
            self.next[slot] = id;
        }
        Ok(self.next[slot])
    }
}

/// Is `L(d)` a union of `~_k` classes? Uses [`DEFAULT_STATE_CAP`].
pub fn is_k_closed(d: &Dfa, k: usize) -> Result<Verdict> {
    is_k_closed_with_cap(d, k, DEFAULT_STATE_CAP)
}

/// Breadth-first exploration of the product of `d` with the profile
/// automaton. The language is closed unless some profile is reached
/// together with an accepting and with a rejecting state; the two paths
/// then form a shortest closure-violation witness.
pub fn is_k_closed_with_cap(d: &Dfa, k: usize, cap: usize) -> Result<Verdict> {
    let letters = d.alphabet().len();
    let mut profiles = ProfileAutomaton::new(letters, k)?;
    let mut index: HashMap<(u32, u32), u32> = HashMap::new();
    let mut nodes: Vec<(u32, u32)> = vec![(0, d.initial() as u32)];
    let mut parent: Vec<(u32, u8)> = vec![(NONE, 0)];
    // first product node seen per profile, for accepting and rejecting states
    let mut seen_by_profile: Vec<[u32; 2]> = Vec::new();
    index.insert(nodes[0], 0);

    let path = |parent: &[(u32, u8)], mut node: u32| -> String {
        let mut word = Vec::new();
        while parent[node as usize].0 != NONE {
            word.push(parent[node as usize].1 as Letter);
            node = parent[node as usize].0;
        }
        word.reverse();
        d.alphabet().decode(&word)
    };

    let mut head = 0usize;
    loop {
        // classify the newly discovered nodes
        while seen_by_profile.len() < profiles.sets.len() {
            seen_by_profile.push([NONE, NONE]);
        }
        if head >= nodes.len() {
            break;
        }
        let node = head as u32;
        let (profile, state) = nodes[head];
        let slot = usize::from(!d.is_accepting(state as usize));
        let entry = &mut seen_by_profile[profile as usize];
        if entry[slot] == NONE {
            entry[slot] = node;
        }
        if entry[0] != NONE && entry[1] != NONE {
            let (member, non_member) = (entry[0], entry[1]);
            return Ok(Verdict::no(Witness::ClosureViolation {
                member: path(&parent, member),
                non_member: path(&parent, non_member),
                k,
            }));
        }
        for a in 0..letters {
            let target = (profiles.step(profile, a)?, d.next(state as usize, a) as u32);
            if let Entry::Vacant(slot) = index.entry(target) {
                if nodes.len() >= cap {
                    return Err(Error::ResourceLimit { what: "profile product states", limit: cap });
                }
                slot.insert(nodes.len() as u32);
                nodes.push(target);
                parent.push((node, a as u8));
            }
        }
        head += 1;
    }
    Ok(Verdict::yes())
}

/// `h(L)`: a natural number, or infinite for non-piecewise-testable languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Complexity {
    Finite(usize),
    Infinite,
}

impl Complexity {
    pub fn finite(self) -> Option<usize> {
        match self {
            Complexity::Finite(k) => Some(k),
            Complexity::Infinite => None,
        }
    }
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Complexity::Finite(k) => write!(f, "{k}"),
            Complexity::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Complexity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Complexity::Finite(k) => s.serialize_u64(*k as u64),
            Complexity::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityResult {
    pub value: Complexity,
    /// Depth of the canonical DFA, the bound on the search; absent for
    /// languages that are not piecewise-testable.
    pub checked_bound: Option<usize>,
    /// Why `value - 1` does not suffice (finite `value ≥ 1`), or the cycle
    /// in the canonical DFA of the language or its mirror (infinite `value`).
    pub violation: Option<Witness>,
}

pub fn piecewise_complexity(x: &Nfa) -> Result<ComplexityResult> {
    piecewise_complexity_with_cap(x, DEFAULT_STATE_CAP)
}

/// Tries `k = 0, 1, …, dp(L)` in order and returns the first `k` for which
/// the canonical DFA is `~_k`-closed.
pub fn piecewise_complexity_with_cap(x: &Nfa, cap: usize) -> Result<ComplexityResult> {
    let report = analyze(x);
    if !report.pt {
        return Ok(ComplexityResult {
            value: Complexity::Infinite,
            checked_bound: None,
            violation: report.witness.map(|w| w.witness),
        });
    }
    let d = minimize(&determinize(x));
    let bound = depth(&d)?;
    let mut violation = None;
    for k in 0..=bound {
        let v = is_k_closed_with_cap(&d, k, cap)?;
        if v.holds {
            return Ok(ComplexityResult {
                value: Complexity::Finite(k),
                checked_bound: Some(bound),
                violation,
            });
        }
        violation = v.witness;
    }
    Err(Error::Inconsistent(format!(
        "piecewise-testable language not closed at its depth {bound}"
    )))
}

fn finite_h(x: &Nfa, cap: usize) -> Result<usize> {
    piecewise_complexity_with_cap(x, cap)?
        .value
        .finite()
        .ok_or_else(|| Error::Inconsistent("finite language reported as not piecewise-testable".into()))
}

/// `h(F)` for a finite set of words, as the maximum over its members;
/// cross-checked against the complexity of the whole set.
pub fn h_finite(words: &[&str], alphabet: &Alphabet) -> Result<usize> {
    h_finite_with_cap(words, alphabet, DEFAULT_STATE_CAP)
}

pub fn h_finite_with_cap(words: &[&str], alphabet: &Alphabet, cap: usize) -> Result<usize> {
    let encoded: Vec<Vec<Letter>> =
        words.iter().map(|w| alphabet.encode(w)).collect::<Result<_>>()?;
    let mut max = 0;
    for w in &encoded {
        max = max.max(finite_h(&Nfa::from_word(alphabet, w), cap)?);
    }
    let whole = finite_h(&Nfa::from_words(alphabet, &encoded), cap)?;
    if whole != max {
        return Err(Error::Inconsistent(format!(
            "h of the set is {whole} but the largest h of a member is {max}"
        )));
    }
    Ok(max)
}

/// `1 + max_a (|u_1|_a + … + |u_m|_a)`, an upper bound on `h(u_1 ⧢ … ⧢ u_m)`.
pub fn word_shuffle_bound(words: &[&str], alphabet: &Alphabet) -> Result<usize> {
    let mut counts = vec![0usize; alphabet.len()];
    for w in words {
        for a in alphabet.encode(w)? {
            counts[a] += 1;
        }
    }
    Ok(1 + counts.into_iter().max().unwrap_or(0))
}

/// `U_0 = ε`, `U_{i+1} = (U_i a_{i+1})^λ U_i` over `a_1 = 'a'`, `a_2 = 'b'`, ….
/// Has length `(λ+1)^n − 1`.
pub fn u_family(n: usize, lambda: usize) -> Result<String> {
    let alphabet = Alphabet::first_n(n.max(1))?;
    let mut u = String::new();
    for i in 0..n {
        let mut block = u.clone();
        block.push(alphabet.symbol(i));
        u = block.repeat(lambda) + &u;
    }
    Ok(u)
}

/// Replaces the `i`-th letter of `alphabet` by the `(i + shift)`-th, indices modulo `|alphabet|`.
pub fn circular_rename(u: &str, shift: i64, alphabet: &Alphabet) -> Result<String> {
    let n = alphabet.len() as i64;
    Ok(alphabet
        .encode(u)?
        .into_iter()
        .map(|a| alphabet.symbol((a as i64 + shift).rem_euclid(n) as usize))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::regex_nfa;
    use crate::subwords::{filter_automaton, sim_k};

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn subword_table_layout() {
        let t = SubwordTable::new(2, 2).unwrap();
        assert_eq!(t.words, 7);
        // "" -> a=1, b=2; "a" -> aa=3, ab=4; "b" -> ba=5, bb=6
        assert_eq!(&t.extend[..6], &[1, 2, 3, 4, 5, 6]);
        assert_eq!(t.extend[3 * 2], NONE);
        assert!(SubwordTable::new(2, 20).is_err());
    }

    #[test]
    fn singleton_is_not_1_closed() {
        let d = minimize(&determinize(&Nfa::from_word(&ab(), &[0])));
        let v = is_k_closed(&d, 1).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::ClosureViolation { member: "a".into(), non_member: "aa".into(), k: 1 })
        );
        assert!(is_k_closed(&d, 2).unwrap().holds);
    }

    #[test]
    fn filter_closure() {
        let d = filter_automaton("ab", &ab()).unwrap();
        assert!(!is_k_closed(&d, 1).unwrap().holds);
        assert!(is_k_closed(&d, 2).unwrap().holds);
    }

    #[test]
    fn witness_pairs_are_congruent() {
        let d = filter_automaton("aba", &ab()).unwrap();
        let v = is_k_closed(&d, 2).unwrap();
        let Some(Witness::ClosureViolation { member, non_member, k }) = v.witness else {
            panic!("expected violation");
        };
        assert!(sim_k(&member, &non_member, k));
        assert!(d.accepts_str(&member).unwrap());
        assert!(!d.accepts_str(&non_member).unwrap());
    }

    #[test]
    fn complexity_of_small_languages() {
        let a = ab();
        let h = |re: &str| piecewise_complexity(&regex_nfa(re, &a).unwrap()).unwrap().value;
        assert_eq!(h("(a|b)*"), Complexity::Finite(0));
        assert_eq!(h("#"), Complexity::Finite(0));
        assert_eq!(h("~"), Complexity::Finite(1));
        assert_eq!(h("(a|b)*a"), Complexity::Infinite);
        assert_eq!(h("aa"), Complexity::Finite(3));
    }

    #[test]
    fn alphabet_matters() {
        let abc = Alphabet::parse("abc").unwrap();
        let x = regex_nfa("(a|b)*", &abc).unwrap();
        assert_eq!(piecewise_complexity(&x).unwrap().value, Complexity::Finite(1));
    }

    #[test]
    fn resource_limit_is_reported() {
        let d = filter_automaton("abab", &ab()).unwrap();
        assert!(matches!(
            is_k_closed_with_cap(&d, 4, 10),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn u_family_and_renaming() {
        assert_eq!(u_family(0, 3).unwrap(), "");
        assert_eq!(u_family(2, 1).unwrap(), "aba");
        assert_eq!(u_family(2, 2).unwrap(), "aabaabaa");
        assert_eq!(u_family(1, 3).unwrap(), "aaa");
        for n in 0..4 {
            for l in 0..4 {
                assert_eq!(u_family(n, l).unwrap().len(), (l + 1).pow(n as u32) - 1);
            }
        }
        assert_eq!(circular_rename("aba", 1, &ab()).unwrap(), "bab");
        assert_eq!(circular_rename("aba", 2, &ab()).unwrap(), "aba");
        assert_eq!(circular_rename("abc", -1, &Alphabet::parse("abc").unwrap()).unwrap(), "cab");
    }

    #[test]
    fn shuffle_bound() {
        let a = Alphabet::parse("a").unwrap();
        assert_eq!(word_shuffle_bound(&["aa"], &a).unwrap(), 3);
        assert_eq!(word_shuffle_bound(&["bab", "aba"], &ab()).unwrap(), 4);
        assert_eq!(word_shuffle_bound(&[], &ab()).unwrap(), 1);
    }

    #[test]
    fn finite_sets() {
        let a = Alphabet::parse("a").unwrap();
        assert_eq!(h_finite(&["aa"], &a).unwrap(), 3);
        assert_eq!(h_finite(&[], &ab()).unwrap(), 0);
        assert!(h_finite(&["c"], &ab()).is_err());
    }
}
