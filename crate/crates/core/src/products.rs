//! Shuffle, infiltration and related product constructions.
//!
//! `x ↑_C y` interleaves a word of `x` with a word of `y`, where letters of
//! the share set `C` may additionally be consumed by both operands at once.
//! With `C = ∅` this is the shuffle; with `C = A` the interpolation product.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Letter, LetterSet, ShareSet};
use crate::automata::{determinize, equivalent, Dfa, EpsNfa, Nfa, StateId, Verdict};
use crate::error::{Error, Result};

fn check_share(alphabet: &Alphabet, share: ShareSet) -> Result<()> {
    if !share.is_subset_of(alphabet.full_set()) {
        return Err(Error::InvalidParams(format!(
            "share set is not a subset of the alphabet {alphabet}"
        )));
    }
    Ok(())
}

/// Pair automaton for `x ↑_C y`, built from the initial pairs outward.
pub fn infiltrate(x: &Nfa, y: &Nfa, share: ShareSet) -> Result<Nfa> {
    x.check_same_alphabet(y)?;
    check_share(x.alphabet(), share)?;
    let alphabet = x.alphabet().clone();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    for &p in x.initial() {
        for &q in y.initial() {
            index.insert((p, q), pairs.len());
            pairs.push((p, q));
        }
    }
    let mut edges: Vec<(StateId, Letter, StateId)> = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        for a in alphabet.letters() {
            let mut targets: Vec<(StateId, StateId)> = Vec::new();
            targets.extend(x.successors(p, a).iter().map(|&p2| (p2, q)));
            targets.extend(y.successors(q, a).iter().map(|&q2| (p, q2)));
            if share.contains(a) {
                for &p2 in x.successors(p, a) {
                    targets.extend(y.successors(q, a).iter().map(|&q2| (p2, q2)));
                }
            }
            for t in targets {
                let id = *index.entry(t).or_insert_with(|| {
                    pairs.push(t);
                    pairs.len() - 1
                });
                edges.push((head, a, id));
            }
        }
        head += 1;
    }
    let initial_pairs = x.initial().len() * y.initial().len();
    let mut out = Nfa::new(alphabet, pairs.len());
    for (p, a, q) in edges {
        out.add_transition(p, a, q);
    }
    for s in 0..initial_pairs {
        out.add_initial(s);
    }
    for (s, &(p, q)) in pairs.iter().enumerate() {
        out.set_accepting(s, x.is_accepting(p) && y.is_accepting(q));
    }
    Ok(out)
}

/// Shuffle product, `x ↑_∅ y`.
pub fn shuffle(x: &Nfa, y: &Nfa) -> Result<Nfa> {
    infiltrate(x, y, LetterSet::EMPTY)
}

/// `L(d) ↑_C w` by the word-indexed construction: states `Q × {0..|w|}`,
/// initial `(i, 0)`, accepting `F × {|w|}` and
/// `(p,k)·a = {(p·a,k)} ∪ {(p,k+1) | a = w[k]} ∪ {(p·a,k+1) | a = w[k], a ∈ C}`.
///
/// Every one of the `|Q|·(|w|+1)` states is materialized, state `(p, k)`
/// having id `p·(|w|+1) + k`.
pub fn infiltrate_word(d: &Dfa, word: &str, share: ShareSet) -> Result<Nfa> {
    let alphabet = d.alphabet();
    check_share(alphabet, share)?;
    let w = alphabet.encode(word)?;
    let m = w.len();
    let id = |p: StateId, k: usize| p * (m + 1) + k;
    let mut out = Nfa::new(alphabet.clone(), d.state_count() * (m + 1));
    for p in 0..d.state_count() {
        for k in 0..=m {
            for a in alphabet.letters() {
                let pa = d.next(p, a);
                out.add_transition(id(p, k), a, id(pa, k));
                if k < m && w[k] == a {
                    out.add_transition(id(p, k), a, id(p, k + 1));
                    if share.contains(a) {
                        out.add_transition(id(p, k), a, id(pa, k + 1));
                    }
                }
            }
            if k == m && d.is_accepting(p) {
                out.set_accepting(id(p, k), true);
            }
        }
    }
    out.add_initial(id(d.initial(), 0));
    Ok(out)
}

/// Standard concatenation without epsilon moves.
pub fn concat(x: &Nfa, y: &Nfa) -> Result<Nfa> {
    x.check_same_alphabet(y)?;
    let nx = x.state_count();
    let mut out = Nfa::new(x.alphabet().clone(), nx + y.state_count());
    for (p, a, q) in x.transitions() {
        out.add_transition(p, a, q);
        if x.is_accepting(q) {
            for &i in y.initial() {
                out.add_transition(p, a, nx + i);
            }
        }
    }
    for (p, a, q) in y.transitions() {
        out.add_transition(nx + p, a, nx + q);
    }
    for &i in x.initial() {
        out.add_initial(i);
    }
    if x.initial().iter().any(|&i| x.is_accepting(i)) {
        for &i in y.initial() {
            out.add_initial(nx + i);
        }
    }
    for f in y.accepting_states() {
        out.set_accepting(nx + f, true);
    }
    Ok(out)
}

/// `L(x) ⇢ u`: the words `v` such that some word of `L(x)` is an
/// interleaving of `u` and `v`.
pub fn scattered_residual(x: &Nfa, u: &str) -> Result<Nfa> {
    let u = x.alphabet().encode(u)?;
    let m = u.len();
    let id = |p: StateId, i: usize| p * (m + 1) + i;
    let mut e = EpsNfa::new(x.alphabet().clone(), x.state_count() * (m + 1));
    for (p, a, q) in x.transitions() {
        for i in 0..=m {
            e.nfa.add_transition(id(p, i), a, id(q, i));
            if i < m && u[i] == a {
                e.add_eps(id(p, i), id(q, i + 1));
            }
        }
    }
    for &s in x.initial() {
        e.nfa.add_initial(id(s, 0));
    }
    for f in x.accepting_states() {
        e.nfa.set_accepting(id(f, m), true);
    }
    Ok(e.eliminate().trim())
}

/// `e_B⁻¹(L(x))` where `e_B` erases the letters of `B`: in the
/// determinized automaton every `B`-transition becomes a self-loop.
pub fn erase_inverse(x: &Nfa, erased: LetterSet) -> Result<Nfa> {
    if !erased.is_subset_of(x.alphabet().full_set()) {
        return Err(Error::InvalidParams("erased letters are not in the alphabet".into()));
    }
    Ok(determinize(x).with_self_loops(erased).to_nfa())
}

/// `L ⧢ A*`: self-loops on every letter at every state.
pub fn upward_closure(x: &Nfa) -> Nfa {
    let mut out = x.clone();
    for p in 0..x.state_count() {
        for a in x.alphabet().letters() {
            out.add_transition(p, a, p);
        }
    }
    out
}

/// All subwords of words of `L(x)`: every transition may also be skipped.
pub fn downward_closure(x: &Nfa) -> Nfa {
    let mut e = EpsNfa::new(x.alphabet().clone(), x.state_count());
    for (p, a, q) in x.transitions() {
        e.nfa.add_transition(p, a, q);
        e.add_eps(p, q);
    }
    for &s in x.initial() {
        e.nfa.add_initial(s);
    }
    for f in x.accepting_states() {
        e.nfa.set_accepting(f, true);
    }
    e.eliminate()
}

/// Is `L(x)` closed under taking subwords? The witness, if any, is a
/// subword of a member that is not itself a member.
pub fn is_subword_closed(x: &Nfa) -> Verdict {
    equivalent(&downward_closure(x), x).expect("same alphabet")
}
