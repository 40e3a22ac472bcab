//! Boolean operations, complement and equivalence.

use std::collections::{HashMap, VecDeque};

use super::dfa::{determinize, Dfa};
use super::nfa::{Nfa, StateId};
use super::witness::{Verdict, Witness};
use crate::alphabet::Letter;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Union => x || y,
            BoolOp::Intersection => x && y,
            BoolOp::Difference => x && !y,
            BoolOp::SymmetricDifference => x != y,
        }
    }
}

/// Reachable product of two complete DFAs, with the pair behind each state.
fn product(x: &Dfa, y: &Dfa, op: BoolOp) -> (Dfa, Vec<(StateId, StateId)>) {
    let alphabet = x.alphabet().clone();
    let k = alphabet.len();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs = vec![(x.initial(), y.initial())];
    index.insert(pairs[0], 0);
    let mut table: Vec<Vec<StateId>> = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let t = (x.next(p, a), y.next(q, a));
            let id = *index.entry(t).or_insert_with(|| {
                pairs.push(t);
                pairs.len() - 1
            });
            row.push(id);
        }
        table.push(row);
        head += 1;
    }
    let accepting = pairs
        .iter()
        .map(|&(p, q)| op.apply(x.is_accepting(p), y.is_accepting(q)))
        .collect();
    let dfa = Dfa::from_table(alphabet, table, 0, accepting).expect("product is well formed");
    (dfa, pairs)
}

pub fn boolean_dfa(op: BoolOp, x: &Dfa, y: &Dfa) -> Result<Dfa> {
    if x.alphabet() != y.alphabet() {
        return Err(crate::error::Error::AlphabetMismatch);
    }
    Ok(product(x, y, op).0)
}

/// Set-theoretic combination of two languages over the same alphabet.
pub fn boolean(op: BoolOp, x: &Nfa, y: &Nfa) -> Result<Nfa> {
    x.check_same_alphabet(y)?;
    Ok(boolean_dfa(op, &determinize(x), &determinize(y))?.to_nfa())
}

pub fn union(x: &Nfa, y: &Nfa) -> Result<Nfa> {
    boolean(BoolOp::Union, x, y)
}

pub fn intersection(x: &Nfa, y: &Nfa) -> Result<Nfa> {
    boolean(BoolOp::Intersection, x, y)
}

pub fn difference(x: &Nfa, y: &Nfa) -> Result<Nfa> {
    boolean(BoolOp::Difference, x, y)
}

/// Determinizes (which completes with an explicit sink) and flips acceptance.
pub fn complement(x: &Nfa) -> Nfa {
    determinize(x).complement().to_nfa()
}

pub fn mirror(x: &Nfa) -> Nfa {
    x.mirror()
}

/// Shortlex-least word accepted by `d`, if any.
pub fn shortest_accepted(d: &Dfa) -> Option<Vec<Letter>> {
    let n = d.state_count();
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([d.initial()]);
    seen[d.initial()] = true;
    while let Some(p) = queue.pop_front() {
        if d.is_accepting(p) {
            let mut word = Vec::new();
            let mut s = p;
            while let Some((prev, a)) = parent[s] {
                word.push(a);
                s = prev;
            }
            word.reverse();
            return Some(word);
        }
        for a in d.alphabet().letters() {
            let q = d.next(p, a);
            if !seen[q] {
                seen[q] = true;
                parent[q] = Some((p, a));
                queue.push_back(q);
            }
        }
    }
    None
}

pub fn is_empty(x: &Nfa) -> bool {
    shortest_accepted(&determinize(x)).is_none()
}

pub fn equivalent_dfa(x: &Dfa, y: &Dfa) -> Result<Verdict> {
    if x.alphabet() != y.alphabet() {
        return Err(crate::error::Error::AlphabetMismatch);
    }
    let (diff, pairs) = product(x, y, BoolOp::SymmetricDifference);
    Ok(match shortest_accepted(&diff) {
        None => Verdict::yes(),
        Some(word) => {
            let (p, _) = pairs[diff.run_from(diff.initial(), &word)];
            Verdict::no(Witness::DifferenceWord {
                word: x.alphabet().decode(&word),
                in_left: x.is_accepting(p),
            })
        }
    })
}

/// Language equality; on failure the witness is a shortest (then
/// lexicographically least) word of the symmetric difference.
pub fn equivalent(x: &Nfa, y: &Nfa) -> Result<Verdict> {
    x.check_same_alphabet(y)?;
    equivalent_dfa(&determinize(x), &determinize(y))
}

/// Is `L(x) ⊆ L(y)`?
pub fn is_subset(x: &Nfa, y: &Nfa) -> Result<bool> {
    Ok(is_empty(&difference(x, y)?))
}
