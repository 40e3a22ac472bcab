use std::collections::HashMap;
use std::collections::VecDeque;

use super::nfa::{Nfa, StateId};
use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Complete deterministic finite automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    // delta[state * k + letter]
    delta: Vec<StateId>,
    initial: StateId,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from a dense transition table, `table[state][letter]`.
    pub fn from_table(
        alphabet: Alphabet,
        table: Vec<Vec<StateId>>,
        initial: StateId,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 || initial >= n {
            return Err(Error::InvalidState { state: initial, states: n });
        }
        if accepting.len() != n {
            return Err(Error::Format("accepting flags do not match state count".into()));
        }
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(n * k);
        for row in &table {
            if row.len() != k {
                return Err(Error::Format("transition row does not cover the alphabet".into()));
            }
            for &q in row {
                if q >= n {
                    return Err(Error::InvalidState { state: q, states: n });
                }
                delta.push(q);
            }
        }
        Ok(Dfa { alphabet, delta, initial, accepting })
    }

    /// Interprets a complete deterministic NFA as a DFA.
    pub fn from_nfa(nfa: &Nfa) -> Option<Dfa> {
        if !nfa.is_complete_deterministic() {
            return None;
        }
        let table = (0..nfa.state_count())
            .map(|p| nfa.alphabet().letters().map(|a| nfa.successors(p, a)[0]).collect())
            .collect();
        let accepting = (0..nfa.state_count()).map(|p| nfa.is_accepting(p)).collect();
        Dfa::from_table(nfa.alphabet().clone(), table, nfa.initial()[0], accepting).ok()
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut n = Nfa::new(self.alphabet.clone(), self.state_count());
        for p in 0..self.state_count() {
            for a in self.alphabet.letters() {
                n.add_transition(p, a, self.next(p, a));
            }
            n.set_accepting(p, self.accepting[p]);
        }
        n.add_initial(self.initial);
        n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    #[inline]
    pub fn next(&self, state: StateId, letter: Letter) -> StateId {
        self.delta[state * self.alphabet.len() + letter]
    }

    pub fn run_from(&self, state: StateId, word: &[Letter]) -> StateId {
        word.iter().fold(state, |s, &a| self.next(s, a))
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        self.accepting[self.run_from(self.initial, word)]
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    pub(crate) fn check_state(&self, state: StateId) -> Result<()> {
        if state >= self.state_count() {
            return Err(Error::InvalidState { state, states: self.state_count() });
        }
        Ok(())
    }

    /// Same language with accepting and rejecting states swapped.
    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        for f in &mut d.accepting {
            *f = !*f;
        }
        d
    }

    /// Reachable part, numbered breadth-first from the initial state with
    /// letters in alphabet order.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut id = vec![usize::MAX; self.state_count()];
        let mut order = vec![self.initial];
        id[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let p = order[head];
            head += 1;
            for a in 0..k {
                let q = self.next(p, a);
                if id[q] == usize::MAX {
                    id[q] = order.len();
                    order.push(q);
                }
            }
        }
        let mut delta = Vec::with_capacity(order.len() * k);
        for &p in &order {
            for a in 0..k {
                delta.push(id[self.next(p, a)]);
            }
        }
        let accepting = order.iter().map(|&p| self.accepting[p]).collect();
        Dfa { alphabet: self.alphabet.clone(), delta, initial: 0, accepting }
    }

    /// Isomorphism of the reachable parts, by simultaneous traversal.
    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let mut fwd: HashMap<StateId, StateId> = HashMap::new();
        let mut bwd: HashMap<StateId, StateId> = HashMap::new();
        let mut queue = VecDeque::from([(self.initial, other.initial)]);
        fwd.insert(self.initial, other.initial);
        bwd.insert(other.initial, self.initial);
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                return false;
            }
            for a in self.alphabet.letters() {
                let (p2, q2) = (self.next(p, a), other.next(q, a));
                match (fwd.get(&p2), bwd.get(&q2)) {
                    (None, None) => {
                        fwd.insert(p2, q2);
                        bwd.insert(q2, p2);
                        queue.push_back((p2, q2));
                    }
                    (Some(&x), Some(&y)) if x == q2 && y == p2 => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(p) = stack.pop() {
            for a in self.alphabet.letters() {
                let q = self.next(p, a);
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen
    }

    /// Same DFA with every transition on a letter of `letters` replaced by a self-loop.
    pub(crate) fn with_self_loops(&self, letters: crate::alphabet::LetterSet) -> Dfa {
        let mut d = self.clone();
        let k = self.alphabet.len();
        for p in 0..self.state_count() {
            for a in letters.iter().filter(|&a| a < k) {
                d.delta[p * k + a] = p;
            }
        }
        d
    }
}

/// Subset construction over the reachable state sets. The empty set, when
/// reachable, becomes the rejecting sink.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let k = nfa.alphabet().len();
    let start: Vec<StateId> = nfa.initial().to_vec();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut sets: Vec<Vec<StateId>> = vec![start.clone()];
    index.insert(start, 0);
    let mut delta: Vec<StateId> = Vec::new();
    let mut mark = vec![false; nfa.state_count()];
    let mut head = 0;
    while head < sets.len() {
        for a in 0..k {
            let mut target: Vec<StateId> = Vec::new();
            for &p in &sets[head] {
                for &q in nfa.successors(p, a) {
                    if !mark[q] {
                        mark[q] = true;
                        target.push(q);
                    }
                }
            }
            for &q in &target {
                mark[q] = false;
            }
            target.sort_unstable();
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = sets.len();
                    index.insert(target.clone(), id);
                    sets.push(target);
                    id
                }
            };
            delta.push(id);
        }
        head += 1;
    }
    let accepting = sets
        .iter()
        .map(|s| s.iter().any(|&p| nfa.is_accepting(p)))
        .collect();
    Dfa { alphabet: nfa.alphabet().clone(), delta, initial: 0, accepting }
}

/// Subset construction that also returns the NFA state set behind every DFA state.
pub fn determinize_with_sets(nfa: &Nfa) -> (Dfa, Vec<Vec<StateId>>) {
    let dfa = determinize(nfa);
    // Replay to recover the sets; the numbering of `determinize` is BFS order.
    let mut sets = vec![Vec::new(); dfa.state_count()];
    let mut seen = vec![false; dfa.state_count()];
    let mut queue = VecDeque::from([(dfa.initial, nfa.initial().to_vec())]);
    seen[dfa.initial] = true;
    while let Some((d, set)) = queue.pop_front() {
        for a in nfa.alphabet().letters() {
            let q = dfa.next(d, a);
            if !seen[q] {
                seen[q] = true;
                let mut t: Vec<StateId> =
                    set.iter().flat_map(|&p| nfa.successors(p, a).iter().copied()).collect();
                t.sort_unstable();
                t.dedup();
                queue.push_back((q, t));
            }
        }
        sets[d] = set;
    }
    (dfa, sets)
}

/// Hopcroft partition refinement on the reachable part, followed by
/// breadth-first renumbering. Isomorphic inputs give identical outputs.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let d = dfa.canonical();
    let n = d.state_count();
    let k = d.alphabet.len();

    // inverse transitions: inv[letter][target] = sources
    let mut inv: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); n]; k];
    for p in 0..n {
        for a in 0..k {
            inv[a][d.next(p, a)].push(p);
        }
    }

    let mut block_of = vec![0usize; n];
    let mut blocks: Vec<Vec<StateId>> = Vec::new();
    let (acc, rej): (Vec<StateId>, Vec<StateId>) = (0..n).partition(|&p| d.accepting[p]);
    for b in [acc, rej] {
        if !b.is_empty() {
            for &p in &b {
                block_of[p] = blocks.len();
            }
            blocks.push(b);
        }
    }

    let mut work: Vec<(usize, Letter)> = Vec::new();
    let mut in_work: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
        for a in 0..k {
            work.push((smaller, a));
            in_work[smaller][a] = true;
        }
    }

    let mut touched_count: Vec<usize> = vec![0; n];
    let mut marked = vec![false; n];
    while let Some((splitter, a)) = work.pop() {
        in_work[splitter][a] = false;
        let mut predecessors: Vec<StateId> = Vec::new();
        for &q in &blocks[splitter] {
            for &p in &inv[a][q] {
                if !marked[p] {
                    marked[p] = true;
                    predecessors.push(p);
                }
            }
        }
        let mut touched_blocks: Vec<usize> = Vec::new();
        for &p in &predecessors {
            let b = block_of[p];
            if touched_count[b] == 0 {
                touched_blocks.push(b);
            }
            touched_count[b] += 1;
        }
        for b in touched_blocks {
            let count = std::mem::take(&mut touched_count[b]);
            if count == blocks[b].len() {
                continue;
            }
            let (inside, outside): (Vec<StateId>, Vec<StateId>) =
                blocks[b].iter().partition(|&&p| marked[p]);
            let new_b = blocks.len();
            let (stay, moved) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            for &p in &moved {
                block_of[p] = new_b;
            }
            blocks[b] = stay;
            blocks.push(moved);
            in_work.push(vec![false; k]);
            // `moved` is the smaller half, which is enough whether or not
            // (b, c) is still pending.
            for c in 0..k {
                work.push((new_b, c));
                in_work[new_b][c] = true;
            }
        }
        for &p in &predecessors {
            marked[p] = false;
        }
    }

    let m = blocks.len();
    let mut delta = vec![0; m * k];
    let mut accepting = vec![false; m];
    for (b, states) in blocks.iter().enumerate() {
        let rep = states[0];
        accepting[b] = d.accepting[rep];
        for a in 0..k {
            delta[b * k + a] = block_of[d.next(rep, a)];
        }
    }
    Dfa { alphabet: d.alphabet.clone(), delta, initial: block_of[d.initial], accepting }
        .canonical()
}
