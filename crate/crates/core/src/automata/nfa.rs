use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

pub type StateId = usize;

/// Nondeterministic finite automaton without epsilon transitions.
///
/// States are `0..state_count()`. Transition targets are kept sorted and
/// deduplicated so that structurally equal automata compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    // delta[state][letter] = sorted targets
    delta: Vec<Vec<Vec<StateId>>>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
}

impl Nfa {
    /// An automaton with `states` states, no transitions, nothing initial or accepting.
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            delta: vec![vec![Vec::new(); k]; states],
            initial: Vec::new(),
            accepting: vec![false; states],
        }
    }

    /// The automaton accepting exactly `word`, as a chain of `|word|+1` states.
    pub fn from_word(alphabet: &Alphabet, word: &[Letter]) -> Self {
        let mut n = Nfa::new(alphabet.clone(), word.len() + 1);
        for (i, &a) in word.iter().enumerate() {
            n.add_transition(i, a, i + 1);
        }
        n.add_initial(0);
        n.set_accepting(word.len(), true);
        n
    }

    /// The automaton accepting a finite set of words, as a trie.
    pub fn from_words(alphabet: &Alphabet, words: &[Vec<Letter>]) -> Self {
        let mut children: Vec<Vec<Option<StateId>>> = vec![vec![None; alphabet.len()]];
        let mut accepting = vec![false];
        for w in words {
            let mut s = 0;
            for &a in w {
                s = match children[s][a] {
                    Some(t) => t,
                    None => {
                        let t = children.len();
                        children.push(vec![None; alphabet.len()]);
                        accepting.push(false);
                        children[s][a] = Some(t);
                        t
                    }
                };
            }
            accepting[s] = true;
        }
        let mut n = Nfa::new(alphabet.clone(), children.len());
        for (p, row) in children.iter().enumerate() {
            for (a, t) in row.iter().enumerate() {
                if let Some(q) = t {
                    n.add_transition(p, a, *q);
                }
            }
        }
        n.add_initial(0);
        n.accepting = accepting;
        n
    }

    /// The automaton accepting every word.
    pub fn universal(alphabet: &Alphabet) -> Self {
        let mut n = Nfa::new(alphabet.clone(), 1);
        for a in alphabet.letters() {
            n.add_transition(0, a, 0);
        }
        n.add_initial(0);
        n.set_accepting(0, true);
        n
    }

    pub fn empty_language(alphabet: &Alphabet) -> Self {
        Nfa::new(alphabet.clone(), 0)
    }

    pub fn add_state(&mut self) -> StateId {
        self.delta.push(vec![Vec::new(); self.alphabet.len()]);
        self.accepting.push(false);
        self.delta.len() - 1
    }

    pub fn add_transition(&mut self, from: StateId, letter: Letter, to: StateId) {
        let targets = &mut self.delta[from][letter];
        if let Err(pos) = targets.binary_search(&to) {
            targets.insert(pos, to);
        }
    }

    pub fn add_initial(&mut self, state: StateId) {
        if let Err(pos) = self.initial.binary_search(&state) {
            self.initial.insert(pos, state);
        }
    }

    pub fn set_accepting(&mut self, state: StateId, accepting: bool) {
        self.accepting[state] = accepting;
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_count()).filter(|&s| self.accepting[s])
    }

    pub fn successors(&self, state: StateId, letter: Letter) -> &[StateId] {
        &self.delta[state][letter]
    }

    /// All transitions as `(source, letter, target)`, sorted.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, ts)| ts.iter().map(move |&q| (p, a, q)))
        })
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().flatten().map(Vec::len).sum()
    }

    /// Membership by on-the-fly subset simulation.
    pub fn accepts(&self, word: &[Letter]) -> bool {
        let mut current = vec![false; self.state_count()];
        for &s in &self.initial {
            current[s] = true;
        }
        for &a in word {
            let mut next = vec![false; self.state_count()];
            for (p, on) in current.iter().enumerate() {
                if *on {
                    for &q in &self.delta[p][a] {
                        next[q] = true;
                    }
                }
            }
            current = next;
        }
        current.iter().enumerate().any(|(s, on)| *on && self.accepting[s])
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    /// Is this automaton deterministic and complete (exactly one initial
    /// state and exactly one successor per state and letter)?
    pub fn is_complete_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().flatten().all(|ts| ts.len() == 1)
    }

    pub(crate) fn check_same_alphabet(&self, other: &Nfa) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    /// Reverse every transition and swap initial with accepting states.
    pub fn mirror(&self) -> Nfa {
        let mut m = Nfa::new(self.alphabet.clone(), self.state_count());
        for (p, a, q) in self.transitions() {
            m.add_transition(q, a, p);
        }
        for s in self.accepting_states() {
            m.add_initial(s);
        }
        for &s in &self.initial {
            m.accepting[s] = true;
        }
        m
    }

    /// Same language, states renumbered in breadth-first order from the
    /// initial states (letters ascending, targets ascending); unreachable
    /// states follow in their original order.
    pub fn canonical_numbering(&self) -> Nfa {
        let n = self.state_count();
        let mut order = Vec::with_capacity(n);
        let mut new_id = vec![usize::MAX; n];
        for &s in &self.initial {
            if new_id[s] == usize::MAX {
                new_id[s] = order.len();
                order.push(s);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let p = order[head];
            head += 1;
            for a in self.alphabet.letters() {
                for &q in &self.delta[p][a] {
                    if new_id[q] == usize::MAX {
                        new_id[q] = order.len();
                        order.push(q);
                    }
                }
            }
        }
        for s in 0..n {
            if new_id[s] == usize::MAX {
                new_id[s] = order.len();
                order.push(s);
            }
        }
        let mut out = Nfa::new(self.alphabet.clone(), n);
        for (p, a, q) in self.transitions() {
            out.add_transition(new_id[p], a, new_id[q]);
        }
        for &s in &self.initial {
            out.add_initial(new_id[s]);
        }
        for s in self.accepting_states() {
            out.accepting[new_id[s]] = true;
        }
        out
    }

    /// Keep only states that are reachable from an initial state and can
    /// reach an accepting state.
    pub fn trim(&self) -> Nfa {
        let n = self.state_count();
        let mut fwd = vec![false; n];
        let mut stack: Vec<StateId> = self.initial.clone();
        for &s in &stack {
            fwd[s] = true;
        }
        while let Some(p) = stack.pop() {
            for ts in &self.delta[p] {
                for &q in ts {
                    if !fwd[q] {
                        fwd[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (p, _, q) in self.transitions() {
            rev[q].push(p);
        }
        let mut bwd = vec![false; n];
        let mut stack: Vec<StateId> = self.accepting_states().collect();
        for &s in &stack {
            bwd[s] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !bwd[p] {
                    bwd[p] = true;
                    stack.push(p);
                }
            }
        }
        let keep: Vec<bool> = (0..n).map(|s| fwd[s] && bwd[s]).collect();
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if keep[s] {
                id[s] = count;
                count += 1;
            }
        }
        let mut out = Nfa::new(self.alphabet.clone(), count);
        for (p, a, q) in self.transitions() {
            if keep[p] && keep[q] {
                out.add_transition(id[p], a, id[q]);
            }
        }
        for &s in &self.initial {
            if keep[s] {
                out.add_initial(id[s]);
            }
        }
        for s in 0..n {
            if keep[s] && self.accepting[s] {
                out.accepting[id[s]] = true;
            }
        }
        out
    }

    /// Same automaton viewed over a larger alphabet (new letters have no transitions).
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Nfa> {
        let map: Vec<Letter> = self
            .alphabet
            .symbols()
            .iter()
            .map(|&c| alphabet.index_of(c).ok_or(Error::UnknownLetter { letter: c }))
            .collect::<Result<_>>()?;
        let mut out = Nfa::new(alphabet.clone(), self.state_count());
        for (p, a, q) in self.transitions() {
            out.add_transition(p, map[a], q);
        }
        out.initial = self.initial.clone();
        out.accepting = self.accepting.clone();
        Ok(out)
    }
}

/// Intermediate automaton with epsilon moves; only ever exposed after
/// [`EpsNfa::eliminate`].
#[derive(Clone, Debug)]
pub(crate) struct EpsNfa {
    pub nfa: Nfa,
    pub eps: Vec<Vec<StateId>>,
}

impl EpsNfa {
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        EpsNfa { nfa: Nfa::new(alphabet, states), eps: vec![Vec::new(); states] }
    }

    pub fn add_state(&mut self) -> StateId {
        self.eps.push(Vec::new());
        self.nfa.add_state()
    }

    pub fn add_eps(&mut self, from: StateId, to: StateId) {
        if from != to && !self.eps[from].contains(&to) {
            self.eps[from].push(to);
        }
    }

    fn closure(&self, state: StateId, seen: &mut [bool], out: &mut Vec<StateId>) {
        out.clear();
        out.push(state);
        seen[state] = true;
        let mut i = 0;
        while i < out.len() {
            let p = out[i];
            i += 1;
            for &q in &self.eps[p] {
                if !seen[q] {
                    seen[q] = true;
                    out.push(q);
                }
            }
        }
        for &q in out.iter() {
            seen[q] = false;
        }
    }

    /// `p -a-> r` whenever `q` is in the epsilon closure of `p` and
    /// `q -a-> r`; `p` accepts when its closure meets an accepting state.
    pub fn eliminate(self) -> Nfa {
        let n = self.nfa.state_count();
        let mut out = Nfa::new(self.nfa.alphabet.clone(), n);
        out.initial = self.nfa.initial.clone();
        let mut seen = vec![false; n];
        let mut cl = Vec::new();
        for p in 0..n {
            self.closure(p, &mut seen, &mut cl);
            for &q in &cl {
                if self.nfa.accepting[q] {
                    out.accepting[p] = true;
                }
                for a in self.nfa.alphabet.letters() {
                    for &r in &self.nfa.delta[q][a] {
                        out.add_transition(p, a, r);
                    }
                }
            }
        }
        out
    }
}
