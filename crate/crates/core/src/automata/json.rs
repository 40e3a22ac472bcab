//! The JSON automaton document:
//!
//! ```json
//! {"alphabet":["a","b"],"states":2,"initial":[0],"accepting":[1],"transitions":[[0,"a",1]]}
//! ```
//!
//! A document reads back as a [`Dfa`] exactly when it has one initial state
//! and one transition per state and letter.

use serde::{Deserialize, Serialize};

use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDoc {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: Vec<usize>,
    pub accepting: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

/// An automaton read from a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn to_nfa(&self) -> Nfa {
        match self {
            Automaton::Dfa(d) => d.to_nfa(),
            Automaton::Nfa(n) => n.clone(),
        }
    }

    pub fn into_nfa(self) -> Nfa {
        match self {
            Automaton::Dfa(d) => d.to_nfa(),
            Automaton::Nfa(n) => n,
        }
    }
}

fn single_char(s: &str) -> Result<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::Format(format!("letter {s:?} is not a single character"))),
    }
}

impl AutomatonDoc {
    /// Document for `nfa`, states renumbered breadth-first from the initial states.
    pub fn from_nfa(nfa: &Nfa) -> Self {
        let nfa = nfa.canonical_numbering();
        let alphabet = nfa.alphabet();
        AutomatonDoc {
            alphabet: alphabet.symbols().iter().map(|c| c.to_string()).collect(),
            states: nfa.state_count(),
            initial: nfa.initial().to_vec(),
            accepting: nfa.accepting_states().collect(),
            transitions: nfa
                .transitions()
                .map(|(p, a, q)| (p, alphabet.symbol(a).to_string(), q))
                .collect(),
        }
    }

    pub fn to_nfa(&self) -> Result<Nfa> {
        let symbols: Vec<char> =
            self.alphabet.iter().map(|s| single_char(s)).collect::<Result<_>>()?;
        let alphabet = Alphabet::new(symbols.iter().copied())?;
        let check = |s: usize| {
            if s < self.states {
                Ok(s)
            } else {
                Err(Error::Format(format!("state {s} out of range 0..{}", self.states)))
            }
        };
        let mut nfa = Nfa::new(alphabet.clone(), self.states);
        for &s in &self.initial {
            nfa.add_initial(check(s)?);
        }
        for &s in &self.accepting {
            nfa.set_accepting(check(s)?, true);
        }
        for (p, letter, q) in &self.transitions {
            let c = single_char(letter)?;
            let a = alphabet
                .index_of(c)
                .ok_or_else(|| Error::Format(format!("letter {c:?} is not in the alphabet")))?;
            nfa.add_transition(check(*p)?, a, check(*q)?);
        }
        Ok(nfa)
    }

    pub fn to_automaton(&self) -> Result<Automaton> {
        let nfa = self.to_nfa()?;
        Ok(match Dfa::from_nfa(&nfa) {
            Some(d) => Automaton::Dfa(d),
            None => Automaton::Nfa(nfa),
        })
    }
}

pub fn to_json(nfa: &Nfa) -> String {
    serde_json::to_string(&AutomatonDoc::from_nfa(nfa)).expect("document serializes")
}

pub fn from_json(text: &str) -> Result<Automaton> {
    let doc: AutomatonDoc =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    doc.to_automaton()
}
