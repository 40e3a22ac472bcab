//! R-, L- and J-triviality, and piecewise testability.
//!
//! A regular language is R-trivial when its minimal DFA is acyclic,
//! L-trivial when the minimal DFA of its mirror is, and piecewise-testable
//! (equivalently J-trivial) when both hold.

use serde::Serialize;

use crate::alphabet::LetterSet;
use crate::automata::{determinize, is_acyclic_dfa, minimize, Dfa, Nfa, StateId, Witness};
use crate::error::{Error, Result};

/// Which automaton a cycle witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The minimal DFA of the language.
    Forward,
    /// The minimal DFA of the mirrored language.
    Mirror,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SidedWitness {
    pub side: Side,
    #[serde(flatten)]
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityReport {
    pub r_trivial: bool,
    pub l_trivial: bool,
    pub j_trivial: bool,
    pub pt: bool,
    pub witness: Option<SidedWitness>,
}

pub fn analyze(x: &Nfa) -> TrivialityReport {
    let forward = minimize(&determinize(x));
    let backward = minimize(&determinize(&x.mirror()));
    analyze_minimal(&forward, &backward)
}

/// Same as [`analyze`] given the two canonical DFAs.
pub fn analyze_minimal(forward: &Dfa, mirrored: &Dfa) -> TrivialityReport {
    let r = is_acyclic_dfa(forward);
    let l = is_acyclic_dfa(mirrored);
    let witness = match (r.witness, l.witness) {
        (Some(w), _) => Some(SidedWitness { side: Side::Forward, witness: w }),
        (None, Some(w)) => Some(SidedWitness { side: Side::Mirror, witness: w }),
        (None, None) => None,
    };
    let j = r.holds && l.holds;
    TrivialityReport { r_trivial: r.holds, l_trivial: l.holds, j_trivial: j, pt: j, witness }
}

pub fn is_pt(x: &Nfa) -> bool {
    analyze(x).pt
}

/// Does every letter of `letters` loop at `state`?
pub fn is_b_stable(d: &Dfa, state: StateId, letters: LetterSet) -> Result<bool> {
    d.check_state(state)?;
    if !letters.is_subset_of(d.alphabet().full_set()) {
        return Err(Error::InvalidParams("letters are not in the alphabet".into()));
    }
    Ok(letters.iter().all(|a| d.next(state, a) == state))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::regex::regex_nfa;
    use crate::subwords::filter_automaton;

    #[test]
    fn ends_with_a_is_not_r_trivial() {
        let ab = Alphabet::parse("ab").unwrap();
        let r = analyze(&regex_nfa("(a|b)*a", &ab).unwrap());
        assert!(!r.r_trivial && !r.pt && !r.j_trivial);
        assert_eq!(r.witness.unwrap().side, Side::Forward);
    }

    #[test]
    fn starts_with_a_is_r_but_not_l_trivial() {
        let ab = Alphabet::parse("ab").unwrap();
        let r = analyze(&regex_nfa("a(a|b)*", &ab).unwrap());
        assert!(r.r_trivial && !r.l_trivial && !r.pt);
        assert_eq!(r.witness.unwrap().side, Side::Mirror);
    }

    #[test]
    fn filters_are_pt() {
        let ab = Alphabet::parse("ab").unwrap();
        let r = analyze(&filter_automaton("aba", &ab).unwrap().to_nfa());
        assert!(r.pt && r.witness.is_none());
    }

    #[test]
    fn stability() {
        let ab = Alphabet::parse("ab").unwrap();
        let d = filter_automaton("ab", &ab).unwrap();
        assert!(is_b_stable(&d, 2, ab.full_set()).unwrap());
        assert!(is_b_stable(&d, 0, ab.letter_set("b").unwrap()).unwrap());
        assert!(!is_b_stable(&d, 0, ab.letter_set("a").unwrap()).unwrap());
        assert!(matches!(is_b_stable(&d, 7, ab.full_set()), Err(Error::InvalidState { .. })));

        let a = Alphabet::parse("a").unwrap();
        let astar = minimize(&determinize(&regex_nfa("a*", &a).unwrap()));
        assert!(is_b_stable(&astar, 0, a.full_set()).unwrap());
    }
}
