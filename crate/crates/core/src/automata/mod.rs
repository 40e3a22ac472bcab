//! Finite automata and their algebra.

mod acyclic;
mod dfa;
mod dot;
mod json;
mod nfa;
mod ops;
mod witness;

pub use acyclic::{depth, is_acyclic, is_acyclic_dfa, strongly_connected_components};
pub use dfa::{determinize, determinize_with_sets, minimize, Dfa};
pub use dot::to_dot;
pub use json::{from_json, to_json, Automaton, AutomatonDoc};
pub(crate) use nfa::EpsNfa;
pub use nfa::{Nfa, StateId};
pub use ops::{
    boolean, boolean_dfa, complement, difference, equivalent, equivalent_dfa, intersection,
    is_empty, is_subset, mirror, shortest_accepted, union, BoolOp,
};
pub use witness::{Verdict, Witness};

/// Canonical minimal DFA of the language of `nfa`.
pub fn minimal_dfa(nfa: &Nfa) -> Dfa {
    minimize(&determinize(nfa))
}
