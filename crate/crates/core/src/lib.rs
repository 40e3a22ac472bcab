//! Automata toolkit for shuffles and infiltrations of piecewise-testable
//! languages.
//!
//! Languages are written as regular expressions ([`regex`]), compiled to
//! [`Nfa`]s and combined with the boolean operations of [`automata`] and the
//! shuffle/infiltration products of [`products`]. [`pt`] decides
//! piecewise testability, [`complexity`] computes the piecewise complexity
//! `h(L)`, and [`harness`] checks the known facts about these operations.

pub mod alphabet;
pub mod automata;
pub mod complexity;
pub mod error;
pub mod harness;
pub mod products;
pub mod pt;
pub mod regex;
pub mod subwords;

pub use alphabet::{Alphabet, Letter, LetterSet, ShareSet};
pub use automata::{Dfa, Nfa, Verdict, Witness};
pub use complexity::{Complexity, ComplexityResult};
pub use error::{Error, Result};
pub use pt::TrivialityReport;
pub use regex::RegexAst;
pub use subwords::SubwordProfile;
