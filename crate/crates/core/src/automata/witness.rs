use serde::Serialize;

/// Evidence for a failed property. Words are spelled in the automaton's alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A nonempty word leading from `state` back to `state` through at least
    /// one non-self-loop transition.
    CycleWord { state: usize, word: String },
    /// A word accepted by exactly one of two automata; `in_left` says which.
    DifferenceWord { word: String, in_left: bool },
    /// `member` is in the language, `non_member` is not, yet both have the
    /// same subwords of length at most `k`.
    ClosureViolation { member: String, non_member: String, k: usize },
}

impl Witness {
    pub fn word(&self) -> &str {
        match self {
            Witness::CycleWord { word, .. } | Witness::DifferenceWord { word, .. } => word,
            Witness::ClosureViolation { member, .. } => member,
        }
    }
}

/// A yes/no answer, with evidence when the answer is no.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn no(witness: Witness) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }
}
