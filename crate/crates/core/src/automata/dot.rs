use std::collections::BTreeMap;
use std::fmt::Write;

use super::nfa::Nfa;

/// Graphviz rendering: doubled border for accepting states, an invisible
/// entry node per initial state, one edge per (source, target) pair with the
/// letters comma-joined.
pub fn to_dot(nfa: &Nfa) -> String {
    let nfa = nfa.canonical_numbering();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for s in 0..nfa.state_count() {
        let shape = if nfa.is_accepting(s) { "doublecircle" } else { "circle" };
        writeln!(out, "  {s} [shape={shape}];").unwrap();
    }
    for &s in nfa.initial() {
        writeln!(out, "  __start{s} [shape=point];").unwrap();
        writeln!(out, "  __start{s} -> {s};").unwrap();
    }
    let mut edges: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    for (p, a, q) in nfa.transitions() {
        edges.entry((p, q)).or_default().push(nfa.alphabet().symbol(a));
    }
    for ((p, q), letters) in edges {
        let label: Vec<String> = letters.iter().map(char::to_string).collect();
        writeln!(out, "  {p} -> {q} [label=\"{}\"];", label.join(",")).unwrap();
    }
    out.push_str("}\n");
    out
}
