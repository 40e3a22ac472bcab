//! Acyclicity (all cycles are self-loops) and depth.

use std::collections::VecDeque;

use super::dfa::Dfa;
use super::nfa::{Nfa, StateId};
use super::witness::{Verdict, Witness};
use crate::alphabet::Letter;
use crate::error::{Error, Result};

/// Strongly connected components of the transition graph with self-loops
/// removed. Iterative Tarjan; components come out in reverse topological order.
pub fn strongly_connected_components(nfa: &Nfa) -> Vec<Vec<StateId>> {
    let n = nfa.state_count();
    let succ: Vec<Vec<StateId>> = (0..n)
        .map(|p| {
            let mut s: Vec<StateId> = nfa
                .alphabet()
                .letters()
                .flat_map(|a| nfa.successors(p, a).iter().copied())
                .filter(|&q| q != p)
                .collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<StateId> = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;
    // (node, position in its successor list)
    let mut call: Vec<(StateId, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < succ[v].len() {
                let w = succ[v][*i];
                *i += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }
    components
}

/// Shortest, then lexicographically least, word leading from `start` back
/// to `start` using only non-self-loop transitions inside `component`.
fn shortest_cycle(
    nfa: &Nfa,
    start: StateId,
    in_component: &[bool],
) -> Option<Vec<Letter>> {
    let n = nfa.state_count();
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for a in nfa.alphabet().letters() {
            for &q in nfa.successors(p, a) {
                if q == p || !in_component[q] {
                    continue;
                }
                if q == start {
                    let mut word = vec![a];
                    let mut s = p;
                    while let Some((prev, b)) = parent[s] {
                        word.push(b);
                        s = prev;
                    }
                    word.reverse();
                    return Some(word);
                }
                if !seen[q] {
                    seen[q] = true;
                    parent[q] = Some((p, a));
                    queue.push_back(q);
                }
            }
        }
    }
    None
}

/// True iff every strongly connected component (self-loops ignored) is a
/// single state. Otherwise the witness is a shortest cycle, ties broken by
/// the lexicographically least word and then by the smallest state.
pub fn is_acyclic(nfa: &Nfa) -> Verdict {
    let mut best: Option<(Vec<Letter>, StateId)> = None;
    let mut in_component = vec![false; nfa.state_count()];
    for comp in strongly_connected_components(nfa) {
        if comp.len() < 2 {
            continue;
        }
        for &p in &comp {
            in_component[p] = true;
        }
        for &p in &comp {
            if let Some(word) = shortest_cycle(nfa, p, &in_component) {
                let better = match &best {
                    None => true,
                    Some((w, s)) => (word.len(), &word, p) < (w.len(), w, *s),
                };
                if better {
                    best = Some((word, p));
                }
            }
        }
        for &p in &comp {
            in_component[p] = false;
        }
    }
    match best {
        None => Verdict::yes(),
        Some((word, state)) => Verdict::no(Witness::CycleWord {
            state,
            word: nfa.alphabet().decode(&word),
        }),
    }
}

pub fn is_acyclic_dfa(dfa: &Dfa) -> Verdict {
    is_acyclic(&dfa.to_nfa())
}

/// Number of transitions on a longest self-loop-free path from the initial
/// state. Only defined for acyclic automata.
pub fn depth(dfa: &Dfa) -> Result<usize> {
    if !is_acyclic_dfa(dfa).holds {
        return Err(Error::NotAcyclic);
    }
    let reachable = dfa.reachable();
    let n = dfa.state_count();
    let mut indegree = vec![0usize; n];
    let succ = |p: StateId| {
        let mut s: Vec<StateId> =
            dfa.alphabet().letters().map(|a| dfa.next(p, a)).filter(|&q| q != p).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    for p in (0..n).filter(|&p| reachable[p]) {
        for q in succ(p) {
            indegree[q] += 1;
        }
    }
    let mut longest = vec![0usize; n];
    let mut queue: VecDeque<StateId> =
        (0..n).filter(|&p| reachable[p] && indegree[p] == 0).collect();
    let mut best = 0;
    while let Some(p) = queue.pop_front() {
        best = best.max(longest[p]);
        for q in succ(p) {
            longest[q] = longest[q].max(longest[p] + 1);
            indegree[q] -= 1;
            if indegree[q] == 0 {
                queue.push_back(q);
            }
        }
    }
    Ok(best)
}
