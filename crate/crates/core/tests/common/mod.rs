//! Brute-force reference implementations. None of these use the library's
//! automata algorithms; they work directly on words and definitions.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use ptlang::automata::Dfa;
use ptlang::{Nfa, RegexAst};
use rand::Rng;

pub type Lang = BTreeSet<String>;

/// All words over `letters` of length at most `max`, shortlex.
pub fn words(letters: &[char], max: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for &c in letters {
                next.push(format!("{w}{c}"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Direct subset simulation over the transition list.
pub struct Simulator<'a> {
    nfa: &'a Nfa,
    edges: HashMap<(usize, char), Vec<usize>>,
}

impl<'a> Simulator<'a> {
    pub fn new(nfa: &'a Nfa) -> Self {
        let mut edges: HashMap<(usize, char), Vec<usize>> = HashMap::new();
        for (p, a, q) in nfa.transitions() {
            edges.entry((p, nfa.alphabet().symbol(a))).or_default().push(q);
        }
        Simulator { nfa, edges }
    }

    pub fn accepts(&self, w: &str) -> bool {
        let mut current: BTreeSet<usize> = self.nfa.initial().iter().copied().collect();
        for c in w.chars() {
            current = current
                .iter()
                .flat_map(|&p| self.edges.get(&(p, c)).into_iter().flatten().copied())
                .collect();
        }
        current.iter().any(|&p| self.nfa.is_accepting(p))
    }
}

pub fn nfa_accepts(nfa: &Nfa, w: &str) -> bool {
    Simulator::new(nfa).accepts(w)
}

pub fn nfa_lang(nfa: &Nfa, max: usize) -> Lang {
    let sim = Simulator::new(nfa);
    words(nfa.alphabet().symbols(), max).into_iter().filter(|w| sim.accepts(w)).collect()
}

pub fn dfa_accepts(d: &Dfa, w: &str) -> bool {
    let mut q = d.initial();
    for c in w.chars() {
        q = d.next(q, d.alphabet().index_of(c).unwrap());
    }
    d.is_accepting(q)
}

pub fn dfa_lang(d: &Dfa, max: usize) -> Lang {
    words(d.alphabet().symbols(), max).into_iter().filter(|w| dfa_accepts(d, w)).collect()
}

/// End positions reachable by matching `r` against `w` from `start`.
fn ends(r: &RegexAst, w: &[char], start: usize) -> BTreeSet<usize> {
    match r {
        RegexAst::Empty => BTreeSet::new(),
        RegexAst::Epsilon => BTreeSet::from([start]),
        RegexAst::Letter(c) => {
            if w.get(start) == Some(c) {
                BTreeSet::from([start + 1])
            } else {
                BTreeSet::new()
            }
        }
        RegexAst::Union(l, r) => ends(l, w, start).union(&ends(r, w, start)).copied().collect(),
        RegexAst::Concat(l, r) => ends(l, w, start).into_iter().flat_map(|m| ends(r, w, m)).collect(),
        RegexAst::Star(inner) => {
            let mut seen = BTreeSet::from([start]);
            let mut todo = vec![start];
            while let Some(p) = todo.pop() {
                for q in ends(inner, w, p) {
                    if seen.insert(q) {
                        todo.push(q);
                    }
                }
            }
            seen
        }
    }
}

pub fn regex_matches(r: &RegexAst, w: &str) -> bool {
    let chars: Vec<char> = w.chars().collect();
    ends(r, &chars, 0).contains(&chars.len())
}

pub fn regex_lang(r: &RegexAst, letters: &[char], max: usize) -> Lang {
    words(letters, max).into_iter().filter(|w| regex_matches(r, w)).collect()
}

pub fn random_regex(rng: &mut impl Rng, letters: &[char], depth: usize) -> RegexAst {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => RegexAst::Epsilon,
            1 => RegexAst::Empty,
            _ => RegexAst::Letter(letters[rng.gen_range(0..letters.len())]),
        };
    }
    match rng.gen_range(0..3) {
        0 => RegexAst::union(random_regex(rng, letters, depth - 1), random_regex(rng, letters, depth - 1)),
        1 => RegexAst::concat(random_regex(rng, letters, depth - 1), random_regex(rng, letters, depth - 1)),
        _ => RegexAst::star(random_regex(rng, letters, depth - 1)),
    }
}

pub fn random_word(rng: &mut impl Rng, letters: &[char], max: usize) -> String {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

/// `w` restricted to the positions in `mask`.
pub fn project(w: &[char], mask: u32) -> String {
    w.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| *c).collect()
}

/// Is `u` a scattered subword of `v`? Greedy left-to-right scan.
pub fn is_sub(u: &str, v: &str) -> bool {
    let mut it = v.chars();
    u.chars().all(|c| it.any(|d| d == c))
}

/// All subwords of `u` of length at most `k`, by enumerating position sets.
pub fn subwords(u: &str, k: usize) -> BTreeSet<String> {
    let chars: Vec<char> = u.chars().collect();
    (0u32..(1 << chars.len()))
        .filter(|m| m.count_ones() as usize <= k)
        .map(|m| project(&chars, m))
        .collect()
}

pub fn simon(u: &str, v: &str, k: usize) -> bool {
    subwords(u, k) == subwords(v, k)
}

/// Maximal elements of a set of words under the subword order.
pub fn maximal(set: &BTreeSet<String>) -> BTreeSet<String> {
    set.iter()
        .filter(|x| !set.iter().any(|y| y != *x && is_sub(x, y)))
        .cloned()
        .collect()
}

/// Is `w` in `L1 ↑_C L2`? There must be position sets `K ∪ K' = [0, |w|)`
/// with `w|K ∈ L1`, `w|K' ∈ L2`, and only letters of `C` at shared positions.
pub fn in_infiltration(w: &str, l1: &Lang, l2: &Lang, share: &[char]) -> bool {
    let chars: Vec<char> = w.chars().collect();
    let full = (1u32 << chars.len()) - 1;
    let sharable: u32 = (0..chars.len())
        .filter(|&i| share.contains(&chars[i]))
        .fold(0, |m, i| m | 1 << i);
    (0..=full).any(|k| {
        if !l1.contains(&project(&chars, k)) {
            return false;
        }
        let rest = full & !k;
        let pool = k & sharable;
        // every subset of pool, via the standard submask walk
        let mut s = pool;
        loop {
            if l2.contains(&project(&chars, rest | s)) {
                return true;
            }
            if s == 0 {
                return false;
            }
            s = (s - 1) & pool;
        }
    })
}

/// `u ↑_C v` built from the definition: choose `K`, `K'` covering
/// `[0, n)` with `|K| = |u|`, `|K'| = |v|` and fill in the letters.
pub fn infiltration_of_words(u: &str, v: &str, share: &[char]) -> Lang {
    let (u, v): (Vec<char>, Vec<char>) = (u.chars().collect(), v.chars().collect());
    let mut out = Lang::new();
    for n in u.len().max(v.len())..=u.len() + v.len() {
        let full = (1u32 << n) - 1;
        for k in 0..=full {
            if k.count_ones() as usize != u.len() {
                continue;
            }
            for k2 in 0..=full {
                if k2.count_ones() as usize != v.len() || k | k2 != full {
                    continue;
                }
                let mut w = vec![' '; n];
                let (mut i, mut j, mut ok) = (0, 0, true);
                for p in 0..n {
                    let in_k = k >> p & 1 == 1;
                    let in_k2 = k2 >> p & 1 == 1;
                    if in_k && in_k2 {
                        ok &= u[i] == v[j] && share.contains(&u[i]);
                        w[p] = u[i];
                    } else if in_k {
                        w[p] = u[i];
                    } else {
                        w[p] = v[j];
                    }
                    i += in_k as usize;
                    j += in_k2 as usize;
                }
                if ok {
                    out.insert(w.into_iter().collect());
                }
            }
        }
    }
    out
}

pub fn truncate(l: &Lang, max: usize) -> Lang {
    l.iter().filter(|w| w.chars().count() <= max).cloned().collect()
}

pub mod checks;
