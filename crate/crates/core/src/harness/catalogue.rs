//! Fixed list of concrete facts about shuffles and piecewise complexity.
//! Entry ids are stable; every entry is independent of the others.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{timed, CheckResult, Outcome};
use crate::alphabet::Alphabet;
use crate::automata::{
    complement, determinize_with_sets, equivalent, intersection, is_acyclic,
    is_acyclic_dfa, minimal_dfa, Nfa, Witness,
};
use crate::complexity::{
    circular_rename, h_finite_with_cap, piecewise_complexity_with_cap, u_family,
    word_shuffle_bound, Complexity, DEFAULT_STATE_CAP,
};
use crate::error::{Error, Result};
use crate::products::{concat, erase_inverse, scattered_residual, shuffle, upward_closure};
use crate::pt::analyze;
use crate::regex::regex_nfa;
use crate::subwords::{filter_automaton, sim_k};

type Entry = (&'static str, fn(usize) -> Result<Outcome>);

const ENTRIES: &[Entry] = &[
    ("sol-psi-regex", sol_psi_regex),
    ("fig1-powerset-cycle", fig1_powerset_cycle),
    ("shuffle-a-ab-not-pt", shuffle_a_ab_not_pt),
    ("concat-not-pt", concat_not_pt),
    ("scattered-residual", residual_identity),
    ("disjoint-alphabet-shuffle", disjoint_alphabet_shuffle),
    ("h-empty-and-epsilon", h_empty_and_epsilon),
    ("h-alphabet-dependence", h_alphabet_dependence),
    ("h-filters", h_filters),
    ("h-u-family", h_u_family),
    ("h-filter-u-family", h_filter_u_family),
    ("h-filter-shuffle", h_filter_shuffle),
    ("h-filter-shuffle-bound", h_filter_shuffle_bound),
    ("h-disjoint-alphabets", h_disjoint_alphabets),
    ("h-finite-max", h_finite_max),
    ("word-shuffle-bound-examples", word_shuffle_bound_examples),
    ("tight-bound-n2-lambda1", tight_bound),
];

/// Entries about piecewise complexity and its bounds.
pub const BOUNDS_IDS: &[&str] = &[
    "h-empty-and-epsilon",
    "h-alphabet-dependence",
    "h-filters",
    "h-u-family",
    "h-filter-u-family",
    "h-filter-shuffle",
    "h-filter-shuffle-bound",
    "h-disjoint-alphabets",
    "h-finite-max",
    "word-shuffle-bound-examples",
    "tight-bound-n2-lambda1",
];

pub fn catalogue_ids() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.0).collect()
}

/// Every entry, in catalogue order, with the default product cap.
pub fn run_catalogue() -> Vec<CheckResult> {
    run_catalogue_entries(None, DEFAULT_STATE_CAP).expect("all ids are known")
}

/// The selected entries (all when `ids` is `None`), in catalogue order.
pub fn run_catalogue_entries(ids: Option<&[&str]>, state_cap: usize) -> Result<Vec<CheckResult>> {
    if let Some(ids) = ids {
        if let Some(bad) = ids.iter().find(|id| !ENTRIES.iter().any(|e| e.0 == **id)) {
            return Err(Error::InvalidParams(format!("unknown catalogue entry {bad:?}")));
        }
    }
    let selected: Vec<&Entry> =
        ENTRIES.iter().filter(|e| ids.is_none_or(|ids| ids.contains(&e.0))).collect();
    Ok(selected
        .into_par_iter()
        .map(|(id, check)| timed(id.to_string(), None, || check(state_cap)))
        .collect())
}

fn alphabet(symbols: &str) -> Alphabet {
    Alphabet::parse(symbols).expect("fixed alphabet")
}

fn filter(u: &str, a: &Alphabet) -> Result<Nfa> {
    Ok(filter_automaton(u, a)?.to_nfa())
}

/// `h(L)` together with a check that the reported witness for `h(L) − 1`
/// really is a pair of `~_{h−1}`-equivalent words separated by `L`.
fn h_checked(x: &Nfa, cap: usize) -> Result<Complexity> {
    let r = piecewise_complexity_with_cap(x, cap)?;
    if let Complexity::Finite(k) = r.value {
        if k > 0 {
            let d = minimal_dfa(x);
            let ok = match &r.violation {
                Some(Witness::ClosureViolation { member, non_member, k: wk }) => {
                    *wk == k - 1
                        && sim_k(member, non_member, k - 1)
                        && d.accepts_str(member)?
                        && !d.accepts_str(non_member)?
                }
                _ => false,
            };
            if !ok {
                return Err(Error::Inconsistent(format!(
                    "no valid witness that h > {} (got {:?})",
                    k - 1,
                    r.violation
                )));
            }
        }
    }
    Ok(r.value)
}

fn finite(x: &Nfa, cap: usize) -> Result<usize> {
    h_checked(x, cap)?
        .finite()
        .ok_or_else(|| Error::Inconsistent("expected a piecewise-testable language".into()))
}

/// Collects `(case, expected, measured)` rows and passes when all agree.
#[derive(Default)]
struct Table {
    rows: Vec<Value>,
    ok: bool,
    count: usize,
}

impl Table {
    fn new() -> Self {
        Table { rows: Vec::new(), ok: true, count: 0 }
    }

    fn check(&mut self, case: impl Into<String>, expected: impl Into<Value>, measured: impl Into<Value>) {
        let (expected, measured) = (expected.into(), measured.into());
        self.count += 1;
        if expected != measured {
            self.ok = false;
            self.rows.push(json!({ "case": case.into(), "expected": expected, "measured": measured }));
        }
    }

    fn finish(self, extra: Value) -> Outcome {
        Outcome::new(self.ok, json!({ "cases": self.count, "mismatches": self.rows, "info": extra }))
    }
}

fn sol_psi_regex(_cap: usize) -> Result<Outcome> {
    let a = alphabet("abc");
    let combination = intersection(
        &intersection(&filter("ab", &a)?, &filter("bc", &a)?)?,
        &complement(&filter("ac", &a)?),
    )?;
    let expression = regex_nfa("c*bb*c(b|c)*aa*b(a|b)*", &a)?;
    let v = equivalent(&combination, &expression)?;
    let report = analyze(&expression);
    let member = expression.accepts_str("bcab")?;
    Ok(Outcome::new(
        v.holds && report.pt && member,
        json!({ "equivalent": v.holds, "witness": v.witness, "pt": report.pt, "bcab": member }),
    ))
}

/// The two-state NFA `1 -a,b-> 1`, `1 -a-> 2`, `2 -a-> 2` for `a* ⧢ b*a`.
fn two_state_nfa() -> Nfa {
    let mut n = Nfa::new(alphabet("ab"), 2);
    n.add_initial(0);
    n.add_transition(0, 0, 0);
    n.add_transition(0, 1, 0);
    n.add_transition(0, 0, 1);
    n.add_transition(1, 0, 1);
    n.set_accepting(1, true);
    n
}

fn fig1_powerset_cycle(_cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let nfa = two_state_nfa();
    let product = shuffle(&regex_nfa("a*", &a)?, &regex_nfa("b*a", &a)?)?;
    let same_language = equivalent(&nfa, &product)?.holds;
    let nfa_acyclic = is_acyclic(&nfa).holds && is_acyclic(&product).holds;

    let (powerset, sets) = determinize_with_sets(&nfa);
    // {1} -a-> {1,2} -b-> {1}
    let shape = sets == vec![vec![0], vec![0, 1]]
        && powerset.next(0, 0) == 1
        && powerset.next(1, 1) == 0
        && powerset.next(0, 1) == 0
        && powerset.next(1, 0) == 1;
    let cycle = is_acyclic_dfa(&powerset);
    let minimal = minimal_dfa(&nfa);
    let minimal_cyclic = minimal.state_count() == 2 && !is_acyclic_dfa(&minimal).holds;
    Ok(Outcome::new(
        same_language && nfa_acyclic && shape && !cycle.holds && minimal_cyclic,
        json!({
            "nfa_equals_shuffle": same_language,
            "nfa_acyclic": nfa_acyclic,
            "powerset_states": sets.iter().map(|s| s.iter().map(|q| q + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "cycle": cycle.witness,
            "minimal_states": minimal.state_count(),
        }),
    ))
}

fn shuffle_a_ab_not_pt(_cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let product = shuffle(&regex_nfa("a*", &a)?, &regex_nfa("ab*", &a)?)?;
    let v = equivalent(&product, &regex_nfa("a(a|b)*", &a)?)?;
    let factors_pt = analyze(&regex_nfa("a*", &a)?).pt && analyze(&regex_nfa("ab*", &a)?).pt;
    let report = analyze(&product);
    Ok(Outcome::new(
        v.holds && factors_pt && !report.pt,
        json!({ "equivalent": v.holds, "factors_pt": factors_pt, "report": report }),
    ))
}

fn concat_not_pt(_cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let product = concat(&regex_nfa("(a|b)*", &a)?, &regex_nfa("a", &a)?)?;
    let v = equivalent(&product, &regex_nfa("(a|b)*a", &a)?)?;
    let report = analyze(&product);
    Ok(Outcome::new(v.holds && !report.pt, json!({ "equivalent": v.holds, "report": report })))
}

fn residual_identity(_cap: usize) -> Result<Outcome> {
    let a = alphabet("abc");
    let r = scattered_residual(&regex_nfa("ac(a|b)*", &a)?, "c")?;
    let v = equivalent(&r, &regex_nfa("a(a|b)*", &a)?)?;
    Ok(Outcome::new(v.holds, json!({ "witness": v.witness })))
}

fn disjoint_alphabet_shuffle(_cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let la = regex_nfa("a", &a)?;
    let lb = regex_nfa("b", &a)?;
    let via_erasure = intersection(
        &erase_inverse(&la, a.letter_set("b")?)?,
        &erase_inverse(&lb, a.letter_set("a")?)?,
    )?;
    let v = equivalent(&shuffle(&la, &lb)?, &via_erasure)?;
    let explicit = equivalent(&via_erasure, &regex_nfa("ab|ba", &a)?)?;
    Ok(Outcome::new(
        v.holds && explicit.holds,
        json!({ "witness": v.witness, "equals_ab_ba": explicit.holds }),
    ))
}

fn h_empty_and_epsilon(cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let mut t = Table::new();
    t.check("h(∅)", 0, finite(&regex_nfa("#", &a)?, cap)?);
    t.check("h({ε})", 1, finite(&regex_nfa("~", &a)?, cap)?);
    Ok(t.finish(Value::Null))
}

fn h_alphabet_dependence(cap: usize) -> Result<Outcome> {
    let mut t = Table::new();
    t.check("h_{a,b}({a,b}*)", 0, finite(&regex_nfa("(a|b)*", &alphabet("ab"))?, cap)?);
    t.check("h_{a,b,c}({a,b}*)", 1, finite(&regex_nfa("(a|b)*", &alphabet("abc"))?, cap)?);
    Ok(t.finish(Value::Null))
}

fn h_filters(cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let mut t = Table::new();
    for w in a.words_up_to(4).into_iter().filter(|w| !w.is_empty()) {
        let u = a.decode(&w);
        t.check(format!("h(L_{u})"), u.len(), finite(&filter(&u, &a)?, cap)?);
    }
    Ok(t.finish(Value::Null))
}

fn h_u_family(cap: usize) -> Result<Outcome> {
    let mut t = Table::new();
    for n in 1..=2 {
        let a = Alphabet::first_n(n)?;
        for lambda in 1..=3 {
            let u = u_family(n, lambda)?;
            let word = Nfa::from_word(&a, &a.encode(&u)?);
            t.check(format!("h({{U_{n}}}), λ={lambda}"), n * lambda + 1, finite(&word, cap)?);
        }
    }
    Ok(t.finish(Value::Null))
}

fn h_filter_u_family(cap: usize) -> Result<Outcome> {
    let mut t = Table::new();
    let mut gaps = Vec::new();
    for (n, lambda) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)] {
        let a = Alphabet::first_n(n)?;
        let u = u_family(n, lambda)?;
        let up = upward_closure(&Nfa::from_word(&a, &a.encode(&u)?));
        let h = finite(&up, cap)?;
        t.check(format!("h(L_{{U_{n}}}), λ={lambda}"), (lambda + 1).pow(n as u32) - 1, h);
        gaps.push(json!({ "n": n, "lambda": lambda, "h_filter": h, "h_word": n * lambda + 1 }));
    }
    Ok(t.finish(json!(gaps)))
}

fn h_filter_shuffle(cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let mut t = Table::new();
    for n in 1..=5usize {
        for m in 1..=(6 - n) {
            let x = filter(&"a".repeat(n), &a)?;
            let y = filter(&"a".repeat(m), &a)?;
            let s = minimal_dfa(&shuffle(&x, &y)?).to_nfa();
            let same = equivalent(&s, &filter(&"a".repeat(n + m), &a)?)?.holds;
            t.check(format!("L_a^{n} ⧢ L_a^{m} = L_a^{}", n + m), true, same);
            t.check(format!("h(L_a^{n} ⧢ L_a^{m})"), n + m, finite(&s, cap)?);
        }
    }
    Ok(t.finish(Value::Null))
}

fn h_filter_shuffle_bound(cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let words: Vec<String> = a.words_up_to(3).iter().map(|w| a.decode(w)).collect();
    let mut t = Table::new();
    let mut strict = 0;
    for u in &words {
        for v in &words {
            let s = minimal_dfa(&shuffle(&filter(u, &a)?, &filter(v, &a)?)?).to_nfa();
            let h = finite(&s, cap)?;
            t.check(format!("h(L_{u} ⧢ L_{v}) ≤ {}", u.len() + v.len()), true, h <= u.len() + v.len());
            if h < u.len() + v.len() {
                strict += 1;
            }
        }
    }
    Ok(t.finish(json!({ "strict_cases": strict })))
}

fn h_disjoint_alphabets(cap: usize) -> Result<Outcome> {
    let joint = alphabet("ab");
    let left = ["~", "a", "aa", "aa*", "aaaa*"];
    let right = ["b", "~|bb", "bbb*", "b|bbbb*"];
    let mut t = Table::new();
    let mut rows = Vec::new();
    for l in left {
        let l1 = regex_nfa(l, &alphabet("a"))?;
        let h1 = finite(&l1, cap)?;
        for r in right {
            let l2 = regex_nfa(r, &alphabet("b"))?;
            let h2 = finite(&l2, cap)?;
            let s = shuffle(&l1.with_alphabet(&joint)?, &l2.with_alphabet(&joint)?)?;
            let h = finite(&minimal_dfa(&s).to_nfa(), cap)?;
            t.check(format!("h({l} ⧢ {r})"), h1.max(h2), h);
            t.check(format!("h({l}), h({r}) ≤ 3"), true, h1 <= 3 && h2 <= 3);
            rows.push(json!([l, r, h1, h2, h]));
        }
    }
    Ok(t.finish(json!(rows)))
}

fn h_finite_max(cap: usize) -> Result<Outcome> {
    let a = alphabet("ab");
    let mut t = Table::new();
    let ha = finite(&regex_nfa("a", &a)?, cap)?;
    let hab = finite(&regex_nfa("ab", &a)?, cap)?;
    t.check("h({a, ab})", ha.max(hab), h_finite_with_cap(&["a", "ab"], &a, cap)?);
    t.check("h({aa}) over {a}", 3, h_finite_with_cap(&["aa"], &alphabet("a"), cap)?);
    t.check("h(∅)", 0, h_finite_with_cap(&[], &a, cap)?);
    t.check("h({ab, ba, aab})", 3, h_finite_with_cap(&["ab", "ba", "aab"], &a, cap)?);
    Ok(t.finish(json!({ "h(a)": ha, "h(ab)": hab })))
}

fn word_shuffle_bound_examples(cap: usize) -> Result<Outcome> {
    let a = alphabet("a");
    let ab = alphabet("ab");
    let mut t = Table::new();
    t.check("bound(aa)", 3, word_shuffle_bound(&["aa"], &a)?);
    t.check("h({aa})", 3, finite(&regex_nfa("aa", &a)?, cap)?);
    t.check("bound(bab, aba)", 4, word_shuffle_bound(&["bab", "aba"], &ab)?);
    Ok(t.finish(Value::Null))
}

fn tight_bound(cap: usize) -> Result<Outcome> {
    let (n, lambda) = (2usize, 1usize);
    let a = Alphabet::first_n(n)?;
    let base = u_family(n, lambda)?;
    let u1 = circular_rename(&base, 1, &a)?;
    let u2 = circular_rename(&base, 2, &a)?;
    let w1 = Nfa::from_word(&a, &a.encode(&u1)?);
    let w2 = Nfa::from_word(&a, &a.encode(&u2)?);
    let product = minimal_dfa(&shuffle(&w1, &w2)?);
    let ell = (lambda + 1).pow(n as u32) - 1;
    let member = "ab".repeat(ell);
    let non_member = format!("{member}a");

    let mut t = Table::new();
    let (h1, h2) = (finite(&w1, cap)?, finite(&w2, cap)?);
    t.check("h(u1)", n * lambda + 1, h1);
    t.check("h(u2)", n * lambda + 1, h2);
    t.check("h(u1) + h(u2)", n * n * lambda + n, h1 + h2);
    let h = finite(&product.to_nfa(), cap)?;
    t.check("h(u1 ⧢ u2)", (lambda + 1).pow(n as u32), h);
    t.check("bound", h, word_shuffle_bound(&[&u1, &u2], &a)?);
    t.check(format!("{member} ∈ L"), true, product.accepts_str(&member)?);
    t.check(format!("{non_member} ∉ L"), false, product.accepts_str(&non_member)?);
    t.check("~_ℓ", true, sim_k(&member, &non_member, ell));
    let depth = crate::automata::depth(&product)?;
    Ok(t.finish(json!({ "u1": u1, "u2": u2, "h": h, "depth": depth })))
}
