use serde_json::json;

use super::random::{
    random_acyclic_dfa, random_alphabet, random_dfa, random_nfa, random_pt_language,
    random_share_set, random_word, random_words, trial_rng,
};
use super::{Outcome, RandomParams, Theorem};
use crate::alphabet::Alphabet;
use crate::automata::{
    complement, determinize, equivalent, is_acyclic_dfa, minimal_dfa, Nfa, Witness,
};
use crate::complexity::{is_k_closed_with_cap, piecewise_complexity_with_cap, word_shuffle_bound};
use crate::error::Result;
use crate::products::{infiltrate, infiltrate_word, shuffle, upward_closure};
use crate::pt::analyze;
use crate::subwords::sim_k;

pub(crate) fn run_trial(
    theorem: Theorem,
    seed: u64,
    trial: u64,
    params: &RandomParams,
) -> Result<Outcome> {
    match theorem {
        Theorem::FiniteOperand | Theorem::CofiniteOperand | Theorem::IdealOperand => {
            infiltration_stays_pt(theorem, seed, trial, params)
        }
        Theorem::PowersetAcyclic => powerset_acyclic(seed, trial, params),
        Theorem::MirrorHomomorphism => mirror_homomorphism(seed, trial, params),
        Theorem::WordShuffleBound => shuffle_bound(seed, trial, params),
        Theorem::PtCrossValidation => pt_cross_validation(seed, trial, params),
    }
}

fn words_text(alphabet: &Alphabet, words: &[Vec<usize>]) -> Vec<String> {
    words.iter().map(|w| alphabet.decode(w)).collect()
}

/// Every share set is tried on the same `(L, F)` instance.
fn infiltration_stays_pt(
    theorem: Theorem,
    seed: u64,
    trial: u64,
    p: &RandomParams,
) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial);
    let alphabet = random_alphabet(&mut rng, p.max_letters);
    let l = random_pt_language(&mut rng, &alphabet, p.max_filters, p.max_filter_len, p.max_tree_depth);
    let words = random_words(&mut rng, &alphabet, p.max_words, p.max_word_len);
    let finite = Nfa::from_words(&alphabet, &words);
    let (right, kind) = match theorem {
        Theorem::FiniteOperand => (finite, "finite"),
        Theorem::CofiniteOperand => (complement(&finite), "cofinite"),
        _ => (upward_closure(&finite), "ideal"),
    };
    let right = minimal_dfa(&right).to_nfa();
    let mut detail = json!({
        "alphabet": alphabet.to_string(),
        "L": l.description,
        "F": words_text(&alphabet, &words),
        "operand": kind,
    });
    if !analyze(&l.nfa).pt {
        detail["violation"] = json!("generated L is not piecewise-testable");
        return Ok(Outcome::new(false, detail));
    }
    for share in alphabet.subsets() {
        let product = infiltrate(&l.nfa, &right, share)?;
        let report = analyze(&product);
        let ideal_ok = theorem != Theorem::IdealOperand
            || crate::subwords::is_shuffle_ideal(&product).holds;
        if !report.pt || !ideal_ok {
            detail["C"] = json!(share.to_string_in(&alphabet));
            detail["report"] = json!(report);
            detail["shuffle_ideal"] = json!(ideal_ok);
            return Ok(Outcome::new(false, detail));
        }
    }
    detail["share_sets_checked"] = json!(1u64 << alphabet.len());
    Ok(Outcome::new(true, detail))
}

fn powerset_acyclic(seed: u64, trial: u64, p: &RandomParams) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial);
    let alphabet = random_alphabet(&mut rng, p.max_letters);
    let d = random_acyclic_dfa(&mut rng, &alphabet, p.max_states);
    let w = alphabet.decode(&random_word(&mut rng, &alphabet, p.max_word_len));
    let mut detail = json!({
        "alphabet": alphabet.to_string(),
        "states": d.state_count(),
        "w": w,
    });
    if !is_acyclic_dfa(&d).holds {
        detail["violation"] = json!("generated DFA is not acyclic");
        return Ok(Outcome::new(false, detail));
    }
    let mut largest = 0;
    for share in alphabet.subsets() {
        let b = infiltrate_word(&d, &w, share)?;
        let powerset = determinize(&b);
        largest = largest.max(powerset.state_count());
        let v = is_acyclic_dfa(&powerset);
        if !v.holds {
            detail["C"] = json!(share.to_string_in(&alphabet));
            detail["witness"] = json!(v.witness);
            return Ok(Outcome::new(false, detail));
        }
    }
    detail["largest_powerset"] = json!(largest);
    Ok(Outcome::new(true, detail))
}

fn mirror_homomorphism(seed: u64, trial: u64, p: &RandomParams) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial);
    let alphabet = random_alphabet(&mut rng, p.max_letters);
    let x = random_nfa(&mut rng, &alphabet, p.max_states.min(4), 0.25);
    let y = random_nfa(&mut rng, &alphabet, p.max_states.min(4), 0.25);
    let share = random_share_set(&mut rng, &alphabet);
    let lhs = infiltrate(&x, &y, share)?.mirror();
    let rhs = infiltrate(&x.mirror(), &y.mirror(), share)?;
    let v = equivalent(&lhs, &rhs)?;
    Ok(Outcome::new(
        v.holds,
        json!({
            "alphabet": alphabet.to_string(),
            "C": share.to_string_in(&alphabet),
            "witness": v.witness,
        }),
    ))
}

fn shuffle_bound(seed: u64, trial: u64, p: &RandomParams) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial);
    let alphabet = random_alphabet(&mut rng, p.max_letters);
    let words = random_words(&mut rng, &alphabet, p.max_words, p.max_word_len);
    let texts = words_text(&alphabet, &words);
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    let bound = word_shuffle_bound(&refs, &alphabet)?;
    let mut product = Nfa::from_word(&alphabet, &[]);
    for w in &words {
        product = minimal_dfa(&shuffle(&product, &Nfa::from_word(&alphabet, w))?).to_nfa();
    }
    let h = piecewise_complexity_with_cap(&product, p.state_cap)?.value;
    let ok = h.finite().is_some_and(|h| h <= bound);
    Ok(Outcome::new(
        ok,
        json!({ "alphabet": alphabet.to_string(), "words": texts, "h": h.to_string(), "bound": bound }),
    ))
}

/// Positive verdicts need a closing `k` within the depth; negative ones
/// need every `k` below the state count to fail with a valid witness.
fn pt_cross_validation(seed: u64, trial: u64, p: &RandomParams) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial);
    let alphabet = random_alphabet(&mut rng, p.max_letters);
    let d = minimal_dfa(&random_dfa(&mut rng, &alphabet, p.max_states).to_nfa());
    let report = analyze(&d.to_nfa());
    let mut detail = json!({
        "alphabet": alphabet.to_string(),
        "states": d.state_count(),
        "pt": report.pt,
    });
    if report.pt {
        let bound = crate::automata::depth(&d)?;
        for k in 0..=bound {
            if is_k_closed_with_cap(&d, k, p.state_cap)?.holds {
                detail["closing_k"] = json!(k);
                detail["depth"] = json!(bound);
                return Ok(Outcome::new(true, detail));
            }
        }
        detail["depth"] = json!(bound);
        return Ok(Outcome::new(false, detail));
    }
    // A DFA with n states has simple paths of at most n - 1 transitions.
    let bound = d.state_count().saturating_sub(1);
    detail["bound"] = json!(bound);
    for k in 0..=bound {
        let v = is_k_closed_with_cap(&d, k, p.state_cap)?;
        let valid = match &v.witness {
            Some(Witness::ClosureViolation { member, non_member, k: wk }) => {
                *wk == k
                    && sim_k(member, non_member, k)
                    && d.accepts_str(member)?
                    && !d.accepts_str(non_member)?
            }
            _ => false,
        };
        if v.holds || !valid {
            detail["k"] = json!(k);
            detail["witness"] = json!(v.witness);
            return Ok(Outcome::new(false, detail));
        }
    }
    Ok(Outcome::new(true, detail))
}
