//! Library results compared against the brute-force oracles. Each check
//! returns a description of the first disagreement.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ptlang::automata::{
    complement, determinize, difference, equivalent, intersection, minimize, union,
};
use ptlang::products::{
    concat, downward_closure, erase_inverse, infiltrate, scattered_residual, shuffle, upward_closure,
};
use ptlang::regex::regex_nfa;
use ptlang::subwords::{profile, sim_k};
use ptlang::{Alphabet, LetterSet, Nfa};

use super::*;

pub type Check = Result<(), String>;

pub const MAX_LEN: usize = 8;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn same(what: &str, expected: &Lang, got: &Lang) -> Check {
    if expected == got {
        return Ok(());
    }
    let missing: Vec<_> = expected.difference(got).take(3).collect();
    let extra: Vec<_> = got.difference(expected).take(3).collect();
    Err(format!("{what}: missing {missing:?}, extra {extra:?}"))
}

fn universe(letters: &[char], max: usize) -> Lang {
    words(letters, max).into_iter().collect()
}

fn letters_of(set: LetterSet, alphabet: &Alphabet) -> Vec<char> {
    set.iter().map(|a| alphabet.symbol(a)).collect()
}

/// One random instance: two random expressions over 2 or 3 letters and
/// every operation applied to them.
pub fn random_instance(seed: u64, index: u64) -> Check {
    let mut rng = rng(seed, index);
    let letters: Vec<char> = if rng.gen_bool(0.5) { vec!['a', 'b'] } else { vec!['a', 'b', 'c'] };
    let alphabet = Alphabet::new(letters.iter().copied()).unwrap();
    let r1 = random_regex(&mut rng, &letters, 4);
    let r2 = random_regex(&mut rng, &letters, 4);
    let ctx = |e: String| format!("{r1} / {r2}: {e}");
    run_instance(&mut rng, &letters, &alphabet, &r1, &r2).map_err(ctx)
}

fn run_instance(
    rng: &mut ChaCha8Rng,
    letters: &[char],
    alphabet: &Alphabet,
    r1: &RegexAst,
    r2: &RegexAst,
) -> Check {
    let all = universe(letters, MAX_LEN);
    let l1 = regex_lang(r1, letters, MAX_LEN);
    let l2 = regex_lang(r2, letters, MAX_LEN);
    let x = regex_nfa(&r1.to_string(), alphabet).map_err(|e| e.to_string())?;
    let y = regex_nfa(&r2.to_string(), alphabet).map_err(|e| e.to_string())?;
    same("compile", &l1, &nfa_lang(&x, MAX_LEN))?;
    same("compile", &l2, &nfa_lang(&y, MAX_LEN))?;

    let d = determinize(&x);
    same("determinize", &l1, &dfa_lang(&d, MAX_LEN))?;
    let m = minimize(&d);
    same("minimize", &l1, &dfa_lang(&m, MAX_LEN))?;
    if m.state_count() > d.state_count() {
        return Err("minimize grew the automaton".into());
    }
    if !minimize(&m).is_isomorphic(&m) || !minimize(&determinize(&m.to_nfa().mirror().mirror())).is_isomorphic(&m) {
        return Err("minimal DFA is not canonical".into());
    }

    let err = |e: ptlang::Error| e.to_string();
    same("union", &l1.union(&l2).cloned().collect(), &nfa_lang(&union(&x, &y).map_err(err)?, MAX_LEN))?;
    same(
        "intersection",
        &l1.intersection(&l2).cloned().collect(),
        &nfa_lang(&intersection(&x, &y).map_err(err)?, MAX_LEN),
    )?;
    same(
        "difference",
        &l1.difference(&l2).cloned().collect(),
        &nfa_lang(&difference(&x, &y).map_err(err)?, MAX_LEN),
    )?;
    same("complement", &all.difference(&l1).cloned().collect(), &nfa_lang(&complement(&x), MAX_LEN))?;
    let mirrored: Lang = l1.iter().map(|w| w.chars().rev().collect()).collect();
    same("mirror", &mirrored, &nfa_lang(&x.mirror(), MAX_LEN))?;

    let concatenated: Lang = all
        .iter()
        .filter(|w| (0..=w.len()).any(|i| l1.contains(&w[..i]) && l2.contains(&w[i..])))
        .cloned()
        .collect();
    same("concat", &concatenated, &nfa_lang(&concat(&x, &y).map_err(err)?, MAX_LEN))?;

    // interleavings are expensive to enumerate; stay at length 6 for 3 letters
    let plen = if letters.len() == 2 { MAX_LEN } else { 6 };
    let share = LetterSet(rng.gen_range(0..1u64 << letters.len()));
    let share_chars = letters_of(share, alphabet);
    let words_p: Vec<String> = words(letters, plen);
    let shuffled: Lang = words_p.iter().filter(|w| in_infiltration(w, &l1, &l2, &[])).cloned().collect();
    same("shuffle", &shuffled, &nfa_lang(&shuffle(&x, &y).map_err(err)?, plen))?;
    let infiltrated: Lang =
        words_p.iter().filter(|w| in_infiltration(w, &l1, &l2, &share_chars)).cloned().collect();
    same(
        &format!("infiltrate C={share_chars:?}"),
        &infiltrated,
        &nfa_lang(&infiltrate(&x, &y, share).map_err(err)?, plen),
    )?;

    let u = random_word(rng, letters, 2);
    let vmax = MAX_LEN - u.len();
    // v is in the residual iff some w in L1 splits into positions spelling u and v
    let mut residual = Lang::new();
    for w in &l1 {
        let chars: Vec<char> = w.chars().collect();
        let full = (1u32 << chars.len()) - 1;
        for k in 0..=full {
            if k.count_ones() as usize == u.len() && project(&chars, k) == u {
                residual.insert(project(&chars, full & !k));
            }
        }
    }
    same(
        &format!("residual by {u:?}"),
        &residual,
        &nfa_lang(&scattered_residual(&x, &u).map_err(err)?, vmax),
    )?;

    let erased = LetterSet(rng.gen_range(0..1u64 << letters.len()));
    let erased_chars = letters_of(erased, alphabet);
    let inverse: Lang = all
        .iter()
        .filter(|w| l1.contains(&w.chars().filter(|c| !erased_chars.contains(c)).collect::<String>()))
        .cloned()
        .collect();
    same(
        &format!("erase_inverse {erased_chars:?}"),
        &inverse,
        &nfa_lang(&erase_inverse(&x, erased).map_err(err)?, MAX_LEN),
    )?;

    let up: Lang = all.iter().filter(|w| l1.iter().any(|v| is_sub(v, w))).cloned().collect();
    same("upward_closure", &up, &nfa_lang(&upward_closure(&x), MAX_LEN))?;

    // downward closure is checked on a finite language, where it is finite too
    let finite: Vec<String> = (0..rng.gen_range(1..=3)).map(|_| random_word(rng, letters, 4)).collect();
    let f = Nfa::from_words(
        alphabet,
        &finite.iter().map(|w| alphabet.encode(w).unwrap()).collect::<Vec<_>>(),
    );
    let down: Lang = all.iter().filter(|w| finite.iter().any(|v| is_sub(w, v))).cloned().collect();
    same("downward_closure", &down, &nfa_lang(&downward_closure(&f), MAX_LEN))?;

    let v = equivalent(&x, &y).map_err(err)?;
    match v.witness {
        None if l1 != l2 => return Err("equivalent, but languages differ".into()),
        Some(w) => {
            let word = w.word().to_string();
            if regex_matches(r1, &word) == regex_matches(r2, &word) {
                return Err(format!("difference witness {word:?} is in neither or both"));
            }
            // witnesses are shortest
            if let Some(shorter) = l1.symmetric_difference(&l2).next() {
                if shorter.len() < word.len() {
                    return Err(format!("witness {word:?} longer than {shorter:?}"));
                }
            }
        }
        None => {}
    }
    Ok(())
}

/// `u ↑_C v` for every share set over `{a, b}`.
pub fn word_pair(u: &str, v: &str) -> Check {
    let alphabet = Alphabet::parse("ab").unwrap();
    let x = Nfa::from_word(&alphabet, &alphabet.encode(u).unwrap());
    let y = Nfa::from_word(&alphabet, &alphabet.encode(v).unwrap());
    for share in alphabet.subsets() {
        let chars = letters_of(share, &alphabet);
        let expected = infiltration_of_words(u, v, &chars);
        let got = nfa_lang(&infiltrate(&x, &y, share).unwrap(), u.len() + v.len());
        same(&format!("{u} ↑_{chars:?} {v}"), &expected, &got)?;
        if share.is_empty() {
            same(&format!("{u} ⧢ {v}"), &expected, &nfa_lang(&shuffle(&x, &y).unwrap(), u.len() + v.len()))?;
        }
    }
    Ok(())
}

/// Antichain of `u` at bound `k` against enumerated subwords, including the
/// incremental update by one letter.
pub fn profile_of(u: &str, k: usize, letters: &[char]) -> Check {
    let p = profile(u, k);
    let all = subwords(u, k);
    let antichain: Lang = p.maximal_elements().iter().map(|w| w.iter().collect()).collect();
    same(&format!("maximal subwords of {u:?}, k={k}"), &maximal(&all), &antichain)?;
    let closure: Lang = p.downward_closure().iter().map(|w| w.iter().collect()).collect();
    same(&format!("subwords of {u:?}, k={k}"), &all, &closure)?;
    for &c in letters {
        let grown = p.append(c);
        if grown != profile(&format!("{u}{c}"), k) {
            return Err(format!("append {c} to profile of {u:?} at k={k}"));
        }
    }
    Ok(())
}

/// Congruence: `u ~_k v` implies `x u y ~_k x v y`; also compares `sim_k`
/// with enumerated subword sets.
pub fn congruence(seed: u64, index: u64) -> Check {
    let mut rng = rng(seed, index);
    let letters = ['a', 'b'];
    let k = rng.gen_range(1..=3);
    let u = random_word(&mut rng, &letters, 6);
    let class: Vec<String> = words(&letters, 7).into_iter().filter(|v| simon(&u, v, k)).collect();
    let v = class[rng.gen_range(0..class.len())].clone();
    let x = random_word(&mut rng, &letters, 3);
    let y = random_word(&mut rng, &letters, 3);
    let (l, r) = (format!("{x}{u}{y}"), format!("{x}{v}{y}"));
    if !sim_k(&u, &v, k) {
        return Err(format!("sim_k({u:?}, {v:?}, {k}) is false"));
    }
    if !simon(&l, &r, k) || !sim_k(&l, &r, k) {
        return Err(format!("{l:?} and {r:?} differ at k={k}"));
    }
    let other = random_word(&mut rng, &letters, 7);
    if sim_k(&u, &other, k) != simon(&u, &other, k) {
        return Err(format!("sim_k({u:?}, {other:?}, {k}) disagrees with enumeration"));
    }
    Ok(())
}
