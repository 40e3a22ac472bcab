use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ptlang::automata::{
    complement, depth, difference, equivalent, from_json, intersection, is_acyclic_dfa,
    minimal_dfa, to_dot, to_json, union, Nfa,
};
use ptlang::complexity::{piecewise_complexity_with_cap, Complexity, DEFAULT_STATE_CAP};
use ptlang::harness::{run_catalogue_entries, run_random, CheckResult, RandomParams, Status, Theorem, BOUNDS_IDS};
use ptlang::products::{
    concat, downward_closure, erase_inverse, infiltrate, is_subword_closed, scattered_residual,
    shuffle, upward_closure,
};
use ptlang::pt::analyze;
use ptlang::regex::regex_nfa;
use ptlang::subwords::is_shuffle_ideal;
use ptlang::{Alphabet, Error};

/// Finite automata over small alphabets: shuffle and infiltration products,
/// piecewise testability and piecewise complexity.
#[derive(Parser)]
#[command(name = "ptlang", version)]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a regular expression to an automaton.
    Parse {
        #[arg(long)]
        regex: String,
        #[arg(long)]
        alphabet: String,
    },
    /// Apply an operation to one or two automata.
    Op {
        op: OpKind,
        #[command(flatten)]
        inputs: Inputs,
        /// Letters shared by both operands (infiltrate).
        #[arg(long, default_value = "")]
        share: String,
        /// The word removed by `residual`.
        #[arg(long)]
        word: Option<String>,
        /// Letters erased by `erase-inverse`.
        #[arg(long)]
        letters: Option<String>,
    },
    /// Answer a question about one automaton as a JSON line.
    Query {
        query: QueryKind,
        #[command(flatten)]
        inputs: Inputs,
        /// Bound on product nodes explored by `complexity`.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Run the fact catalogue or a randomized suite; prints JSONL.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_states: Option<usize>,
        /// Bound on product nodes explored by complexity checks.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Decide language equivalence of two automata.
    Eq {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Print an automaton in Graphviz DOT.
    Dot {
        #[command(flatten)]
        inputs: Inputs,
    },
}

/// Operands: JSON files first, then inline regular expressions.
#[derive(Args)]
struct Inputs {
    files: Vec<PathBuf>,
    #[arg(long = "regex")]
    regexes: Vec<String>,
    /// Alphabet of inline regular expressions, e.g. `ab` or `a,b`.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Shuffle,
    Infiltrate,
    Concat,
    Union,
    Intersect,
    Difference,
    Complement,
    Mirror,
    Residual,
    Upclose,
    Downclose,
    EraseInverse,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryKind {
    Pt,
    Rtrivial,
    Ltrivial,
    Jtrivial,
    Complexity,
    Depth,
    ShuffleIdeal,
    SubwordClosed,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Text to emit and the exit code that goes with it.
struct Done {
    text: String,
    code: u8,
}

impl Done {
    fn ok(text: String) -> Self {
        Done { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|done| {
        emit(cli.output.as_ref(), &done.text)?;
        Ok(done.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::ResourceLimit { .. }) { 3 } else { 2 })
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> Run<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("stdout: {e}"))),
    }
}

fn run(command: Command) -> Run<Done> {
    match command {
        Command::Parse { regex, alphabet } => {
            let nfa = regex_nfa(&regex, &Alphabet::parse(&alphabet)?)?;
            Ok(Done::ok(to_json(&nfa)))
        }
        Command::Op { op, inputs, share, word, letters } => {
            let nfa = apply(op, &inputs, &share, word.as_deref(), letters.as_deref())?;
            Ok(Done::ok(to_json(&nfa)))
        }
        Command::Query { query, inputs, cap } => {
            let [x] = operands::<1>(&inputs)?;
            Ok(Done::ok(answer(query, &x, cap)?.to_string()))
        }
        Command::Verify { suite, trials, seed, max_states, cap } => {
            verify(&suite, trials, seed, max_states, cap)
        }
        Command::Eq { inputs } => {
            let [x, y] = operands::<2>(&inputs)?;
            let v = equivalent(&x, &y)?;
            let text = json!({ "equivalent": v.holds, "witness": v.witness }).to_string();
            Ok(Done { text, code: if v.holds { 0 } else { 1 } })
        }
        Command::Dot { inputs } => {
            let [x] = operands::<1>(&inputs)?;
            Ok(Done::ok(to_dot(&x)))
        }
    }
}

fn load(inputs: &Inputs) -> Run<Vec<Nfa>> {
    let mut out = Vec::new();
    for path in &inputs.files {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        out.push(from_json(&text)?.into_nfa());
    }
    if !inputs.regexes.is_empty() {
        let spec = inputs
            .alphabet
            .as_deref()
            .ok_or_else(|| Failure::Usage("--regex needs --alphabet".into()))?;
        let alphabet = Alphabet::parse(spec)?;
        for r in &inputs.regexes {
            out.push(regex_nfa(r, &alphabet)?);
        }
    }
    Ok(out)
}

fn operands<const N: usize>(inputs: &Inputs) -> Run<[Nfa; N]> {
    let all = load(inputs)?;
    let got = all.len();
    all.try_into()
        .map_err(|_| Failure::Usage(format!("expected {N} operand(s), got {got}")))
}

fn apply(
    op: OpKind,
    inputs: &Inputs,
    share: &str,
    word: Option<&str>,
    letters: Option<&str>,
) -> Run<Nfa> {
    use OpKind::*;
    match op {
        Shuffle | Infiltrate | Concat | Union | Intersect | Difference => {
            let [x, y] = operands::<2>(inputs)?;
            Ok(match op {
                Shuffle => shuffle(&x, &y)?,
                Infiltrate => infiltrate(&x, &y, x.alphabet().letter_set(share)?)?,
                Concat => concat(&x, &y)?,
                Union => union(&x, &y)?,
                Intersect => intersection(&x, &y)?,
                _ => difference(&x, &y)?,
            })
        }
        _ => {
            let [x] = operands::<1>(inputs)?;
            Ok(match op {
                Complement => complement(&x),
                Mirror => x.mirror(),
                Residual => {
                    let w = word.ok_or_else(|| Failure::Usage("residual needs --word".into()))?;
                    scattered_residual(&x, w)?
                }
                Upclose => upward_closure(&x),
                Downclose => downward_closure(&x),
                _ => {
                    let b = letters
                        .ok_or_else(|| Failure::Usage("erase-inverse needs --letters".into()))?;
                    erase_inverse(&x, x.alphabet().letter_set(b)?)?
                }
            })
        }
    }
}

fn answer(query: QueryKind, x: &Nfa, cap: usize) -> Run<Value> {
    Ok(match query {
        QueryKind::Pt | QueryKind::Jtrivial => {
            let r = analyze(x);
            let key = if query == QueryKind::Pt { "pt" } else { "j_trivial" };
            json!({ key: r.pt, "witness": r.witness })
        }
        QueryKind::Rtrivial => {
            let v = is_acyclic_dfa(&minimal_dfa(x));
            json!({ "r_trivial": v.holds, "witness": v.witness })
        }
        QueryKind::Ltrivial => {
            let v = is_acyclic_dfa(&minimal_dfa(&x.mirror()));
            json!({ "l_trivial": v.holds, "witness": v.witness })
        }
        QueryKind::Complexity => {
            let r = piecewise_complexity_with_cap(x, cap)?;
            let h = match r.value {
                Complexity::Finite(k) => json!(k),
                Complexity::Infinite => json!("infinite"),
            };
            json!({ "h": h, "witness": r.violation })
        }
        QueryKind::Depth => {
            let d = minimal_dfa(x);
            match depth(&d) {
                Ok(n) => json!({ "depth": n }),
                Err(Error::NotAcyclic) => {
                    json!({ "depth": "infinite", "witness": is_acyclic_dfa(&d).witness })
                }
                Err(e) => return Err(e.into()),
            }
        }
        QueryKind::ShuffleIdeal => {
            let v = is_shuffle_ideal(x);
            json!({ "shuffle_ideal": v.holds, "witness": v.witness })
        }
        QueryKind::SubwordClosed => {
            let v = is_subword_closed(x);
            json!({ "subword_closed": v.holds, "witness": v.witness })
        }
    })
}

fn verify(suite: &str, trials: usize, seed: u64, max_states: Option<usize>, cap: usize) -> Run<Done> {
    let results: Vec<CheckResult> = match suite {
        "catalogue" => run_catalogue_entries(None, cap)?,
        "bounds" => run_catalogue_entries(Some(BOUNDS_IDS), cap)?,
        _ => {
            let theorem: Theorem = suite.parse()?;
            let mut params = RandomParams::for_theorem(theorem);
            params.state_cap = cap;
            if let Some(m) = max_states {
                params.max_states = m;
            }
            run_random(theorem, trials, seed, &params)?
        }
    };
    let text: Vec<String> = results.iter().map(CheckResult::to_json_line).collect();
    let code = if results.iter().any(|r| r.status == Status::Fail) {
        1
    } else if results.iter().any(|r| r.status == Status::Skipped) {
        3
    } else {
        0
    };
    Ok(Done { text: text.join("\n"), code })
}
