//! A small regular-expression language.
//!
//! Tokens are alphabet letters, `|` (union), `*` (star), `(` `)`, `~` (the
//! empty word) and `#` (the empty language); juxtaposition is
//! concatenation and whitespace is ignored. `*` binds tightest, then
//! concatenation, then `|`.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::automata::{EpsNfa, Nfa, StateId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RegexAst {
    Empty,
    Epsilon,
    Letter(char),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn union(l: RegexAst, r: RegexAst) -> Self {
        RegexAst::Union(Box::new(l), Box::new(r))
    }

    pub fn concat(l: RegexAst, r: RegexAst) -> Self {
        RegexAst::Concat(Box::new(l), Box::new(r))
    }

    pub fn star(inner: RegexAst) -> Self {
        RegexAst::Star(Box::new(inner))
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegexAst::Empty => write!(f, "#"),
            RegexAst::Epsilon => write!(f, "~"),
            RegexAst::Letter(c) => write!(f, "{c}"),
            RegexAst::Union(l, r) => write!(f, "({l}|{r})"),
            RegexAst::Concat(l, r) => write!(f, "{l}{r}"),
            RegexAst::Star(inner) => match **inner {
                RegexAst::Letter(_) | RegexAst::Empty | RegexAst::Epsilon => write!(f, "{inner}*"),
                _ => write!(f, "({inner})*"),
            },
        }
    }
}

struct Parser<'a> {
    // (offset in characters, character), whitespace removed
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.into() })
    }

    fn starts_atom(c: char) -> bool {
        !matches!(c, '|' | ')' | '*')
    }

    fn union(&mut self) -> Result<RegexAst> {
        let mut ast = self.concat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            ast = RegexAst::union(ast, self.concat()?);
        }
        Ok(ast)
    }

    fn concat(&mut self) -> Result<RegexAst> {
        let mut ast = self.starred()?;
        while self.peek().is_some_and(Self::starts_atom) {
            ast = RegexAst::concat(ast, self.starred()?);
        }
        Ok(ast)
    }

    fn starred(&mut self) -> Result<RegexAst> {
        let mut ast = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            ast = RegexAst::star(ast);
        }
        Ok(ast)
    }

    fn atom(&mut self) -> Result<RegexAst> {
        let Some(c) = self.peek() else {
            return self.error("unexpected end of expression");
        };
        match c {
            '(' => {
                self.pos += 1;
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            '~' => {
                self.pos += 1;
                Ok(RegexAst::Epsilon)
            }
            '#' => {
                self.pos += 1;
                Ok(RegexAst::Empty)
            }
            '|' | ')' | '*' => self.error(format!("unexpected {c:?}")),
            _ => {
                if self.alphabet.index_of(c).is_none() {
                    return Err(Error::UnknownLetter { letter: c });
                }
                self.pos += 1;
                Ok(RegexAst::Letter(c))
            }
        }
    }
}

/// Parses `text` over `alphabet`. Offsets in syntax errors count characters
/// of the original text, whitespace included.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<RegexAst> {
    let tokens: Vec<(usize, char)> =
        text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut parser = Parser { tokens, pos: 0, end: text.chars().count(), alphabet };
    let ast = parser.union()?;
    if parser.pos != parser.tokens.len() {
        return parser.error(format!("unexpected {:?}", parser.peek().unwrap()));
    }
    Ok(ast)
}

fn thompson(ast: &RegexAst, alphabet: &Alphabet, e: &mut EpsNfa) -> (StateId, StateId) {
    let start = e.add_state();
    let end = e.add_state();
    match ast {
        RegexAst::Empty => {}
        RegexAst::Epsilon => e.add_eps(start, end),
        RegexAst::Letter(c) => {
            let a = alphabet.index_of(*c).expect("letter checked at parse time");
            e.nfa.add_transition(start, a, end);
        }
        RegexAst::Union(l, r) => {
            for side in [l, r] {
                let (s, t) = thompson(side, alphabet, e);
                e.add_eps(start, s);
                e.add_eps(t, end);
            }
        }
        RegexAst::Concat(l, r) => {
            let (s1, t1) = thompson(l, alphabet, e);
            let (s2, t2) = thompson(r, alphabet, e);
            e.add_eps(start, s1);
            e.add_eps(t1, s2);
            e.add_eps(t2, end);
        }
        RegexAst::Star(inner) => {
            let (s, t) = thompson(inner, alphabet, e);
            e.add_eps(start, end);
            e.add_eps(start, s);
            e.add_eps(t, s);
            e.add_eps(t, end);
        }
    }
    (start, end)
}

fn check_letters(ast: &RegexAst, alphabet: &Alphabet) -> Result<()> {
    match ast {
        RegexAst::Empty | RegexAst::Epsilon => Ok(()),
        RegexAst::Letter(c) => match alphabet.index_of(*c) {
            Some(_) => Ok(()),
            None => Err(Error::UnknownLetter { letter: *c }),
        },
        RegexAst::Union(l, r) | RegexAst::Concat(l, r) => {
            check_letters(l, alphabet)?;
            check_letters(r, alphabet)
        }
        RegexAst::Star(inner) => check_letters(inner, alphabet),
    }
}

/// Thompson construction followed by epsilon elimination and trimming. The
/// result is over the whole of `alphabet`, used letters or not.
pub fn compile(ast: &RegexAst, alphabet: &Alphabet) -> Result<Nfa> {
    check_letters(ast, alphabet)?;
    let mut e = EpsNfa::new(alphabet.clone(), 0);
    let (start, end) = thompson(ast, alphabet, &mut e);
    e.nfa.add_initial(start);
    e.nfa.set_accepting(end, true);
    Ok(e.eliminate().trim())
}

/// [`parse_regex`] then [`compile`].
pub fn regex_nfa(text: &str, alphabet: &Alphabet) -> Result<Nfa> {
    compile(&parse_regex(text, alphabet)?, alphabet)
}
