//! Regular languages with the Brzozowski derivative.
//!
//! The derivative `∂_a` is a derivation of the language rig (union,
//! concatenation) twisted by `γ(U) = U ∩ {ε}`: `∂(UV) = ∂U·V + γU·∂V`.
//! `γ` is carried as the boolean [`Regex::nullable`].

mod dfa;
mod enumerate;
mod gen;
mod laws;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use dfa::{build_dfa, Dfa, DEFAULT_STATE_CAP};
pub use enumerate::{enumerate, LangSample, Window, DEFAULT_ENUM_CAP};
pub use gen::random_regex;
pub use laws::{
    check_linearity, check_module_action, check_twisted_leibniz, check_untwisted_leibniz, LangRig,
};
pub use parse::parse_regex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LangError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("symbol `{symbol}` at position {pos} is not in the alphabet")]
    UnknownSymbol { symbol: char, pos: usize },
    #[error("invalid alphabet: {0}")]
    BadAlphabet(String),
    #[error("window length {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("DFA construction exceeded the cap of {0} states")]
    StateCapExceeded(usize),
}

/// A finite, non-empty, ordered set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<char>);

const RESERVED: &[char] = &['0', '1', '|', '*', '(', ')'];

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, LangError> {
        let set: BTreeSet<char> = symbols.into_iter().collect();
        if set.is_empty() {
            return Err(LangError::BadAlphabet("alphabet is empty".into()));
        }
        if let Some(c) = set
            .iter()
            .find(|c| RESERVED.contains(c) || c.is_whitespace())
        {
            return Err(LangError::BadAlphabet(format!("`{c}` is reserved")));
        }
        Ok(Alphabet(set.into_iter().collect()))
    }

    pub fn parse(s: &str) -> Result<Self, LangError> {
        Alphabet::new(s.chars())
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.0.binary_search(&c).ok()
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    pub fn word(&self, s: &str) -> Result<Word, LangError> {
        for (pos, c) in s.chars().enumerate() {
            if !self.contains(c) {
                return Err(LangError::UnknownSymbol { symbol: c, pos });
            }
        }
        Ok(Word(s.chars().collect()))
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    self.0.iter().map(move |&c| {
                        let mut v = w.0.clone();
                        v.push(c);
                        Word(v)
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet(vec!['a', 'b'])
    }
}

/// A finite word. The empty word displays as `ε`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A regular expression in canonical form.
///
/// Values are only built through the smart constructors, which keep `Alt`
/// right-nested, sorted and duplicate-free without `Empty` branches, keep
/// `Cat` right-nested without `Empty` or `Eps` factors, and collapse
/// `Star` of `Star`, `Eps` or `Empty`. Structural equality therefore
/// decides equivalence modulo associativity, commutativity and
/// idempotence of `|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex {
    Empty,
    Eps,
    Lit(char),
    Alt(Box<Regex>, Box<Regex>),
    Cat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn empty() -> Regex {
        Regex::Empty
    }

    pub fn eps() -> Regex {
        Regex::Eps
    }

    pub fn lit(c: char) -> Regex {
        Regex::Lit(c)
    }

    fn push_alternatives(self, out: &mut Vec<Regex>) {
        match self {
            Regex::Alt(l, r) => {
                l.push_alternatives(out);
                r.push_alternatives(out);
            }
            Regex::Empty => {}
            other => out.push(other),
        }
    }

    pub fn alt(r: Regex, s: Regex) -> Regex {
        let mut branches = Vec::new();
        r.push_alternatives(&mut branches);
        s.push_alternatives(&mut branches);
        branches.sort();
        branches.dedup();
        let mut it = branches.into_iter().rev();
        match it.next() {
            None => Regex::Empty,
            Some(last) => it.fold(last, |acc, b| Regex::Alt(Box::new(b), Box::new(acc))),
        }
    }

    pub fn cat(r: Regex, s: Regex) -> Regex {
        match (r, s) {
            (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
            (Regex::Eps, s) => s,
            (r, Regex::Eps) => r,
            (Regex::Cat(r1, r2), s) => Regex::cat(*r1, Regex::cat(*r2, s)),
            (r, s) => Regex::Cat(Box::new(r), Box::new(s)),
        }
    }

    pub fn star(r: Regex) -> Regex {
        match r {
            Regex::Empty | Regex::Eps => Regex::Eps,
            s @ Regex::Star(_) => s,
            r => Regex::Star(Box::new(r)),
        }
    }

    /// Whether the empty word is in the language.
    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Lit(_) => false,
            Regex::Eps | Regex::Star(_) => true,
            Regex::Alt(l, r) => l.nullable() || r.nullable(),
            Regex::Cat(l, r) => l.nullable() && r.nullable(),
        }
    }

    /// `γ` as a language: `{ε}` when nullable, `∅` otherwise.
    pub fn nullable_part(&self) -> Regex {
        if self.nullable() {
            Regex::Eps
        } else {
            Regex::Empty
        }
    }

    /// Brzozowski derivative: the language `{ x | a·x ∈ L(self) }`.
    pub fn deriv(&self, a: char) -> Regex {
        match self {
            Regex::Empty | Regex::Eps => Regex::Empty,
            Regex::Lit(c) if *c == a => Regex::Eps,
            Regex::Lit(_) => Regex::Empty,
            Regex::Alt(l, r) => Regex::alt(l.deriv(a), r.deriv(a)),
            Regex::Cat(l, r) => {
                let head = Regex::cat(l.deriv(a), (**r).clone());
                if l.nullable() {
                    Regex::alt(head, r.deriv(a))
                } else {
                    head
                }
            }
            Regex::Star(inner) => Regex::cat(inner.deriv(a), self.clone()),
        }
    }

    pub fn deriv_word(&self, w: &Word) -> Regex {
        w.0.iter().fold(self.clone(), |r, &c| r.deriv(c))
    }

    pub fn matches(&self, w: &Word) -> bool {
        self.deriv_word(w).nullable()
    }

    /// Nesting depth, counting a whole chain of alternatives (or of
    /// concatenated factors) as one level.
    pub fn depth(&self) -> usize {
        match self {
            Regex::Empty | Regex::Eps | Regex::Lit(_) => 0,
            Regex::Alt(l, r) => {
                1 + l
                    .depth()
                    .max(r.chain_depth(|x| matches!(x, Regex::Alt(..))))
            }
            Regex::Cat(l, r) => {
                1 + l
                    .depth()
                    .max(r.chain_depth(|x| matches!(x, Regex::Cat(..))))
            }
            Regex::Star(r) => 1 + r.depth(),
        }
    }

    fn chain_depth(&self, same: fn(&Regex) -> bool) -> usize {
        match self {
            Regex::Alt(l, r) | Regex::Cat(l, r) if same(self) => l.depth().max(r.chain_depth(same)),
            other => other.depth(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        let own = match self {
            Regex::Alt(..) => 0,
            Regex::Cat(..) => 1,
            Regex::Star(..) => 2,
            _ => 3,
        };
        if own < prec {
            f.write_str("(")?;
        }
        match self {
            Regex::Empty => f.write_str("0")?,
            Regex::Eps => f.write_str("1")?,
            Regex::Lit(c) => write!(f, "{c}")?,
            Regex::Alt(l, r) => {
                l.fmt_prec(f, 1)?;
                f.write_str("|")?;
                r.fmt_prec(f, 0)?;
            }
            Regex::Cat(l, r) => {
                l.fmt_prec(f, 2)?;
                r.fmt_prec(f, 1)?;
            }
            Regex::Star(r) => {
                r.fmt_prec(f, 3)?;
                f.write_str("*")?;
            }
        }
        if own < prec {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
