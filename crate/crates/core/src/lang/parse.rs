use super::{Alphabet, LangError, Regex};

/// Parse `|` (lowest), juxtaposition, postfix `*`, `( )`, `0` (empty
/// language), `1` (empty word) and single-symbol literals.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Regex, LangError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        alphabet,
    };
    let r = p.alt()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected `)`"));
    }
    Ok(r)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> LangError {
        LangError::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn alt(&mut self) -> Result<Regex, LangError> {
        let mut r = self.cat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            r = Regex::alt(r, self.cat()?);
        }
        Ok(r)
    }

    fn cat(&mut self) -> Result<Regex, LangError> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            factors.push(self.postfix()?);
        }
        if factors.is_empty() {
            return Err(self.error("expected an expression"));
        }
        Ok(factors
            .into_iter()
            .rev()
            .reduce(|acc, f| Regex::cat(f, acc))
            .expect("non-empty"))
    }

    fn postfix(&mut self) -> Result<Regex, LangError> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, LangError> {
        let c = self
            .peek()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        let start = self.pos;
        self.pos += 1;
        match c {
            '0' => Ok(Regex::Empty),
            '1' => Ok(Regex::Eps),
            '(' => {
                let r = self.alt()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(r)
            }
            '*' => Err(LangError::Syntax {
                pos: start,
                message: "`*` with nothing to repeat".into(),
            }),
            c if self.alphabet.contains(c) => Ok(Regex::Lit(c)),
            c => Err(LangError::UnknownSymbol {
                symbol: c,
                pos: start,
            }),
        }
    }
}
