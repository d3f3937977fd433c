use super::{SpeciesError, SpeciesExpr};

/// Parse atoms `0 1 X E`, `+` (lowest), `*`, `o` (composition, tighter than
/// `*`), postfix `'` (tightest) and parentheses. Whitespace is ignored.
pub fn parse_species(text: &str) -> Result<SpeciesExpr, SpeciesError> {
    let tokens: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let e = p.sum()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("unexpected token"));
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn error(&self, message: &str) -> SpeciesError {
        SpeciesError::Parse {
            pos: self.tokens.get(self.pos).map_or(self.len, |t| t.0),
            message: message.into(),
        }
    }

    fn sum(&mut self) -> Result<SpeciesExpr, SpeciesError> {
        let mut e = self.product()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            e = SpeciesExpr::sum(e, self.product()?);
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<SpeciesExpr, SpeciesError> {
        let mut e = self.composition()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            e = SpeciesExpr::prod(e, self.composition()?);
        }
        Ok(e)
    }

    fn composition(&mut self) -> Result<SpeciesExpr, SpeciesError> {
        let mut e = self.postfix()?;
        while self.peek() == Some('o') {
            self.pos += 1;
            e = SpeciesExpr::comp(e, self.postfix()?);
        }
        Ok(e)
    }

    fn postfix(&mut self) -> Result<SpeciesExpr, SpeciesError> {
        let mut e = self.atom()?;
        while self.peek() == Some('\'') {
            self.pos += 1;
            e = SpeciesExpr::deriv(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<SpeciesExpr, SpeciesError> {
        let c = self
            .peek()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        let e = match c {
            '0' => SpeciesExpr::Zero,
            '1' => SpeciesExpr::One,
            'X' => SpeciesExpr::X,
            'E' => SpeciesExpr::E,
            '(' => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                e
            }
            _ => return Err(self.error("expected one of 0 1 X E (")),
        };
        self.pos += 1;
        Ok(e)
    }
}
