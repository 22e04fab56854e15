//! Expression parser for bracketed words and their linear combinations.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [coeff '*'] word
//! coeff  := int | int '/' int
//! word   := '1' | factor+
//! factor := letter | '[' word ']' '_' op | 'P_' op '(' word ')'
//! ```
//! A leading sign on the first term is accepted so that rendered output
//! parses back. `0` denotes the zero combination. Forests use
//! `forest := '1' | tree+`, `tree := name ['(' forest ')']`.

use mrb_core::{Coefficient, Forest, LinComb, Signature, Tree, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LBracket,
    RBracket,
    Underscore,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(s) => format!("`{s}`"),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::Underscore => "`_`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '_' => Tok::Underscore,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            other => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn new(input: &str, sig: &'a Signature) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(input)?,
            pos: 0,
            sig,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T, ParseError> {
        self.error(format!(
            "expected {expected}, found {}",
            describe(self.peek())
        ))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&describe(&tok))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.unexpected("end of input"),
        }
    }

    fn expr(&mut self) -> Result<LinComb<Word>, ParseError> {
        let mut out = LinComb::zero();
        if self.peek() == &Tok::Int("0".into()) && self.peek_at(1) == &Tok::End {
            self.bump();
            return Ok(out);
        }
        let mut negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (c, w) = self.term()?;
            out.add_term(w, if negative { -c } else { c });
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.bump();
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Coefficient, Word), ParseError> {
        let coeff_follows =
            matches!(self.peek(), Tok::Int(_)) && matches!(self.peek_at(1), Tok::Star | Tok::Slash);
        let coeff = if coeff_follows {
            let c = self.coefficient()?;
            self.expect(Tok::Star)?;
            c
        } else {
            Coefficient::from_integer(1.into())
        };
        Ok((coeff, self.word()?))
    }

    fn integer(&mut self) -> Result<Coefficient, ParseError> {
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                Ok(digits.parse::<Coefficient>().expect("lexer yields digits"))
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn coefficient(&mut self) -> Result<Coefficient, ParseError> {
        let num = self.integer()?;
        if self.peek() != &Tok::Slash {
            return Ok(num);
        }
        self.bump();
        let col = self.column();
        let den = self.integer()?;
        if den == Coefficient::from_integer(0.into()) {
            return Err(ParseError {
                column: col,
                message: "zero denominator".into(),
            });
        }
        Ok(num / den)
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        if let Tok::Int(digits) = self.peek() {
            if digits == "1" {
                self.bump();
                return Ok(Word::one());
            }
            return self.error(format!(
                "`{digits}` is not a word; write `{digits} * word` for a multiple"
            ));
        }
        let mut atoms = Vec::new();
        while let Some(w) = self.factor()? {
            atoms.extend(w.into_atoms());
        }
        if atoms.is_empty() {
            return self.unexpected("a word");
        }
        Ok(Word::from_atoms(atoms))
    }

    fn operator(&mut self) -> Result<mrb_core::Operator, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => match self.sig.operator(&name) {
                Some(op) => {
                    self.bump();
                    Ok(op)
                }
                None => self.error(format!("unknown operator `{name}`")),
            },
            _ => self.unexpected("an operator name"),
        }
    }

    fn factor(&mut self) -> Result<Option<Word>, ParseError> {
        match self.peek().clone() {
            Tok::LBracket => {
                self.bump();
                let body = self.word()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::Underscore)?;
                let op = self.operator()?;
                Ok(Some(Word::bracket(op, body)))
            }
            Tok::Ident(name) if name == "P" && self.peek_at(1) == &Tok::Underscore => {
                self.bump();
                self.bump();
                let op = self.operator()?;
                self.expect(Tok::LParen)?;
                let body = self.word()?;
                self.expect(Tok::RParen)?;
                Ok(Some(Word::bracket(op, body)))
            }
            Tok::Ident(name) => match self.sig.letter(&name) {
                Some(l) => {
                    self.bump();
                    Ok(Some(Word::letter(l)))
                }
                None if self.sig.operator(&name).is_some() => {
                    self.error(format!("operator `{name}` used as a letter"))
                }
                None => self.error(format!("unknown letter `{name}`")),
            },
            _ => Ok(None),
        }
    }

    fn forest(&mut self) -> Result<Forest, ParseError> {
        if self.peek() == &Tok::Int("1".into()) {
            self.bump();
            return Ok(Forest::one());
        }
        let mut trees = Vec::new();
        while let Tok::Ident(name) = self.peek().clone() {
            let col = self.column();
            self.bump();
            let has_children = self.peek() == &Tok::LParen;
            if let Some(l) = self.sig.letter(&name) {
                if has_children {
                    return Err(ParseError {
                        column: col,
                        message: format!("letter `{name}` cannot have children"),
                    });
                }
                trees.push(Tree::letter(l));
            } else if let Some(op) = self.sig.operator(&name) {
                let children = if has_children {
                    self.bump();
                    let f = self.forest()?;
                    self.expect(Tok::RParen)?;
                    f
                } else {
                    Forest::one()
                };
                trees.push(Tree::graft(op, children));
            } else {
                return Err(ParseError {
                    column: col,
                    message: format!("unknown symbol `{name}`"),
                });
            }
        }
        if trees.is_empty() {
            return self.unexpected("a forest");
        }
        Ok(Forest::from_trees(trees))
    }
}

/// Parses a linear combination of words.
pub fn parse(input: &str, sig: &Signature) -> Result<LinComb<Word>, ParseError> {
    let mut p = Parser::new(input, sig)?;
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parses a single forest such as `a(x y) b`.
pub fn parse_forest(input: &str, sig: &Signature) -> Result<Forest, ParseError> {
    let mut p = Parser::new(input, sig)?;
    let f = p.forest()?;
    p.finish()?;
    Ok(f)
}
