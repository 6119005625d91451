use crate::logic::{Formula, Var};
use crate::structure::Signature;

use super::lexer::{tokenize, Tok, Token};
use super::ParseError;

pub(super) fn parse_formula(text: &str, signature: Option<&Signature>) -> Result<Formula, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        signature,
    };
    let f = p.implication()?;
    p.expect(Tok::End, "end of input")?;
    Ok(f)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    signature: Option<&'a Signature>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn here(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.here();
        let message = match &t.tok {
            Tok::End => format!("unexpected end of input, expected {expected}"),
            tok => format!("unexpected {}, expected {expected}", tok.describe()),
        };
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn eat(&mut self, tok: Tok) -> bool {
        if *self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn ident(&mut self, what: &str) -> Result<Var, ParseError> {
        match self.peek() {
            Tok::Ident(name) => {
                let name = name.clone();
                self.advance();
                Ok(name)
            }
            _ => Err(self.error(what)),
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(Tok::Arrow) {
            Ok(lhs.implies(self.implication()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while self.eat(Tok::Bar) {
            f = f.or(self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.eat(Tok::Amp) {
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Bang => {
                self.advance();
                Ok(self.unary()?.negate())
            }
            Tok::Exists | Tok::Forall => {
                let universal = self.advance().tok == Tok::Forall;
                let x = self.ident("a variable after the quantifier")?;
                self.expect(Tok::Dot, "`.` after the quantified variable")?;
                let body = self.implication()?;
                Ok(if universal {
                    Formula::forall(x, body)
                } else {
                    Formula::exists(x, body)
                })
            }
            Tok::LParen => {
                self.advance();
                let f = self.implication()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(_) => self.atom(),
            _ => Err(self.error("a formula")),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let start = self.here().clone();
        let name = self.ident("an atom")?;
        match (name.as_str(), self.peek()) {
            ("conn", Tok::LParen) => {
                self.advance();
                let x = self.ident("a variable")?;
                self.expect(Tok::Comma, "`,`")?;
                let y = self.ident("a variable")?;
                let mut deleted = Vec::new();
                if self.eat(Tok::Bar) && *self.peek() != Tok::RParen {
                    deleted = self.var_list()?;
                }
                self.expect(Tok::RParen, "`)` closing the conn atom")?;
                Ok(Formula::Conn { x, y, deleted })
            }
            ("dp", Tok::LBracket) => {
                self.advance();
                let mut pairs = Vec::new();
                loop {
                    self.expect(Tok::LParen, "`(` opening a pair")?;
                    let a = self.ident("a variable")?;
                    self.expect(Tok::Comma, "`,`")?;
                    let b = self.ident("a variable")?;
                    self.expect(Tok::RParen, "`)` closing the pair")?;
                    pairs.push((a, b));
                    if !self.eat(Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::RBracket, "`]` closing the dp atom")?;
                Ok(Formula::Dp(pairs))
            }
            (_, Tok::LParen) => {
                self.advance();
                let args = if *self.peek() == Tok::RParen {
                    Vec::new()
                } else {
                    self.var_list()?
                };
                self.expect(Tok::RParen, "`)` closing the argument list")?;
                self.check_arity(&name, args.len(), &start)?;
                Ok(Formula::Rel(name, args))
            }
            (_, Tok::Eq | Tok::Neq | Tok::Lt) => {
                let op = self.advance().tok;
                let rhs = self.ident("a variable")?;
                Ok(match op {
                    Tok::Eq => Formula::Equals(name, rhs),
                    Tok::Neq => Formula::neq(name, rhs),
                    _ => {
                        self.check_arity("<", 2, &start)?;
                        Formula::Rel("<".into(), vec![name, rhs])
                    }
                })
            }
            _ => Err(self.error("`=`, `!=`, `<` or `(` after an identifier")),
        }
    }

    fn var_list(&mut self) -> Result<Vec<Var>, ParseError> {
        let mut vars = vec![self.ident("a variable")?];
        while self.eat(Tok::Comma) {
            vars.push(self.ident("a variable")?);
        }
        Ok(vars)
    }

    fn check_arity(&self, name: &str, found: usize, at: &Token) -> Result<(), ParseError> {
        match self.signature.and_then(|s| s.get(name)) {
            Some(&expected) if expected != found => Err(ParseError::Arity {
                line: at.line,
                column: at.column,
                symbol: name.to_string(),
                expected,
                found,
            }),
            _ => Ok(()),
        }
    }
}
