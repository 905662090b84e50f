//! Recursive-descent parsers for programs and formulas.
//!
//! ```text
//! program  := { rule }
//! rule     := head [ ":-" body ] "."
//! head     := level { "*" level }
//! level    := literal | "(" literal { "v" literal } ")" | literal { "v" literal }
//! body     := bodyitem { "," bodyitem }
//! bodyitem := literal | "not" literal
//! literal  := [ "-" ] identifier
//! ```
//!
//! An unparenthesized disjunction is only allowed when the head has a single
//! level. Formulas bind, loosest first: `<-`, `*`, `v`, `&`, `not`; every
//! binary operator is left-associative.

use crate::error::{ParseError, ParseErrorKind};

use super::lexer::{tokenize, Tok, Token};
use super::{Formula, Literal, Program, Rule};

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut p = Parser::new(tokenize(text, false)?);
    let mut rules = Vec::new();
    while p.peek() != &Tok::Eof {
        rules.push(p.rule()?);
    }
    Ok(Program::new(rules))
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(tokenize(text, true)?);
    let f = p.implication()?;
    p.expect(Tok::Eof, "an operator or end of input")?;
    Ok(f)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(tokens: Vec<Token>) -> Self {
        Self { tokens, pos: 0 }
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn current(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: Tok) -> bool {
        if *self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error_at(&self, token: &Token, kind: ParseErrorKind, message: String) -> ParseError {
        ParseError {
            kind,
            line: token.line,
            column: token.column,
            message,
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.current();
        self.error_at(
            t,
            ParseErrorKind::Syntax,
            format!("expected {expected}, found {}", t.tok),
        )
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let negated = self.eat(Tok::Minus);
        match self.peek().clone() {
            Tok::Ident(atom) => {
                self.bump();
                Ok(Literal::new(atom, negated))
            }
            _ => Err(self.unexpected("a literal")),
        }
    }

    fn rule(&mut self) -> Result<Rule, ParseError> {
        if matches!(self.peek(), Tok::If | Tok::Dot) {
            let t = self.current().clone();
            return Err(self.error_at(
                &t,
                ParseErrorKind::EmptyHead,
                "rule has an empty head".into(),
            ));
        }
        let head = self.head()?;
        let (mut body_pos, mut body_neg) = (Vec::new(), Vec::new());
        if self.eat(Tok::If) {
            loop {
                if self.eat(Tok::Not) {
                    body_neg.push(self.literal()?);
                } else {
                    body_pos.push(self.literal()?);
                }
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
            self.expect(Tok::Dot, "`,` or `.`")?;
        } else {
            self.expect(Tok::Dot, "`*`, `v`, `:-` or `.`")?;
        }
        Ok(Rule {
            head,
            body_pos,
            body_neg,
        })
    }

    fn head(&mut self) -> Result<Vec<Vec<Literal>>, ParseError> {
        let mut levels = Vec::new();
        // Position of an unparenthesized multi-literal level, if any.
        let mut bare_disjunction: Option<Token> = None;
        loop {
            if *self.peek() == Tok::LParen {
                let open = self.bump();
                if *self.peek() == Tok::RParen {
                    return Err(self.error_at(
                        &open,
                        ParseErrorKind::EmptyDisjunct,
                        "empty disjunction in rule head".into(),
                    ));
                }
                let mut level = vec![self.literal()?];
                while self.eat(Tok::Or) {
                    level.push(self.literal()?);
                }
                self.expect(Tok::RParen, "`v` or `)`")?;
                levels.push(level);
            } else {
                let start = self.current().clone();
                let mut level = vec![self.literal()?];
                while self.eat(Tok::Or) {
                    level.push(self.literal()?);
                }
                if level.len() > 1 && bare_disjunction.is_none() {
                    bare_disjunction = Some(start);
                }
                levels.push(level);
            }
            if !self.eat(Tok::Star) {
                break;
            }
        }
        if let (Some(at), true) = (bare_disjunction, levels.len() > 1) {
            return Err(self.error_at(
                &at,
                ParseErrorKind::Syntax,
                "a disjunction inside an ordered head must be parenthesized".into(),
            ));
        }
        Ok(levels)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.ordered()?;
        while self.eat(Tok::Arrow) {
            let rhs = self.ordered()?;
            lhs = Formula::implies(lhs, rhs);
        }
        Ok(lhs)
    }

    fn ordered(&mut self) -> Result<Formula, ParseError> {
        let mut parts = vec![self.disjunction()?];
        while self.eat(Tok::Star) {
            parts.push(self.disjunction()?);
        }
        Ok(Formula::times(parts))
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut parts = vec![self.conjunction()?];
        while self.eat(Tok::Or) {
            parts.push(self.conjunction()?);
        }
        Ok(Formula::or(parts))
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut parts = vec![self.unary()?];
        while self.eat(Tok::Amp) {
            parts.push(self.unary()?);
        }
        Ok(Formula::and(parts))
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        match self.peek() {
            Tok::FStar => {
                self.bump();
                Ok(Formula::FStar)
            }
            Tok::LParen => {
                self.bump();
                let f = self.implication()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Minus | Tok::Ident(_) => Ok(Formula::Lit(self.literal()?)),
            _ => Err(self.unexpected("a literal, `F*`, `not` or `(`")),
        }
    }
}
