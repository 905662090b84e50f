use std::fmt;

use crate::error::{ParseError, ParseErrorKind};

use super::RESERVED;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Not,
    /// The head disjunction keyword `v`.
    Or,
    Minus,
    Star,
    If,
    Arrow,
    Amp,
    Comma,
    Dot,
    LParen,
    RParen,
    FStar,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Not => f.write_str("`not`"),
            Tok::Or => f.write_str("`v`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::If => f.write_str("`:-`"),
            Tok::Arrow => f.write_str("`<-`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::FStar => f.write_str("`F*`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// Splits `text` into tokens. In formula mode `F*` (no space) is the
/// constant; in program mode `F` is an ordinary atom.
pub(crate) fn tokenize(text: &str, formula_mode: bool) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);

    while i < chars.len() {
        let c = chars[i];
        let start = (line, column);
        let advance = |n: usize, i: &mut usize, column: &mut usize| {
            *i += n;
            *column += n;
        };
        let tok = match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                advance(1, &mut i, &mut column);
                continue;
            }
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            ':' if chars.get(i + 1) == Some(&'-') => {
                advance(2, &mut i, &mut column);
                Tok::If
            }
            '<' if chars.get(i + 1) == Some(&'-') => {
                advance(2, &mut i, &mut column);
                Tok::Arrow
            }
            '-' => {
                advance(1, &mut i, &mut column);
                Tok::Minus
            }
            '*' => {
                advance(1, &mut i, &mut column);
                Tok::Star
            }
            '&' => {
                advance(1, &mut i, &mut column);
                Tok::Amp
            }
            ',' => {
                advance(1, &mut i, &mut column);
                Tok::Comma
            }
            '.' => {
                advance(1, &mut i, &mut column);
                Tok::Dot
            }
            '(' => {
                advance(1, &mut i, &mut column);
                Tok::LParen
            }
            ')' => {
                advance(1, &mut i, &mut column);
                Tok::RParen
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                let word: String = chars[i..i + len].iter().collect();
                advance(len, &mut i, &mut column);
                if formula_mode && word == "F" && chars.get(i) == Some(&'*') {
                    advance(1, &mut i, &mut column);
                    Tok::FStar
                } else if word == RESERVED[0] {
                    Tok::Not
                } else if word == RESERVED[1] {
                    Tok::Or
                } else {
                    Tok::Ident(word)
                }
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax,
                    line,
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push(Token {
            tok,
            line: start.0,
            column: start.1,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}
