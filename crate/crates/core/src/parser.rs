//! Recursive-descent parser for the formula surface syntax.
//!
//! ```text
//! formula     := implication
//! implication := atom ('->' implication)?
//! atom        := identifier | '(' formula ')'
//! ```
//!
//! Whitespace is insignificant and `⊃` may be written for `->`. Unparenthesized
//! chains associate to the right, so `a -> b -> c` reads as `a -> (b -> c)`.

use std::fmt;

use thiserror::Error;

use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {kind}")]
pub struct ParseError {
    /// Character offset into the input (0-based).
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedEnd,
    UnexpectedChar(char),
    ExpectedAtom(Token),
    ExpectedCloseParen(Token),
    TrailingInput(Token),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::ExpectedAtom(t) => {
                write!(f, "expected a variable or '(', found {t}")
            }
            ParseErrorKind::ExpectedCloseParen(t) => write!(f, "expected ')', found {t}"),
            ParseErrorKind::TrailingInput(t) => write!(f, "unexpected trailing {t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Arrow,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "identifier '{s}'"),
            Token::Arrow => f.write_str("'->'"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '⊃' => {
                out.push((i, Token::Arrow));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    out.push((i, Token::Arrow));
                    i += 2;
                } else {
                    return Err(ParseError {
                        offset: i,
                        kind: ParseErrorKind::UnexpectedChar(c),
                    });
                }
            }
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Token::Ident(chars[start..i].iter().collect())));
            }
            c => {
                return Err(ParseError {
                    offset: i,
                    kind: ParseErrorKind::UnexpectedChar(c),
                })
            }
        }
    }
    out.push((chars.len(), Token::End));
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Token) {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> (usize, Token) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.atom()?;
        if self.peek().1 == Token::Arrow {
            self.bump();
            let rhs = self.implication()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let (offset, tok) = self.bump();
        match tok {
            Token::Ident(name) => Ok(Formula::var(&name)),
            Token::LParen => {
                let inner = self.implication()?;
                let (offset, tok) = self.bump();
                match tok {
                    Token::RParen => Ok(inner),
                    Token::End => Err(ParseError {
                        offset,
                        kind: ParseErrorKind::UnexpectedEnd,
                    }),
                    other => Err(ParseError {
                        offset,
                        kind: ParseErrorKind::ExpectedCloseParen(other),
                    }),
                }
            }
            Token::End => Err(ParseError {
                offset,
                kind: ParseErrorKind::UnexpectedEnd,
            }),
            other => Err(ParseError {
                offset,
                kind: ParseErrorKind::ExpectedAtom(other),
            }),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let f = parser.implication()?;
    let (offset, tok) = parser.bump();
    if tok != Token::End {
        return Err(ParseError {
            offset,
            kind: ParseErrorKind::TrailingInput(tok),
        });
    }
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
