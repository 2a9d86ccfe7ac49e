//! Shared tokenizer for the formula and sequent concrete syntax.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::formula::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    ImpArrow,
    CondArrow,
    LParen,
    RParen,
    Comma,
    Colon,
    Semicolon,
    LBrace,
    RBrace,
    Turnstile,
    TransOpen,
    TransClose,
    Eof,
}

impl Token {
    pub(crate) fn describe(&self) -> &'static str {
        match self {
            Token::Ident(_) => "identifier",
            Token::True => "`true`",
            Token::False => "`false`",
            Token::Not => "`~`",
            Token::And => "`&`",
            Token::Or => "`|`",
            Token::ImpArrow => "`->`",
            Token::CondArrow => "`=>`",
            Token::LParen => "`(`",
            Token::RParen => "`)`",
            Token::Comma => "`,`",
            Token::Colon => "`:`",
            Token::Semicolon => "`;`",
            Token::LBrace => "`{`",
            Token::RBrace => "`}`",
            Token::Turnstile => "`|-`",
            Token::TransOpen => "`-[`",
            Token::TransClose => "`]->`",
            Token::Eof => "end of input",
        }
    }
}

/// Tokenizes the whole input up front. Offsets are byte positions.
pub(crate) fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                toks.push((Token::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Token::RParen, i));
                i += 1;
            }
            b',' => {
                toks.push((Token::Comma, i));
                i += 1;
            }
            b':' => {
                toks.push((Token::Colon, i));
                i += 1;
            }
            b';' => {
                toks.push((Token::Semicolon, i));
                i += 1;
            }
            b'{' => {
                toks.push((Token::LBrace, i));
                i += 1;
            }
            b'}' => {
                toks.push((Token::RBrace, i));
                i += 1;
            }
            b'~' => {
                toks.push((Token::Not, i));
                i += 1;
            }
            b'&' => {
                toks.push((Token::And, i));
                i += 1;
            }
            b'|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    toks.push((Token::Turnstile, i));
                    i += 2;
                } else {
                    toks.push((Token::Or, i));
                    i += 1;
                }
            }
            b'-' => match bytes.get(i + 1) {
                Some(b'>') => {
                    toks.push((Token::ImpArrow, i));
                    i += 2;
                }
                Some(b'[') => {
                    toks.push((Token::TransOpen, i));
                    i += 2;
                }
                _ => {
                    return Err(ParseError::new(i, &["`->`", "`-[`"], symbol_at(text, i)));
                }
            },
            b']' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    toks.push((Token::TransClose, i));
                    i += 3;
                } else {
                    return Err(ParseError::new(i, &["`]->`"], symbol_at(text, i)));
                }
            }
            b'=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Token::CondArrow, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, &["`=>`"], symbol_at(text, i)));
                }
            }
            b'a'..=b'z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Token::True,
                    "false" => Token::False,
                    _ => Token::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => {
                return Err(ParseError::new(i, &["a token"], symbol_at(text, i)));
            }
        }
    }
    toks.push((Token::Eof, bytes.len()));
    Ok(toks)
}

fn symbol_at(text: &str, offset: usize) -> String {
    text[offset..]
        .chars()
        .next()
        .map(|c| c.to_string())
        .unwrap_or_else(|| "end of input".to_string())
}

/// Token cursor shared by the formula and sequent parsers.
pub(crate) struct Cursor {
    toks: Vec<(Token, usize)>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: tokenize(text)?,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.toks[self.pos].0
    }

    pub(crate) fn peek2(&self) -> &Token {
        let next = (self.pos + 1).min(self.toks.len() - 1);
        &self.toks[next].0
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    pub(crate) fn bump(&mut self) -> Token {
        let tok = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    pub(crate) fn eat(&mut self, want: &Token) -> bool {
        if self.peek() == want {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        if self.peek() == &want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[want.describe()]))
        }
    }

    pub(crate) fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::new(self.offset(), expected, self.peek().describe().to_string())
    }

    pub(crate) fn expect_eof(&self) -> Result<(), ParseError> {
        if self.peek() == &Token::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }
}
