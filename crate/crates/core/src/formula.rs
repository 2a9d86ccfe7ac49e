//! The conditional-logic formula language: abstract syntax, parser,
//! printer and the symbol-count measure used by the termination
//! invariants.
//!
//! Concrete syntax (ASCII):
//!
//! ```text
//! formula := imp ('=>' formula)?          conditional, right associative
//! imp     := or ('->' imp)?               right associative
//! or      := and ('|' and)*               left associative
//! and     := unary ('&' unary)*           left associative
//! unary   := '~' unary | primary
//! primary := 'true' | 'false' | atom | '(' formula ')'
//! atom    := [a-z][a-zA-Z0-9_]*
//! ```
//!
//! Precedence from tightest to loosest: `~`, `&`, `|`, `->`, `=>`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::lexer::{Cursor, Token};

/// An interned propositional-variable name, compared by content.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomName(Arc<str>);

impl AtomName {
    /// Names must match `[a-z][a-zA-Z0-9_]*`; this is checked in debug
    /// builds only, the parser is the validating entry point.
    pub fn new(name: &str) -> Self {
        debug_assert!(is_valid_atom_name(name), "invalid atom name: {name:?}");
        AtomName(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AtomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    name != "true" && name != "false" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A formula of the conditional language. All boolean connectives are
/// primitive; `Cond` is the conditional operator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(AtomName),
    Falsum,
    Verum,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Cond(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Self {
        Formula::Atom(AtomName::new(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn cond(a: Formula, b: Formula) -> Self {
        Formula::Cond(Box::new(a), Box::new(b))
    }

    /// Number of symbols in the formula: one per atom, `true`/`false`
    /// occurrence and connective. Parentheses do not count, so the
    /// measure is independent of the concrete rendering, and every
    /// proper subformula has a strictly smaller count.
    pub fn symbol_count(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum | Formula::Verum => 1,
            Formula::Neg(a) => 1 + a.symbol_count(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Imp(a, b)
            | Formula::Cond(a, b) => 1 + a.symbol_count() + b.symbol_count(),
        }
    }

    /// All atom names occurring in the formula, in sorted order.
    pub fn atoms(&self) -> alloc::collections::BTreeSet<AtomName> {
        let mut out = alloc::collections::BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut alloc::collections::BTreeSet<AtomName>) {
        match self {
            Formula::Atom(n) => {
                out.insert(n.clone());
            }
            Formula::Falsum | Formula::Verum => {}
            Formula::Neg(a) => a.collect_atoms(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Imp(a, b)
            | Formula::Cond(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Atom(_) | Formula::Falsum | Formula::Verum => 6,
            Formula::Neg(_) => 5,
            Formula::And(..) => 4,
            Formula::Or(..) => 3,
            Formula::Imp(..) => 2,
            Formula::Cond(..) => 1,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom(n) => write!(f, "{n}")?,
            Formula::Falsum => f.write_str("false")?,
            Formula::Verum => f.write_str("true")?,
            Formula::Neg(a) => {
                f.write_str("~")?;
                a.fmt_prec(f, 5)?;
            }
            // `&` and `|` are left associative, the arrows right
            // associative; the child on the associating side may reuse
            // the parent's precedence level.
            Formula::And(a, b) => {
                a.fmt_prec(f, prec)?;
                f.write_str(" & ")?;
                b.fmt_prec(f, prec + 1)?;
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, prec)?;
                f.write_str(" | ")?;
                b.fmt_prec(f, prec + 1)?;
            }
            Formula::Imp(a, b) => {
                a.fmt_prec(f, prec + 1)?;
                f.write_str(" -> ")?;
                b.fmt_prec(f, prec)?;
            }
            Formula::Cond(a, b) => {
                a.fmt_prec(f, prec + 1)?;
                f.write_str(" => ")?;
                b.fmt_prec(f, prec)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Minimal-parenthesis rendering; `parse(render(f))` is `f` again.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Renders a formula to a string in the concrete syntax.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// A syntax error, with the byte offset of the offending token and the
/// set of tokens that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, expected: &[&'static str], found: String) -> Self {
        ParseError {
            offset,
            expected: expected.to_vec(),
            found,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected ", self.offset)?;
        let n = self.expected.len();
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == n { " or " } else { ", " })?;
            }
            f.write_str(e)?;
        }
        write!(f, ", found {}", self.found)
    }
}

/// Parses a formula from its concrete syntax.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut cur = Cursor::new(text)?;
    let f = parse_formula(&mut cur)?;
    cur.expect_eof()?;
    Ok(f)
}

pub(crate) fn parse_formula(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let lhs = parse_imp(cur)?;
    if cur.eat(&Token::CondArrow) {
        let rhs = parse_formula(cur)?;
        Ok(Formula::cond(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn parse_imp(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let lhs = parse_or(cur)?;
    if cur.eat(&Token::ImpArrow) {
        let rhs = parse_imp(cur)?;
        Ok(Formula::imp(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn parse_or(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let mut lhs = parse_and(cur)?;
    while cur.eat(&Token::Or) {
        let rhs = parse_and(cur)?;
        lhs = Formula::or(lhs, rhs);
    }
    Ok(lhs)
}

fn parse_and(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let mut lhs = parse_unary(cur)?;
    while cur.eat(&Token::And) {
        let rhs = parse_unary(cur)?;
        lhs = Formula::and(lhs, rhs);
    }
    Ok(lhs)
}

const PRIMARY_EXPECTED: &[&str] = &["`true`", "`false`", "identifier", "`(`", "`~`"];

fn parse_unary(cur: &mut Cursor) -> Result<Formula, ParseError> {
    if cur.eat(&Token::Not) {
        return Ok(Formula::neg(parse_unary(cur)?));
    }
    match cur.peek().clone() {
        Token::True => {
            cur.bump();
            Ok(Formula::Verum)
        }
        Token::False => {
            cur.bump();
            Ok(Formula::Falsum)
        }
        Token::Ident(name) => {
            cur.bump();
            Ok(Formula::Atom(AtomName::new(&name)))
        }
        Token::LParen => {
            cur.bump();
            let f = parse_formula(cur)?;
            cur.expect(Token::RParen)?;
            Ok(f)
        }
        _ => Err(cur.error(PRIMARY_EXPECTED)),
    }
}
