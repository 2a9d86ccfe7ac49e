//! Labels, labelled formulas, transition formulas and sequents.
//!
//! A sequent is a pair of multisets; duplicates are significant because
//! the contraction bookkeeping of the bounded calculus depends on them.
//! The antecedent transitions of a sequent induce a multigraph over its
//! labels; a sequent is *regular* when that graph is a forest, and every
//! sequent reachable by backward search from a root `|- x0: D` is.
//!
//! Concrete syntax: items are comma separated, the sides are separated by
//! `|-`, a labelled formula is written `x0: <formula>` and a transition
//! `x0 -[<formula>]-> x1`. Labels are `x` followed by digits.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{self, Formula, ParseError};
use crate::lexer::{Cursor, Token};

/// A world label. Labels are created in order within one proof-search
/// session; index 0 is the root label `x0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u32);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// `x: A` — formula `A` holds at the world named by `x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledFormula {
    pub label: Label,
    pub formula: Formula,
}

impl LabelledFormula {
    pub fn new(label: Label, formula: Formula) -> Self {
        LabelledFormula { label, formula }
    }

    /// The complexity measure `cp(x: A) = 2 * |A|`.
    pub fn complexity(&self) -> usize {
        2 * self.formula.symbol_count()
    }
}

impl fmt::Display for LabelledFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self.formula)
    }
}

/// `x -[A]-> y` — the world `y` is among the worlds selected for `x`
/// and `A`. `from == to` is legal; such transitions arise from (MP).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: Label,
    pub formula: Formula,
    pub to: Label,
}

impl Transition {
    pub fn new(from: Label, formula: Formula, to: Label) -> Self {
        Transition { from, formula, to }
    }

    /// The complexity measure `cp(x -[A]-> y) = 2 * |A| + 1`.
    pub fn complexity(&self) -> usize {
        2 * self.formula.symbol_count() + 1
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -[{}]-> {}", self.from, self.formula, self.to)
    }
}

/// One member of a sequent side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Labelled(LabelledFormula),
    Transition(Transition),
}

impl Item {
    pub fn labelled(label: Label, formula: Formula) -> Self {
        Item::Labelled(LabelledFormula::new(label, formula))
    }

    pub fn transition(from: Label, formula: Formula, to: Label) -> Self {
        Item::Transition(Transition::new(from, formula, to))
    }

    pub fn complexity(&self) -> usize {
        match self {
            Item::Labelled(lf) => lf.complexity(),
            Item::Transition(t) => t.complexity(),
        }
    }

    pub fn as_labelled(&self) -> Option<&LabelledFormula> {
        match self {
            Item::Labelled(lf) => Some(lf),
            Item::Transition(_) => None,
        }
    }

    pub fn as_transition(&self) -> Option<&Transition> {
        match self {
            Item::Transition(t) => Some(t),
            Item::Labelled(_) => None,
        }
    }

    fn collect_labels(&self, out: &mut BTreeSet<Label>) {
        match self {
            Item::Labelled(lf) => {
                out.insert(lf.label);
            }
            Item::Transition(t) => {
                out.insert(t.from);
                out.insert(t.to);
            }
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Labelled(lf) => lf.fmt(f),
            Item::Transition(t) => t.fmt(f),
        }
    }
}

/// Which side of a sequent an item sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Antecedent,
    Consequent,
}

/// A pair of multisets of labelled formulas and transition formulas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Sequent {
    pub antecedent: Vec<Item>,
    pub consequent: Vec<Item>,
}

impl Sequent {
    pub fn new(antecedent: Vec<Item>, consequent: Vec<Item>) -> Self {
        Sequent {
            antecedent,
            consequent,
        }
    }

    /// The root sequent `|- x0: goal` of a proof-search session.
    pub fn goal(goal: Formula) -> Self {
        Sequent {
            antecedent: Vec::new(),
            consequent: alloc::vec![Item::labelled(Label(0), goal)],
        }
    }

    pub fn side(&self, side: Side) -> &[Item] {
        match side {
            Side::Antecedent => &self.antecedent,
            Side::Consequent => &self.consequent,
        }
    }

    pub(crate) fn side_mut(&mut self, side: Side) -> &mut Vec<Item> {
        match side {
            Side::Antecedent => &mut self.antecedent,
            Side::Consequent => &mut self.consequent,
        }
    }

    /// All labels occurring in any formula or transition of the sequent.
    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        for item in self.antecedent.iter().chain(&self.consequent) {
            item.collect_labels(&mut out);
        }
        out
    }

    /// A label that does not occur in the sequent and is greater than
    /// every label that does. Search sessions use their own monotone
    /// counter instead, which also satisfies this contract.
    pub fn fresh_label(&self) -> Label {
        Label(self.labels().iter().next_back().map_or(0, |l| l.0 + 1))
    }

    /// All atom names occurring anywhere in the sequent.
    pub fn atoms(&self) -> BTreeSet<crate::formula::AtomName> {
        let mut out = BTreeSet::new();
        for item in self.antecedent.iter().chain(&self.consequent) {
            let f = match item {
                Item::Labelled(lf) => &lf.formula,
                Item::Transition(t) => &t.formula,
            };
            out.append(&mut f.atoms());
        }
        out
    }

    /// Sum of the complexity measure over both sides.
    pub fn complexity(&self) -> usize {
        self.antecedent
            .iter()
            .chain(&self.consequent)
            .map(Item::complexity)
            .sum()
    }

    pub fn antecedent_transitions(&self) -> impl Iterator<Item = &Transition> {
        self.antecedent.iter().filter_map(Item::as_transition)
    }

    pub fn consequent_transitions(&self) -> impl Iterator<Item = &Transition> {
        self.consequent.iter().filter_map(Item::as_transition)
    }

    /// Multiset equality side by side; item order is irrelevant.
    pub fn multiset_eq(&self, other: &Sequent) -> bool {
        fn sorted(items: &[Item]) -> Vec<&Item> {
            let mut v: Vec<&Item> = items.iter().collect();
            v.sort();
            v
        }
        sorted(&self.antecedent) == sorted(&other.antecedent)
            && sorted(&self.consequent) == sorted(&other.consequent)
    }

    /// The multigraph induced by the antecedent transitions.
    pub fn transition_graph(&self) -> TransitionGraph {
        TransitionGraph {
            vertices: self.labels(),
            edges: self
                .antecedent_transitions()
                .map(|t| (t.from, t.to))
                .collect(),
        }
    }

    /// True when the transition multigraph is a forest: no self-loops,
    /// at most one link between two vertices, no vertex with two
    /// incoming edges, no cycles.
    pub fn is_regular(&self) -> bool {
        self.transition_graph().is_forest()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.antecedent.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            item.fmt(f)?;
        }
        if self.antecedent.is_empty() {
            f.write_str("|-")?;
        } else {
            f.write_str(" |-")?;
        }
        for (i, item) in self.consequent.iter().enumerate() {
            f.write_str(if i > 0 { ", " } else { " " })?;
            item.fmt(f)?;
        }
        Ok(())
    }
}

/// The multigraph of a sequent's antecedent transitions: one edge per
/// transition occurrence, vertices are all labels of the sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionGraph {
    pub vertices: BTreeSet<Label>,
    pub edges: Vec<(Label, Label)>,
}

impl TransitionGraph {
    pub fn is_forest(&self) -> bool {
        let mut parent: BTreeMap<Label, Label> = BTreeMap::new();
        let mut linked: BTreeSet<(Label, Label)> = BTreeSet::new();
        for &(from, to) in &self.edges {
            if from == to {
                return false;
            }
            let key = if from < to { (from, to) } else { (to, from) };
            if !linked.insert(key) {
                return false;
            }
            if parent.insert(to, from).is_some() {
                return false;
            }
        }
        // Each vertex now has at most one parent; any remaining cycle is
        // found by walking up the parent chain.
        for start in parent.keys() {
            let mut seen = BTreeSet::new();
            let mut cur = *start;
            while let Some(&up) = parent.get(&cur) {
                if !seen.insert(cur) {
                    return false;
                }
                cur = up;
            }
        }
        true
    }
}

// --- concrete syntax ----------------------------------------------------

fn parse_label(cur: &mut Cursor) -> Result<Label, ParseError> {
    let err = cur.error(&["label (`x` followed by digits)"]);
    match cur.peek().clone() {
        Token::Ident(name) => {
            let digits = name.strip_prefix('x').ok_or_else(|| err.clone())?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err);
            }
            let index: u32 = digits.parse().map_err(|_| err)?;
            cur.bump();
            Ok(Label(index))
        }
        _ => Err(err),
    }
}

fn is_label(name: &str) -> bool {
    matches!(name.strip_prefix('x'), Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

fn parse_item_inner(cur: &mut Cursor) -> Result<Item, ParseError> {
    // An item normally starts with a label; a bare formula in item
    // position abbreviates `x0: <formula>`.
    let labelled_start = matches!(cur.peek(), Token::Ident(name) if is_label(name))
        && matches!(cur.peek2(), Token::Colon | Token::TransOpen);
    if !labelled_start {
        let f = formula::parse_formula(cur)?;
        return Ok(Item::labelled(Label(0), f));
    }
    let label = parse_label(cur)?;
    if cur.eat(&Token::Colon) {
        let f = formula::parse_formula(cur)?;
        Ok(Item::labelled(label, f))
    } else {
        cur.expect(Token::TransOpen)?;
        let f = formula::parse_formula(cur)?;
        cur.expect(Token::TransClose)?;
        let to = parse_label(cur)?;
        Ok(Item::transition(label, f, to))
    }
}

fn parse_side(cur: &mut Cursor, stop: &[Token]) -> Result<Vec<Item>, ParseError> {
    let mut items = Vec::new();
    if stop.contains(cur.peek()) {
        return Ok(items);
    }
    loop {
        items.push(parse_item_inner(cur)?);
        if !cur.eat(&Token::Comma) {
            return Ok(items);
        }
    }
}

/// Parses a single sequent item, `x0: <formula>` or
/// `x0 -[<formula>]-> x1`.
pub fn parse_item(text: &str) -> Result<Item, ParseError> {
    let mut cur = Cursor::new(text)?;
    let item = parse_item_inner(&mut cur)?;
    cur.expect_eof()?;
    Ok(item)
}

/// Parses a sequent, e.g. `x0: a => b, x0 -[a]-> x1 |- x1: b`.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let mut cur = Cursor::new(text)?;
    let s = parse_sequent_inner(&mut cur)?;
    cur.expect_eof()?;
    Ok(s)
}

pub(crate) fn parse_sequent_inner(cur: &mut Cursor) -> Result<Sequent, ParseError> {
    let antecedent = parse_side(cur, &[Token::Turnstile])?;
    cur.expect(Token::Turnstile)?;
    let consequent = parse_side(cur, &[Token::Eof])?;
    Ok(Sequent::new(antecedent, consequent))
}

pub(crate) fn parse_labelled_set(
    cur: &mut Cursor,
) -> Result<BTreeSet<LabelledFormula>, ParseError> {
    cur.expect(Token::LBrace)?;
    let mut out = BTreeSet::new();
    if cur.eat(&Token::RBrace) {
        return Ok(out);
    }
    loop {
        match parse_item_inner(cur)? {
            Item::Labelled(lf) => {
                out.insert(lf);
            }
            Item::Transition(_) => {
                return Err(cur.error(&["labelled formula"]));
            }
        }
        if !cur.eat(&Token::Comma) {
            break;
        }
    }
    cur.expect(Token::RBrace)?;
    Ok(out)
}

pub(crate) fn render_labelled_set(set: &BTreeSet<LabelledFormula>) -> String {
    let mut out = String::from("{");
    for (i, lf) in set.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&lf.to_string());
    }
    out.push('}');
    out
}
