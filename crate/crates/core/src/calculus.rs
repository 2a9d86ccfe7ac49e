//! The rules of the labelled sequent calculi, encoded as premise
//! generators, plus proof objects and an independent proof checker.
//!
//! The plain calculus (for CK and CK+ID) works on [`Sequent`]s and is
//! contraction-free: contexts are copied by the rules themselves and no
//! structural rules exist. The MP systems use [`BoundedSequent`]s
//! `K | Psi | gamma |- delta`, where `K` records the conditional formulas
//! already duplicated on the current branch and `Psi` holds the pending
//! duplicates; the left conditional rule splits into three variants so
//! that each conditional is duplicated at most once per branch.
//!
//! Every `apply_*` function is pure: it validates its preconditions and
//! returns the premises of one rule instance. [`check_proof`] replays a
//! proof object bottom-up through these same generators, so a proof is
//! accepted exactly when each node re-expands to its recorded premises,
//! all side conditions hold and every leaf is an axiom.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, ParseError};
use crate::lexer::{Cursor, Token};
use crate::sequent::{
    self, Item, Label, LabelledFormula, Sequent, Side, Transition,
};

/// The four conditional systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum System {
    Ck,
    CkId,
    CkMp,
    CkMpId,
}

impl System {
    pub const ALL: [System; 4] = [System::Ck, System::CkId, System::CkMp, System::CkMpId];

    /// Whether the (ID) rule is available.
    pub fn has_id(self) -> bool {
        matches!(self, System::CkId | System::CkMpId)
    }

    /// Whether the (MP) rule is available. MP systems run on the
    /// bounded calculus.
    pub fn has_mp(self) -> bool {
        matches!(self, System::CkMp | System::CkMpId)
    }

    pub fn name(self) -> &'static str {
        match self {
            System::Ck => "ck",
            System::CkId => "ck+id",
            System::CkMp => "ck+mp",
            System::CkMpId => "ck+mp+id",
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for System {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "ck" => Ok(System::Ck),
            "ck+id" => Ok(System::CkId),
            "ck+mp" => Ok(System::CkMp),
            "ck+mp+id" => Ok(System::CkMpId),
            _ => Err(()),
        }
    }
}

/// Identifier of a rule instance in a proof object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    Ax,
    AFalsum,
    AVerum,
    ImpL,
    ImpR,
    AndL,
    AndR,
    OrL,
    OrR,
    NegL,
    NegR,
    CondL,
    CondR,
    Eq,
    Id,
    Mp,
    CondL1,
    CondL2,
    CondL3,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Ax => "AX",
            RuleId::AFalsum => "A_FALSUM",
            RuleId::AVerum => "A_VERUM",
            RuleId::ImpL => "IMP_L",
            RuleId::ImpR => "IMP_R",
            RuleId::AndL => "AND_L",
            RuleId::AndR => "AND_R",
            RuleId::OrL => "OR_L",
            RuleId::OrR => "OR_R",
            RuleId::NegL => "NEG_L",
            RuleId::NegR => "NEG_R",
            RuleId::CondL => "COND_L",
            RuleId::CondR => "COND_R",
            RuleId::Eq => "EQ",
            RuleId::Id => "ID",
            RuleId::Mp => "MP",
            RuleId::CondL1 => "COND_L1",
            RuleId::CondL2 => "COND_L2",
            RuleId::CondL3 => "COND_L3",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleId> {
        const ALL: [RuleId; 19] = [
            RuleId::Ax,
            RuleId::AFalsum,
            RuleId::AVerum,
            RuleId::ImpL,
            RuleId::ImpR,
            RuleId::AndL,
            RuleId::AndR,
            RuleId::OrL,
            RuleId::OrR,
            RuleId::NegL,
            RuleId::NegR,
            RuleId::CondL,
            RuleId::CondR,
            RuleId::Eq,
            RuleId::Id,
            RuleId::Mp,
            RuleId::CondL1,
            RuleId::CondL2,
            RuleId::CondL3,
        ];
        ALL.into_iter().find(|r| r.name() == name)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Precondition violations of the `apply_*` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleError {
    /// The principal item does not occur where the rule needs it.
    PrincipalNotFound,
    /// The principal has the wrong shape for the rule.
    WrongShape,
    /// A target label that must already occur in the sequent does not.
    UnknownTarget,
    /// The label that must be fresh already occurs in the sequent.
    LabelNotFresh,
    /// The conditional was already contracted on this branch (in `K`).
    AlreadyContracted,
    /// The conditional was not contracted yet (not in `K`).
    NotContracted,
    /// The conditional is not pending duplication (not in `Psi`).
    NotPending,
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            RuleError::PrincipalNotFound => "principal item not found in the sequent",
            RuleError::WrongShape => "principal item has the wrong shape for the rule",
            RuleError::UnknownTarget => "target label does not occur in the sequent",
            RuleError::LabelNotFresh => "label is not fresh for the sequent",
            RuleError::AlreadyContracted => "conditional already in K; use the L2 variant",
            RuleError::NotContracted => "conditional not in K; use the L1 variant",
            RuleError::NotPending => "conditional not in Psi",
        };
        f.write_str(msg)
    }
}

fn locate(items: &[Item], wanted: &Item) -> Result<usize, RuleError> {
    items
        .iter()
        .position(|it| it == wanted)
        .ok_or(RuleError::PrincipalNotFound)
}

fn replace_at(mut s: Sequent, side: Side, idx: usize, with: Vec<Item>) -> Sequent {
    s.side_mut(side).splice(idx..idx + 1, with);
    s
}

fn cond_parts(lf: &LabelledFormula) -> Result<(&Formula, &Formula), RuleError> {
    match &lf.formula {
        Formula::Cond(a, b) => Ok((&**a, &**b)),
        _ => Err(RuleError::WrongShape),
    }
}

fn cond_l_premises(
    s: &Sequent,
    idx: usize,
    principal: &LabelledFormula,
    target: Label,
) -> [Sequent; 2] {
    let (a, b) = cond_parts(principal).expect("checked by callers");
    let mut p1 = replace_at(s.clone(), Side::Antecedent, idx, Vec::new());
    p1.consequent
        .insert(0, Item::transition(principal.label, a.clone(), target));
    let p2 = replace_at(
        s.clone(),
        Side::Antecedent,
        idx,
        alloc::vec![Item::labelled(target, b.clone())],
    );
    [p1, p2]
}

/// Axiom recognition. `(AX)` fires when any item, compared structurally
/// including labels, occurs on both sides; transitions count. The
/// precedence AX, then A_FALSUM, then A_VERUM is fixed for determinism.
pub fn axiom_check(s: &Sequent) -> Option<RuleId> {
    if s.antecedent.iter().any(|it| s.consequent.contains(it)) {
        return Some(RuleId::Ax);
    }
    if s.antecedent
        .iter()
        .any(|it| matches!(it, Item::Labelled(lf) if lf.formula == Formula::Falsum))
    {
        return Some(RuleId::AFalsum);
    }
    if s.consequent
        .iter()
        .any(|it| matches!(it, Item::Labelled(lf) if lf.formula == Formula::Verum))
    {
        return Some(RuleId::AVerum);
    }
    None
}

/// The boolean rules. The rule is selected by the principal's top
/// connective and side; returns it with the premises.
pub fn apply_propositional(
    s: &Sequent,
    principal: &LabelledFormula,
    side: Side,
) -> Result<(RuleId, Vec<Sequent>), RuleError> {
    let idx = locate(s.side(side), &Item::Labelled(principal.clone()))?;
    let x = principal.label;
    let lab = |f: &Formula| Item::labelled(x, f.clone());
    let out = match (side, &principal.formula) {
        (Side::Antecedent, Formula::And(a, b)) => (
            RuleId::AndL,
            alloc::vec![replace_at(s.clone(), side, idx, alloc::vec![lab(a), lab(b)])],
        ),
        (Side::Consequent, Formula::And(a, b)) => (
            RuleId::AndR,
            alloc::vec![
                replace_at(s.clone(), side, idx, alloc::vec![lab(a)]),
                replace_at(s.clone(), side, idx, alloc::vec![lab(b)]),
            ],
        ),
        (Side::Antecedent, Formula::Or(a, b)) => (
            RuleId::OrL,
            alloc::vec![
                replace_at(s.clone(), side, idx, alloc::vec![lab(a)]),
                replace_at(s.clone(), side, idx, alloc::vec![lab(b)]),
            ],
        ),
        (Side::Consequent, Formula::Or(a, b)) => (
            RuleId::OrR,
            alloc::vec![replace_at(s.clone(), side, idx, alloc::vec![lab(a), lab(b)])],
        ),
        (Side::Antecedent, Formula::Imp(a, b)) => {
            let mut p1 = replace_at(s.clone(), side, idx, Vec::new());
            p1.consequent.insert(0, lab(a));
            let p2 = replace_at(s.clone(), side, idx, alloc::vec![lab(b)]);
            (RuleId::ImpL, alloc::vec![p1, p2])
        }
        (Side::Consequent, Formula::Imp(a, b)) => {
            let mut p = replace_at(s.clone(), side, idx, alloc::vec![lab(b)]);
            p.antecedent.push(lab(a));
            (RuleId::ImpR, alloc::vec![p])
        }
        (Side::Antecedent, Formula::Neg(a)) => {
            let mut p = replace_at(s.clone(), side, idx, Vec::new());
            p.consequent.push(lab(a));
            (RuleId::NegL, alloc::vec![p])
        }
        (Side::Consequent, Formula::Neg(a)) => {
            let mut p = replace_at(s.clone(), side, idx, Vec::new());
            p.antecedent.push(lab(a));
            (RuleId::NegR, alloc::vec![p])
        }
        _ => return Err(RuleError::WrongShape),
    };
    Ok(out)
}

/// The right conditional rule with an explicit fresh label.
pub fn apply_cond_r_with(
    s: &Sequent,
    principal: &LabelledFormula,
    fresh: Label,
) -> Result<Sequent, RuleError> {
    let (a, b) = cond_parts(principal)?;
    let idx = locate(&s.consequent, &Item::Labelled(principal.clone()))?;
    if s.labels().contains(&fresh) {
        return Err(RuleError::LabelNotFresh);
    }
    let mut p = replace_at(
        s.clone(),
        Side::Consequent,
        idx,
        alloc::vec![Item::labelled(fresh, b.clone())],
    );
    p.antecedent
        .push(Item::transition(principal.label, a.clone(), fresh));
    Ok(p)
}

/// The right conditional rule; the fresh label is chosen as
/// `s.fresh_label()`.
pub fn apply_cond_r(s: &Sequent, principal: &LabelledFormula) -> Result<Sequent, RuleError> {
    apply_cond_r_with(s, principal, s.fresh_label())
}

/// The left conditional rule of the plain calculus. The target label
/// must already occur in the sequent.
pub fn apply_cond_l(
    s: &Sequent,
    principal: &LabelledFormula,
    target: Label,
) -> Result<[Sequent; 2], RuleError> {
    cond_parts(principal)?;
    let idx = locate(&s.antecedent, &Item::Labelled(principal.clone()))?;
    if !s.labels().contains(&target) {
        return Err(RuleError::UnknownTarget);
    }
    Ok(cond_l_premises(s, idx, principal, target))
}

/// The equivalence rule with an explicit fresh label `u`. The two
/// premises compare the transition formulas over the single label `u`;
/// all side formulas are discarded.
pub fn apply_eq_with(
    s: &Sequent,
    left: &Transition,
    right: &Transition,
    u: Label,
) -> Result<[Sequent; 2], RuleError> {
    locate(&s.antecedent, &Item::Transition(left.clone()))?;
    locate(&s.consequent, &Item::Transition(right.clone()))?;
    if left.from != right.from || left.to != right.to {
        return Err(RuleError::WrongShape);
    }
    if s.labels().contains(&u) {
        return Err(RuleError::LabelNotFresh);
    }
    let a = || Item::labelled(u, left.formula.clone());
    let b = || Item::labelled(u, right.formula.clone());
    Ok([
        Sequent::new(alloc::vec![a()], alloc::vec![b()]),
        Sequent::new(alloc::vec![b()], alloc::vec![a()]),
    ])
}

/// The equivalence rule; `u` is chosen as `s.fresh_label()`.
pub fn apply_eq(
    s: &Sequent,
    left: &Transition,
    right: &Transition,
) -> Result<[Sequent; 2], RuleError> {
    apply_eq_with(s, left, right, s.fresh_label())
}

/// The (ID) rule: an antecedent transition `x -[A]-> y` is replaced by
/// `y: A`.
pub fn apply_id(s: &Sequent, principal: &Transition) -> Result<Sequent, RuleError> {
    let idx = locate(&s.antecedent, &Item::Transition(principal.clone()))?;
    Ok(replace_at(
        s.clone(),
        Side::Antecedent,
        idx,
        alloc::vec![Item::labelled(principal.to, principal.formula.clone())],
    ))
}

/// The (MP) rule: a consequent self-transition `x -[A]-> x` is replaced
/// by `x: A`.
pub fn apply_mp(s: &Sequent, principal: &Transition) -> Result<Sequent, RuleError> {
    if principal.from != principal.to {
        return Err(RuleError::WrongShape);
    }
    let idx = locate(&s.consequent, &Item::Transition(principal.clone()))?;
    Ok(replace_at(
        s.clone(),
        Side::Consequent,
        idx,
        alloc::vec![Item::labelled(principal.from, principal.formula.clone())],
    ))
}

/// A node of the bounded calculus: `K | Psi | gamma |- delta`. `K` is
/// the set of conditional formulas already duplicated on this branch;
/// `Psi` holds the pending duplicates, so `Psi` is always a subset of
/// `K`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedSequent {
    pub k: BTreeSet<LabelledFormula>,
    pub psi: BTreeSet<LabelledFormula>,
    pub seq: Sequent,
}

impl BoundedSequent {
    /// Wraps a sequent as the entry point `{} | {} | gamma |- delta`.
    pub fn new(seq: Sequent) -> Self {
        BoundedSequent {
            k: BTreeSet::new(),
            psi: BTreeSet::new(),
            seq,
        }
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = self.seq.labels();
        for lf in self.k.iter().chain(&self.psi) {
            out.insert(lf.label);
        }
        out
    }

    pub fn multiset_eq(&self, other: &BoundedSequent) -> bool {
        self.k == other.k && self.psi == other.psi && self.seq.multiset_eq(&other.seq)
    }

    /// `Psi` is a subset of `K` and both only hold conditional-shaped
    /// formulas.
    pub fn invariants_hold(&self) -> bool {
        self.psi.is_subset(&self.k)
            && self
                .k
                .iter()
                .all(|lf| matches!(lf.formula, Formula::Cond(..)))
    }
}

impl fmt::Display for BoundedSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ; {} ; {}",
            sequent::render_labelled_set(&self.k),
            sequent::render_labelled_set(&self.psi),
            self.seq
        )
    }
}

/// Parses the bounded form `{k} ; {psi} ; gamma |- delta`.
pub fn parse_bounded_sequent(text: &str) -> Result<BoundedSequent, ParseError> {
    let mut cur = Cursor::new(text)?;
    let k = sequent::parse_labelled_set(&mut cur)?;
    cur.expect(Token::Semicolon)?;
    let psi = sequent::parse_labelled_set(&mut cur)?;
    cur.expect(Token::Semicolon)?;
    let seq = sequent::parse_sequent_inner(&mut cur)?;
    cur.expect_eof()?;
    Ok(BoundedSequent { k, psi, seq })
}

/// The first left conditional variant: the principal has not been
/// contracted on this branch yet; both premises record the duplication
/// in `K` and `Psi`.
pub fn apply_cond_l1(
    s: &BoundedSequent,
    principal: &LabelledFormula,
    target: Label,
) -> Result<[BoundedSequent; 2], RuleError> {
    cond_parts(principal)?;
    if s.k.contains(principal) {
        return Err(RuleError::AlreadyContracted);
    }
    let idx = locate(&s.seq.antecedent, &Item::Labelled(principal.clone()))?;
    if !s.labels().contains(&target) {
        return Err(RuleError::UnknownTarget);
    }
    let mut k = s.k.clone();
    k.insert(principal.clone());
    let mut psi = s.psi.clone();
    psi.insert(principal.clone());
    let [p1, p2] = cond_l_premises(&s.seq, idx, principal, target);
    Ok([
        BoundedSequent {
            k: k.clone(),
            psi: psi.clone(),
            seq: p1,
        },
        BoundedSequent { k, psi, seq: p2 },
    ])
}

/// The second left conditional variant: the principal was already
/// contracted (it is in `K`); it is decomposed without further
/// bookkeeping.
pub fn apply_cond_l2(
    s: &BoundedSequent,
    principal: &LabelledFormula,
    target: Label,
) -> Result<[BoundedSequent; 2], RuleError> {
    cond_parts(principal)?;
    if !s.k.contains(principal) {
        return Err(RuleError::NotContracted);
    }
    let idx = locate(&s.seq.antecedent, &Item::Labelled(principal.clone()))?;
    if !s.labels().contains(&target) {
        return Err(RuleError::UnknownTarget);
    }
    let [p1, p2] = cond_l_premises(&s.seq, idx, principal, target);
    Ok([
        BoundedSequent {
            k: s.k.clone(),
            psi: s.psi.clone(),
            seq: p1,
        },
        BoundedSequent {
            k: s.k.clone(),
            psi: s.psi.clone(),
            seq: p2,
        },
    ])
}

/// The third left conditional variant: decomposes a pending duplicate
/// from `Psi`. The principal leaves `Psi` in both premises but stays in
/// `K`, so it can never be re-duplicated on this branch.
pub fn apply_cond_l3(
    s: &BoundedSequent,
    principal: &LabelledFormula,
    target: Label,
) -> Result<[BoundedSequent; 2], RuleError> {
    let (a, b) = cond_parts(principal)?;
    if !s.psi.contains(principal) {
        return Err(RuleError::NotPending);
    }
    if !s.labels().contains(&target) {
        return Err(RuleError::UnknownTarget);
    }
    let mut psi = s.psi.clone();
    psi.remove(principal);
    let mut p1 = s.seq.clone();
    p1.consequent
        .insert(0, Item::transition(principal.label, a.clone(), target));
    let mut p2 = s.seq.clone();
    p2.antecedent.push(Item::labelled(target, b.clone()));
    Ok([
        BoundedSequent {
            k: s.k.clone(),
            psi: psi.clone(),
            seq: p1,
        },
        BoundedSequent {
            k: s.k.clone(),
            psi,
            seq: p2,
        },
    ])
}

/// The equivalence rule on bounded sequents: the premises restart with
/// empty `K` and `Psi`.
pub fn apply_eq_bounded(
    s: &BoundedSequent,
    left: &Transition,
    right: &Transition,
    u: Label,
) -> Result<[BoundedSequent; 2], RuleError> {
    let [p1, p2] = apply_eq_with(&s.seq, left, right, u)?;
    Ok([BoundedSequent::new(p1), BoundedSequent::new(p2)])
}

/// A proof-node conclusion: plain sequents for CK and CK+ID, bounded
/// sequents for the MP systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofSequent {
    Plain(Sequent),
    Bounded(BoundedSequent),
}

impl ProofSequent {
    /// The `gamma |- delta` part, for either form.
    pub fn sequent(&self) -> &Sequent {
        match self {
            ProofSequent::Plain(s) => s,
            ProofSequent::Bounded(b) => &b.seq,
        }
    }

    pub fn as_bounded(&self) -> Option<&BoundedSequent> {
        match self {
            ProofSequent::Bounded(b) => Some(b),
            ProofSequent::Plain(_) => None,
        }
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        match self {
            ProofSequent::Plain(s) => s.labels(),
            ProofSequent::Bounded(b) => b.labels(),
        }
    }
}

impl fmt::Display for ProofSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofSequent::Plain(s) => s.fmt(f),
            ProofSequent::Bounded(b) => b.fmt(f),
        }
    }
}

/// One rule instance of a proof tree: the rule, its conclusion, the
/// principal item it acts on, the labels it introduced or targeted, and
/// the premise subtrees in the order printed in the calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofNode {
    pub rule: RuleId,
    pub conclusion: ProofSequent,
    pub principal: Option<Item>,
    pub used_labels: Vec<Label>,
    pub premises: Vec<ProofNode>,
}

impl ProofNode {
    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofNode::size).sum::<usize>()
    }

    /// Whether any node uses the given rule.
    pub fn uses_rule(&self, rule: RuleId) -> bool {
        self.rule == rule || self.premises.iter().any(|p| p.uses_rule(rule))
    }
}

/// Why a proof was rejected: the premise path from the root to the
/// first failing node, and the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    pub path: Vec<usize>,
    pub reason: String,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("proof rejected at root")?;
        for i in &self.path {
            write!(f, ".{i}")?;
        }
        write!(f, ": {}", self.reason)
    }
}

/// Checks a proof independently of the search that produced it.
pub fn check_proof(proof: &ProofNode, sys: System) -> bool {
    verify_proof(proof, sys).is_ok()
}

/// Like [`check_proof`], but reports the first failing node.
pub fn verify_proof(proof: &ProofNode, sys: System) -> Result<(), CheckError> {
    let mut path = Vec::new();
    verify_node(proof, sys, &mut path)
}

fn fail<T>(path: &[usize], reason: &str) -> Result<T, CheckError> {
    Err(CheckError {
        path: path.to_vec(),
        reason: reason.to_string(),
    })
}

fn fail_fmt<T>(path: &[usize], reason: String) -> Result<T, CheckError> {
    Err(CheckError {
        path: path.to_vec(),
        reason,
    })
}

fn rule_side(rule: RuleId) -> Side {
    match rule {
        RuleId::AndL | RuleId::OrL | RuleId::ImpL | RuleId::NegL => Side::Antecedent,
        _ => Side::Consequent,
    }
}

fn verify_node(node: &ProofNode, sys: System, path: &mut Vec<usize>) -> Result<(), CheckError> {
    // The sequent form is dictated by the system.
    match (&node.conclusion, sys.has_mp()) {
        (ProofSequent::Plain(_), true) => {
            return fail(path, "MP systems require bounded sequents");
        }
        (ProofSequent::Bounded(_), false) => {
            return fail(path, "bounded sequents only occur in MP systems");
        }
        _ => {}
    }
    if let Some(b) = node.conclusion.as_bounded() {
        if !b.invariants_hold() {
            return fail(path, "K/Psi bookkeeping invariant violated");
        }
    }

    let seq = node.conclusion.sequent();
    let bounded = node.conclusion.as_bounded();

    // Premises whose K/Psi must equal the conclusion's (all rules that
    // are lifted pointwise from the plain calculus).
    let check_passthrough =
        |plain: Vec<Sequent>, node: &ProofNode, path: &[usize]| -> Result<(), CheckError> {
            if plain.len() != node.premises.len() {
                return fail(path, "premise count does not match the rule");
            }
            for (expected, got) in plain.iter().zip(&node.premises) {
                match (&got.conclusion, bounded) {
                    (ProofSequent::Plain(g), None) => {
                        if !g.multiset_eq(expected) {
                            return fail(path, "premise does not match re-expansion");
                        }
                    }
                    (ProofSequent::Bounded(g), Some(b)) => {
                        if !g.seq.multiset_eq(expected) || g.k != b.k || g.psi != b.psi {
                            return fail(path, "premise does not match re-expansion");
                        }
                    }
                    _ => return fail(path, "premise sequent form differs from conclusion"),
                }
            }
            Ok(())
        };

    let check_bounded = |expected: [BoundedSequent; 2],
                         node: &ProofNode,
                         path: &[usize]|
     -> Result<(), CheckError> {
        if node.premises.len() != 2 {
            return fail(path, "premise count does not match the rule");
        }
        for (exp, got) in expected.iter().zip(&node.premises) {
            match &got.conclusion {
                ProofSequent::Bounded(g) if g.multiset_eq(exp) => {}
                _ => return fail(path, "premise does not match re-expansion"),
            }
        }
        Ok(())
    };

    let principal_labelled = || -> Result<&LabelledFormula, CheckError> {
        match &node.principal {
            Some(Item::Labelled(lf)) => Ok(lf),
            _ => fail(path, "rule needs a labelled formula as principal"),
        }
    };
    let principal_transition = || -> Result<&Transition, CheckError> {
        match &node.principal {
            Some(Item::Transition(t)) => Ok(t),
            _ => fail(path, "rule needs a transition as principal"),
        }
    };
    let one_label = || -> Result<Label, CheckError> {
        match node.used_labels[..] {
            [l] => Ok(l),
            _ => fail(path, "rule records exactly one label"),
        }
    };

    match node.rule {
        RuleId::Ax | RuleId::AFalsum | RuleId::AVerum => {
            if !node.premises.is_empty() {
                return fail(path, "axiom leaves take no premises");
            }
            let holds = match node.rule {
                RuleId::Ax => seq.antecedent.iter().any(|it| seq.consequent.contains(it)),
                RuleId::AFalsum => seq
                    .antecedent
                    .iter()
                    .any(|it| matches!(it, Item::Labelled(lf) if lf.formula == Formula::Falsum)),
                _ => seq
                    .consequent
                    .iter()
                    .any(|it| matches!(it, Item::Labelled(lf) if lf.formula == Formula::Verum)),
            };
            if !holds {
                return fail_fmt(path, alloc::format!("leaf is not a {} axiom", node.rule));
            }
        }
        RuleId::AndL
        | RuleId::AndR
        | RuleId::OrL
        | RuleId::OrR
        | RuleId::ImpL
        | RuleId::ImpR
        | RuleId::NegL
        | RuleId::NegR => {
            let lf = principal_labelled()?;
            let (rule, premises) = match apply_propositional(seq, lf, rule_side(node.rule)) {
                Ok(r) => r,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            if rule != node.rule {
                return fail(path, "rule does not match the principal's connective");
            }
            check_passthrough(premises, node, path)?;
        }
        RuleId::CondR => {
            let lf = principal_labelled()?;
            let y = one_label()?;
            if node.conclusion.labels().contains(&y) {
                return fail(path, "fresh label occurs in the conclusion");
            }
            let premise = match apply_cond_r_with(seq, lf, y) {
                Ok(p) => p,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            check_passthrough(alloc::vec![premise], node, path)?;
        }
        RuleId::CondL => {
            if sys.has_mp() {
                return fail(path, "COND_L is replaced by its bounded variants in MP systems");
            }
            let lf = principal_labelled()?;
            let target = one_label()?;
            let premises = match apply_cond_l(seq, lf, target) {
                Ok(p) => p,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            check_passthrough(premises.into(), node, path)?;
        }
        RuleId::CondL1 | RuleId::CondL2 | RuleId::CondL3 => {
            if !sys.has_mp() {
                return fail(path, "bounded conditional rules need an MP system");
            }
            let b = bounded.expect("form checked above");
            let lf = principal_labelled()?;
            let target = one_label()?;
            let applied = match node.rule {
                RuleId::CondL1 => apply_cond_l1(b, lf, target),
                RuleId::CondL2 => apply_cond_l2(b, lf, target),
                _ => apply_cond_l3(b, lf, target),
            };
            let premises = match applied {
                Ok(p) => p,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            check_bounded(premises, node, path)?;
        }
        RuleId::Eq => {
            let right = principal_transition()?.clone();
            let u = one_label()?;
            if node.conclusion.labels().contains(&u) {
                return fail(path, "fresh label occurs in the conclusion");
            }
            if node.premises.len() != 2 {
                return fail(path, "premise count does not match the rule");
            }
            // The antecedent transition is recovered from the first
            // premise, which must be exactly `u: A |- u: B`.
            let p1 = node.premises[0].conclusion.sequent();
            let a = match &p1.antecedent[..] {
                [Item::Labelled(lf)] if lf.label == u => lf.formula.clone(),
                _ => return fail(path, "first EQ premise must be u: A |- u: B"),
            };
            let left = Transition::new(right.from, a, right.to);
            let premises = match apply_eq_with(seq, &left, &right, u) {
                Ok(p) => p,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            for (exp, got) in premises.iter().zip(&node.premises) {
                let ok = match (&got.conclusion, bounded) {
                    (ProofSequent::Plain(g), None) => g.multiset_eq(exp),
                    // EQ restarts the bounded bookkeeping.
                    (ProofSequent::Bounded(g), Some(_)) => {
                        g.seq.multiset_eq(exp) && g.k.is_empty() && g.psi.is_empty()
                    }
                    _ => false,
                };
                if !ok {
                    return fail(path, "premise does not match re-expansion");
                }
            }
        }
        RuleId::Id => {
            if !sys.has_id() {
                return fail_fmt(path, alloc::format!("ID rule is not available in {sys}"));
            }
            let t = principal_transition()?;
            let premise = match apply_id(seq, t) {
                Ok(p) => p,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            check_passthrough(alloc::vec![premise], node, path)?;
        }
        RuleId::Mp => {
            if !sys.has_mp() {
                return fail_fmt(path, alloc::format!("MP rule is not available in {sys}"));
            }
            let t = principal_transition()?;
            let premise = match apply_mp(seq, t) {
                Ok(p) => p,
                Err(e) => return fail_fmt(path, e.to_string()),
            };
            check_passthrough(alloc::vec![premise], node, path)?;
        }
    }

    for (i, premise) in node.premises.iter().enumerate() {
        path.push(i);
        verify_node(premise, sys, path)?;
        path.pop();
    }
    Ok(())
}
