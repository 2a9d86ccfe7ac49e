//! Backward proof search: the decision procedures for the four systems.
//!
//! CK and CK+ID use the contraction-free plain calculus; every rule
//! strictly shrinks the complexity measure of the sequent, so the search
//! terminates with branch depth bounded by the complexity of the root.
//! CK+MP and CK+MP+ID use the bounded calculus, whose `K`/`Psi`
//! bookkeeping caps the duplication of each conditional at one per
//! branch.
//!
//! The strategy postpones branching: axioms first, then the invertible
//! single-premise boolean rules, then the branching boolean rules, then
//! the right conditional rule, all applied greedily (they are invertible,
//! so nothing is lost). What remains is genuine choice explored with
//! backtracking, in a fixed deterministic order: the left conditional
//! rule over its candidate targets, then (ID), then (MP) on bounded
//! sequents, then (EQ). Candidate targets for the left conditional rule
//! on `x: A => B` are the labels reachable by an existing antecedent
//! transition out of `x`, plus `x` itself in MP systems; a consequent
//! transition produced with any other target could never be matched, so
//! those instances are never tried.
//!
//! Failure is a verdict: when the depth limit was never hit, `NotProved`
//! means the sequent is underivable, hence invalid in the system.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::calculus::{
    apply_cond_l, apply_cond_l1, apply_cond_l2, apply_cond_l3, apply_cond_r_with, apply_eq_with,
    apply_id, apply_mp, apply_propositional, axiom_check, check_proof, BoundedSequent, ProofNode,
    ProofSequent, RuleId, System,
};
use crate::formula::Formula;
use crate::sequent::{Item, Label, LabelledFormula, Sequent, Side, Transition};

/// Knobs for one search session.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Safety net converting engine bugs or pathological inputs into
    /// [`ProveResult::ResourceExceeded`] instead of divergence; counted
    /// in rule applications per branch. Not part of the decision
    /// procedure.
    pub depth_limit: usize,
    /// Build and return proof objects.
    pub collect_proof: bool,
    /// Allow `x` itself as a target of the left conditional rule.
    /// Required for the MP systems, where the first premise can close
    /// through (MP).
    pub allow_self_target: bool,
    /// Diagnostic switch: disable the third bounded conditional rule,
    /// forbidding the use of duplicated conditionals.
    pub enable_cond_l3: bool,
}

impl SearchConfig {
    pub const DEFAULT_DEPTH_LIMIT: usize = 10_000;

    pub fn for_system(sys: System) -> Self {
        SearchConfig {
            depth_limit: Self::DEFAULT_DEPTH_LIMIT,
            collect_proof: true,
            allow_self_target: sys.has_mp(),
            enable_cond_l3: true,
        }
    }
}

/// Outcome of a proof search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProveResult {
    /// The sequent is derivable; carries the proof when the session
    /// collected one.
    Proved(Option<Box<ProofNode>>),
    /// The sequent is underivable. Definitive whenever the depth limit
    /// was never reached, which the engine guarantees by returning
    /// `ResourceExceeded` otherwise.
    NotProved,
    /// The safety depth limit fired; no verdict.
    ResourceExceeded(usize),
}

impl ProveResult {
    pub fn is_proved(&self) -> bool {
        matches!(self, ProveResult::Proved(_))
    }

    pub fn proof(&self) -> Option<&ProofNode> {
        match self {
            ProveResult::Proved(p) => p.as_deref(),
            _ => None,
        }
    }
}

/// Decides validity of a formula in the given system, searching for a
/// proof of `|- x0: goal`.
pub fn decide(goal: &Formula, sys: System, cfg: &SearchConfig) -> ProveResult {
    let root = Sequent::goal(goal.clone());
    if sys.has_mp() {
        prove_bounded(&BoundedSequent::new(root), sys, cfg)
    } else {
        prove_sequent(&root, sys, cfg)
    }
}

/// Backward search in the plain calculus. `sys` must be CK or CK+ID.
pub fn prove_sequent(s: &Sequent, sys: System, cfg: &SearchConfig) -> ProveResult {
    assert!(!sys.has_mp(), "MP systems are decided by prove_bounded");
    debug_assert!(s.is_regular(), "prove_sequent needs a regular sequent");
    let mut engine = Engine::new(sys, cfg, s.labels().into_iter().next_back());
    let outcome = engine.prove_plain(s, cfg.depth_limit);
    engine.finish(outcome)
}

/// Backward search in the bounded calculus. `sys` must be CK+MP or
/// CK+MP+ID; wrap a plain sequent with [`BoundedSequent::new`].
pub fn prove_bounded(s: &BoundedSequent, sys: System, cfg: &SearchConfig) -> ProveResult {
    assert!(sys.has_mp(), "CK and CK+ID are decided by prove_sequent");
    debug_assert!(s.seq.is_regular(), "prove_bounded needs a regular sequent");
    let mut engine = Engine::new(sys, cfg, s.labels().into_iter().next_back());
    let outcome = engine.prove_bdd(s, cfg.depth_limit);
    engine.finish(outcome)
}

/// Candidate targets for the left conditional rule on `principal`: the
/// labels reachable by an antecedent transition out of the principal's
/// label, in label order, then the label itself when self targets are
/// allowed. Backtracking iterates the list in order.
pub fn cond_l_targets(s: &Sequent, principal: &LabelledFormula, allow_self: bool) -> Vec<Label> {
    let x = principal.label;
    let mut out: Vec<Label> = s
        .antecedent_transitions()
        .filter(|t| t.from == x)
        .map(|t| t.to)
        .collect();
    out.sort_unstable();
    out.dedup();
    if allow_self && !out.contains(&x) {
        out.push(x);
    }
    out
}

enum Outcome {
    Closed(Option<ProofNode>),
    Open,
    OutOfFuel,
}

enum PlainAlt {
    CondL(LabelledFormula, Label),
    Id(Transition),
    Eq(Transition, Transition),
}

enum BoundedAlt {
    CondL1(LabelledFormula, Label),
    CondL2(LabelledFormula, Label),
    CondL3(LabelledFormula, Label),
    Mp(Transition),
    Id(Transition),
    Eq(Transition, Transition),
}

struct Engine<'a> {
    sys: System,
    cfg: &'a SearchConfig,
    next_label: u32,
}

impl<'a> Engine<'a> {
    fn new(sys: System, cfg: &'a SearchConfig, max_label: Option<Label>) -> Self {
        Engine {
            sys,
            cfg,
            next_label: max_label.map_or(0, |l| l.0 + 1),
        }
    }

    fn fresh(&mut self) -> Label {
        let label = Label(self.next_label);
        self.next_label += 1;
        label
    }

    fn finish(&self, outcome: Outcome) -> ProveResult {
        match outcome {
            Outcome::Closed(proof) => {
                debug_assert!(
                    proof.as_ref().is_none_or(|p| check_proof(p, self.sys)),
                    "search emitted a proof the kernel rejects"
                );
                ProveResult::Proved(proof.map(Box::new))
            }
            Outcome::Open => ProveResult::NotProved,
            Outcome::OutOfFuel => ProveResult::ResourceExceeded(self.cfg.depth_limit),
        }
    }

    fn node(
        &self,
        rule: RuleId,
        conclusion: ProofSequent,
        principal: Option<Item>,
        used_labels: Vec<Label>,
        premises: Vec<Option<ProofNode>>,
    ) -> Option<ProofNode> {
        if !self.cfg.collect_proof {
            return None;
        }
        Some(ProofNode {
            rule,
            conclusion,
            principal,
            used_labels,
            premises: premises.into_iter().map(|p| p.expect("collected")).collect(),
        })
    }

    // --- plain calculus (CK, CK+ID) ------------------------------------

    fn prove_plain(&mut self, s: &Sequent, fuel: usize) -> Outcome {
        debug_assert!(s.is_regular(), "irregular sequent reached: {s}");
        if let Some(rule) = axiom_check(s) {
            let leaf = self.node(rule, ProofSequent::Plain(s.clone()), None, Vec::new(), Vec::new());
            return Outcome::Closed(leaf);
        }
        let Some(fuel) = fuel.checked_sub(1) else {
            return Outcome::OutOfFuel;
        };

        if let Some((lf, side)) = invertible_principal(s) {
            let (rule, premises) =
                apply_propositional(s, &lf, side).expect("connective was inspected");
            return self.all_plain(s, rule, Item::Labelled(lf), Vec::new(), premises, fuel);
        }

        if let Some(lf) = consequent_conditional(s) {
            let y = self.fresh();
            let premise = apply_cond_r_with(s, &lf, y).expect("fresh by construction");
            return self.all_plain(
                s,
                RuleId::CondR,
                Item::Labelled(lf),
                alloc::vec![y],
                alloc::vec![premise],
                fuel,
            );
        }

        let mut exhausted = false;
        for alt in self.plain_alternatives(s) {
            let attempt = match alt {
                PlainAlt::CondL(lf, target) => {
                    let premises = apply_cond_l(s, &lf, target).expect("target enumerated");
                    self.all_plain(
                        s,
                        RuleId::CondL,
                        Item::Labelled(lf),
                        alloc::vec![target],
                        premises.into(),
                        fuel,
                    )
                }
                PlainAlt::Id(t) => {
                    let premise = apply_id(s, &t).expect("transition enumerated");
                    self.all_plain(
                        s,
                        RuleId::Id,
                        Item::Transition(t),
                        Vec::new(),
                        alloc::vec![premise],
                        fuel,
                    )
                }
                PlainAlt::Eq(left, right) => {
                    let u = self.fresh();
                    let premises =
                        apply_eq_with(s, &left, &right, u).expect("pair enumerated");
                    self.all_plain(
                        s,
                        RuleId::Eq,
                        Item::Transition(right),
                        alloc::vec![u],
                        premises.into(),
                        fuel,
                    )
                }
            };
            match attempt {
                Outcome::Closed(p) => return Outcome::Closed(p),
                Outcome::OutOfFuel => exhausted = true,
                Outcome::Open => {}
            }
        }
        if exhausted {
            Outcome::OutOfFuel
        } else {
            Outcome::Open
        }
    }

    fn all_plain(
        &mut self,
        conclusion: &Sequent,
        rule: RuleId,
        principal: Item,
        used_labels: Vec<Label>,
        premises: Vec<Sequent>,
        fuel: usize,
    ) -> Outcome {
        let mut subproofs = Vec::with_capacity(premises.len());
        for premise in &premises {
            debug_assert!(
                premise.complexity() < conclusion.complexity(),
                "complexity measure must shrink: {rule} on {conclusion}"
            );
            match self.prove_plain(premise, fuel) {
                Outcome::Closed(p) => subproofs.push(p),
                Outcome::Open => return Outcome::Open,
                Outcome::OutOfFuel => return Outcome::OutOfFuel,
            }
        }
        Outcome::Closed(self.node(
            rule,
            ProofSequent::Plain(conclusion.clone()),
            Some(principal),
            used_labels,
            subproofs,
        ))
    }

    fn plain_alternatives(&self, s: &Sequent) -> Vec<PlainAlt> {
        let mut alts = Vec::new();
        for item in &s.antecedent {
            if let Item::Labelled(lf) = item {
                if matches!(lf.formula, Formula::Cond(..)) {
                    for target in cond_l_targets(s, lf, self.cfg.allow_self_target) {
                        alts.push(PlainAlt::CondL(lf.clone(), target));
                    }
                }
            }
        }
        if self.sys.has_id() {
            for t in s.antecedent_transitions() {
                alts.push(PlainAlt::Id(t.clone()));
            }
        }
        for right in s.consequent_transitions() {
            for left in s.antecedent_transitions() {
                if left.from == right.from && left.to == right.to {
                    alts.push(PlainAlt::Eq(left.clone(), right.clone()));
                }
            }
        }
        alts
    }

    // --- bounded calculus (CK+MP, CK+MP+ID) -----------------------------

    fn prove_bdd(&mut self, s: &BoundedSequent, fuel: usize) -> Outcome {
        debug_assert!(s.invariants_hold(), "K/Psi bookkeeping broken: {s}");
        debug_assert!(s.seq.is_regular(), "irregular sequent reached: {s}");
        if let Some(rule) = axiom_check(&s.seq) {
            let leaf =
                self.node(rule, ProofSequent::Bounded(s.clone()), None, Vec::new(), Vec::new());
            return Outcome::Closed(leaf);
        }
        let Some(fuel) = fuel.checked_sub(1) else {
            return Outcome::OutOfFuel;
        };

        let lift = |premises: Vec<Sequent>| -> Vec<BoundedSequent> {
            premises
                .into_iter()
                .map(|seq| BoundedSequent {
                    k: s.k.clone(),
                    psi: s.psi.clone(),
                    seq,
                })
                .collect()
        };

        if let Some((lf, side)) = invertible_principal(&s.seq) {
            let (rule, premises) =
                apply_propositional(&s.seq, &lf, side).expect("connective was inspected");
            return self.all_bdd(s, rule, Item::Labelled(lf), Vec::new(), lift(premises), fuel);
        }

        if let Some(lf) = consequent_conditional(&s.seq) {
            let y = self.fresh();
            let premise = apply_cond_r_with(&s.seq, &lf, y).expect("fresh by construction");
            return self.all_bdd(
                s,
                RuleId::CondR,
                Item::Labelled(lf),
                alloc::vec![y],
                lift(alloc::vec![premise]),
                fuel,
            );
        }

        let mut exhausted = false;
        for alt in self.bounded_alternatives(s) {
            let attempt = match alt {
                BoundedAlt::CondL1(lf, target) => {
                    let premises = apply_cond_l1(s, &lf, target).expect("enumerated");
                    self.all_bdd(
                        s,
                        RuleId::CondL1,
                        Item::Labelled(lf),
                        alloc::vec![target],
                        premises.into(),
                        fuel,
                    )
                }
                BoundedAlt::CondL2(lf, target) => {
                    let premises = apply_cond_l2(s, &lf, target).expect("enumerated");
                    self.all_bdd(
                        s,
                        RuleId::CondL2,
                        Item::Labelled(lf),
                        alloc::vec![target],
                        premises.into(),
                        fuel,
                    )
                }
                BoundedAlt::CondL3(lf, target) => {
                    let premises = apply_cond_l3(s, &lf, target).expect("enumerated");
                    self.all_bdd(
                        s,
                        RuleId::CondL3,
                        Item::Labelled(lf),
                        alloc::vec![target],
                        premises.into(),
                        fuel,
                    )
                }
                BoundedAlt::Mp(t) => {
                    let premise = apply_mp(&s.seq, &t).expect("enumerated");
                    self.all_bdd(
                        s,
                        RuleId::Mp,
                        Item::Transition(t),
                        Vec::new(),
                        lift(alloc::vec![premise]),
                        fuel,
                    )
                }
                BoundedAlt::Id(t) => {
                    let premise = apply_id(&s.seq, &t).expect("enumerated");
                    self.all_bdd(
                        s,
                        RuleId::Id,
                        Item::Transition(t),
                        Vec::new(),
                        lift(alloc::vec![premise]),
                        fuel,
                    )
                }
                BoundedAlt::Eq(left, right) => {
                    let u = self.fresh();
                    let premises =
                        apply_eq_with(&s.seq, &left, &right, u).expect("pair enumerated");
                    // EQ restarts the branch bookkeeping.
                    let premises = premises.into_iter().map(BoundedSequent::new).collect();
                    self.all_bdd(
                        s,
                        RuleId::Eq,
                        Item::Transition(right),
                        alloc::vec![u],
                        premises,
                        fuel,
                    )
                }
            };
            match attempt {
                Outcome::Closed(p) => return Outcome::Closed(p),
                Outcome::OutOfFuel => exhausted = true,
                Outcome::Open => {}
            }
        }
        if exhausted {
            Outcome::OutOfFuel
        } else {
            Outcome::Open
        }
    }

    fn all_bdd(
        &mut self,
        conclusion: &BoundedSequent,
        rule: RuleId,
        principal: Item,
        used_labels: Vec<Label>,
        premises: Vec<BoundedSequent>,
        fuel: usize,
    ) -> Outcome {
        let mut subproofs = Vec::with_capacity(premises.len());
        for premise in &premises {
            debug_assert!(
                rule == RuleId::Eq || premise.k.is_superset(&conclusion.k),
                "K must grow monotonically along a branch"
            );
            match self.prove_bdd(premise, fuel) {
                Outcome::Closed(p) => subproofs.push(p),
                Outcome::Open => return Outcome::Open,
                Outcome::OutOfFuel => return Outcome::OutOfFuel,
            }
        }
        Outcome::Closed(self.node(
            rule,
            ProofSequent::Bounded(conclusion.clone()),
            Some(principal),
            used_labels,
            subproofs,
        ))
    }

    fn bounded_alternatives(&self, s: &BoundedSequent) -> Vec<BoundedAlt> {
        let mut alts = Vec::new();
        for item in &s.seq.antecedent {
            if let Item::Labelled(lf) = item {
                if matches!(lf.formula, Formula::Cond(..)) {
                    for target in cond_l_targets(&s.seq, lf, self.cfg.allow_self_target) {
                        if s.k.contains(lf) {
                            alts.push(BoundedAlt::CondL2(lf.clone(), target));
                        } else {
                            alts.push(BoundedAlt::CondL1(lf.clone(), target));
                        }
                    }
                }
            }
        }
        if self.cfg.enable_cond_l3 {
            for lf in &s.psi {
                for target in cond_l_targets(&s.seq, lf, self.cfg.allow_self_target) {
                    alts.push(BoundedAlt::CondL3(lf.clone(), target));
                }
            }
        }
        for t in s.seq.consequent_transitions() {
            if t.from == t.to {
                alts.push(BoundedAlt::Mp(t.clone()));
            }
        }
        if self.sys.has_id() {
            for t in s.seq.antecedent_transitions() {
                alts.push(BoundedAlt::Id(t.clone()));
            }
        }
        for right in s.seq.consequent_transitions() {
            for left in s.seq.antecedent_transitions() {
                if left.from == right.from && left.to == right.to {
                    alts.push(BoundedAlt::Eq(left.clone(), right.clone()));
                }
            }
        }
        alts
    }
}

/// First principal of a single-premise invertible boolean rule, scanning
/// the antecedent then the consequent in formula order.
fn invertible_principal(s: &Sequent) -> Option<(LabelledFormula, Side)> {
    for item in &s.antecedent {
        if let Item::Labelled(lf) = item {
            if matches!(lf.formula, Formula::And(..) | Formula::Neg(..)) {
                return Some((lf.clone(), Side::Antecedent));
            }
        }
    }
    for item in &s.consequent {
        if let Item::Labelled(lf) = item {
            if matches!(lf.formula, Formula::Or(..) | Formula::Neg(..) | Formula::Imp(..)) {
                return Some((lf.clone(), Side::Consequent));
            }
        }
    }
    // Branching boolean rules are postponed behind the single-premise
    // ones; they are still invertible, so they stay committed.
    for item in &s.antecedent {
        if let Item::Labelled(lf) = item {
            if matches!(lf.formula, Formula::Or(..) | Formula::Imp(..)) {
                return Some((lf.clone(), Side::Antecedent));
            }
        }
    }
    for item in &s.consequent {
        if let Item::Labelled(lf) = item {
            if matches!(lf.formula, Formula::And(..)) {
                return Some((lf.clone(), Side::Consequent));
            }
        }
    }
    None
}

fn consequent_conditional(s: &Sequent) -> Option<LabelledFormula> {
    s.consequent.iter().find_map(|item| match item {
        Item::Labelled(lf) if matches!(lf.formula, Formula::Cond(..)) => Some(lf.clone()),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse as pf;
    use crate::sequent::parse_sequent;

    fn run(goal: &str, sys: System) -> ProveResult {
        decide(&pf(goal).unwrap(), sys, &SearchConfig::for_system(sys))
    }

    fn proved(goal: &str, sys: System) -> bool {
        match run(goal, sys) {
            ProveResult::Proved(_) => true,
            ProveResult::NotProved => false,
            ProveResult::ResourceExceeded(_) => panic!("depth limit hit on {goal}"),
        }
    }

    #[test]
    fn id_axiom_gating() {
        assert!(proved("a => a", System::CkId));
        assert!(proved("a => a", System::CkMpId));
        assert!(!proved("a => a", System::Ck));
        assert!(!proved("a => a", System::CkMp));
    }

    #[test]
    fn mp_axiom_gating() {
        assert!(proved("(a => b) -> a -> b", System::CkMp));
        assert!(proved("(a => b) -> a -> b", System::CkMpId));
        assert!(!proved("(a => b) -> a -> b", System::Ck));
        assert!(!proved("(a => b) -> a -> b", System::CkId));
    }

    #[test]
    fn id_axiom_proof_shape() {
        let result = run("a => a", System::CkId);
        let proof = result.proof().unwrap();
        assert_eq!(proof.rule, RuleId::CondR);
        assert_eq!(proof.premises[0].rule, RuleId::Id);
        assert_eq!(proof.premises[0].premises[0].rule, RuleId::Ax);
    }

    #[test]
    fn classical_tautologies_hold_everywhere() {
        for sys in System::ALL {
            assert!(proved("a -> a", sys));
            assert!(proved("a | ~a", sys));
            assert!(proved("(a -> b) -> (~b -> ~a)", sys));
            assert!(!proved("a -> b", sys));
            assert!(!proved("false", sys));
            assert!(proved("false -> a", sys));
        }
    }

    #[test]
    fn worked_sequent_in_ck() {
        let cfg = SearchConfig::for_system(System::Ck);
        let s = parse_sequent("x0: a => (b & c) |- x0: a => b").unwrap();
        assert!(prove_sequent(&s, System::Ck, &cfg).is_proved());

        // The failing variant: no conditional on the left to decompose.
        let s = parse_sequent("x0: b & c |- x0: a => b").unwrap();
        assert_eq!(prove_sequent(&s, System::Ck, &cfg), ProveResult::NotProved);
    }

    #[test]
    fn eq_candidates_fail_on_distinct_atoms() {
        let cfg = SearchConfig::for_system(System::Ck);
        let s = parse_sequent("x0 -[b]-> x1, x0: b => c |- x0 -[a]-> x1").unwrap();
        assert_eq!(prove_sequent(&s, System::Ck, &cfg), ProveResult::NotProved);
    }

    #[test]
    fn rcea_instance_uses_eq() {
        // a & b and b & a are interchangeable as conditional antecedents.
        assert!(proved("((a & b) => c) -> ((b & a) => c)", System::Ck));
        assert!(!proved("(a => c) -> (b => c)", System::Ck));
    }

    #[test]
    fn id_needs_backtrackable_transitions() {
        // The transition is needed twice conceptually: once to close the
        // first premise of the left conditional rule, once for (ID); a
        // greedy (ID) rewrite would lose this sequent.
        let cfg = SearchConfig::for_system(System::CkId);
        let s = parse_sequent("x0 -[a]-> x1, x0: a => b |- x1: b").unwrap();
        assert!(prove_sequent(&s, System::CkId, &cfg).is_proved());
    }

    #[test]
    fn contraction_demands_cond_l3() {
        let cfg = SearchConfig::for_system(System::CkMp);
        let s = parse_sequent("x0: true => (b & ~(true => b)) |-").unwrap();
        let result = prove_bounded(&BoundedSequent::new(s.clone()), System::CkMp, &cfg);
        let proof = result.proof().expect("valid in CK+MP");
        assert!(proof.uses_rule(RuleId::CondL3));

        let diagnostic = SearchConfig {
            enable_cond_l3: false,
            ..cfg
        };
        assert_eq!(
            prove_bounded(&BoundedSequent::new(s), System::CkMp, &diagnostic),
            ProveResult::NotProved
        );
    }

    #[test]
    fn mp_closure_on_self_transition() {
        let cfg = SearchConfig::for_system(System::CkMp);
        let s = parse_sequent("|- x0: (a => b) -> a -> b").unwrap();
        let result = prove_bounded(&BoundedSequent::new(s), System::CkMp, &cfg);
        let proof = result.proof().unwrap();
        assert!(proof.uses_rule(RuleId::Mp));
    }

    #[test]
    fn cond_l_target_enumeration() {
        let s = parse_sequent("x0: a => b, x0 -[c]-> x1, x0 -[d]-> x2 |-").unwrap();
        let principal = LabelledFormula::new(Label(0), pf("a => b").unwrap());
        assert_eq!(cond_l_targets(&s, &principal, false), [Label(1), Label(2)]);
        assert_eq!(
            cond_l_targets(&s, &principal, true),
            [Label(1), Label(2), Label(0)]
        );

        let s = parse_sequent("x0: a => b |-").unwrap();
        assert_eq!(cond_l_targets(&s, &principal, false), []);
        assert_eq!(cond_l_targets(&s, &principal, true), [Label(0)]);
    }

    #[test]
    fn proofs_pass_the_kernel() {
        for (goal, sys) in [
            ("a => a", System::CkId),
            ("(a => b) -> a -> b", System::CkMp),
            ("(a => (b & c)) -> (a => b)", System::Ck),
            ("((a & b) => c) -> ((b & a) => c)", System::CkMpId),
        ] {
            let result = run(goal, sys);
            let proof = result.proof().unwrap_or_else(|| panic!("{goal} in {sys}"));
            assert!(check_proof(proof, sys), "kernel rejected proof of {goal}");
        }
    }

    #[test]
    fn depth_limit_reports_resource_exhaustion() {
        let cfg = SearchConfig {
            depth_limit: 2,
            ..SearchConfig::for_system(System::Ck)
        };
        let goal = pf("((a & b) => c) -> ((b & a) => c)").unwrap();
        assert_eq!(
            decide(&goal, System::Ck, &cfg),
            ProveResult::ResourceExceeded(2)
        );
    }
}
