//! Acceptance gate for the prover: ten checks covering axiom-scheme
//! gating, the worked derivations, prover/oracle agreement, the proof
//! kernel, the termination measure, closure properties of validity, the
//! disjunction property, cross-system monotonicity, a performance smoke
//! test and the parser round trip.
//!
//! Every check prints one `PASS` line; run with `--nocapture` to see
//! them. All randomness is seeded, so the corpus is reproducible.

use std::time::{Duration, Instant};

use condlog::calculus::{check_proof, BoundedSequent, ProofNode, ProofSequent, RuleId, System};
use condlog::formula::{Formula, render};
use condlog::search::{decide, prove_bounded, prove_sequent, ProveResult, SearchConfig};
use condlog::semantics::find_countermodel;
use condlog::sequent::{parse_sequent, Sequent};
use condlog_cli::json;

// --- deterministic corpus generation ------------------------------------

/// xorshift64* generator; fixed seeds keep the corpus stable.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed | 1)
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// A random formula with at most `budget` symbols over the given atoms;
/// `with_cond` admits the conditional connective.
fn random_formula(rng: &mut Rng, budget: usize, atoms: &[&str], with_cond: bool) -> Formula {
    assert!(budget >= 1);
    let leaf = |rng: &mut Rng| match rng.below(atoms.len() + 2) {
        0 => Formula::Verum,
        1 => Formula::Falsum,
        i => Formula::atom(atoms[i - 2]),
    };
    if budget == 1 {
        return leaf(rng);
    }
    if budget == 2 {
        return if rng.below(2) == 0 {
            leaf(rng)
        } else {
            Formula::neg(leaf(rng))
        };
    }
    match rng.below(if with_cond { 6 } else { 5 }) {
        0 => leaf(rng),
        1 => Formula::neg(random_formula(rng, budget - 1, atoms, with_cond)),
        k => {
            let left = 1 + rng.below(budget - 2);
            let right = budget - 1 - left;
            let a = random_formula(rng, left, atoms, with_cond);
            let b = random_formula(rng, right, atoms, with_cond);
            match k {
                2 => Formula::and(a, b),
                3 => Formula::or(a, b),
                4 => Formula::imp(a, b),
                _ => Formula::cond(a, b),
            }
        }
    }
}

/// Truth-table evaluation of a purely boolean formula; the test-side
/// oracle for classical tautology checks.
fn eval_classical(f: &Formula, atoms: &[condlog::formula::AtomName], assignment: u32) -> bool {
    match f {
        Formula::Atom(n) => {
            let i = atoms.iter().position(|a| a == n).expect("atom listed");
            assignment >> i & 1 == 1
        }
        Formula::Falsum => false,
        Formula::Verum => true,
        Formula::Neg(a) => !eval_classical(a, atoms, assignment),
        Formula::And(a, b) => {
            eval_classical(a, atoms, assignment) && eval_classical(b, atoms, assignment)
        }
        Formula::Or(a, b) => {
            eval_classical(a, atoms, assignment) || eval_classical(b, atoms, assignment)
        }
        Formula::Imp(a, b) => {
            !eval_classical(a, atoms, assignment) || eval_classical(b, atoms, assignment)
        }
        Formula::Cond(..) => panic!("classical evaluation needs a boolean formula"),
    }
}

fn is_tautology(f: &Formula) -> bool {
    let atoms: Vec<_> = f.atoms().into_iter().collect();
    (0..1u32 << atoms.len()).all(|assignment| eval_classical(f, &atoms, assignment))
}

fn decide_timed(goal: &Formula, sys: System) -> (ProveResult, Duration) {
    let cfg = SearchConfig::for_system(sys);
    let start = Instant::now();
    let result = decide(goal, sys, &cfg);
    (result, start.elapsed())
}

fn proved(goal: &Formula, sys: System) -> bool {
    match decide_timed(goal, sys).0 {
        ProveResult::Proved(_) => true,
        ProveResult::NotProved => false,
        ProveResult::ResourceExceeded(_) => panic!("depth limit hit on {goal}"),
    }
}

fn iff(a: Formula, b: Formula) -> Formula {
    Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
}

// --- criteria ------------------------------------------------------------

/// The conditional schemes characterize their systems on non-degenerate
/// instances. `A => A` and `(A => B) -> (A -> B)` hold in plain CK when
/// `A` (resp. `A -> B`) is a classical tautology, so the generated
/// boolean instances are filtered through a truth-table check.
#[test]
fn criterion_01_axiom_scheme_gating() {
    let mut rng = Rng::new(0xA1);
    let atoms = ["a", "b", "c"];
    let budget = Duration::from_secs(1);

    for _ in 0..20 {
        let a = loop {
            let f = random_formula(&mut rng, 7, &atoms, false);
            if !is_tautology(&f) {
                break f;
            }
        };
        let scheme = Formula::cond(a.clone(), a.clone());
        for (sys, expect) in [
            (System::CkId, true),
            (System::CkMpId, true),
            (System::Ck, false),
            (System::CkMp, false),
        ] {
            let (result, wall) = decide_timed(&scheme, sys);
            assert!(wall < budget, "{scheme} in {sys} took {wall:?}");
            assert_eq!(result.is_proved(), expect, "{scheme} in {sys}");
        }
    }

    for _ in 0..20 {
        let (a, b) = loop {
            let a = random_formula(&mut rng, 3, &atoms, false);
            let b = random_formula(&mut rng, 3, &atoms, false);
            if !is_tautology(&Formula::imp(a.clone(), b.clone())) {
                break (a, b);
            }
        };
        let scheme = Formula::imp(
            Formula::cond(a.clone(), b.clone()),
            Formula::imp(a.clone(), b.clone()),
        );
        for (sys, expect) in [
            (System::CkMp, true),
            (System::CkMpId, true),
            (System::Ck, false),
            (System::CkId, false),
        ] {
            let (result, wall) = decide_timed(&scheme, sys);
            assert!(wall < budget, "{scheme} in {sys} took {wall:?}");
            assert_eq!(result.is_proved(), expect, "{scheme} in {sys}");
        }
    }

    println!("acceptance 01 (axiom-scheme gating): PASS");
}

#[test]
fn criterion_02_worked_sequents() {
    let budget = Duration::from_secs(2);

    let s = parse_sequent("x0: a => (b & c) |- x0: a => b").unwrap();
    let cfg = SearchConfig::for_system(System::Ck);
    let start = Instant::now();
    let result = prove_sequent(&s, System::Ck, &cfg);
    assert!(start.elapsed() < budget);
    assert!(result.is_proved(), "monotone consequent weakening in CK");

    let s = parse_sequent("x0: true => (b & ~(true => b)) |-").unwrap();
    let cfg = SearchConfig::for_system(System::CkMp);
    let start = Instant::now();
    let result = prove_bounded(&BoundedSequent::new(s.clone()), System::CkMp, &cfg);
    assert!(start.elapsed() < budget);
    let proof = result.proof().expect("valid in CK+MP");
    assert!(
        proof.uses_rule(RuleId::CondL3),
        "the proof must duplicate the conditional"
    );

    let diagnostic = SearchConfig {
        enable_cond_l3: false,
        ..cfg
    };
    let start = Instant::now();
    let result = prove_bounded(&BoundedSequent::new(s), System::CkMp, &diagnostic);
    assert!(start.elapsed() < budget);
    assert_eq!(
        result,
        ProveResult::NotProved,
        "underivable without duplicating the conditional"
    );

    println!("acceptance 02 (worked sequents): PASS");
}

fn oracle_corpus() -> Vec<Formula> {
    let mut rng = Rng::new(0xC3);
    (0..200)
        .map(|_| random_formula(&mut rng, 9, &["a", "b"], true))
        .collect()
}

#[test]
fn criterion_03_oracle_cross_check() {
    let sweep = Instant::now();
    let corpus = oracle_corpus();
    let mut proved_count = 0;
    let mut refuted_count = 0;
    for goal in &corpus {
        let root = Sequent::goal(goal.clone());
        let atoms = goal.atoms();
        for sys in System::ALL {
            let (result, _) = decide_timed(goal, sys);
            let counter = find_countermodel(&root, sys, 2, &atoms).unwrap();
            match result {
                ProveResult::Proved(_) => {
                    proved_count += 1;
                    assert!(
                        counter.is_none(),
                        "{goal} proved in {sys} yet refuted by a two-world model"
                    );
                }
                ProveResult::NotProved => {}
                ProveResult::ResourceExceeded(_) => panic!("depth limit hit on {goal}"),
            }
            if counter.is_some() {
                refuted_count += 1;
                assert!(
                    !result.is_proved(),
                    "{goal} has a countermodel in {sys} but was proved"
                );
            }
        }
    }
    let elapsed = sweep.elapsed();
    assert!(elapsed < Duration::from_secs(300), "sweep took {elapsed:?}");
    assert!(proved_count > 0 && refuted_count > 0, "degenerate corpus");

    println!(
        "acceptance 03 (oracle cross-check): PASS — {} cases, {} proved, {} refuted, {:.1}s",
        4 * corpus.len(),
        proved_count,
        refuted_count,
        elapsed.as_secs_f64()
    );
}

/// Proofs produced over the shared corpus, for the kernel and
/// termination criteria.
fn corpus_proofs() -> Vec<(Formula, System, ProofNode)> {
    let mut out = Vec::new();
    for goal in oracle_corpus() {
        for sys in System::ALL {
            let cfg = SearchConfig::for_system(sys);
            if let ProveResult::Proved(Some(proof)) = decide(&goal, sys, &cfg) {
                out.push((goal.clone(), sys, *proof));
            }
        }
    }
    let s = parse_sequent("x0: true => (b & ~(true => b)) |-").unwrap();
    let cfg = SearchConfig::for_system(System::CkMpId);
    if let ProveResult::Proved(Some(proof)) =
        prove_bounded(&BoundedSequent::new(s), System::CkMpId, &cfg)
    {
        out.push((Formula::Verum, System::CkMpId, *proof));
    }
    out
}

#[test]
fn criterion_04_kernel_round_trip() {
    let proofs = corpus_proofs();
    assert!(!proofs.is_empty());
    for (goal, sys, proof) in &proofs {
        assert!(check_proof(proof, *sys), "kernel rejected {goal} in {sys}");
        let text = json::proof_to_string(proof);
        let back = json::proof_from_str(&text)
            .unwrap_or_else(|e| panic!("JSON for {goal} in {sys} did not re-parse: {e}"));
        assert_eq!(&back, proof, "{goal} in {sys} changed across JSON");
        assert!(check_proof(&back, *sys), "re-parsed proof rejected");
    }
    println!(
        "acceptance 04 (kernel round-trip): PASS — {} proofs checked",
        proofs.len()
    );
}

fn branch_depth(p: &ProofNode) -> usize {
    1 + p.premises.iter().map(branch_depth).max().unwrap_or(0)
}

fn assert_strict_decrease(p: &ProofNode) {
    let ProofSequent::Plain(here) = &p.conclusion else {
        panic!("plain proofs only");
    };
    for q in &p.premises {
        let ProofSequent::Plain(there) = &q.conclusion else {
            panic!("plain proofs only");
        };
        assert!(
            there.complexity() < here.complexity(),
            "no decrease from {here} to {there}"
        );
        assert_strict_decrease(q);
    }
}

#[test]
fn criterion_05_termination_measure() {
    let mut checked = 0;
    for (_, sys, proof) in corpus_proofs() {
        if sys.has_mp() {
            continue;
        }
        assert_strict_decrease(&proof);
        let root = proof.conclusion.sequent().complexity();
        assert!(
            branch_depth(&proof) <= root,
            "branch depth exceeds root complexity {root}"
        );
        checked += 1;
    }
    assert!(checked > 0);
    println!(
        "acceptance 05 (termination measure): PASS — {checked} contraction-free proofs"
    );
}

/// Rewrites a formula into a classically equivalent variant: commuted
/// conjunctions and disjunctions, expanded implications, doubled
/// negations. Conditional subformulas are kept verbatim so the
/// equivalence stays provable by plain matching.
fn equivalent_variant(rng: &mut Rng, f: &Formula) -> Formula {
    let g = match f {
        Formula::And(a, b) => {
            let (a, b) = (equivalent_variant(rng, a), equivalent_variant(rng, b));
            if rng.below(2) == 0 {
                Formula::and(b, a)
            } else {
                Formula::and(a, b)
            }
        }
        Formula::Or(a, b) => {
            let (a, b) = (equivalent_variant(rng, a), equivalent_variant(rng, b));
            if rng.below(2) == 0 {
                Formula::or(b, a)
            } else {
                Formula::or(a, b)
            }
        }
        Formula::Imp(a, b) => {
            let (a, b) = (equivalent_variant(rng, a), equivalent_variant(rng, b));
            if rng.below(4) == 0 {
                Formula::or(Formula::neg(a), b)
            } else {
                Formula::imp(a, b)
            }
        }
        Formula::Neg(a) => Formula::neg(equivalent_variant(rng, a)),
        other => other.clone(),
    };
    if rng.below(8) == 0 {
        Formula::neg(Formula::neg(g))
    } else {
        g
    }
}

#[test]
fn criterion_06_closure_properties() {
    let mut rng = Rng::new(0xEA);
    let atoms = ["a", "b", "c"];

    // Antecedents of conditionals can be replaced by provable
    // equivalents.
    for _ in 0..20 {
        let a = random_formula(&mut rng, 7, &atoms, true);
        let mut b = equivalent_variant(&mut rng, &a);
        if b == a {
            b = Formula::neg(Formula::neg(b));
        }
        let c = random_formula(&mut rng, 5, &atoms, true);
        assert!(
            proved(&iff(a.clone(), b.clone()), System::Ck),
            "variant of {a} is not provably equivalent: {b}"
        );
        let conclusion = iff(
            Formula::cond(a.clone(), c.clone()),
            Formula::cond(b.clone(), c.clone()),
        );
        assert!(proved(&conclusion, System::Ck), "{conclusion}");
    }

    // Conjunctions distribute over a shared conditional antecedent.
    for _ in 0..20 {
        let n = 1 + rng.below(3);
        let bs: Vec<Formula> = (0..n)
            .map(|_| random_formula(&mut rng, 4, &atoms, true))
            .collect();
        let picked: Vec<Formula> = {
            let mut chosen: Vec<Formula> = bs
                .iter()
                .filter(|_| rng.below(2) == 0)
                .cloned()
                .collect();
            if chosen.is_empty() {
                chosen.push(bs[rng.below(n)].clone());
            }
            chosen
        };
        let conj = |fs: &[Formula]| {
            fs.iter()
                .skip(1)
                .fold(fs[0].clone(), |acc, f| Formula::and(acc, f.clone()))
        };
        let premise = Formula::imp(conj(&bs), conj(&picked));
        assert!(proved(&premise, System::Ck), "{premise}");

        let a = random_formula(&mut rng, 4, &atoms, true);
        let lift =
            |fs: &[Formula]| conj(&fs.iter().map(|f| Formula::cond(a.clone(), f.clone())).collect::<Vec<_>>());
        let conclusion = Formula::imp(lift(&bs), Formula::cond(a.clone(), conj(&picked)));
        assert!(proved(&conclusion, System::Ck), "{conclusion}");
    }

    println!("acceptance 06 (closure properties): PASS");
}

#[test]
fn criterion_07_disjunction_property() {
    let mut rng = Rng::new(0xD1);
    let atoms = ["a", "b"];
    let mut valid_disjunctions = 0;
    for _ in 0..50 {
        let side = |rng: &mut Rng| {
            Formula::cond(
                random_formula(rng, 5, &atoms, true),
                random_formula(rng, 5, &atoms, true),
            )
        };
        let left = side(&mut rng);
        let right = side(&mut rng);
        let disjunction = Formula::or(left.clone(), right.clone());
        if proved(&disjunction, System::Ck) {
            valid_disjunctions += 1;
            assert!(
                proved(&left, System::Ck) || proved(&right, System::Ck),
                "{disjunction} is CK-valid but neither disjunct is"
            );
        }
    }
    assert!(valid_disjunctions > 0, "no valid disjunction sampled");
    println!(
        "acceptance 07 (disjunction property): PASS — {valid_disjunctions}/50 disjunctions valid"
    );
}

#[test]
fn criterion_08_monotonicity() {
    let mut rng = Rng::new(0xB8);
    let mut ck_valid = 0;
    for _ in 0..100 {
        let goal = random_formula(&mut rng, 9, &["a", "b"], true);
        if proved(&goal, System::Ck) {
            ck_valid += 1;
            for sys in [System::CkId, System::CkMp, System::CkMpId] {
                assert!(proved(&goal, sys), "{goal} proved in CK but not in {sys}");
            }
        }
    }
    assert!(ck_valid > 0, "no CK-valid formula sampled");
    println!("acceptance 08 (monotonicity): PASS — {ck_valid}/100 CK-valid");
}

#[test]
fn criterion_09_performance_smoke() {
    let budget = Duration::from_secs(2);

    // Right-nested conditional towers over a classical core.
    let mut tower = Formula::imp(Formula::atom("a"), Formula::atom("a"));
    for degree in 1..=9 {
        tower = Formula::cond(Formula::atom("a"), tower);
        for sys in System::ALL {
            let (result, wall) = decide_timed(&tower, sys);
            assert!(result.is_proved(), "degree {degree} tower in {sys}");
            assert!(wall < budget, "degree {degree} in {sys} took {wall:?}");
        }
    }

    // Nested monotone weakening: (a => ... (b & c)) -> (a => ... b)
    // forces a left conditional decomposition at every level.
    let mut strong = Formula::and(Formula::atom("b"), Formula::atom("c"));
    let mut weak = Formula::atom("b");
    for degree in 1..=9 {
        strong = Formula::cond(Formula::atom("a"), strong);
        weak = Formula::cond(Formula::atom("a"), weak);
        let goal = Formula::imp(strong.clone(), weak.clone());
        for sys in System::ALL {
            let (result, wall) = decide_timed(&goal, sys);
            assert!(result.is_proved(), "degree {degree} weakening in {sys}");
            assert!(wall < budget, "degree {degree} in {sys} took {wall:?}");
        }
    }

    println!("acceptance 09 (performance smoke): PASS — nesting degree 9 under 2s");
}

#[test]
fn criterion_10_parser_round_trip() {
    let mut rng = Rng::new(0x10);
    for i in 0..1000 {
        let f = random_formula(&mut rng, 30, &["a", "b", "c", "d_0"], true);
        let text = render(&f);
        let back = condlog::formula::parse(&text)
            .unwrap_or_else(|e| panic!("case {i}: {text} failed to re-parse: {e}"));
        assert_eq!(back, f, "case {i}: {text}");
    }
    println!("acceptance 10 (parser round trip): PASS — 1000 formulas");
}
