//! On purely boolean formulas every conditional system coincides with
//! classical logic, so truth tables are an exact oracle: validity holds
//! in all four systems or in none.

use condlog::calculus::System;
use condlog::formula::{AtomName, Formula};
use condlog::search::{decide, ProveResult, SearchConfig};
use proptest::prelude::*;

fn boolean_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => prop_oneof![Just("a"), Just("b"), Just("c")].prop_map(Formula::atom),
        1 => Just(Formula::Verum),
        1 => Just(Formula::Falsum),
    ];
    leaf.prop_recursive(4, 14, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

fn truth(f: &Formula, atoms: &[AtomName], assignment: u32) -> bool {
    match f {
        Formula::Atom(n) => {
            assignment >> atoms.iter().position(|a| a == n).unwrap() & 1 == 1
        }
        Formula::Falsum => false,
        Formula::Verum => true,
        Formula::Neg(a) => !truth(a, atoms, assignment),
        Formula::And(a, b) => truth(a, atoms, assignment) && truth(b, atoms, assignment),
        Formula::Or(a, b) => truth(a, atoms, assignment) || truth(b, atoms, assignment),
        Formula::Imp(a, b) => !truth(a, atoms, assignment) || truth(b, atoms, assignment),
        Formula::Cond(..) => unreachable!("boolean fragment"),
    }
}

fn tautology(f: &Formula) -> bool {
    let atoms: Vec<_> = f.atoms().into_iter().collect();
    (0..1u32 << atoms.len()).all(|v| truth(f, &atoms, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn boolean_fragment_is_exactly_classical(f in boolean_formula()) {
        let expected = tautology(&f);
        for sys in System::ALL {
            let cfg = SearchConfig::for_system(sys);
            match decide(&f, sys, &cfg) {
                ProveResult::Proved(_) => prop_assert!(expected, "{f} proved in {sys}"),
                ProveResult::NotProved => {
                    prop_assert!(!expected, "{f} is a tautology missed in {sys}")
                }
                ProveResult::ResourceExceeded(_) => {
                    prop_assert!(false, "depth limit hit on {f}")
                }
            }
        }
    }
}
