//! Selection-function semantics on explicit finite models, and a
//! brute-force countermodel enumerator.
//!
//! A model is a set of worlds, a total selection function
//! `f: W x 2^W -> 2^W` and an atom valuation. Keying `f` on extensions
//! rather than formulas makes normality automatic: two formulas with the
//! same extension select the same worlds. Worlds are indices and world
//! sets are bitmasks, so models with one or two worlds enumerate
//! quickly.
//!
//! The enumerator is an independent oracle for the prover, in one
//! direction only: a countermodel refutes validity, but exhausting all
//! models of up to two worlds certifies nothing.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::calculus::System;
use crate::formula::{AtomName, Formula};
use crate::sequent::{Item, Label, LabelledFormula, Sequent, Transition};

/// Largest world count the enumerator accepts. With two worlds there are
/// 4^8 selection functions per valuation, which is still fast; three
/// worlds would be 8^24.
pub const MAX_WORLDS: usize = 2;

/// The requested world count is outside `1..=MAX_WORLDS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorldCountError(pub usize);

impl fmt::Display for WorldCountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "world count {} not supported; expected 1..={MAX_WORLDS}",
            self.0
        )
    }
}

fn full_mask(world_count: usize) -> u8 {
    (1u8 << world_count) - 1
}

/// An explicit selection-function model. Worlds are `0..world_count`;
/// sets of worlds are bitmasks over those indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    world_count: usize,
    /// Row-major table: entry `w * 2^n + s` holds `f(w, S)` for the
    /// subset with mask `s`. Total by construction.
    selection: Vec<u8>,
    valuation: BTreeMap<AtomName, u8>,
}

impl FiniteModel {
    /// `selection` must have `world_count * 2^world_count` entries, one
    /// per `(world, subset)` pair, each a subset mask.
    pub fn new(
        world_count: usize,
        selection: Vec<u8>,
        valuation: BTreeMap<AtomName, u8>,
    ) -> Self {
        assert!((1..=MAX_WORLDS).contains(&world_count));
        let full = full_mask(world_count);
        assert_eq!(selection.len(), world_count << world_count);
        assert!(selection.iter().all(|&m| m & !full == 0));
        assert!(valuation.values().all(|&m| m & !full == 0));
        FiniteModel {
            world_count,
            selection,
            valuation,
        }
    }

    pub fn world_count(&self) -> usize {
        self.world_count
    }

    pub fn full_mask(&self) -> u8 {
        full_mask(self.world_count)
    }

    /// `f(w, S)` for the subset with mask `subset`.
    pub fn select(&self, world: usize, subset: u8) -> u8 {
        debug_assert!(world < self.world_count);
        debug_assert_eq!(subset & !self.full_mask(), 0);
        self.selection[(world << self.world_count) | subset as usize]
    }

    pub fn valuation(&self) -> &BTreeMap<AtomName, u8> {
        &self.valuation
    }

    /// The set of worlds where `f` is true, as a mask. Atoms without a
    /// valuation entry have empty extension.
    pub fn extension(&self, f: &Formula) -> u8 {
        let full = self.full_mask();
        match f {
            Formula::Atom(name) => self.valuation.get(name).copied().unwrap_or(0),
            Formula::Falsum => 0,
            Formula::Verum => full,
            Formula::Neg(a) => full & !self.extension(a),
            Formula::And(a, b) => self.extension(a) & self.extension(b),
            Formula::Or(a, b) => self.extension(a) | self.extension(b),
            Formula::Imp(a, b) => (full & !self.extension(a)) | self.extension(b),
            Formula::Cond(a, b) => {
                let ea = self.extension(a);
                let eb = self.extension(b);
                let mut out = 0;
                for w in 0..self.world_count {
                    if self.select(w, ea) & !eb == 0 {
                        out |= 1 << w;
                    }
                }
                out
            }
        }
    }

    /// Truth of `f` at a world.
    pub fn eval(&self, world: usize, f: &Formula) -> bool {
        debug_assert!(world < self.world_count);
        self.extension(f) >> world & 1 == 1
    }
}

/// A total assignment of the labels of a sequent to worlds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMapping(pub BTreeMap<Label, usize>);

impl LabelMapping {
    pub fn world(&self, label: Label) -> usize {
        self.0[&label]
    }
}

/// Truth of one sequent item under a mapping: a labelled formula is
/// evaluated at its world; a transition `x -[A]-> y` holds when the
/// world of `y` is selected for the world of `x` and the extension of
/// `A`.
pub fn satisfies(m: &FiniteModel, i: &LabelMapping, item: &Item) -> bool {
    match item {
        Item::Labelled(LabelledFormula { label, formula }) => m.eval(i.world(*label), formula),
        Item::Transition(Transition { from, formula, to }) => {
            m.select(i.world(*from), m.extension(formula)) >> i.world(*to) & 1 == 1
        }
    }
}

/// Increments little-endian digits in base `base`; false once all
/// combinations are exhausted.
fn increment(digits: &mut [u8], base: u8) -> bool {
    for d in digits {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// The first mapping (in the fixed enumeration order) under which every
/// antecedent item holds and no consequent item does.
pub fn falsifying_mapping(m: &FiniteModel, s: &Sequent) -> Option<LabelMapping> {
    let labels: Vec<Label> = s.labels().into_iter().collect();
    let mut digits = alloc::vec![0u8; labels.len()];
    loop {
        let mapping = LabelMapping(
            labels
                .iter()
                .zip(&digits)
                .map(|(l, d)| (*l, *d as usize))
                .collect(),
        );
        if s.antecedent.iter().all(|it| satisfies(m, &mapping, it))
            && !s.consequent.iter().any(|it| satisfies(m, &mapping, it))
        {
            return Some(mapping);
        }
        if !increment(&mut digits, m.world_count() as u8) {
            return None;
        }
    }
}

/// Sequent validity in one model: under every mapping, if all antecedent
/// items hold then some consequent item holds.
pub fn sequent_valid_in_model(m: &FiniteModel, s: &Sequent) -> bool {
    falsifying_mapping(m, s).is_none()
}

fn id_condition_holds(world_count: usize, selection: &[u8]) -> bool {
    let subsets = 1usize << world_count;
    (0..world_count).all(|w| {
        (0..subsets).all(|s| selection[(w << world_count) | s] & !(s as u8) == 0)
    })
}

fn mp_condition_holds(world_count: usize, selection: &[u8]) -> bool {
    let subsets = 1usize << world_count;
    (0..world_count).all(|w| {
        (0..subsets).all(|s| {
            s >> w & 1 == 0 || selection[(w << world_count) | s] >> w & 1 == 1
        })
    })
}

/// Searches for a model of the system in which the sequent is not valid,
/// together with a witnessing mapping.
///
/// The enumeration order is fixed: world counts ascending, then
/// valuations, then selection functions, each as a little-endian counter
/// (first atom and first `(world, subset)` entry vary fastest), so the
/// reported countermodel is reproducible. Models violating the ID or MP
/// selection-function condition of the system are skipped.
pub fn find_countermodel(
    s: &Sequent,
    sys: System,
    max_worlds: usize,
    atoms: &BTreeSet<AtomName>,
) -> Result<Option<(FiniteModel, LabelMapping)>, WorldCountError> {
    if !(1..=MAX_WORLDS).contains(&max_worlds) {
        return Err(WorldCountError(max_worlds));
    }
    for world_count in 1..=max_worlds {
        let subsets = 1u8 << world_count;
        let mut model = FiniteModel {
            world_count,
            selection: alloc::vec![0; world_count << world_count],
            valuation: atoms.iter().map(|a| (a.clone(), 0)).collect(),
        };
        loop {
            loop {
                let ok = (!sys.has_id()
                    || id_condition_holds(world_count, &model.selection))
                    && (!sys.has_mp() || mp_condition_holds(world_count, &model.selection));
                if ok {
                    if let Some(mapping) = falsifying_mapping(&model, s) {
                        return Ok(Some((model, mapping)));
                    }
                }
                if !increment(&mut model.selection, subsets) {
                    break;
                }
            }
            let mut digits: Vec<u8> = model.valuation.values().copied().collect();
            if !increment(&mut digits, subsets) {
                break;
            }
            for (slot, digit) in model.valuation.values_mut().zip(digits) {
                *slot = digit;
            }
        }
    }
    Ok(None)
}
