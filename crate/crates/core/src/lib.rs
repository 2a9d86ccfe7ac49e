//! Decision procedures for the conditional logics CK, CK+ID, CK+MP and
//! CK+MP+ID.
//!
//! The crate implements backward proof search in labelled sequent calculi
//! for the four systems. Sequents relate *labelled formulas* `x: A` ("A
//! holds at world x") and *transition formulas* `x -[A]-> y` ("y is among
//! the worlds selected for x and A"). Search in CK and CK+ID is
//! contraction-free; the MP systems run on a bounded-contraction variant
//! of the calculus in which every conditional formula is duplicated at
//! most once per branch, tracked by the auxiliary sets `K` and `Psi`.
//!
//! Successful searches return proof objects that an independent kernel
//! ([`calculus::check_proof`]) can re-validate. The [`semantics`] module
//! gives the selection-function semantics on explicit finite models plus a
//! brute-force countermodel enumerator, usable as an oracle against the
//! prover on small inputs.
//!
//! The crate is `no_std` (it requires `alloc`); IO, the command line
//! front end and the file formats live in the companion `condlog-cli`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod calculus;
pub mod formula;
mod lexer;
pub mod search;
pub mod semantics;
pub mod sequent;

pub use calculus::{check_proof, BoundedSequent, ProofNode, RuleId, System};
pub use formula::Formula;
pub use search::{decide, ProveResult, SearchConfig};
pub use sequent::{Label, LabelledFormula, Sequent, Transition};
