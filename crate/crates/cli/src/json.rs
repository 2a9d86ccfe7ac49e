//! JSON serialization of proof trees.
//!
//! A node object has the fields `rule`, `sequent` (rendered string),
//! `principal` (rendered string or null), `labels` (label names such as
//! "x0") and `premises`. Bounded sequents render with their bookkeeping
//! sets, `{k} ; {psi} ; gamma |- delta`, so a deserialized proof carries
//! everything the checker needs.

use std::fmt;

use condlog::calculus::{parse_bounded_sequent, ProofNode, ProofSequent, RuleId};
use condlog::sequent::{parse_item, parse_sequent, Label};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProofJson {
    pub rule: String,
    pub sequent: String,
    pub principal: Option<String>,
    pub labels: Vec<String>,
    pub premises: Vec<ProofJson>,
}

#[derive(Debug)]
pub enum JsonError {
    Syntax(serde_json::Error),
    UnknownRule(String),
    BadSequent(String),
    BadPrincipal(String),
    BadLabel(String),
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::Syntax(e) => write!(f, "invalid proof JSON: {e}"),
            JsonError::UnknownRule(r) => write!(f, "unknown rule name {r:?}"),
            JsonError::BadSequent(s) => write!(f, "unparsable sequent {s:?}"),
            JsonError::BadPrincipal(s) => write!(f, "unparsable principal {s:?}"),
            JsonError::BadLabel(s) => write!(f, "unparsable label {s:?}"),
        }
    }
}

impl std::error::Error for JsonError {}

pub fn proof_to_json(proof: &ProofNode) -> ProofJson {
    ProofJson {
        rule: proof.rule.name().to_string(),
        sequent: proof.conclusion.to_string(),
        principal: proof.principal.as_ref().map(|p| p.to_string()),
        labels: proof.used_labels.iter().map(|l| l.to_string()).collect(),
        premises: proof.premises.iter().map(proof_to_json).collect(),
    }
}

pub fn proof_to_string(proof: &ProofNode) -> String {
    serde_json::to_string_pretty(&proof_to_json(proof)).expect("proof JSON is serializable")
}

fn parse_label_name(name: &str) -> Result<Label, JsonError> {
    let bad = || JsonError::BadLabel(name.to_string());
    let digits = name.strip_prefix('x').ok_or_else(bad)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    digits.parse().map(Label).map_err(|_| bad())
}

pub fn proof_from_json_value(node: &ProofJson) -> Result<ProofNode, JsonError> {
    let rule =
        RuleId::from_name(&node.rule).ok_or_else(|| JsonError::UnknownRule(node.rule.clone()))?;
    // A leading brace marks the bounded form.
    let conclusion = if node.sequent.trim_start().starts_with('{') {
        ProofSequent::Bounded(
            parse_bounded_sequent(&node.sequent)
                .map_err(|_| JsonError::BadSequent(node.sequent.clone()))?,
        )
    } else {
        ProofSequent::Plain(
            parse_sequent(&node.sequent)
                .map_err(|_| JsonError::BadSequent(node.sequent.clone()))?,
        )
    };
    let principal = node
        .principal
        .as_ref()
        .map(|p| parse_item(p).map_err(|_| JsonError::BadPrincipal(p.clone())))
        .transpose()?;
    let used_labels = node
        .labels
        .iter()
        .map(|l| parse_label_name(l))
        .collect::<Result<_, _>>()?;
    let premises = node
        .premises
        .iter()
        .map(proof_from_json_value)
        .collect::<Result<_, _>>()?;
    Ok(ProofNode {
        rule,
        conclusion,
        principal,
        used_labels,
        premises,
    })
}

pub fn proof_from_str(text: &str) -> Result<ProofNode, JsonError> {
    let node: ProofJson = serde_json::from_str(text).map_err(JsonError::Syntax)?;
    proof_from_json_value(&node)
}
