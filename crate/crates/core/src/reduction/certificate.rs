//! Replayable records of reduction runs.
//!
//! A step stores the move, the tag of the result that justifies it, and the
//! canonical hashes of the clutter before and after. Replay re-runs every move
//! through the checked operations, so a certificate is only as trusted as the
//! preconditions in [`super::ops`].

use serde::{Deserialize, Serialize};

use super::ops;
use crate::clutter::Clutter;
use crate::error::Result;
use crate::iso::are_isomorphic;
use crate::vertex::VertexSet;

/// One regularity-preserving move, with the vertices it acts on. Vertex labels
/// refer to the clutter the move is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    SimplicialDeletion { edge: VertexSet },
    UniqueCircuitDeletion { edge: VertexSet },
    SharedEdgePairDeletion { edge: VertexSet },
    Flip { edge: VertexSet, opposite: VertexSet },
    /// Contracts a degree-3 vertex; the vertices above it shift down by one.
    VertexContraction { vertex: usize },
    /// Replaces a circuit by a cone over the new vertex `n + 1`.
    VertexExpansion { face: VertexSet },
    /// Deletes an uncovered vertex; the vertices above it shift down by one.
    RedundantVertexDrop { vertex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Justification {
    #[serde(rename = "Thm-simplicial-edge")]
    SimplicialEdge,
    #[serde(rename = "Cor-one-vertex")]
    OneVertex,
    #[serde(rename = "Thm-x5")]
    SharedEdgePair,
    #[serde(rename = "Cor-flip")]
    Flip,
    #[serde(rename = "Thm-karbordi")]
    ConeOverFace,
    #[serde(rename = "Lem-redundant-vertex")]
    RedundantVertex,
}

impl Justification {
    pub fn tag(self) -> &'static str {
        match self {
            Justification::SimplicialEdge => "Thm-simplicial-edge",
            Justification::OneVertex => "Cor-one-vertex",
            Justification::SharedEdgePair => "Thm-x5",
            Justification::Flip => "Cor-flip",
            Justification::ConeOverFace => "Thm-karbordi",
            Justification::RedundantVertex => "Lem-redundant-vertex",
        }
    }
}

impl Move {
    pub fn justification(self) -> Justification {
        match self {
            Move::SimplicialDeletion { .. } => Justification::SimplicialEdge,
            Move::UniqueCircuitDeletion { .. } => Justification::OneVertex,
            Move::SharedEdgePairDeletion { .. } => Justification::SharedEdgePair,
            Move::Flip { .. } => Justification::Flip,
            Move::VertexContraction { .. } | Move::VertexExpansion { .. } => Justification::ConeOverFace,
            Move::RedundantVertexDrop { .. } => Justification::RedundantVertex,
        }
    }

    /// Runs the move through its checked operation.
    pub fn apply(self, c: &Clutter) -> Result<Clutter> {
        match self {
            Move::SimplicialDeletion { edge } => ops::delete_simplicial(c, edge),
            Move::UniqueCircuitDeletion { edge } => ops::delete_unique_circuit(c, edge),
            Move::SharedEdgePairDeletion { edge } => ops::delete_shared_edge_pair(c, edge),
            Move::Flip { edge, opposite } => ops::flip(c, edge, opposite),
            Move::VertexContraction { vertex } => ops::contract_degree3_vertex(c, vertex).map(|r| r.clutter),
            Move::VertexExpansion { face } => ops::expand_vertex(c, face),
            Move::RedundantVertexDrop { vertex } => ops::drop_vertex(c, vertex).map(|r| r.clutter),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub action: Move,
    pub justification: Justification,
    pub before_hash: String,
    pub after_hash: String,
}

impl ReductionStep {
    /// Applies `action` to `before`, recording both hashes.
    pub fn record(before: &Clutter, action: Move) -> Result<(ReductionStep, Clutter)> {
        let after = action.apply(before)?;
        let step = ReductionStep {
            action,
            justification: action.justification(),
            before_hash: before.canonical_hash(),
            after_hash: after.canonical_hash(),
        };
        Ok((step, after))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The terminal clutter is empty or maximal, so `I(C̄)` is linear over every field.
    LinearByReduction,
    /// The terminal clutter is the bipyramid, so `I(C̄)` is not linear.
    NonlinearByBaseCase,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub initial: Clutter,
    pub steps: Vec<ReductionStep>,
    pub terminal: Clutter,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("certificate starts from a different clutter")]
    InitialMismatch,
    #[error("step {index}: {reason}")]
    Step { index: usize, reason: String },
    #[error("terminal clutter does not match the last step")]
    TerminalMismatch,
    #[error("verdict {verdict:?} is not supported by the terminal clutter")]
    UnsupportedVerdict { verdict: Verdict },
}

impl ReplayError {
    /// Index of the failing step, when a step failed.
    pub fn step_index(&self) -> Option<usize> {
        match self {
            ReplayError::Step { index, .. } => Some(*index),
            _ => None,
        }
    }
}

/// Whether the verdict follows from the terminal clutter alone.
fn verdict_supported(verdict: Verdict, terminal: &Clutter) -> bool {
    match verdict {
        Verdict::LinearByReduction => terminal.is_empty() || terminal.is_maximal(),
        Verdict::NonlinearByBaseCase => are_isomorphic(terminal, &crate::fixtures::hexahedron()),
        Verdict::Inconclusive => true,
    }
}

/// Re-checks `cert` against `clutter`: every step's precondition, hash chain,
/// justification tag, the terminal clutter and the verdict.
pub fn replay(cert: &ReductionCertificate, clutter: &Clutter) -> Result<(), ReplayError> {
    if cert.initial != *clutter || cert.initial.canonical_hash() != clutter.canonical_hash() {
        return Err(ReplayError::InitialMismatch);
    }
    let mut current = clutter.clone();
    for (index, step) in cert.steps.iter().enumerate() {
        let fail = |reason: String| ReplayError::Step { index, reason };
        if step.before_hash != current.canonical_hash() {
            return Err(fail("before_hash does not match the current clutter".into()));
        }
        if step.justification != step.action.justification() {
            return Err(fail(format!("{} does not justify this move", step.justification.tag())));
        }
        current = step.action.apply(&current).map_err(|e| fail(e.to_string()))?;
        if step.after_hash != current.canonical_hash() {
            return Err(fail("after_hash does not match the result".into()));
        }
    }
    if current != cert.terminal {
        return Err(ReplayError::TerminalMismatch);
    }
    if !verdict_supported(cert.verdict, &current) {
        return Err(ReplayError::UnsupportedVerdict { verdict: cert.verdict });
    }
    Ok(())
}
