//! Regularity-preserving clutter moves, reduction searches and their certificates.

mod certificate;
mod ops;
mod strategy;

pub use certificate::{replay, Justification, Move, ReductionCertificate, ReductionStep, ReplayError, Verdict};
pub use ops::{
    closed_neighborhood, contract_degree3_vertex, delete_shared_edge_pair, delete_simplicial, delete_unique_circuit,
    drop_redundant_vertex, drop_vertex, expand_vertex, flip, is_simplicial, simplicial_edges, simplicial_vertices,
    submaximal_circuits,
};
pub use strategy::{reduce_to_empty, Strategy, DEFAULT_MAX_NODES};
