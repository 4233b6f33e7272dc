//! Searching for a sequence of simplicial-edge deletions that empties a clutter.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::certificate::{Move, ReductionCertificate, ReductionStep, Verdict};
use super::ops;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// Default node budget for backtracking searches.
pub const DEFAULT_MAX_NODES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Always delete the lexicographically smallest simplicial edge.
    Greedy,
    /// Depth-first over every simplicial edge, smallest first, visiting at most
    /// `max_nodes` clutters. The first success in that order is reported.
    Backtracking { max_nodes: usize },
}

/// Empty or maximal: both have linear (or zero) complement ideals.
fn is_terminal(c: &Clutter) -> bool {
    c.is_empty() || c.is_maximal()
}

/// Drops uncovered vertices, lowest first, until none is left or the clutter
/// becomes terminal.
fn drop_uncovered(mut c: Clutter, steps: &mut Vec<ReductionStep>) -> Clutter {
    while !is_terminal(&c) && c.n() > c.d() {
        let Some(vertex) = c.ground_set().difference(c.covered_vertices()).min() else { break };
        let (step, next) = ReductionStep::record(&c, Move::RedundantVertexDrop { vertex }).expect("vertex is uncovered");
        steps.push(step);
        c = next;
    }
    c
}

fn deletion_move(c: &Clutter, edge: VertexSet) -> Move {
    if c.circuits_containing(edge).count() == 1 {
        Move::UniqueCircuitDeletion { edge }
    } else {
        Move::SimplicialDeletion { edge }
    }
}

/// Deletes simplicial edges (dropping uncovered vertices along the way) until the
/// clutter is empty or maximal, or no simplicial edge is left.
///
/// `LinearByReduction` is reported only when the terminal clutter is empty or
/// maximal; anything else is `Inconclusive`, since a failed search does not show
/// the ideal is non-linear.
pub fn reduce_to_empty(c: &Clutter, strategy: Strategy) -> Result<ReductionCertificate> {
    if c.d() != 3 {
        return Err(Error::precondition(format!("reduction needs a 3-uniform clutter, got d = {}", c.d())));
    }
    let mut greedy_steps = Vec::new();
    let greedy_end = greedy(c.clone(), &mut greedy_steps);
    if is_terminal(&greedy_end) {
        return Ok(certificate(c, greedy_steps, greedy_end, Verdict::LinearByReduction));
    }
    if let Strategy::Backtracking { max_nodes } = strategy {
        let mut search = Search { budget: max_nodes, failed: HashSet::new() };
        let mut steps = Vec::new();
        if let Some(end) = search.run(c.clone(), &mut steps) {
            return Ok(certificate(c, steps, end, Verdict::LinearByReduction));
        }
    }
    Ok(certificate(c, greedy_steps, greedy_end, Verdict::Inconclusive))
}

fn certificate(c: &Clutter, steps: Vec<ReductionStep>, terminal: Clutter, verdict: Verdict) -> ReductionCertificate {
    ReductionCertificate { initial: c.clone(), steps, terminal, verdict }
}

fn greedy(mut c: Clutter, steps: &mut Vec<ReductionStep>) -> Clutter {
    loop {
        c = drop_uncovered(c, steps);
        if is_terminal(&c) {
            return c;
        }
        let Some(&edge) = ops::simplicial_edges(&c).first() else { return c };
        let (step, next) = ReductionStep::record(&c, deletion_move(&c, edge)).expect("edge is simplicial");
        steps.push(step);
        c = next;
    }
}

struct Search {
    budget: usize,
    /// Clutters already known not to reduce.
    failed: HashSet<Clutter>,
}

impl Search {
    /// Returns the terminal clutter on success, leaving the path in `steps`.
    fn run(&mut self, c: Clutter, steps: &mut Vec<ReductionStep>) -> Option<Clutter> {
        let depth = steps.len();
        let c = drop_uncovered(c, steps);
        if is_terminal(&c) {
            return Some(c);
        }
        if self.budget == 0 || self.failed.contains(&c) {
            steps.truncate(depth);
            return None;
        }
        self.budget -= 1;
        for edge in ops::simplicial_edges(&c) {
            let (step, next) = ReductionStep::record(&c, deletion_move(&c, edge)).expect("edge is simplicial");
            steps.push(step);
            if let Some(end) = self.run(next, steps) {
                return Some(end);
            }
            steps.pop();
        }
        // A clutter cut off by the budget may still reduce; only record full failures.
        if self.budget > 0 {
            self.failed.insert(c);
        }
        steps.truncate(depth);
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::replay;
    use crate::fixtures::{hexahedron, octahedron, reducible_non_chordal};

    #[test]
    fn reducible_fixture_reaches_empty() {
        let c = reducible_non_chordal();
        let cert = reduce_to_empty(&c, Strategy::Greedy).unwrap();
        assert_eq!(cert.verdict, Verdict::LinearByReduction);
        assert!(cert.terminal.is_empty() || cert.terminal.is_maximal());
        assert_eq!(replay(&cert, &c), Ok(()));
    }

    #[test]
    fn bipyramid_is_inconclusive() {
        let cert = reduce_to_empty(&hexahedron(), Strategy::Backtracking { max_nodes: DEFAULT_MAX_NODES }).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert!(cert.steps.is_empty());
        assert_eq!(replay(&cert, &hexahedron()), Ok(()));
        let oct = reduce_to_empty(&octahedron(), Strategy::Greedy).unwrap();
        assert_eq!(oct.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn maximal_and_empty_are_terminal() {
        let full = Clutter::maximal(5, 3).unwrap();
        let cert = reduce_to_empty(&full, Strategy::Greedy).unwrap();
        assert_eq!((cert.verdict, cert.steps.len()), (Verdict::LinearByReduction, 0));
        let empty = Clutter::empty(5, 3).unwrap();
        assert_eq!(reduce_to_empty(&empty, Strategy::Greedy).unwrap().verdict, Verdict::LinearByReduction);
    }

    #[test]
    fn uncovered_vertices_are_dropped() {
        let c = Clutter::new(6, 3, [VertexSet::from([2, 4, 6])]).unwrap();
        let cert = reduce_to_empty(&c, Strategy::Greedy).unwrap();
        assert_eq!(cert.verdict, Verdict::LinearByReduction);
        assert_eq!(cert.terminal, Clutter::maximal(3, 3).unwrap());
        assert_eq!(replay(&cert, &c), Ok(()));
    }

    #[test]
    fn rejects_other_uniformities() {
        assert!(reduce_to_empty(&Clutter::maximal(4, 2).unwrap(), Strategy::Greedy).is_err());
    }
}
