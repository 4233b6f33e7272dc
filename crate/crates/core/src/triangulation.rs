//! Triangulated 2-spheres as 3-uniform clutters.
//!
//! A clutter triangulates the sphere when every edge lies in exactly two
//! circuits, every vertex link is a single cycle, the edge graph is connected
//! and `V - E + F = 2`. The complement ideal of such a clutter is never linear;
//! [`reduce_sphere_triangulation`] exhibits this by flipping and contracting down
//! to the five-vertex bipyramid, whose complement ideal has regularity 4.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{has_linear_resolution, DEFAULT_HOCHSTER_BOUND};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::fixtures;
use crate::homology::is_cohen_macaulay;
use crate::iso::find_isomorphism;
use crate::reduction::{
    expand_vertex, reduce_to_empty, submaximal_circuits, Move, ReductionCertificate, ReductionStep, Strategy,
    Verdict, DEFAULT_MAX_NODES,
};
use crate::vertex::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationReport {
    pub is_uniform_3: bool,
    pub every_edge_in_two_circuits: bool,
    pub vertex_links_are_single_cycles: bool,
    pub connected: bool,
    pub euler_characteristic: i64,
    pub verdict: bool,
}

/// Edges `{a,b}` with `{v,a,b}` a circuit.
fn link_edges(c: &Clutter, v: usize) -> Vec<VertexSet> {
    c.circuits_containing(VertexSet::singleton(v)).map(|f| f.without(v)).collect()
}

fn is_single_cycle(edges: &[VertexSet]) -> bool {
    let vertices = edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
    if edges.len() < 3 || vertices.iter().any(|u| edges.iter().filter(|e| e.contains(u)).count() != 2) {
        return false;
    }
    // 2-regular, so a single cycle iff connected
    let start = vertices.min().expect("nonempty");
    let mut seen = VertexSet::singleton(start);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for e in edges.iter().filter(|e| e.contains(u)) {
            let w = e.without(u).min().expect("edge has two ends");
            if !seen.contains(w) {
                seen = seen.with(w);
                queue.push_back(w);
            }
        }
    }
    seen == vertices
}

fn is_connected(n: usize, edges: &[VertexSet]) -> bool {
    let mut seen = VertexSet::singleton(1);
    let mut queue = VecDeque::from([1]);
    while let Some(u) = queue.pop_front() {
        for e in edges.iter().filter(|e| e.contains(u)) {
            let w = e.without(u).min().expect("edge has two ends");
            if !seen.contains(w) {
                seen = seen.with(w);
                queue.push_back(w);
            }
        }
    }
    seen == VertexSet::full(n)
}

pub fn verify_sphere_triangulation(c: &Clutter) -> TriangulationReport {
    if c.d() != 3 {
        return TriangulationReport {
            is_uniform_3: false,
            every_edge_in_two_circuits: false,
            vertex_links_are_single_cycles: false,
            connected: false,
            euler_characteristic: 0,
            verdict: false,
        };
    }
    let edges: Vec<VertexSet> = submaximal_circuits(c).into_iter().collect();
    let every_edge_in_two_circuits = edges.iter().all(|e| c.circuits_containing(*e).count() == 2);
    let vertex_links_are_single_cycles = (1..=c.n()).all(|v| is_single_cycle(&link_edges(c, v)));
    let connected = is_connected(c.n(), &edges);
    let euler_characteristic = c.n() as i64 - edges.len() as i64 + c.len() as i64;
    let verdict = every_edge_in_two_circuits && vertex_links_are_single_cycles && connected && euler_characteristic == 2;
    TriangulationReport {
        is_uniform_3: true,
        every_edge_in_two_circuits,
        vertex_links_are_single_cycles,
        connected,
        euler_characteristic,
        verdict,
    }
}

fn require_sphere(c: &Clutter) -> Result<()> {
    let report = verify_sphere_triangulation(c);
    if report.verdict {
        return Ok(());
    }
    let failed = [
        (report.is_uniform_3, "not 3-uniform"),
        (report.every_edge_in_two_circuits, "an edge does not lie in exactly two circuits"),
        (report.vertex_links_are_single_cycles, "a vertex link is not a single cycle"),
        (report.connected, "the edge graph is disconnected"),
    ];
    let reason = failed
        .iter()
        .find(|(ok, _)| !ok)
        .map_or_else(|| format!("Euler characteristic {}", report.euler_characteristic), |(_, why)| why.to_string());
    Err(Error::NotATriangulation(reason))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SphereFamily {
    Bipyramid,
    Octahedron,
    Icosahedron,
    /// The bipyramid with `n - 5` vertices stacked on random faces.
    Stacked { n: usize, seed: u64 },
    /// A stacked sphere scrambled by random flips.
    RandomSphere { n: usize, seed: u64 },
}

pub fn generate(family: SphereFamily) -> Result<Clutter> {
    match family {
        SphereFamily::Bipyramid => Ok(fixtures::hexahedron()),
        SphereFamily::Octahedron => Ok(fixtures::octahedron()),
        SphereFamily::Icosahedron => Ok(fixtures::icosahedron()),
        SphereFamily::Stacked { n, seed } => stacked(n, &mut ChaCha8Rng::seed_from_u64(seed)),
        SphereFamily::RandomSphere { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut c = stacked(n, &mut rng)?;
            for _ in 0..4 * n {
                let flippable = flippable_edges(&c);
                let Some(&(edge, opposite)) = flippable.choose(&mut rng) else { break };
                c = Move::Flip { edge, opposite }.apply(&c)?;
            }
            Ok(c)
        }
    }
}

fn stacked(n: usize, rng: &mut impl Rng) -> Result<Clutter> {
    if !(5..=crate::vertex::MAX_VERTICES).contains(&n) {
        return Err(Error::InvalidParams(format!("sphere families need 5 <= n <= 64, got {n}")));
    }
    let mut c = fixtures::hexahedron();
    while c.n() < n {
        let face = c.circuits().nth(rng.gen_range(0..c.len())).expect("index in range");
        // In a sphere with at least five vertices no face is capped by a tetrahedron.
        c = expand_vertex(&c, face)?;
    }
    Ok(c)
}

/// The two apexes over `edge`, when it lies in exactly two circuits.
fn flanks(c: &Clutter, edge: VertexSet) -> Option<VertexSet> {
    let mut through = c.circuits_containing(edge);
    let (Some(a), Some(b), None) = (through.next(), through.next(), through.next()) else { return None };
    Some(a.union(b).difference(edge))
}

/// Edges whose flanking vertices are non-adjacent, with those flanks.
fn flippable_edges(c: &Clutter) -> Vec<(VertexSet, VertexSet)> {
    submaximal_circuits(c)
        .into_iter()
        .filter_map(|e| flanks(c, e).map(|f| (e, f)))
        .filter(|(_, f)| c.circuits_containing(*f).next().is_none())
        .collect()
}

/// A flip-and-contract reduction to the bipyramid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonlinearityCertificate {
    pub reduction: ReductionCertificate,
    /// The terminal five-vertex clutter.
    pub base_case: Clutter,
    /// `base_case.relabel(&isomorphism)` is the bipyramid fixture.
    pub isomorphism: Vec<usize>,
}

pub fn reduce_sphere_triangulation(c: &Clutter) -> Result<NonlinearityCertificate> {
    reduce_sphere_triangulation_with(c, DEFAULT_MAX_NODES)
}

/// Contracts a degree-3 vertex when there is one; otherwise flips an edge at a
/// minimum-degree vertex to lower its degree. Edge choices are backtracked,
/// visiting at most `max_nodes` triangulations.
pub fn reduce_sphere_triangulation_with(c: &Clutter, max_nodes: usize) -> Result<NonlinearityCertificate> {
    require_sphere(c)?;
    if c.n() < 5 {
        return Err(Error::precondition("the tetrahedron has no bipyramid to reduce to"));
    }
    let mut search = SphereSearch { budget: max_nodes, visited: 0 };
    let mut steps = Vec::new();
    let base_case = search.run(c.clone(), &mut steps).ok_or(Error::SearchExhausted { nodes: search.visited })?;
    let isomorphism =
        find_isomorphism(&base_case, &fixtures::hexahedron()).expect("five-vertex sphere is the bipyramid");
    let reduction = ReductionCertificate {
        initial: c.clone(),
        steps,
        terminal: base_case.clone(),
        verdict: Verdict::NonlinearByBaseCase,
    };
    Ok(NonlinearityCertificate { reduction, base_case, isomorphism })
}

struct SphereSearch {
    budget: usize,
    visited: usize,
}

impl SphereSearch {
    fn run(&mut self, c: Clutter, steps: &mut Vec<ReductionStep>) -> Option<Clutter> {
        debug_assert!(verify_sphere_triangulation(&c).verdict, "lost the sphere at {c}");
        if c.n() == 5 {
            return Some(c);
        }
        if self.visited == self.budget {
            return None;
        }
        self.visited += 1;
        if let Some(vertex) = (1..=c.n()).find(|&v| c.degree(v) == 3) {
            // Contraction is always admissible once n >= 6, so there is nothing to branch on.
            let (step, next) = ReductionStep::record(&c, Move::VertexContraction { vertex }).ok()?;
            steps.push(step);
            let end = self.run(next, steps);
            if end.is_none() {
                steps.pop();
            }
            return end;
        }
        let u = (1..=c.n()).min_by_key(|&v| c.degree(v)).expect("nonempty ground set");
        let neighbours = c.circuits_containing(VertexSet::singleton(u)).fold(VertexSet::EMPTY, VertexSet::union);
        for w in neighbours.without(u) {
            let edge = VertexSet::from([u, w]);
            let Some(opposite) = flanks(&c, edge) else { continue };
            let Ok((step, next)) = ReductionStep::record(&c, Move::Flip { edge, opposite }) else { continue };
            steps.push(step);
            if let Some(end) = self.run(next, steps) {
                return Some(end);
            }
            steps.pop();
        }
        None
    }
}

/// Outcome for the subclutter with one circuit removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubclutterCheck {
    pub removed: VertexSet,
    pub reduction: Verdict,
    /// Linearity of the complement ideal per field, from the Hochster table.
    pub linear: Vec<(FieldSpec, bool)>,
}

impl SubclutterCheck {
    pub fn passes(&self) -> bool {
        self.reduction == Verdict::LinearByReduction && self.linear.iter().all(|(_, ok)| *ok)
    }
}

/// For every circuit `F`, reduces `C ∖ {F}` to empty and checks linearity of its
/// complement ideal over each field.
pub fn proper_subclutter_checks(c: &Clutter, fields: &[FieldSpec]) -> Result<Vec<SubclutterCheck>> {
    require_sphere(c)?;
    if c.n() > DEFAULT_HOCHSTER_BOUND {
        return Err(Error::BoundExceeded { n: c.n(), bound: DEFAULT_HOCHSTER_BOUND });
    }
    let circuits: Vec<VertexSet> = c.circuits().collect();
    circuits
        .par_iter()
        .map(|&removed| {
            let sub = Clutter::new(c.n(), 3, c.circuits().filter(|f| *f != removed))?;
            let reduction = reduce_to_empty(&sub, Strategy::Backtracking { max_nodes: DEFAULT_MAX_NODES })?.verdict;
            let ideal = sub.complement_ideal();
            let linear = fields
                .iter()
                .map(|&field| has_linear_resolution(&ideal, 3, field).map(|ok| (field, ok)))
                .collect::<Result<_>>()?;
            Ok(SubclutterCheck { removed, reduction, linear })
        })
        .collect()
}

/// Every proper subclutter obtained by removing one circuit reduces to empty and
/// has a linear complement ideal over `GF(2)` and `Q`.
pub fn check_proper_subclutters_linear(c: &Clutter) -> Result<bool> {
    let checks = proper_subclutter_checks(c, &[FieldSpec::GF2, FieldSpec::Rationals])?;
    Ok(checks.iter().all(SubclutterCheck::passes))
}

/// The Alexander dual complex `Δ^∨` of a sphere's complement ideal and how far it is
/// from Cohen-Macaulay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualAlmostCm {
    pub pure: bool,
    pub dimension: Option<isize>,
    pub cohen_macaulay: bool,
    /// Missing `(n-3)`-subsets tried as extra facets.
    pub augmentations: usize,
    pub augmentations_cohen_macaulay: usize,
}

impl DualAlmostCm {
    pub fn holds(&self, n: usize) -> bool {
        self.pure
            && self.dimension == Some(n as isize - 4)
            && !self.cohen_macaulay
            && self.augmentations_cohen_macaulay == self.augmentations
    }
}

/// Builds `Δ^∨`, the Stanley-Reisner complex of the dual of `I(C̄)`, and tests
/// it and each augmentation by one missing `(n-3)`-subset with Reisner's criterion.
pub fn dual_almost_cm_check(c: &Clutter, field: FieldSpec) -> Result<DualAlmostCm> {
    require_sphere(c)?;
    if c.n() > DEFAULT_HOCHSTER_BOUND {
        return Err(Error::BoundExceeded { n: c.n(), bound: DEFAULT_HOCHSTER_BOUND });
    }
    let dual = c.complement_ideal().alexander_dual()?.stanley_reisner_complex();
    let size = c.n() - 3;
    let missing: Vec<VertexSet> =
        VertexSet::full(c.n()).subsets_of_size(size).into_iter().filter(|g| !dual.contains_face(*g)).collect();
    let augmented_cm = missing
        .par_iter()
        .map(|&g| is_cohen_macaulay(&dual.with_facet(g)?, field))
        .collect::<Result<Vec<bool>>>()?;
    Ok(DualAlmostCm {
        pure: dual.is_pure(),
        dimension: dual.dim(),
        cohen_macaulay: is_cohen_macaulay(&dual, field)?,
        augmentations: missing.len(),
        augmentations_cohen_macaulay: augmented_cm.iter().filter(|ok| **ok).count(),
    })
}
