#![allow(dead_code)]

use linres::{Clutter, FieldSpec, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::GF2];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each 3-subset of `{1..n}` independently with probability `p`.
pub fn random_clutter(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Clutter {
    let circuits = VertexSet::full(n).subsets_of_size(3).into_iter().filter(|_| rng.gen_bool(p));
    Clutter::new(n, 3, circuits).unwrap()
}

/// Random clutter with `n` in `lo..=hi` and a random density.
pub fn random_clutter_in(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Clutter {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.15..0.85);
    random_clutter(rng, n, p)
}

/// `k` distinct vertices of `{1..n}` in random order.
pub fn distinct(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}

pub fn edit(c: &Clutter, remove: impl Fn(VertexSet) -> bool, add: &[VertexSet]) -> Clutter {
    Clutter::new(c.n(), c.d(), c.circuits().filter(|f| !remove(*f)).chain(add.iter().copied())).unwrap()
}

pub fn regularity(c: &Clutter, field: FieldSpec) -> Option<usize> {
    linres::betti::regularity(&c.complement_ideal(), field).unwrap()
}

pub fn linear(c: &Clutter, field: FieldSpec) -> bool {
    linres::betti::has_linear_resolution(&c.complement_ideal(), 3, field).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    SimplicialDeletion,
    SharedEdgePair,
    Flip,
    Expansion,
    Contraction,
    RedundantDrop,
}

pub const OPS: [Op; 6] =
    [Op::SimplicialDeletion, Op::SharedEdgePair, Op::Flip, Op::Expansion, Op::Contraction, Op::RedundantDrop];

/// One random `(before, after)` pair for `op` on at most seven vertices, or `None`
/// when the sampled clutter misses the precondition. Pairs where either side is
/// the maximal clutter are skipped: its complement ideal is zero and has no
/// regularity to compare.
pub fn instance(op: Op, rng: &mut ChaCha8Rng) -> Option<(Clutter, Clutter)> {
    use linres::reduction as r;
    let pair = match op {
        Op::SimplicialDeletion => {
            let c = random_clutter_in(rng, 4, 7);
            let edges = r::simplicial_edges(&c);
            // Prefer edges in several circuits; unique-circuit edges are the easy case.
            let shared: Vec<_> = edges.iter().copied().filter(|e| c.circuits_containing(*e).count() > 1).collect();
            let pool = if !shared.is_empty() && rng.gen_bool(0.7) { shared } else { edges };
            let e = *pool.choose(rng)?;
            let after = r::delete_simplicial(&c, e).ok()?;
            (c, after)
        }
        Op::SharedEdgePair => {
            let c = random_clutter_in(rng, 5, 7);
            let v = distinct(rng, c.n(), 4);
            let (ab, c1, c2) = (VertexSet::from([v[0], v[1]]), v[2], v[3]);
            let planted = edit(
                &c,
                |f| ab.is_subset(f),
                &[ab.with(c1), ab.with(c2), VertexSet::from([v[0], c1, c2]), VertexSet::from([v[1], c1, c2])],
            );
            let after = r::delete_shared_edge_pair(&planted, ab).ok()?;
            (planted, after)
        }
        Op::Flip => {
            let c = random_clutter_in(rng, 4, 7);
            let v = distinct(rng, c.n(), 4);
            let (ab, cd) = (VertexSet::from([v[0], v[1]]), VertexSet::from([v[2], v[3]]));
            let planted = edit(&c, |f| ab.is_subset(f) || cd.is_subset(f), &[ab.with(v[2]), ab.with(v[3])]);
            let after = r::flip(&planted, ab, cd).ok()?;
            (planted, after)
        }
        Op::Expansion => {
            let c = random_clutter_in(rng, 4, 6);
            let face = c.circuits().nth(rng.gen_range(0..c.len().max(1)))?;
            let after = r::expand_vertex(&c, face).ok()?;
            (c, after)
        }
        Op::Contraction => {
            let c = random_clutter_in(rng, 5, 7);
            let v = distinct(rng, c.n(), 4);
            let (x, tri) = (v[0], VertexSet::from([v[1], v[2], v[3]]));
            let star: Vec<VertexSet> = tri.iter().map(|t| tri.without(t).with(x)).collect();
            let planted = edit(&c, |f| f.contains(x) || f == tri, &star);
            let after = r::contract_degree3_vertex(&planted, x).ok()?.clutter;
            (planted, after)
        }
        Op::RedundantDrop => {
            let c = random_clutter_in(rng, 4, 7);
            let x = rng.gen_range(1..=c.n());
            let planted = edit(&c, |f| f.contains(x), &[]);
            let after = r::drop_redundant_vertex(&planted).ok()?.clutter;
            (planted, after)
        }
    };
    (!pair.0.is_maximal() && !pair.1.is_maximal()).then_some(pair)
}
