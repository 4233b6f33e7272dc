//! Clutter isomorphism by backtracking over degree-compatible vertex maps.

use crate::clutter::Clutter;
use crate::vertex::VertexSet;

/// A permutation `perm` with `a.relabel(&perm) == b`, if one exists.
pub fn find_isomorphism(a: &Clutter, b: &Clutter) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.d() != b.d() || a.len() != b.len() {
        return None;
    }
    let n = a.n();
    let profile = |c: &Clutter, v: usize| {
        // degree, then the sorted degrees of the neighbours: cheap invariants that prune most branches
        let nbrs = c.circuits_containing(VertexSet::singleton(v)).fold(VertexSet::EMPTY, VertexSet::union).without(v);
        let mut nd: Vec<usize> = nbrs.iter().map(|u| c.degree(u)).collect();
        nd.sort_unstable();
        (c.degree(v), nd)
    };
    let pa: Vec<_> = (1..=n).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (1..=n).map(|v| profile(b, v)).collect();
    let mut sorted_a = pa.clone();
    let mut sorted_b = pb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    // Map high-degree vertices first; they constrain the most circuits.
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut perm = vec![0usize; n];
    let mut used = VertexSet::EMPTY;
    extend(a, b, &pa, &pb, &order, &mut perm, &mut used).then_some(perm)
}

pub fn are_isomorphic(a: &Clutter, b: &Clutter) -> bool {
    find_isomorphism(a, b).is_some()
}

type Profile = (usize, Vec<usize>);

fn extend(
    a: &Clutter,
    b: &Clutter,
    pa: &[Profile],
    pb: &[Profile],
    order: &[usize],
    perm: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some((&v, rest)) = order.split_first() else { return true };
    for w in 1..=b.n() {
        if used.contains(w) || pa[v - 1] != pb[w - 1] {
            continue;
        }
        perm[v - 1] = w;
        *used = used.with(w);
        // Every circuit through v whose vertices are all mapped must land on a circuit.
        let mapped = |u: usize| perm[u - 1] != 0;
        let consistent = a
            .circuits_containing(VertexSet::singleton(v))
            .filter(|f| f.iter().all(mapped))
            .all(|f| b.contains(f.map(|u| perm[u - 1])));
        if consistent && extend(a, b, pa, pb, rest, perm, used) {
            return true;
        }
        *used = used.without(w);
        perm[v - 1] = 0;
    }
    false
}
