//! Clutter moves that leave `reg I(C̄)` unchanged, with their preconditions.
//!
//! Every move refuses inputs outside its hypotheses instead of producing an
//! unjustified clutter.

use std::collections::BTreeSet;

use crate::clutter::{Clutter, VertexDeletion};
use crate::error::{Error, Result};
use crate::vertex::{VertexSet, MAX_VERTICES};

/// All `(d-1)`-subsets lying in some circuit: the submaximal circuits `E(C)`.
pub fn submaximal_circuits(c: &Clutter) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for f in c.circuits() {
        for v in f {
            out.insert(f.without(v));
        }
    }
    out
}

fn check_submaximal_size(c: &Clutter, e: VertexSet) -> Result<()> {
    if e.len() + 1 != c.d() || !e.is_subset(c.ground_set()) {
        return Err(Error::precondition(format!("{e} is not a {}-subset of the ground set", c.d() - 1)));
    }
    Ok(())
}

/// `N[e] = e ∪ { c : e ∪ {c} ∈ C }`.
pub fn closed_neighborhood(c: &Clutter, e: VertexSet) -> Result<VertexSet> {
    check_submaximal_size(c, e)?;
    Ok(c.circuits_containing(e).fold(e, VertexSet::union))
}

/// `e` is simplicial when `N[e]` is a clique.
pub fn is_simplicial(c: &Clutter, e: VertexSet) -> Result<bool> {
    check_submaximal_size(c, e)?;
    if c.circuits_containing(e).next().is_none() {
        return Err(Error::precondition(format!("{e} lies in no circuit")));
    }
    Ok(c.is_clique(closed_neighborhood(c, e)?))
}

/// Simplicial submaximal circuits in lexicographic order.
pub fn simplicial_edges(c: &Clutter) -> Vec<VertexSet> {
    submaximal_circuits(c).into_iter().filter(|e| c.is_clique(closed_neighborhood(c, *e).unwrap_or(*e))).collect()
}

fn remove_containing(c: &Clutter, e: VertexSet) -> Clutter {
    c.with_circuits(c.circuit_set().iter().copied().filter(|f| !e.is_subset(*f)).collect())
}

/// `C ∖ e`: drops every circuit containing the simplicial submaximal circuit `e`.
pub fn delete_simplicial(c: &Clutter, e: VertexSet) -> Result<Clutter> {
    if c.is_maximal() {
        return Err(Error::precondition("the maximal clutter admits no simplicial deletion"));
    }
    if !is_simplicial(c, e)? {
        return Err(Error::precondition(format!("{e} is not simplicial")));
    }
    Ok(remove_containing(c, e))
}

/// Drops the only circuit containing `e`.
pub fn delete_unique_circuit(c: &Clutter, e: VertexSet) -> Result<Clutter> {
    check_submaximal_size(c, e)?;
    if c.is_maximal() {
        return Err(Error::precondition("the maximal clutter admits no simplicial deletion"));
    }
    let count = c.circuits_containing(e).count();
    if count != 1 {
        return Err(Error::precondition(format!("{e} lies in {count} circuits, expected exactly one")));
    }
    Ok(remove_containing(c, e))
}

fn require_three_uniform(c: &Clutter) -> Result<()> {
    if c.d() != 3 {
        return Err(Error::precondition(format!("needs a 3-uniform clutter, got d = {}", c.d())));
    }
    Ok(())
}

/// The two circuits through the edge `e`, as `(c, c')`, when there are exactly two.
fn wings(c: &Clutter, e: VertexSet) -> Result<(usize, usize)> {
    if e.len() != 2 {
        return Err(Error::precondition(format!("{e} is not an edge")));
    }
    let through: Vec<VertexSet> = c.circuits_containing(e).collect();
    if through.len() != 2 {
        return Err(Error::precondition(format!("{e} lies in {} circuits, expected exactly two", through.len())));
    }
    let apex = |f: VertexSet| f.difference(e).min().expect("3-set minus an edge");
    Ok((apex(through[0]), apex(through[1])))
}

/// With `e = {a,b}` in exactly the circuits `abc`, `abc'`, and `acc'`, `bcc'` also
/// circuits, removes `abc` and `abc'`.
pub fn delete_shared_edge_pair(c: &Clutter, e: VertexSet) -> Result<Clutter> {
    require_three_uniform(c)?;
    if c.is_maximal() {
        return Err(Error::precondition("the maximal clutter admits no simplicial deletion"));
    }
    let (x, y) = wings(c, e)?;
    let opposite = VertexSet::from([x, y]);
    for v in e {
        if !c.contains(opposite.with(v)) {
            return Err(Error::precondition(format!("{} is not a circuit", opposite.with(v))));
        }
    }
    Ok(remove_containing(c, e))
}

/// Replaces `abc, abc'` (the only circuits through `e = {a,b}`) by `acc', bcc'`,
/// provided no circuit contains `f = {c,c'}`.
pub fn flip(c: &Clutter, e: VertexSet, f: VertexSet) -> Result<Clutter> {
    require_three_uniform(c)?;
    let (x, y) = wings(c, e)?;
    if f != VertexSet::from([x, y]) {
        return Err(Error::precondition(format!("{f} is not the edge opposite {e}")));
    }
    if c.circuits_containing(f).next().is_some() {
        return Err(Error::precondition(format!("{f} already lies in a circuit")));
    }
    let mut circuits = c.circuit_set().clone();
    circuits.remove(&e.with(x));
    circuits.remove(&e.with(y));
    circuits.extend(e.iter().map(|v| f.with(v)));
    Ok(c.with_circuits(circuits))
}

/// Some `r ∉ F` with `(F ∖ {x}) ∪ {r}` a circuit for every `x ∈ F`.
fn cone_witness(c: &Clutter, face: VertexSet) -> Option<usize> {
    c.ground_set().difference(face).iter().find(|&r| face.iter().all(|x| c.contains(face.without(x).with(r))))
}

/// Replaces the circuit `F` by the cone `{v} ∪ (F ∖ {x})`, `x ∈ F`, over a new vertex `v = n + 1`.
pub fn expand_vertex(c: &Clutter, face: VertexSet) -> Result<Clutter> {
    require_three_uniform(c)?;
    if !c.contains(face) {
        return Err(Error::precondition(format!("{face} is not a circuit")));
    }
    if let Some(r) = cone_witness(c, face) {
        return Err(Error::precondition(format!("every triangle of {face} extends to a circuit through {r}")));
    }
    if c.n() == MAX_VERTICES {
        return Err(Error::GroundSetSize { n: c.n() + 1, max: MAX_VERTICES });
    }
    let v = c.n() + 1;
    let circuits = c
        .circuits()
        .filter(|f| *f != face)
        .chain(face.iter().map(|x| face.without(x).with(v)));
    Clutter::new(v, 3, circuits)
}

/// The triangle `{a,b,c}` when `v` lies in exactly the circuits `vab, vac, vbc`.
fn contractible_triangle(c: &Clutter, v: usize) -> Result<VertexSet> {
    let star: Vec<VertexSet> = c.circuits_containing(VertexSet::singleton(v)).collect();
    if star.len() != 3 {
        return Err(Error::precondition(format!("vertex {v} has degree {}, expected 3", star.len())));
    }
    let triangle = star.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f)).without(v);
    let is_triangle = triangle.len() == 3 && triangle.iter().all(|x| star.contains(&triangle.without(x).with(v)));
    if !is_triangle {
        return Err(Error::precondition(format!("the link of {v} is not a triangle")));
    }
    Ok(triangle)
}

/// Inverse of [`expand_vertex`]: replaces `vab, vac, vbc` by `abc` and deletes `v`.
pub fn contract_degree3_vertex(c: &Clutter, v: usize) -> Result<VertexDeletion> {
    require_three_uniform(c)?;
    if !(1..=c.n()).contains(&v) {
        return Err(Error::VertexOutOfRange { vertex: v, n: c.n() });
    }
    let triangle = contractible_triangle(c, v)?;
    if c.contains(triangle) {
        return Err(Error::precondition(format!("{triangle} is already a circuit")));
    }
    let mut circuits = c.circuit_set().clone();
    circuits.retain(|f| !f.contains(v));
    circuits.insert(triangle);
    let merged = c.with_circuits(circuits);
    if let Some(r) = cone_witness(&merged, triangle) {
        return Err(Error::precondition(format!("contracting {v} closes a tetrahedron with {r}")));
    }
    merged.delete_vertex(v).map_err(|_| Error::precondition("ground set would drop below d"))
}

/// Deletes the vertex `v`, which must lie in no circuit.
pub fn drop_vertex(c: &Clutter, v: usize) -> Result<VertexDeletion> {
    if !(1..=c.n()).contains(&v) {
        return Err(Error::VertexOutOfRange { vertex: v, n: c.n() });
    }
    if c.covered_vertices().contains(v) {
        return Err(Error::precondition(format!("vertex {v} lies in a circuit")));
    }
    if c.n() == c.d() {
        return Err(Error::precondition("ground set would drop below d"));
    }
    c.delete_vertex(v)
}

/// Deletes the smallest vertex lying in no circuit.
pub fn drop_redundant_vertex(c: &Clutter) -> Result<VertexDeletion> {
    let v = c
        .ground_set()
        .difference(c.covered_vertices())
        .min()
        .ok_or_else(|| Error::precondition("every vertex lies in a circuit"))?;
    drop_vertex(c, v)
}

/// Vertices `v` such that any two circuits through `v` leave a circuit inside
/// their union with `v` removed.
pub fn simplicial_vertices(c: &Clutter) -> VertexSet {
    c.ground_set()
        .iter()
        .filter(|&v| {
            let star: Vec<VertexSet> = c.circuits_containing(VertexSet::singleton(v)).collect();
            star.iter().enumerate().all(|(i, e1)| {
                star[i + 1..].iter().all(|e2| {
                    let rest = e1.union(*e2).without(v);
                    c.circuits().any(|f| f.is_subset(rest))
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{hexahedron, octahedron, reducible_non_chordal};

    fn clutter(n: usize, circuits: &[[usize; 3]]) -> Clutter {
        Clutter::new(n, 3, circuits.iter().map(|c| VertexSet::from(*c))).unwrap()
    }

    fn e(a: usize, b: usize) -> VertexSet {
        VertexSet::from([a, b])
    }

    #[test]
    fn submaximal_circuits_of_fixtures() {
        let edges = submaximal_circuits(&hexahedron());
        assert_eq!(edges.len(), 9);
        assert!(!edges.contains(&e(4, 5)));
        assert!(submaximal_circuits(&Clutter::empty(4, 3).unwrap()).is_empty());
        assert_eq!(submaximal_circuits(&Clutter::maximal(4, 3).unwrap()).len(), 6);
    }

    #[test]
    fn neighborhoods() {
        let t = hexahedron();
        assert_eq!(closed_neighborhood(&t, e(1, 2)).unwrap(), VertexSet::from([1, 2, 4, 5]));
        assert_eq!(closed_neighborhood(&t, e(4, 5)).unwrap(), e(4, 5));
        assert_eq!(closed_neighborhood(&Clutter::maximal(4, 3).unwrap(), e(1, 2)).unwrap(), VertexSet::full(4));
        assert!(closed_neighborhood(&t, VertexSet::from([1])).is_err());
    }

    #[test]
    fn simpliciality() {
        let t = hexahedron();
        assert_eq!(is_simplicial(&t, e(1, 2)), Ok(false));
        assert!(is_simplicial(&t, e(4, 5)).is_err());
        assert!(simplicial_edges(&t).is_empty());
        let full = Clutter::maximal(5, 3).unwrap();
        assert!(submaximal_circuits(&full).iter().all(|x| is_simplicial(&full, *x) == Ok(true)));
        let r = reducible_non_chordal();
        // 13 lies in 123 and 134, and 1234 is a clique.
        assert_eq!(simplicial_edges(&r).first(), Some(&e(1, 3)));
        assert_eq!(is_simplicial(&r, e(5, 6)), Ok(true));
    }

    #[test]
    fn unique_circuit_edges_are_simplicial() {
        let c = clutter(6, &[[1, 2, 3], [1, 2, 4], [3, 4, 5], [2, 5, 6]]);
        for edge in submaximal_circuits(&c) {
            if c.circuits_containing(edge).count() == 1 {
                assert_eq!(is_simplicial(&c, edge), Ok(true));
                assert_eq!(delete_unique_circuit(&c, edge).unwrap().len(), c.len() - 1);
            }
        }
    }

    #[test]
    fn simplicial_deletion() {
        let r = reducible_non_chordal();
        let after = delete_simplicial(&r, e(5, 6)).unwrap();
        assert_eq!(after.len(), 6);
        assert!(delete_simplicial(&hexahedron(), e(1, 2)).is_err());
        assert!(delete_simplicial(&Clutter::maximal(4, 3).unwrap(), e(1, 2)).is_err());
    }

    #[test]
    fn shared_edge_pair() {
        let c = clutter(5, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [3, 4, 5]]);
        let after = delete_shared_edge_pair(&c, e(1, 2)).unwrap();
        assert_eq!(after, clutter(5, &[[1, 3, 4], [2, 3, 4], [3, 4, 5]]));
        let crowded = clutter(5, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5]]);
        assert!(delete_shared_edge_pair(&crowded, e(1, 2)).is_err());
        let missing = clutter(5, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [3, 4, 5]]);
        assert!(delete_shared_edge_pair(&missing, e(1, 2)).is_err());
    }

    #[test]
    fn flips() {
        let c = clutter(4, &[[1, 2, 3], [1, 2, 4]]);
        let flipped = flip(&c, e(1, 2), e(3, 4)).unwrap();
        assert_eq!(flipped, clutter(4, &[[1, 3, 4], [2, 3, 4]]));
        assert_eq!(flip(&flipped, e(3, 4), e(1, 2)).unwrap(), c);
        assert!(flip(&c, e(1, 2), e(1, 3)).is_err());
        // opposite edge already covered
        let blocked = clutter(5, &[[1, 2, 3], [1, 2, 4], [3, 4, 5]]);
        assert!(flip(&blocked, e(1, 2), e(3, 4)).is_err());
    }

    #[test]
    fn expansion_and_contraction() {
        let t = hexahedron();
        let grown = expand_vertex(&t, VertexSet::from([1, 2, 4])).unwrap();
        assert_eq!((grown.n(), grown.len(), grown.degree(6)), (6, 8, 3));
        let back = contract_degree3_vertex(&grown, 6).unwrap();
        assert_eq!(back.clutter, t);
        assert_eq!(back.labels, vec![1, 2, 3, 4, 5]);

        // On the boundary of the tetrahedron every face is capped by the fourth vertex.
        let tetra = Clutter::maximal(4, 3).unwrap();
        assert!(expand_vertex(&tetra, VertexSet::from([1, 2, 3])).is_err());
        assert!(expand_vertex(&t, VertexSet::from([1, 2, 3])).is_err());

        let err = contract_degree3_vertex(&octahedron(), 1).unwrap_err();
        assert!(err.to_string().contains("degree 4"), "{err}");
        // The bipyramid's apexes have degree 3, but contracting one closes a tetrahedron.
        assert!(contract_degree3_vertex(&t, 4).is_err());
    }

    #[test]
    fn redundant_vertices() {
        let t6 = hexahedron().with_ground_set(6).unwrap();
        let dropped = drop_redundant_vertex(&t6).unwrap();
        assert_eq!(dropped.clutter, hexahedron());
        assert!(drop_redundant_vertex(&hexahedron()).is_err());
        let sparse = clutter(7, &[[2, 4, 6]]);
        let mut cur = sparse;
        while let Ok(next) = drop_redundant_vertex(&cur) {
            cur = next.clutter;
        }
        assert_eq!(cur, clutter(3, &[[1, 2, 3]]));
    }

    #[test]
    fn simplicial_vertex_detection() {
        assert_eq!(simplicial_vertices(&Clutter::maximal(4, 3).unwrap()), VertexSet::full(4));
        let t = hexahedron();
        // Brute-force by definition: 124 and 125 through 1 leave {2,4,5}, no circuit inside.
        assert!(simplicial_vertices(&t).is_empty());
        let isolated = clutter(4, &[[1, 2, 3]]);
        assert!(simplicial_vertices(&isolated).contains(4));
    }
}
