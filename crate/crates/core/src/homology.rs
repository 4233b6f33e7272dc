//! Reduced simplicial homology over a field, and Reisner's Cohen-Macaulay test.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::IntMatrix;
use crate::vertex::VertexSet;

/// Augmented simplicial chain complex of a complex.
///
/// `faces[s]` lists the faces with `s` vertices (dimension `s - 1`) in
/// lexicographic order; `boundary(s)` maps size-`s` chains to size-`(s-1)` chains,
/// with `boundary(1)` the augmentation onto the empty face.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    faces: Vec<Vec<VertexSet>>,
}

impl ChainComplex {
    pub fn new(complex: &SimplicialComplex) -> Self {
        ChainComplex { faces: complex.faces_by_size() }
    }

    /// Faces of dimension `k` (`k >= -1`).
    pub fn faces(&self, k: isize) -> &[VertexSet] {
        usize::try_from(k + 1).ok().and_then(|s| self.faces.get(s)).map_or(&[], Vec::as_slice)
    }

    /// Largest dimension with faces; `None` when void.
    pub fn top_dimension(&self) -> Option<isize> {
        (!self.faces.is_empty()).then(|| self.faces.len() as isize - 2)
    }

    /// `∂_k : C_k → C_{k-1}`. The vertex of position `i` in the ascending
    /// vertex list is removed with sign `(-1)^i`.
    pub fn boundary(&self, k: isize) -> IntMatrix {
        let cols = self.faces(k);
        let rows = self.faces(k - 1);
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        if k < 0 || cols.is_empty() || rows.is_empty() {
            return m;
        }
        let index: HashMap<VertexSet, usize> = rows.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        for (j, face) in cols.iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let row = index[&face.without(v)];
                m.set(row, j, if pos % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }
}

/// `dim_K H̃_k` for `k = -1, 0, 1, …`; zero outside the stored range, which
/// carries no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRanks {
    /// `ranks[k + 1] = dim H̃_k`.
    ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.ranks.get(i)).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `(k, rank)` for every nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks.iter().enumerate().filter(|(_, r)| **r > 0).map(|(i, r)| (i as isize - 1, *r))
    }

    /// `Σ_k (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero().map(|(k, r)| if k.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) }).sum()
    }
}

/// Reduced homology ranks. The void complex has all ranks zero; `{∅}` has `H̃_{-1} = K`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyRanks {
    let chains = ChainComplex::new(complex);
    let Some(top) = chains.top_dimension() else { return HomologyRanks::default() };
    // rank[s] = rank of the boundary out of size-s faces
    let mut boundary_rank = vec![0usize; (top + 3) as usize];
    for k in 0..=top {
        boundary_rank[(k + 1) as usize] = chains.boundary(k).rank(field);
    }
    let mut ranks: Vec<usize> = (-1..=top)
        .map(|k| {
            let s = (k + 1) as usize;
            chains.faces(k).len() - boundary_rank[s] - boundary_rank[s + 1]
        })
        .collect();
    while ranks.last() == Some(&0) {
        ranks.pop();
    }
    HomologyRanks { ranks }
}

/// Reduced homology with the cone shortcut: cones are acyclic.
pub(crate) fn reduced_homology_pruned(complex: &SimplicialComplex, field: FieldSpec) -> HomologyRanks {
    if complex.cone_apex().is_some() {
        HomologyRanks::default()
    } else {
        reduced_homology(complex, field)
    }
}

/// Reisner's criterion: every link (including `lk ∅ = Δ`) has vanishing reduced
/// homology below its dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for group in complex.faces_by_size() {
        for face in group {
            let link = complex.link(face)?;
            if link.cone_apex().is_some() {
                continue;
            }
            let dim = link.dim().unwrap_or(-1);
            let h = reduced_homology(&link, field);
            if h.nonzero().any(|(k, _)| k < dim) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| f.iter().copied().collect())).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        complex(6, &[&[1, 2, 3], &[1, 2, 6], &[1, 3, 5], &[1, 5, 6], &[2, 3, 4], &[2, 4, 6], &[3, 4, 5], &[4, 5, 6]])
    }

    const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::GF2, FieldSpec::PrimeField(32003)];

    #[test]
    fn circle_sphere_and_simplex() {
        for field in FIELDS {
            let circle = reduced_homology(&complex(3, &[&[1, 2], &[1, 3], &[2, 3]]), field);
            assert_eq!((circle.get(0), circle.get(1)), (0, 1));
            let sphere = reduced_homology(&octahedron(), field);
            assert_eq!(sphere.nonzero().collect::<Vec<_>>(), vec![(2, 1)]);
            assert!(reduced_homology(&SimplicialComplex::simplex(4), field).is_acyclic());
        }
    }

    #[test]
    fn degenerate_complexes() {
        let empty = reduced_homology(&SimplicialComplex::empty_face_only(3), FieldSpec::Rationals);
        assert_eq!(empty.nonzero().collect::<Vec<_>>(), vec![(-1, 1)]);
        assert!(reduced_homology(&SimplicialComplex::void(3), FieldSpec::Rationals).is_acyclic());
        let two_points = reduced_homology(&complex(2, &[&[1], &[2]]), FieldSpec::GF2);
        assert_eq!(two_points.nonzero().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    /// Six-vertex triangulation of the real projective plane: torsion shows up mod 2.
    #[test]
    fn projective_plane_detects_characteristic_two() {
        let rp2 = complex(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
            ],
        );
        assert!(reduced_homology(&rp2, FieldSpec::Rationals).is_acyclic());
        let gf2 = reduced_homology(&rp2, FieldSpec::GF2);
        assert_eq!(gf2.nonzero().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
        assert_eq!(is_cohen_macaulay(&rp2, FieldSpec::Rationals), Ok(true));
        assert_eq!(is_cohen_macaulay(&rp2, FieldSpec::GF2), Ok(false));
    }

    #[test]
    fn cohen_macaulay_examples() {
        for field in FIELDS {
            assert_eq!(is_cohen_macaulay(&SimplicialComplex::simplex(4), field), Ok(true));
            assert_eq!(is_cohen_macaulay(&octahedron(), field), Ok(true));
            // Two disjoint edges: disconnected of dimension one.
            assert_eq!(is_cohen_macaulay(&complex(4, &[&[1, 2], &[3, 4]]), field), Ok(false));
            // Triangle plus a dangling edge is not pure, hence not CM.
            assert_eq!(is_cohen_macaulay(&complex(4, &[&[1, 2, 3], &[3, 4]]), field), Ok(false));
        }
        assert_eq!(is_cohen_macaulay(&SimplicialComplex::void(2), FieldSpec::GF2), Err(Error::VoidComplex));
        assert_eq!(is_cohen_macaulay(&SimplicialComplex::empty_face_only(2), FieldSpec::GF2), Ok(true));
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), 1..7)
                .prop_map(move |masks| SimplicialComplex::new(n, masks.into_iter().map(VertexSet::from_bits)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(c in arb_complex()) {
            let chains = ChainComplex::new(&c);
            let top = chains.top_dimension().unwrap();
            for k in 1..=top {
                prop_assert!(chains.boundary(k - 1).mul(&chains.boundary(k)).is_zero());
                prop_assert_eq!(chains.boundary(k).cols(), chains.faces(k).len());
            }
        }

        #[test]
        fn euler_characteristic_consistency(c in arb_complex()) {
            let chi: i64 = c.f_vector().iter().enumerate()
                .map(|(s, &count)| if s % 2 == 1 { count as i64 } else { -(count as i64) })
                .sum();
            // `chi` above already carries the -1 from the empty face.
            for field in FIELDS {
                prop_assert_eq!(reduced_homology(&c, field).euler_characteristic(), chi);
            }
        }

        #[test]
        fn pruned_and_plain_homology_agree(c in arb_complex()) {
            prop_assert_eq!(reduced_homology_pruned(&c, FieldSpec::GF2), reduced_homology(&c, FieldSpec::GF2));
        }

        #[test]
        fn link_of_empty_face_and_full_restriction(c in arb_complex()) {
            prop_assert_eq!(c.link(VertexSet::EMPTY).unwrap(), c.clone());
            prop_assert_eq!(c.induced(VertexSet::full(c.n())), c);
        }
    }
}
