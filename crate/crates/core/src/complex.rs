//! Simplicial complexes given by their facets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clutter::check_ground_set;
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// A simplicial complex on the vertex set `{1..n}`, stored as its facets in
/// lexicographic order.
///
/// Two degenerate values are distinct: the *void* complex has no faces at all
/// (no facets), while the *empty-face-only* complex `{∅}` has the single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`; non-maximal entries are dropped.
    pub fn new(n: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground_set(n)?;
        let ground = VertexSet::full(n);
        let mut all: Vec<VertexSet> = Vec::new();
        for f in faces {
            if !f.is_subset(ground) {
                let vertex = f.difference(ground).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            all.push(f);
        }
        Ok(SimplicialComplex { n, facets: maximal_elements(all) })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty_face_only(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `{1..n}`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VertexSet::full(n)] }
    }

    /// Collects the maximal members of a downward-closed family given by an
    /// incremental membership test: `is_face(face, v)` is only asked when
    /// `face \ {v}` is already known to be a face.
    pub fn from_face_predicate(n: usize, mut is_face: impl FnMut(VertexSet, usize) -> bool) -> Self {
        let mut facets = Vec::new();
        let mut stack = vec![VertexSet::EMPTY];
        while let Some(face) = stack.pop() {
            let mut maximal = true;
            for v in 1..=n {
                if face.contains(v) {
                    continue;
                }
                let bigger = face.with(v);
                if is_face(bigger, v) {
                    maximal = false;
                    // Extend only upwards so that each face is visited once.
                    if face.max().is_none_or(|m| v > m) {
                        stack.push(bigger);
                    }
                }
            }
            if maximal {
                facets.push(face);
            }
        }
        facets.sort();
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximum face dimension; `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Vertices appearing in some face.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// All faces, grouped by cardinality: `out[k]` holds the faces with `k` vertices,
    /// each group in lexicographic order.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let Some(dim) = self.dim() else { return Vec::new() };
        let mut seen = std::collections::HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut out = vec![Vec::new(); (dim + 2) as usize];
        for s in seen {
            out[s.len()].push(s);
        }
        for group in &mut out {
            group.sort();
        }
        out
    }

    /// Number of faces of each cardinality.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Faces of dimension at most `r`.
    pub fn skeleton(&self, r: isize) -> Result<Self> {
        let max = self.dim().ok_or(Error::VoidComplex)?;
        if r < -1 || r > max {
            return Err(Error::SkeletonDimension { r, max });
        }
        let size = (r + 1) as usize;
        let faces = self.facets.iter().flat_map(|f| {
            if f.len() <= size {
                vec![*f]
            } else {
                f.subsets_of_size(size)
            }
        });
        SimplicialComplex::new(self.n, faces)
    }

    /// `lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }`.
    pub fn link(&self, face: VertexSet) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace { face });
        }
        let faces = self.facets.iter().filter(|f| face.is_subset(**f)).map(|f| f.difference(face));
        SimplicialComplex::new(self.n, faces)
    }

    /// `Δ_W`: faces contained in `W`.
    pub fn induced(&self, subset: VertexSet) -> Self {
        if self.is_void() {
            return self.clone();
        }
        let faces: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(subset)).collect();
        SimplicialComplex { n: self.n, facets: maximal_elements(faces) }
    }

    /// Adds one facet (and its faces).
    pub fn with_facet(&self, facet: VertexSet) -> Result<Self> {
        SimplicialComplex::new(self.n, self.facets.iter().copied().chain([facet]))
    }

    /// A vertex contained in every facet, which makes the complex a cone.
    pub fn cone_apex(&self) -> Option<usize> {
        let common = self.facets.iter().copied().reduce(VertexSet::intersection)?;
        common.min()
    }
}

/// Maximal elements under inclusion, deduplicated and sorted.
pub(crate) fn maximal_elements(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    // Larger sets first so each candidate need only be compared to kept ones.
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Minimal elements under inclusion, deduplicated and sorted.
pub(crate) fn minimal_elements(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| s.len());
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(|s| s.to_string()).collect();
        write!(f, "Complex(n={}, <{}>)", self.n, parts.join(", "))
    }
}
