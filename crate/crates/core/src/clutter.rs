//! Uniform clutters on `{1..n}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::vertex::{VertexSet, MAX_VERTICES};

/// A `d`-uniform clutter on the ground set `{1..n}`.
///
/// Circuits are kept in lexicographic order. Vertices that lie in no circuit
/// are still part of the ground set: they change the complement.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClutter", into = "RawClutter")]
pub struct Clutter {
    n: usize,
    d: usize,
    circuits: BTreeSet<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawClutter {
    n: usize,
    d: usize,
    circuits: Vec<VertexSet>,
}

impl TryFrom<RawClutter> for Clutter {
    type Error = Error;

    fn try_from(raw: RawClutter) -> Result<Self> {
        Clutter::new(raw.n, raw.d, raw.circuits)
    }
}

impl From<Clutter> for RawClutter {
    fn from(c: Clutter) -> Self {
        RawClutter { n: c.n, d: c.d, circuits: c.circuits.into_iter().collect() }
    }
}

/// Result of deleting a vertex: the clutter on the contiguous ground set
/// `{1..n-1}` and, for each new vertex `i`, its label `labels[i - 1]` before deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDeletion {
    pub clutter: Clutter,
    pub labels: Vec<usize>,
}

pub(crate) fn check_ground_set(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSetSize { n, max: MAX_VERTICES })
    }
}

impl Clutter {
    /// Validates and canonicalises a clutter. Duplicate circuits collapse.
    pub fn new(n: usize, d: usize, circuits: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground_set(n)?;
        if d == 0 || d > n {
            return Err(Error::Uniformity { n, d });
        }
        let ground = VertexSet::full(n);
        let mut set = BTreeSet::new();
        for c in circuits {
            if c.len() != d {
                return Err(Error::CircuitCardinality { circuit: c, expected: d, found: c.len() });
            }
            if !c.is_subset(ground) {
                let vertex = c.difference(ground).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            set.insert(c);
        }
        Ok(Clutter { n, d, circuits: set })
    }

    pub fn empty(n: usize, d: usize) -> Result<Self> {
        Clutter::new(n, d, [])
    }

    /// All `d`-subsets of `{1..n}`.
    pub fn maximal(n: usize, d: usize) -> Result<Self> {
        check_ground_set(n)?;
        if d == 0 || d > n {
            return Err(Error::Uniformity { n, d });
        }
        Clutter::new(n, d, VertexSet::full(n).subsets_of_size(d))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Circuits in lexicographic order.
    pub fn circuits(&self) -> impl ExactSizeIterator<Item = VertexSet> + '_ {
        self.circuits.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, circuit: VertexSet) -> bool {
        self.circuits.contains(&circuit)
    }

    pub fn is_maximal(&self) -> bool {
        self.circuits.len() as u128 == binomial(self.n, self.d)
    }

    pub fn circuits_containing(&self, set: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.circuits().filter(move |c| set.is_subset(*c))
    }

    /// Number of circuits through `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.circuits_containing(VertexSet::singleton(v)).count()
    }

    /// Vertices lying in at least one circuit.
    pub fn covered_vertices(&self) -> VertexSet {
        self.circuits().fold(VertexSet::EMPTY, VertexSet::union)
    }

    /// `C_{n,d}` minus `self`, on the same ground set.
    pub fn complement(&self) -> Clutter {
        let circuits = self.ground_set().subsets_of_size(self.d).into_iter().filter(|s| !self.contains(*s));
        Clutter { n: self.n, d: self.d, circuits: circuits.collect() }
    }

    /// The ideal generated by `x_F` for every circuit `F`; the zero ideal when empty.
    pub fn circuit_ideal(&self) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(self.n, self.circuits())
            .expect("circuits are nonempty subsets of the ground set")
    }

    /// The circuit ideal of the complement, the ideal whose linearity decides
    /// whether the clutter "has a linear resolution".
    pub fn complement_ideal(&self) -> SquarefreeMonomialIdeal {
        self.complement().circuit_ideal()
    }

    /// `true` iff every `d`-subset of `set` is a circuit (vacuous below size `d`).
    pub fn is_clique(&self, set: VertexSet) -> bool {
        if set.len() < self.d {
            return true;
        }
        if set.len() > self.d + 8 {
            // Cheap necessary condition before the binomial blow-up.
            let needed = binomial(set.len(), self.d);
            if needed > self.circuits.len() as u128 {
                return false;
            }
        }
        set.subsets_of_size(self.d).into_iter().all(|s| self.contains(s))
    }

    /// Faces are all sets below size `d` together with all cliques.
    /// Equals the Stanley-Reisner complex of the complement's circuit ideal.
    pub fn clique_complex(&self) -> SimplicialComplex {
        let d = self.d;
        SimplicialComplex::from_face_predicate(self.n, |face, added| {
            if face.len() < d {
                return true;
            }
            // Only d-subsets through the newly added vertex are new.
            face.without(added)
                .subsets_of_size(d - 1)
                .into_iter()
                .all(|s| self.contains(s.with(added)))
        })
    }

    /// Deletes `v` and every circuit through it, relabelling to `{1..n-1}`.
    pub fn delete_vertex(&self, v: usize) -> Result<VertexDeletion> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.n == 1 || self.d > self.n - 1 {
            return Err(Error::Uniformity { n: self.n - 1, d: self.d });
        }
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let circuits = self.circuits().filter(|c| !c.contains(v)).map(|c| c.map(shift));
        let clutter = Clutter { n: self.n - 1, d: self.d, circuits: circuits.collect() };
        let labels = (1..=self.n).filter(|&u| u != v).collect();
        Ok(VertexDeletion { clutter, labels })
    }

    /// Same circuits on the ground set `{1..m}`, `m >= n`.
    pub fn with_ground_set(&self, m: usize) -> Result<Clutter> {
        check_ground_set(m)?;
        if m < self.covered_vertices().max().unwrap_or(0) || m < self.d {
            return Err(Error::InvalidParams(format!("ground set {m} too small")));
        }
        Ok(Clutter { n: m, d: self.d, circuits: self.circuits.clone() })
    }

    pub(crate) fn with_circuits(&self, circuits: BTreeSet<VertexSet>) -> Clutter {
        Clutter { n: self.n, d: self.d, circuits }
    }

    pub(crate) fn circuit_set(&self) -> &BTreeSet<VertexSet> {
        &self.circuits
    }

    /// Renames vertices through `perm` (`perm[v - 1]` is the image of `v`), which must
    /// be a permutation of `{1..n}`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Clutter> {
        let mut seen = VertexSet::EMPTY;
        if perm.len() != self.n {
            return Err(Error::InvalidParams("permutation length differs from n".into()));
        }
        for &p in perm {
            if !(1..=self.n).contains(&p) || seen.contains(p) {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            seen = seen.with(p);
        }
        let circuits = self.circuits().map(|c| c.map(|v| perm[v - 1])).collect();
        Ok(Clutter { n: self.n, d: self.d, circuits })
    }

    /// Canonical text: a header line `n d`, then one circuit per line.
    pub fn canonical_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.d);
        for c in self.circuits() {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    /// SHA-256 of [`Clutter::canonical_text`], hex encoded.
    pub fn canonical_hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter(n={}, d={}, {})", self.n, self.d, self)
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.circuits().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
