//! Square-free monomial ideals, identified with their minimal generator supports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clutter::check_ground_set;
use crate::complex::{minimal_elements, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// A square-free monomial ideal of `K[x_1..x_n]`.
///
/// The generator supports always form an antichain. No generator is empty, so
/// the unit ideal cannot be built; no generators at all is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal", into = "RawIdeal")]
pub struct SquarefreeMonomialIdeal {
    n: usize,
    generators: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawIdeal {
    n: usize,
    generators: Vec<VertexSet>,
}

impl TryFrom<RawIdeal> for SquarefreeMonomialIdeal {
    type Error = Error;

    fn try_from(raw: RawIdeal) -> Result<Self> {
        SquarefreeMonomialIdeal::new(raw.n, raw.generators)
    }
}

impl From<SquarefreeMonomialIdeal> for RawIdeal {
    fn from(i: SquarefreeMonomialIdeal) -> Self {
        RawIdeal { n: i.n, generators: i.generators }
    }
}

/// The prime `P_F = (x_j : j ∈ F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeComponent(VertexSet);

impl PrimeComponent {
    pub fn new(variables: VertexSet) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(PrimeComponent(variables))
    }

    pub fn variables(self) -> VertexSet {
        self.0
    }
}

/// The ideals `T'_{1,n}`, `T_{1,n}` and `T_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedIdeal {
    /// `⋂_{2≤i<j≤n} (x_1, x_i, x_j)`.
    T1n,
    /// `⋂_{2≤i<j≤n} (x_i, x_j)`.
    T1nPrime,
    /// `(x_4⋯x_n, x_1x_2x_3 x_4⋯x̂_k⋯x_n : 4 ≤ k ≤ n)`.
    Tn,
}

impl SquarefreeMonomialIdeal {
    /// Builds the ideal generated by `x_F` for each `F`, keeping minimal supports only.
    pub fn new(n: usize, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground_set(n)?;
        let ground = VertexSet::full(n);
        let mut gens = Vec::new();
        for g in generators {
            if g.is_empty() {
                return Err(Error::UnitIdeal);
            }
            if !g.is_subset(ground) {
                let vertex = g.difference(ground).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            gens.push(g);
        }
        Ok(SquarefreeMonomialIdeal { n, generators: minimal_elements(gens) })
    }

    pub fn zero(n: usize) -> Result<Self> {
        SquarefreeMonomialIdeal::new(n, [])
    }

    /// The named family member on `n` variables.
    pub fn named(kind: NamedIdeal, n: usize) -> Result<Self> {
        let (name, min) = match kind {
            NamedIdeal::T1n => ("T1n", 3),
            NamedIdeal::T1nPrime => ("T1n_prime", 3),
            NamedIdeal::Tn => ("Tn", 4),
        };
        if n < min {
            return Err(Error::NamedIdealTooSmall { kind: name, min, n });
        }
        let tail = VertexSet::full(n).without(1);
        let omit_one = (2..=n).map(move |k| tail.without(k));
        let gens: Vec<VertexSet> = match kind {
            NamedIdeal::T1nPrime => omit_one.collect(),
            NamedIdeal::T1n => omit_one.chain([VertexSet::singleton(1)]).collect(),
            NamedIdeal::Tn => {
                let upper = VertexSet::full(n).difference(VertexSet::full(3));
                let all = VertexSet::full(n);
                std::iter::once(upper).chain((4..=n).map(|k| all.without(k))).collect()
            }
        };
        SquarefreeMonomialIdeal::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generator supports in lexicographic order.
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `true` when `x_S` lies in the ideal.
    pub fn contains_monomial(&self, support: VertexSet) -> bool {
        self.generators.iter().any(|g| g.is_subset(support))
    }

    /// Smallest generator degree; `None` for the zero ideal.
    pub fn initial_degree(&self) -> Option<usize> {
        self.generators.iter().map(|g| g.len()).min()
    }

    /// The common generator degree, if all generators share one.
    pub fn pure_degree(&self) -> Option<usize> {
        let q = self.initial_degree()?;
        self.generators.iter().all(|g| g.len() == q).then_some(q)
    }

    pub fn sum(&self, other: &SquarefreeMonomialIdeal) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidParams("ambient rings differ".into()));
        }
        SquarefreeMonomialIdeal::new(self.n, self.generators.iter().chain(&other.generators).copied())
    }

    /// `Δ` with `I_Δ = I`: faces are the supports containing no generator.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let gens = &self.generators;
        SimplicialComplex::from_face_predicate(self.n, |face, added| {
            !gens.iter().any(|g| g.contains(added) && g.is_subset(face))
        })
    }

    /// `I^∨`, generated by the complements of the facets of the Stanley-Reisner complex.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let ground = VertexSet::full(self.n);
        let facets = self.stanley_reisner_complex();
        SquarefreeMonomialIdeal::new(self.n, facets.facets().iter().map(|f| ground.difference(*f)))
    }

    /// `P_{M}` for each minimal generator `M`.
    pub fn prime_components(&self) -> Vec<PrimeComponent> {
        self.generators.iter().map(|g| PrimeComponent(*g)).collect()
    }

    /// `P_1 ∩ ⋯ ∩ P_q` computed by iterated lcm of generators.
    pub fn intersect_primes(n: usize, primes: &[PrimeComponent]) -> Result<Self> {
        let Some((first, rest)) = primes.split_first() else {
            return Err(Error::InvalidParams("empty intersection".into()));
        };
        let mut gens: Vec<VertexSet> = first.variables().iter().map(VertexSet::singleton).collect();
        for p in rest {
            // (A) ∩ (B) for monomial ideals is generated by pairwise lcms.
            let next: Vec<VertexSet> =
                gens.iter().flat_map(|g| p.variables().iter().map(move |v| g.with(v))).collect();
            gens = minimal_elements(next);
        }
        SquarefreeMonomialIdeal::new(n, gens)
    }
}

impl fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(n={}, {})", self.n, self)
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
