//! Graded Betti tables and the invariants read off them.
//!
//! Tables of `S/I` are computed with Hochster's formula
//!
//! ```text
//! β_{i,j}(S/I) = Σ_{W ⊆ [n], |W| = j} dim H̃_{j-i-1}(Δ_W; K)
//! ```
//!
//! where `Δ` is the Stanley-Reisner complex of `I`. The sum runs over all
//! `2^n` vertex subsets, which is why `n` is capped by an enumeration bound.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{is_cohen_macaulay, reduced_homology_pruned};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::vertex::VertexSet;

/// Default cap on `n` for Hochster enumeration (`2^16` subsets).
pub const DEFAULT_HOCHSTER_BOUND: usize = 16;

/// Which module a table resolves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subject {
    /// `S/I`
    Quotient,
    /// `I`
    Ideal,
}

/// Graded Betti numbers `β_{i,j}` stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub subject: Subject,
    pub n: usize,
    pub field: FieldSpec,
    /// `(i, j) -> β_{i,j}`, nonzero entries only. Serialized as `[i, j, β]` triples.
    #[serde(with = "sparse")]
    entries: BTreeMap<(usize, usize), u64>,
}

mod sparse {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(entries: &BTreeMap<(usize, usize), u64>, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(usize, usize, u64)> = entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        triples.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), u64>, D::Error> {
        let triples = Vec::<(usize, usize, u64)>::deserialize(d)?;
        Ok(triples.into_iter().filter(|t| t.2 > 0).map(|(i, j, b)| ((i, j), b)).collect())
    }
}

impl BettiTable {
    pub fn new(subject: Subject, n: usize, field: FieldSpec) -> Self {
        BettiTable { subject, n, field, entries: BTreeMap::new() }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries as `(i, j, β_{i,j})`, ordered by `(i, j)`.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// `t_i = max{ j : β_{i,j} ≠ 0 }`.
    pub fn max_degree(&self, i: usize) -> Option<usize> {
        self.triples().filter(|t| t.0 == i).map(|t| t.1).max()
    }

    /// `max{ j - i : β_{i,j} ≠ 0 }` of whatever module the table describes.
    pub fn regularity(&self) -> Option<usize> {
        self.triples().map(|(i, j, _)| j - i).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.triples().map(|t| t.0).max()
    }

    /// `min{ j : β_{0,j} ≠ 0 }`.
    pub fn initial_degree(&self) -> Option<usize> {
        self.triples().filter(|t| t.0 == 0).map(|t| t.1).min()
    }

    /// `Σ_i (-1)^i β_{i,j}` for every degree `j` present.
    pub fn alternating_sums(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (i, j, b) in self.triples() {
            let signed = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            *out.entry(j).or_insert(0) += signed;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// `β_{i,j}(I) = β_{i+1,j}(S/I)`.
    pub fn to_ideal(&self) -> Result<BettiTable> {
        if self.subject != Subject::Quotient {
            return Err(Error::WrongSubject);
        }
        let mut out = BettiTable::new(Subject::Ideal, self.n, self.field);
        for (i, j, b) in self.triples().filter(|t| t.0 > 0) {
            out.add(i - 1, j, b);
        }
        Ok(out)
    }
}

/// Row `r` lists `β_{i, i+r}`, in the usual Macaulay2-style layout.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.projective_dimension() else {
            return writeln!(f, "(zero module)");
        };
        let reg = self.regularity().unwrap_or(0);
        let low = self.triples().map(|(i, j, _)| j - i).min().unwrap_or(0);
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for r in low..=reg {
            write!(f, "{:>5}:", r)?;
            for i in 0..=pd {
                match self.get(i, i + r) {
                    0 => write!(f, "{:>6}", ".")?,
                    b => write!(f, "{b:>6}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Table of `S/I` by Hochster's formula, with the default enumeration bound.
pub fn betti_hochster(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_hochster_bounded(ideal, field, DEFAULT_HOCHSTER_BOUND)
}

/// Table of `S/I` by Hochster's formula. The zero ideal yields the table of `S`
/// itself (`β_{0,0} = 1` only), whose ideal table is empty.
pub fn betti_hochster_bounded(ideal: &SquarefreeMonomialIdeal, field: FieldSpec, bound: usize) -> Result<BettiTable> {
    let n = ideal.n();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut table = BettiTable::new(Subject::Quotient, n, field);
    if ideal.is_zero() {
        table.add(0, 0, 1);
        return Ok(table);
    }
    let delta = ideal.stanley_reisner_complex();
    let counts: BTreeMap<(usize, usize), u64> = (0..1u64 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, bits| {
            let w = VertexSet::from_bits(bits);
            let j = w.len();
            for (k, rank) in reduced_homology_pruned(&delta.induced(w), field).nonzero() {
                // H̃_k(Δ_W) contributes to β_{i,j} with k = j - i - 1.
                let i = (j as isize - k - 1) as usize;
                *acc.entry((i, j)).or_insert(0) += rank as u64;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        });
    for ((i, j), b) in counts {
        table.add(i, j, b);
    }
    Ok(table)
}

/// Table of `I` itself.
pub fn betti_ideal(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_hochster(ideal, field)?.to_ideal()
}

/// `reg(I) = max{ j - i : β_{i,j}(I) ≠ 0 }`; `None` for the zero ideal.
pub fn regularity(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<Option<usize>> {
    Ok(betti_ideal(ideal, field)?.regularity())
}

/// `true` iff every generator has degree `d` and `β_{i,j}(I) = 0` off `j = i + d`.
///
/// The zero ideal counts as linear so that reductions ending at the empty
/// complement compose.
pub fn has_linear_resolution(ideal: &SquarefreeMonomialIdeal, d: usize, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Ok(true);
    }
    if ideal.generators().iter().any(|g| g.len() != d) {
        return Err(Error::MixedDegrees);
    }
    let table = betti_ideal(ideal, field)?;
    let linear = table.triples().all(|(i, j, _)| j == i + d);
    Ok(linear)
}

/// `depth S/I = n - pd(S/I)` (Auslander-Buchsbaum).
pub fn depth_of_quotient(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let table = betti_hochster(ideal, field)?;
    Ok(ideal.n() - table.projective_dimension().unwrap_or(0))
}

/// `dim S/I = dim Δ + 1`, the largest facet size of the Stanley-Reisner complex.
pub fn dimension_of_quotient(ideal: &SquarefreeMonomialIdeal) -> usize {
    ideal.stanley_reisner_complex().facets().iter().map(|f| f.len()).max().unwrap_or(0)
}

/// Both sides of "`I` has a `q`-linear resolution iff `S/I^∨` is Cohen-Macaulay of dimension `n - q`".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EagonReinerCheck {
    pub degree: usize,
    pub linear: bool,
    pub dual_cohen_macaulay: bool,
    pub dual_dimension: usize,
}

impl EagonReinerCheck {
    pub fn dual_side(&self, n: usize) -> bool {
        self.dual_cohen_macaulay && self.dual_dimension + self.degree == n
    }

    pub fn holds(&self, n: usize) -> bool {
        self.linear == self.dual_side(n)
    }
}

/// Evaluates both sides independently: linearity from the Hochster table of `I`,
/// Cohen-Macaulayness of `S/I^∨` by Reisner's criterion on links.
pub fn eagon_reiner_check(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<EagonReinerCheck> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let degree = ideal.pure_degree().ok_or(Error::MixedDegrees)?;
    let linear = has_linear_resolution(ideal, degree, field)?;
    let dual = ideal.alexander_dual()?;
    let dual_complex = dual.stanley_reisner_complex();
    let dual_cohen_macaulay = is_cohen_macaulay(&dual_complex, field)?;
    Ok(EagonReinerCheck { degree, linear, dual_cohen_macaulay, dual_dimension: dimension_of_quotient(&dual) })
}

/// "`dim S/I^∨ - depth S/I^∨ = reg I - indeg I`", valid when `dim S/I <= n - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TeraiCheck {
    Inapplicable { quotient_dimension: usize },
    Evaluated { dual_dimension: usize, dual_depth: usize, regularity: usize, initial_degree: usize },
}

impl TeraiCheck {
    /// `None` when the hypothesis fails.
    pub fn holds(&self) -> Option<bool> {
        match *self {
            TeraiCheck::Inapplicable { .. } => None,
            TeraiCheck::Evaluated { dual_dimension, dual_depth, regularity, initial_degree } => {
                Some(dual_dimension as isize - dual_depth as isize == regularity as isize - initial_degree as isize)
            }
        }
    }
}

pub fn terai_identity_check(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<TeraiCheck> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let quotient_dimension = dimension_of_quotient(ideal);
    if quotient_dimension + 2 > ideal.n() {
        return Ok(TeraiCheck::Inapplicable { quotient_dimension });
    }
    let dual = ideal.alexander_dual()?;
    let table = betti_ideal(ideal, field)?;
    Ok(TeraiCheck::Evaluated {
        dual_dimension: dimension_of_quotient(&dual),
        dual_depth: depth_of_quotient(&dual, field)?,
        regularity: table.regularity().ok_or(Error::ZeroIdeal)?,
        initial_degree: table.initial_degree().ok_or(Error::ZeroIdeal)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::Clutter;
    use crate::fixtures::hexahedron;
    use crate::ideal::NamedIdeal;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(n, gens.iter().map(|g| g.iter().copied().collect())).unwrap()
    }

    const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::GF2];

    #[test]
    fn principal_ideal() {
        let t = betti_hochster(&ideal(3, &[&[1, 2, 3]]), FieldSpec::Rationals).unwrap();
        assert_eq!(t.triples().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 3, 1)]);
        let i = t.to_ideal().unwrap();
        assert_eq!(i.triples().collect::<Vec<_>>(), vec![(0, 3, 1)]);
        assert_eq!(i.to_ideal().unwrap_err(), Error::WrongSubject);
    }

    #[test]
    fn maximal_clutter_is_linear() {
        let i = Clutter::maximal(5, 3).unwrap().circuit_ideal();
        for field in FIELDS {
            let t = betti_ideal(&i, field).unwrap();
            assert!(t.triples().all(|(i, j, _)| j == i + 3));
            assert_eq!(regularity(&i, field).unwrap(), Some(3));
        }
        assert!(has_linear_resolution(&Clutter::maximal(6, 3).unwrap().circuit_ideal(), 3, FieldSpec::GF2).unwrap());
    }

    #[test]
    fn hexahedron_complement_has_regularity_four() {
        let i = hexahedron().complement_ideal();
        for field in FIELDS {
            assert_eq!(regularity(&i, field).unwrap(), Some(4));
            assert!(!has_linear_resolution(&i, 3, field).unwrap());
            let dual = i.alexander_dual().unwrap();
            assert_eq!(depth_of_quotient(&dual, field).unwrap(), 1);
            assert_eq!(dimension_of_quotient(&dual), 2);
        }
    }

    #[test]
    fn zero_ideal_conventions() {
        let zero = SquarefreeMonomialIdeal::zero(4).unwrap();
        let t = betti_hochster(&zero, FieldSpec::GF2).unwrap();
        assert_eq!(t.triples().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        assert_eq!(regularity(&zero, FieldSpec::GF2).unwrap(), None);
        assert!(has_linear_resolution(&zero, 3, FieldSpec::GF2).unwrap());
        assert_eq!(depth_of_quotient(&zero, FieldSpec::GF2).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(dimension_of_quotient(&zero), 4);
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        let i = ideal(4, &[&[1, 2], &[2, 3, 4]]);
        assert_eq!(has_linear_resolution(&i, 2, FieldSpec::GF2).unwrap_err(), Error::MixedDegrees);
        assert_eq!(eagon_reiner_check(&i, FieldSpec::GF2).unwrap_err(), Error::MixedDegrees);
    }

    #[test]
    fn enumeration_bound() {
        let i = ideal(5, &[&[1, 2]]);
        assert_eq!(betti_hochster_bounded(&i, FieldSpec::GF2, 4).unwrap_err(), Error::BoundExceeded { n: 5, bound: 4 });
    }

    #[test]
    fn named_ideal_depths_and_dimensions() {
        let t5 = SquarefreeMonomialIdeal::named(NamedIdeal::Tn, 5).unwrap();
        assert_eq!(depth_of_quotient(&t5, FieldSpec::GF2).unwrap(), 3);
        let t15 = SquarefreeMonomialIdeal::named(NamedIdeal::T1n, 5).unwrap();
        assert_eq!(depth_of_quotient(&t15, FieldSpec::Rationals).unwrap(), 2);
        assert_eq!(dimension_of_quotient(&t15), 2);
        let t16p = SquarefreeMonomialIdeal::named(NamedIdeal::T1nPrime, 6).unwrap();
        assert_eq!(dimension_of_quotient(&t16p), 4);
        let dual = hexahedron().complement_ideal().alexander_dual().unwrap();
        assert_eq!(dimension_of_quotient(&dual), 2);
    }

    #[test]
    fn eagon_reiner_and_terai_on_fixtures() {
        let hex = hexahedron().complement_ideal();
        let er = eagon_reiner_check(&hex, FieldSpec::GF2).unwrap();
        assert!(!er.linear && !er.dual_side(5) && er.holds(5));
        let terai = terai_identity_check(&hex, FieldSpec::GF2).unwrap();
        assert_eq!(
            terai,
            TeraiCheck::Evaluated { dual_dimension: 2, dual_depth: 1, regularity: 4, initial_degree: 3 }
        );
        assert_eq!(terai.holds(), Some(true));

        let full = Clutter::maximal(5, 3).unwrap().circuit_ideal();
        let er = eagon_reiner_check(&full, FieldSpec::Rationals).unwrap();
        assert!(er.linear && er.dual_side(5));
        let terai = terai_identity_check(&full, FieldSpec::Rationals).unwrap();
        assert_eq!(terai.holds(), Some(true));

        // dim S/(x1) = n - 1 violates the hypothesis.
        let x1 = ideal(3, &[&[1]]);
        assert_eq!(terai_identity_check(&x1, FieldSpec::GF2).unwrap(), TeraiCheck::Inapplicable { quotient_dimension: 2 });
    }

    #[test]
    fn display_layout() {
        let t = betti_hochster(&hexahedron().complement_ideal(), FieldSpec::GF2).unwrap();
        let text = t.to_string();
        assert!(text.lines().count() >= 3, "{text}");
    }

    #[test]
    fn json_uses_sparse_triples() {
        let table = betti_hochster(&hexahedron().complement_ideal(), FieldSpec::GF2).unwrap();
        let json = serde_json::to_value(&table).unwrap();
        assert_eq!(json["entries"][0], serde_json::json!([0, 0, 1]));
        assert_eq!(serde_json::from_value::<BettiTable>(json).unwrap(), table);
    }
}
