//! Brute-force Betti numbers from the Koszul complex, used to cross-check
//! Hochster's formula.
//!
//! `β_{i,j}(S/I) = dim_K H_i(K(x_1..x_n) ⊗ S/I)_j`. The Koszul complex is
//! `Z^n`-graded and its differential preserves the multidegree, so each
//! multidegree `a` is handled on its own: the degree-`a` part of
//! `K_i ⊗ S/I` has basis `e_σ ⊗ x^{a - σ}` for `|σ| = i`, `σ ⊆ supp a` and
//! `x^{a - σ} ∉ I`. Nothing here touches simplicial complexes.
//!
//! Betti multidegrees of a monomial ideal divide the lcm of its generators
//! (Taylor resolution), which for a square-free ideal is square-free, so the
//! default exponent box is `{0, 1}^n`. Larger boxes are accepted for tests that
//! want to see the vanishing elsewhere.

use std::collections::HashMap;

use crate::betti::{BettiTable, Subject};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::linalg::IntMatrix;
use crate::vertex::VertexSet;

pub const DEFAULT_ORACLE_BOUND: usize = 8;

pub fn betti_koszul_oracle(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_koszul_oracle_with(ideal, field, DEFAULT_ORACLE_BOUND, 1)
}

/// Oracle over the multidegree box `{0..=max_exponent}^n`.
pub fn betti_koszul_oracle_with(
    ideal: &SquarefreeMonomialIdeal,
    field: FieldSpec,
    bound: usize,
    max_exponent: u8,
) -> Result<BettiTable> {
    let n = ideal.n();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut table = BettiTable::new(Subject::Quotient, n, field);
    let mut exps = vec![0u8; n];
    loop {
        let total: usize = exps.iter().map(|&e| e as usize).sum();
        for (i, dim) in koszul_homology_at(ideal, &exps, field).into_iter().enumerate() {
            table.add(i, total, dim as u64);
        }
        // odometer step through the box
        let mut k = 0;
        while k < n && exps[k] == max_exponent {
            exps[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        exps[k] += 1;
    }
    Ok(table)
}

/// `dim H_i` of the Koszul complex of `S/I` in multidegree `exps`, for `i = 0..=|supp|`.
fn koszul_homology_at(ideal: &SquarefreeMonomialIdeal, exps: &[u8], field: FieldSpec) -> Vec<usize> {
    let support: VertexSet = exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k + 1).collect();
    // Support of the monomial x^{a - σ}.
    let remainder_support = |sigma: VertexSet| -> VertexSet {
        exps.iter()
            .enumerate()
            .filter(|&(k, &e)| e as usize > usize::from(sigma.contains(k + 1)))
            .map(|(k, _)| k + 1)
            .collect()
    };
    let survives = |sigma: VertexSet| !ideal.contains_monomial(remainder_support(sigma));

    let top = support.len();
    let basis: Vec<Vec<VertexSet>> =
        (0..=top).map(|i| support.subsets_of_size(i).into_iter().filter(|s| survives(*s)).collect()).collect();
    if basis.iter().all(Vec::is_empty) {
        return Vec::new();
    }

    // rank of d_i : K_i → K_{i-1}
    let mut ranks = vec![0usize; top + 2];
    for i in 1..=top {
        let (cols, rows) = (&basis[i], &basis[i - 1]);
        if cols.is_empty() || rows.is_empty() {
            continue;
        }
        let index: HashMap<VertexSet, usize> = rows.iter().enumerate().map(|(r, s)| (*s, r)).collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, sigma) in cols.iter().enumerate() {
            for (pos, k) in sigma.iter().enumerate() {
                // e_σ ⊗ x^m ↦ ± e_{σ∖k} ⊗ x_k x^m; the image vanishes when it lies in I.
                if let Some(&r) = index.get(&sigma.without(k)) {
                    m.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        ranks[i] = m.rank(field);
    }
    (0..=top).map(|i| basis[i].len() - ranks[i] - ranks[i + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_hochster;
    use crate::fixtures::hexahedron;

    #[test]
    fn principal_ideal_matches() {
        let i = SquarefreeMonomialIdeal::new(3, [VertexSet::from([1, 2, 3])]).unwrap();
        let oracle = betti_koszul_oracle(&i, FieldSpec::Rationals).unwrap();
        assert_eq!(oracle.triples().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 3, 1)]);
        assert_eq!(oracle, betti_hochster(&i, FieldSpec::Rationals).unwrap());
    }

    #[test]
    fn hexahedron_matches_hochster() {
        let i = hexahedron().complement_ideal();
        for field in [FieldSpec::Rationals, FieldSpec::GF2] {
            assert_eq!(betti_koszul_oracle(&i, field).unwrap(), betti_hochster(&i, field).unwrap());
        }
    }

    #[test]
    fn non_squarefree_multidegrees_vanish() {
        let i = hexahedron().complement_ideal();
        let wide = betti_koszul_oracle_with(&i, FieldSpec::GF2, 8, 2).unwrap();
        assert_eq!(wide, betti_koszul_oracle(&i, FieldSpec::GF2).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let i = SquarefreeMonomialIdeal::new(9, [VertexSet::from([1, 2])]).unwrap();
        assert_eq!(betti_koszul_oracle(&i, FieldSpec::GF2).unwrap_err(), Error::BoundExceeded { n: 9, bound: 8 });
    }
}
