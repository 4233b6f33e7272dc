//! Everything the toolkit can say about one ideal, per field, with cross-checks.

use serde::{Deserialize, Serialize};

use crate::betti::{
    betti_hochster_bounded, dimension_of_quotient, eagon_reiner_check, terai_identity_check, BettiTable,
    EagonReinerCheck, TeraiCheck, DEFAULT_HOCHSTER_BOUND,
};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::homology::is_cohen_macaulay;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::koszul::{betti_koszul_oracle_with, DEFAULT_ORACLE_BOUND};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub fields: Vec<FieldSpec>,
    pub bound: usize,
    /// Compare against the Koszul oracle when `n` is within its bound.
    pub oracle: bool,
    /// Also analyse the Alexander dual.
    pub dual: bool,
    /// Run Reisner's criterion on the Stanley-Reisner complex.
    pub cohen_macaulay: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            fields: vec![FieldSpec::GF2, FieldSpec::Rationals],
            bound: DEFAULT_HOCHSTER_BOUND,
            oracle: false,
            dual: false,
            cohen_macaulay: false,
        }
    }
}

/// Invariants of `S/I` and `I` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldAnalysis {
    pub field: FieldSpec,
    /// Betti table of `S/I`.
    pub table: BettiTable,
    /// `reg I`; `None` for the zero ideal.
    pub regularity: Option<usize>,
    pub initial_degree: Option<usize>,
    pub projective_dimension: Option<usize>,
    /// `depth S/I`; `None` for the zero ideal.
    pub depth: Option<usize>,
    pub dimension: usize,
    /// Generated in one degree `q` with a `q`-linear resolution. The zero ideal counts as linear.
    pub linear: bool,
    pub cohen_macaulay: Option<bool>,
    pub eagon_reiner: Option<EagonReinerCheck>,
    pub terai: Option<TeraiCheck>,
    /// `Some(true)` when the Koszul oracle reproduced the table.
    pub oracle_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealAnalysis {
    pub n: usize,
    pub generators: usize,
    pub per_field: Vec<FieldAnalysis>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub ideal: IdealAnalysis,
    pub dual: Option<IdealAnalysis>,
    /// Disagreements between fields: informative, not failures.
    pub warnings: Vec<String>,
    /// Oracle mismatches and violated theorems: these indicate a bug.
    pub failures: Vec<String>,
}

pub fn analyze(ideal: &SquarefreeMonomialIdeal, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let mut warnings = Vec::new();
    let mut failures = Vec::new();
    let main = analyze_one(ideal, options, "I", &mut warnings, &mut failures)?;
    let dual = if options.dual && !ideal.is_zero() {
        Some(analyze_one(&ideal.alexander_dual()?, options, "I^v", &mut warnings, &mut failures)?)
    } else {
        None
    };
    Ok(AnalysisReport { ideal: main, dual, warnings, failures })
}

fn analyze_one(
    ideal: &SquarefreeMonomialIdeal,
    options: &AnalysisOptions,
    name: &str,
    warnings: &mut Vec<String>,
    failures: &mut Vec<String>,
) -> Result<IdealAnalysis> {
    let n = ideal.n();
    let mut per_field = Vec::with_capacity(options.fields.len());
    for &field in &options.fields {
        let table = betti_hochster_bounded(ideal, field, options.bound)?;
        let ideal_table = table.to_ideal()?;
        let degree = ideal.pure_degree();
        let linear = ideal.is_zero() || degree.is_some_and(|q| ideal_table.triples().all(|(i, j, _)| j == i + q));
        let (eagon_reiner, terai) = if ideal.is_zero() {
            (None, None)
        } else {
            let er = degree.map(|_| eagon_reiner_check(ideal, field)).transpose()?;
            (er, Some(terai_identity_check(ideal, field)?))
        };
        if let Some(er) = &eagon_reiner {
            if !er.holds(n) {
                failures.push(format!("{name} over {field}: linearity and the dual Cohen-Macaulay test disagree"));
            }
        }
        if terai.as_ref().and_then(TeraiCheck::holds) == Some(false) {
            failures.push(format!("{name} over {field}: dim - depth of the dual differs from reg - indeg"));
        }
        let oracle_agrees = if options.oracle && n <= DEFAULT_ORACLE_BOUND {
            let agrees = betti_koszul_oracle_with(ideal, field, DEFAULT_ORACLE_BOUND, 1)? == table;
            if !agrees {
                failures.push(format!("{name} over {field}: Hochster and Koszul tables differ"));
            }
            Some(agrees)
        } else {
            None
        };
        let cohen_macaulay =
            if options.cohen_macaulay { Some(is_cohen_macaulay(&ideal.stanley_reisner_complex(), field)?) } else { None };
        let projective_dimension = table.projective_dimension();
        per_field.push(FieldAnalysis {
            field,
            regularity: ideal_table.regularity(),
            initial_degree: ideal_table.initial_degree(),
            projective_dimension,
            depth: (!ideal.is_zero()).then(|| n - projective_dimension.unwrap_or(0)),
            dimension: dimension_of_quotient(ideal),
            linear,
            cohen_macaulay,
            eagon_reiner,
            terai,
            oracle_agrees,
            table,
        });
    }
    for pair in per_field.windows(2) {
        if pair[0].table.triples().ne(pair[1].table.triples()) {
            warnings.push(format!(
                "{name}: Betti tables over {} and {} differ, so the answer depends on the characteristic",
                pair[0].field, pair[1].field
            ));
        }
    }
    Ok(IdealAnalysis { n, generators: ideal.generators().len(), per_field })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::Clutter;
    use crate::fixtures::hexahedron;

    #[test]
    fn bipyramid_report() {
        let opts = AnalysisOptions { oracle: true, dual: true, cohen_macaulay: true, ..Default::default() };
        let report = analyze(&hexahedron().complement_ideal(), &opts).unwrap();
        assert!(report.failures.is_empty() && report.warnings.is_empty(), "{report:?}");
        for fa in &report.ideal.per_field {
            assert_eq!((fa.regularity, fa.linear, fa.oracle_agrees), (Some(4), false, Some(true)));
            assert_eq!(fa.terai.as_ref().and_then(TeraiCheck::holds), Some(true));
        }
        let dual = report.dual.unwrap();
        assert_eq!(dual.per_field[0].depth, Some(1));
        assert_eq!(dual.per_field[0].dimension, 2);
    }

    #[test]
    fn zero_ideal_report() {
        let report = analyze(&Clutter::maximal(5, 3).unwrap().complement_ideal(), &AnalysisOptions::default()).unwrap();
        let fa = &report.ideal.per_field[0];
        assert_eq!((fa.regularity, fa.depth, fa.linear), (None, None, true));
        assert!(fa.eagon_reiner.is_none() && fa.terai.is_none());
    }

    #[test]
    fn torsion_triggers_a_warning() {
        // Stanley-Reisner ideal of the six-vertex projective plane: minimal non-faces.
        let rp2 = crate::SimplicialComplex::new(
            6,
            [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]]
                .map(crate::VertexSet::from),
        )
        .unwrap();
        let ideal = SquarefreeMonomialIdeal::new(
            6,
            crate::VertexSet::full(6).subsets().filter(|s| !rp2.contains_face(*s) && s.iter().all(|v| rp2.contains_face(s.without(v)))),
        )
        .unwrap();
        let report = analyze(&ideal, &AnalysisOptions::default()).unwrap();
        assert_eq!(report.warnings.len(), 1, "{report:?}");
        assert!(report.failures.is_empty());
    }
}
