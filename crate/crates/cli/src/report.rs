//! The JSON report and its plain-text rendering.

use std::fmt::Write as _;
use std::path::Path;

use linres::analysis::{AnalysisReport, IdealAnalysis};
use linres::reduction::{ReductionCertificate, Verdict};
use linres::triangulation::{DualAlmostCm, NonlinearityCertificate, SubclutterCheck, TriangulationReport};
use linres::{Clutter, FieldSpec, SquarefreeMonomialIdeal, VertexSet};
use serde::Serialize;

use crate::IdealChoice;

/// Bumped whenever a field is renamed or removed.
pub const SCHEMA_VERSION: &str = "linres-report/1";

#[derive(Serialize)]
pub struct ReportDocument<'a, T> {
    pub schema: &'static str,
    pub command: &'static str,
    pub results: &'a [T],
}

impl<'a, T> ReportDocument<'a, T> {
    pub fn new(command: &'static str, results: &'a [T]) -> Self {
        ReportDocument { schema: SCHEMA_VERSION, command, results }
    }
}

#[derive(Serialize)]
pub struct AnalyzeResult {
    pub file: String,
    pub n: usize,
    pub d: usize,
    pub circuits: usize,
    pub ideal: &'static str,
    pub generators: Vec<VertexSet>,
    pub analysis: AnalysisReport,
}

#[derive(Serialize)]
pub struct ReduceResult {
    pub file: String,
    pub certificate: ReductionCertificate,
    /// Linearity from the Betti table, when `n` is within the enumeration bound.
    pub hochster_linear: Option<Vec<(FieldSpec, bool)>>,
}

#[derive(Serialize)]
pub struct TriangulateResult {
    pub file: String,
    pub n: usize,
    pub report: TriangulationReport,
    pub nonlinearity: Option<NonlinearityCertificate>,
    pub subclutters: Option<Vec<SubclutterCheck>>,
    pub dual_almost_cm: Option<Vec<(FieldSpec, DualAlmostCm)>>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl AnalyzeResult {
    pub(crate) fn new(
        path: &Path,
        clutter: &Clutter,
        choice: IdealChoice,
        ideal: &SquarefreeMonomialIdeal,
        analysis: AnalysisReport,
    ) -> Self {
        AnalyzeResult {
            file: path.display().to_string(),
            n: clutter.n(),
            d: clutter.d(),
            circuits: clutter.len(),
            ideal: match choice {
                IdealChoice::Complement => "complement",
                IdealChoice::Circuits => "circuits",
            },
            generators: ideal.generators().to_vec(),
            analysis,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let name = if self.ideal == "complement" { "I(C̄)" } else { "I(C)" };
        let _ = writeln!(
            s,
            "== {}: n={} d={} with {} circuits; {} has {} generators",
            self.file,
            self.n,
            self.d,
            self.circuits,
            name,
            self.generators.len()
        );
        section(&mut s, name, &self.analysis.ideal);
        if let Some(dual) = &self.analysis.dual {
            section(&mut s, "Alexander dual", dual);
        }
        for w in &self.analysis.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        for f in &self.analysis.failures {
            let _ = writeln!(s, "FAILURE: {f}");
        }
        s
    }
}

fn section(s: &mut String, name: &str, ideal: &IdealAnalysis) {
    for fa in &ideal.per_field {
        let reg = fa.regularity.map_or_else(|| "none (zero ideal)".to_string(), |r| r.to_string());
        let _ = writeln!(
            s,
            "{name} over {}: reg {reg}, indeg {}, pd(S/I) {}, depth {}, dim {}, linear {}",
            fa.field,
            opt(fa.initial_degree),
            opt(fa.projective_dimension),
            opt(fa.depth),
            fa.dimension,
            yes_no(fa.linear)
        );
        if let Some(cm) = fa.cohen_macaulay {
            let _ = writeln!(s, "  Cohen-Macaulay: {}", yes_no(cm));
        }
        if let Some(agrees) = fa.oracle_agrees {
            let _ = writeln!(s, "  Koszul oracle agrees: {}", yes_no(agrees));
        }
        for line in fa.table.to_string().lines() {
            let _ = writeln!(s, "  {line}");
        }
    }
}

impl ReduceResult {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.certificate;
        let _ = writeln!(s, "== {}: {} steps, verdict {:?}", self.file, c.steps.len(), c.verdict);
        for (k, step) in c.steps.iter().enumerate() {
            let _ = writeln!(s, "  {:>3}. {:?} [{}]", k + 1, step.action, step.justification.tag());
        }
        if c.verdict == Verdict::Inconclusive {
            let _ = writeln!(s, "  stuck at {} circuits with no simplicial edge", c.terminal.len());
        }
        for (field, linear) in self.hochster_linear.iter().flatten() {
            let _ = writeln!(s, "  Betti table over {field}: linear {}", yes_no(*linear));
        }
        s
    }
}

impl TriangulateResult {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let r = &self.report;
        let _ = writeln!(
            s,
            "== {}: 2-sphere triangulation on {} vertices, euler characteristic {}",
            self.file, self.n, r.euler_characteristic
        );
        if let Some(cert) = &self.nonlinearity {
            let _ = writeln!(
                s,
                "  reduced to the bipyramid in {} steps; isomorphism {:?}",
                cert.reduction.steps.len(),
                cert.isomorphism
            );
        }
        if let Some(checks) = &self.subclutters {
            let failing: Vec<String> = checks.iter().filter(|c| !c.passes()).map(|c| c.removed.to_string()).collect();
            let _ = writeln!(
                s,
                "  proper subclutters: {} checked, {} not linear{}",
                checks.len(),
                failing.len(),
                if failing.is_empty() { String::new() } else { format!(" ({})", failing.join(", ")) }
            );
        }
        for (field, d) in self.dual_almost_cm.iter().flatten() {
            let _ = writeln!(
                s,
                "  dual over {field}: pure {}, Cohen-Macaulay {}, {}/{} facet augmentations Cohen-Macaulay, almost CM {}",
                yes_no(d.pure),
                yes_no(d.cohen_macaulay),
                d.augmentations_cohen_macaulay,
                d.augmentations,
                yes_no(d.holds(self.n))
            );
        }
        s
    }
}
