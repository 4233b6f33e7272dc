//! The `linres` command line: analyse, reduce and triangulate clutter files.
//!
//! Exit codes are stable: 0 success, 2 unreadable or malformed input, 3 an
//! enumeration bound was exceeded, 4 an internal cross-check failed, 5 the input
//! is not a sphere triangulation, 6 a certificate did not replay. Anything else
//! (a violated precondition, bad generator parameters) exits with 1.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use linres::analysis::{analyze, AnalysisOptions};
use linres::betti::{has_linear_resolution, DEFAULT_HOCHSTER_BOUND};
use linres::format::{parse_any, write_clutter, write_clutter_json};
use linres::reduction::{reduce_to_empty, replay, ReductionCertificate, Strategy, Verdict};
use linres::triangulation::{
    dual_almost_cm_check, generate, proper_subclutter_checks, reduce_sphere_triangulation_with,
    verify_sphere_triangulation, NonlinearityCertificate, SphereFamily,
};
use linres::{Clutter, FieldSpec};
use rayon::prelude::*;

mod report;

pub use report::{
    AnalyzeResult, ReduceResult, ReportDocument, TriangulateResult, SCHEMA_VERSION,
};

#[derive(Parser, Debug)]
#[command(name = "linres", version, about = "Linear resolutions of circuit ideals of uniform clutters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti tables, regularity, depth and the duality checks for each file.
    Analyze(AnalyzeArgs),
    /// Search for simplicial-edge deletions that empty the clutter.
    Reduce(ReduceArgs),
    /// Sphere triangulation checks and the reduction to the bipyramid.
    Triangulate(TriangulateArgs),
    /// Write a generated clutter in canonical form.
    Gen(GenArgs),
    /// Re-check a certificate against a clutter.
    Replay(ReplayArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Emit the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Worker threads for processing several files.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealChoice {
    /// `I(C̄)`, generated by the d-sets that are not circuits.
    Complement,
    /// `I(C)`, generated by the circuits.
    Circuits,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Coefficient field: `q`, `2` or `p:<prime>`. Repeatable; defaults to `2` and `q`.
    #[arg(long = "field", value_parser = parse_field)]
    pub fields: Vec<FieldSpec>,
    /// Largest ground set Hochster enumeration will accept.
    #[arg(long, default_value_t = DEFAULT_HOCHSTER_BOUND)]
    pub bound: usize,
    /// Cross-check every table against the Koszul complex (n <= 8).
    #[arg(long)]
    pub oracle: bool,
    /// Also analyse the Alexander dual.
    #[arg(long)]
    pub dual: bool,
    /// Test the Stanley-Reisner ring for the Cohen-Macaulay property.
    #[arg(long)]
    pub cm: bool,
    #[arg(long, value_enum, default_value_t = IdealChoice::Complement)]
    pub ideal: IdealChoice,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Node budget for backtracking over deletion orders; 0 is greedy only.
    #[arg(long, default_value_t = 0)]
    pub backtrack: usize,
    /// Write the certificate as JSON (single input file only).
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(long = "field", value_parser = parse_field)]
    pub fields: Vec<FieldSpec>,
    #[arg(long, default_value_t = DEFAULT_HOCHSTER_BOUND)]
    pub bound: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct TriangulateArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Check the sphere conditions (always done; this flag only asks for nothing else).
    #[arg(long)]
    pub verify: bool,
    /// Flip and contract down to the bipyramid.
    #[arg(long)]
    pub reduce: bool,
    /// Check every one-face-removed subclutter for linearity.
    #[arg(long)]
    pub subclutters: bool,
    /// Test the dual complex for being one facet short of Cohen-Macaulay.
    #[arg(long)]
    pub dualcm: bool,
    /// Node budget for the flip search.
    #[arg(long, default_value_t = linres::reduction::DEFAULT_MAX_NODES)]
    pub backtrack: usize,
    /// Write the non-linearity certificate as JSON (single input file only).
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(long = "field", value_parser = parse_field)]
    pub fields: Vec<FieldSpec>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Bipyramid,
    Octahedron,
    Icosahedron,
    Stacked,
    #[value(name = "random_sphere", alias = "random-sphere")]
    RandomSphere,
    /// All d-subsets of {1..n}.
    Cnd,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the JSON mirror instead of the text format.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ReplayArgs {
    pub certificate: PathBuf,
    pub clutter: PathBuf,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Bound(String),
    #[error("cross-check failed: {0}")]
    Mismatch(String),
    #[error("{0}")]
    NotATriangulation(String),
    #[error("replay failed: {0}")]
    Replay(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::NotATriangulation(_) => 5,
            CliError::Replay(_) => 6,
            CliError::Other(_) => 1,
        }
    }

    fn library(path: &Path, e: linres::Error) -> CliError {
        let msg = format!("{}: {e}", path.display());
        match e {
            linres::Error::BoundExceeded { .. } => CliError::Bound(msg),
            linres::Error::NotATriangulation(_) => CliError::NotATriangulation(msg),
            _ => CliError::Other(msg),
        }
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: linres::Error| format!("{e} (expected q, 2 or p:<prime>)"))
}

fn default_fields(fields: &[FieldSpec]) -> Vec<FieldSpec> {
    if fields.is_empty() {
        vec![FieldSpec::GF2, FieldSpec::Rationals]
    } else {
        fields.to_vec()
    }
}

pub fn read_clutter(path: &Path) -> Result<Clutter, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_any(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    fs::write(path, text + "\n").map_err(|e| CliError::Other(format!("{}: {e}", path.display())))
}

/// Runs `job` on every file with at most `jobs` threads, keeping input order.
fn for_each_file<T: Send>(
    files: &[PathBuf],
    jobs: Option<usize>,
    job: impl Fn(&Path) -> Result<T, CliError> + Sync,
) -> Vec<Result<T, CliError>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| files.par_iter().map(|f| job(f)).collect())
}

/// Prints the successes, then returns the first failure in input order.
fn finish<T: serde::Serialize>(
    command: &'static str,
    results: Vec<Result<T, CliError>>,
    output: &Output,
    text: impl Fn(&T) -> String,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut ok = Vec::new();
    let mut first_error = None;
    for r in results {
        match r {
            Ok(v) => ok.push(v),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    let io = |e: std::io::Error| CliError::Other(e.to_string());
    if output.json {
        let doc = ReportDocument::new(command, &ok);
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("report serializes")).map_err(io)?;
    } else {
        for r in &ok {
            write!(out, "{}", text(r)).map_err(io)?;
        }
    }
    first_error.map_or(Ok(()), Err)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(&args, out),
        Command::Reduce(args) => cmd_reduce(&args, out),
        Command::Triangulate(args) => cmd_triangulate(&args, out),
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Replay(args) => cmd_replay(&args, out),
    }
}

fn analyze_file(path: &Path, args: &AnalyzeArgs) -> Result<AnalyzeResult, CliError> {
    let clutter = read_clutter(path)?;
    let ideal = match args.ideal {
        IdealChoice::Complement => clutter.complement_ideal(),
        IdealChoice::Circuits => clutter.circuit_ideal(),
    };
    let options = AnalysisOptions {
        fields: default_fields(&args.fields),
        bound: args.bound,
        oracle: args.oracle,
        dual: args.dual,
        cohen_macaulay: args.cm,
    };
    let analysis = analyze(&ideal, &options).map_err(|e| CliError::library(path, e))?;
    Ok(AnalyzeResult::new(path, &clutter, args.ideal, &ideal, analysis))
}

pub fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let results = for_each_file(&args.files, args.output.jobs, |p| analyze_file(p, args));
    let failures: Vec<String> = results
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .flat_map(|r| r.analysis.failures.iter().map(move |f| format!("{}: {f}", r.file)))
        .collect();
    finish("analyze", results, &args.output, AnalyzeResult::to_text, out)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(failures.join("; ")))
    }
}

fn reduce_file(path: &Path, args: &ReduceArgs) -> Result<ReduceResult, CliError> {
    let clutter = read_clutter(path)?;
    let strategy =
        if args.backtrack == 0 { Strategy::Greedy } else { Strategy::Backtracking { max_nodes: args.backtrack } };
    let certificate = reduce_to_empty(&clutter, strategy).map_err(|e| CliError::library(path, e))?;
    let hochster_linear = if clutter.n() <= args.bound {
        let ideal = clutter.complement_ideal();
        let checks = default_fields(&args.fields)
            .into_iter()
            .map(|f| has_linear_resolution(&ideal, 3, f).map(|ok| (f, ok)))
            .collect::<linres::Result<Vec<_>>>()
            .map_err(|e| CliError::library(path, e))?;
        Some(checks)
    } else {
        None
    };
    let result = ReduceResult { file: path.display().to_string(), certificate, hochster_linear };
    if result.certificate.verdict == Verdict::LinearByReduction {
        if let Some((field, _)) = result.hochster_linear.iter().flatten().find(|(_, ok)| !ok) {
            return Err(CliError::Mismatch(format!(
                "{}: reduced to empty but the Hochster table over {field} is not linear",
                result.file
            )));
        }
    }
    Ok(result)
}

fn single_target(files: &[PathBuf], flag: &Option<PathBuf>) -> Result<(), CliError> {
    if flag.is_some() && files.len() != 1 {
        return Err(CliError::Other("--certificate needs exactly one input file".into()));
    }
    Ok(())
}

pub fn cmd_reduce(args: &ReduceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    single_target(&args.files, &args.certificate)?;
    let results = for_each_file(&args.files, args.output.jobs, |p| reduce_file(p, args));
    if let (Some(path), Some(Ok(r))) = (&args.certificate, results.first()) {
        write_json(path, &r.certificate)?;
    }
    finish("reduce", results, &args.output, ReduceResult::to_text, out)
}

fn triangulate_file(path: &Path, args: &TriangulateArgs) -> Result<TriangulateResult, CliError> {
    let clutter = read_clutter(path)?;
    let report = verify_sphere_triangulation(&clutter);
    if !report.verdict {
        return Err(CliError::NotATriangulation(format!(
            "{}: not a 2-sphere triangulation (euler characteristic {})",
            path.display(),
            report.euler_characteristic
        )));
    }
    let lib = |e| CliError::library(path, e);
    let fields = default_fields(&args.fields);
    let nonlinearity = if args.reduce {
        Some(reduce_sphere_triangulation_with(&clutter, args.backtrack).map_err(lib)?)
    } else {
        None
    };
    let subclutters = if args.subclutters { Some(proper_subclutter_checks(&clutter, &fields).map_err(lib)?) } else { None };
    let dual_almost_cm = if args.dualcm {
        let checks = fields
            .iter()
            .map(|&f| dual_almost_cm_check(&clutter, f).map(|r| (f, r)))
            .collect::<linres::Result<Vec<_>>>()
            .map_err(lib)?;
        Some(checks)
    } else {
        None
    };
    Ok(TriangulateResult { file: path.display().to_string(), n: clutter.n(), report, nonlinearity, subclutters, dual_almost_cm })
}

pub fn cmd_triangulate(args: &TriangulateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    single_target(&args.files, &args.certificate)?;
    let results = for_each_file(&args.files, args.output.jobs, |p| triangulate_file(p, args));
    if let (Some(path), Some(Ok(r))) = (&args.certificate, results.first()) {
        let cert: &NonlinearityCertificate = r
            .nonlinearity
            .as_ref()
            .ok_or_else(|| CliError::Other("--certificate needs --reduce".into()))?;
        write_json(path, cert)?;
    }
    finish("triangulate", results, &args.output, TriangulateResult::to_text, out)
}

pub fn generate_clutter(args: &GenArgs) -> Result<Clutter, CliError> {
    let need_n = || args.n.ok_or_else(|| CliError::Other(format!("{:?} needs --n", args.kind)));
    let family = match args.kind {
        GenKind::Bipyramid => SphereFamily::Bipyramid,
        GenKind::Octahedron => SphereFamily::Octahedron,
        GenKind::Icosahedron => SphereFamily::Icosahedron,
        GenKind::Stacked => SphereFamily::Stacked { n: need_n()?, seed: args.seed },
        GenKind::RandomSphere => SphereFamily::RandomSphere { n: need_n()?, seed: args.seed },
        GenKind::Cnd => {
            let d = args.d.ok_or_else(|| CliError::Other("cnd needs --d".into()))?;
            return Clutter::maximal(need_n()?, d).map_err(|e| CliError::Other(e.to_string()));
        }
    };
    generate(family).map_err(|e| CliError::Other(e.to_string()))
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let clutter = generate_clutter(args)?;
    let text = if args.json { write_clutter_json(&clutter) + "\n" } else { write_clutter(&clutter) };
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Other(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Other(e.to_string())),
    }
}

/// Accepts either a reduction certificate or a non-linearity certificate.
pub fn read_certificate(path: &Path) -> Result<ReductionCertificate, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str::<ReductionCertificate>(&text)
        .or_else(|_| serde_json::from_str::<NonlinearityCertificate>(&text).map(|c| c.reduction))
        .map_err(|e| CliError::Parse(format!("{}: not a certificate: {e}", path.display())))
}

pub fn cmd_replay(args: &ReplayArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cert = read_certificate(&args.certificate)?;
    let clutter = read_clutter(&args.clutter)?;
    replay(&cert, &clutter).map_err(|e| CliError::Replay(e.to_string()))?;
    writeln!(out, "replay ok: {} steps, verdict {:?}", cert.steps.len(), cert.verdict)
        .map_err(|e| CliError::Other(e.to_string()))
}
