mod json;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ecc_spectra::verify::{DEFAULT_MAX_ORDER, MIN_ORDER};
use ecc_spectra::{
    adjacency_matrix, adjacency_tree_bounds, bounds_diam3, build_dnd, build_t3, distance_matrix,
    eccentricity_matrix, eigenvalues, energy_bounds_diam3, energy_t3_complement,
    energy_t4_complement, enumerate_free_trees, enumerate_with_connected_complement,
    format_pruefer, format_tree_record, nordhaus_gaddum_bounds, parse_edge_list, parse_pruefer,
    path, path_adjacency_energy, path_complement_energy, spec_t3_complement, spec_t4_complement,
    spider, star, tree_ecc_minima, tree_from_pruefer, tree_to_pruefer, xi1_path_complement,
    CanonicalCode, CheckOptions, ClosedFormSpectrum, CubicForm, ExtremalStatistic, Graph,
    SymMatrix, TheoremId, TheoremReport, Tree, Verdict, Verifier, DEFAULT_GROUP_TOL,
};

#[derive(Parser)]
#[command(
    name = "ecc-spectra",
    version,
    about = "Eccentricity spectra of trees and their complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of a matrix built from a tree or its complement
    Spectrum(SpectrumArgs),
    /// Energy (sum of absolute eigenvalues) of a tree or its complement
    Energy(SpectrumArgs),
    /// Evaluate a closed-form spectrum, energy or bound
    Formula(FormulaArgs),
    /// List all free trees of one order
    Enumerate(EnumerateArgs),
    /// Rank every non-star tree of one order by a statistic
    Extremal(ExtremalArgs),
    /// Run the exhaustive checks
    Verify(VerifyArgs),
    /// Compare the tabulated complement energies with the solver
    TableCheck(OutputArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Digits after the decimal point
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    /// Write to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Star,
    /// Double broom T_{n,3}^{a,b}
    T3,
    /// T_{n,d}^{a,b}, diameter d >= 4
    Dnd,
    Spider,
    Pruefer,
    Edges,
}

#[derive(Args)]
struct TreeArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of vertices
    #[arg(long)]
    n: Option<usize>,
    /// Pendants on v1 (t3, dnd); defaults to 0
    #[arg(long)]
    a: Option<usize>,
    /// Pendants on the other inner spine end (t3, dnd); defaults to the remainder
    #[arg(long)]
    b: Option<usize>,
    /// Diameter (dnd)
    #[arg(long)]
    d: Option<usize>,
    /// Comma-separated Prüfer sequence (pruefer)
    #[arg(long)]
    seq: Option<String>,
    /// Comma-separated leg lengths (spider)
    #[arg(long)]
    legs: Option<String>,
    /// Edge-list file, `-` for stdin (edges)
    #[arg(long, value_name = "FILE")]
    edges_file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Of {
    Tree,
    Complement,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Ecc,
    Adjacency,
    Distance,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    tree: TreeArgs,
    #[arg(long, value_enum, default_value = "complement")]
    of: Of,
    #[arg(long, value_enum, default_value = "ecc")]
    matrix: MatrixKind,
    /// Include the matrix itself in the output
    #[arg(long)]
    print_matrix: bool,
    /// Eigenvalues closer than this are grouped as one
    #[arg(long, default_value_t = DEFAULT_GROUP_TOL)]
    group_tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaName {
    SpecT3,
    EnergyT3,
    SpecT4,
    EnergyT4,
    PathEnergy,
    PathComplementEnergy,
    Xi1PathComplement,
    BoundsDiam3,
    EnergyBoundsDiam3,
    AdjacencyBounds,
    TreeMinima,
    NordhausGaddum,
    Cubic,
}

#[derive(Args)]
struct FormulaArgs {
    #[arg(value_enum)]
    name: FormulaName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Index of the exceptional family, n = 2s + 4
    #[arg(long)]
    s: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Edges,
    Codes,
    Pruefer,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Leave out the star, whose complement is disconnected
    #[arg(long)]
    connected_complement: bool,
    #[arg(long, value_enum, default_value = "edges")]
    format: TreeFormat,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PoolArgs {
    /// Worker threads
    #[arg(long, env = "ECC_SPECTRA_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Permit orders 11 and 12
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long, value_parser = parse_stat)]
    stat: ExtremalStatistic,
    #[arg(long)]
    n: usize,
    /// CSV instead of JSON
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    pool: PoolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["all", "id"])))]
struct VerifyArgs {
    /// Every check
    #[arg(long)]
    all: bool,
    /// One check; repeat for several
    #[arg(long, value_parser = parse_id)]
    id: Vec<TheoremId>,
    /// Smallest order
    #[arg(long, default_value_t = MIN_ORDER)]
    n: usize,
    /// Largest order
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    n_max: usize,
    /// Include wall times (makes output run-dependent)
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    pool: PoolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_stat(s: &str) -> Result<ExtremalStatistic, String> {
    s.parse().map_err(|e: ecc_spectra::Error| e.to_string())
}

fn parse_id(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|_| {
        let ids: Vec<&str> = TheoremId::ALL.iter().map(|id| id.name()).collect();
        format!("expected one of {}", ids.join(", "))
    })
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

impl From<ecc_spectra::Error> for Failure {
    fn from(e: ecc_spectra::Error) -> Self {
        usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Spectrum(args) => spectrum(args, false),
        Command::Energy(args) => spectrum(args, true),
        Command::Formula(args) => formula(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Extremal(args) => extremal(args),
        Command::Verify(args) => verify(args),
        Command::TableCheck(output) => table_check(output),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(output: &OutputArgs, value: &T) -> CliResult<()> {
    emit(&output.out, &json::to_string(value, output.precision.into())?)
}

fn require(value: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    value.ok_or_else(|| usage(format!("--{flag} is required for {family}")))
}

fn build_tree(args: &TreeArgs) -> CliResult<(Tree, String)> {
    let tree = match args.family {
        Family::Path => {
            let n = require(args.n, "n", "--family path")?;
            (path(n)?, format!("P_{n}"))
        }
        Family::Star => {
            let n = require(args.n, "n", "--family star")?;
            (star(n)?, format!("K_{{1,{}}}", n.saturating_sub(1)))
        }
        Family::T3 => {
            let n = require(args.n, "n", "--family t3")?;
            let a = args.a.unwrap_or(0);
            let b = match args.b {
                Some(b) => b,
                None => n.checked_sub(4 + a).ok_or_else(|| usage("a + b = n - 4 cannot hold"))?,
            };
            (build_t3(n, a, b)?, format!("T_{{{n},3}}^{{{a},{b}}}"))
        }
        Family::Dnd => {
            let n = require(args.n, "n", "--family dnd")?;
            let d = require(args.d, "d", "--family dnd")?;
            let a = args.a.unwrap_or(0);
            let b = match args.b {
                Some(b) => b,
                None => n
                    .checked_sub(d + 1 + a)
                    .ok_or_else(|| usage("a + b = n - d - 1 cannot hold"))?,
            };
            (build_dnd(n, d, a, b)?, format!("T_{{{n},{d}}}^{{{a},{b}}}"))
        }
        Family::Spider => {
            let legs = args
                .legs
                .as_deref()
                .ok_or_else(|| usage("--legs is required for --family spider"))?;
            let legs = parse_pruefer(legs)?;
            (spider(&legs)?, format!("spider({})", format_pruefer(&legs)))
        }
        Family::Pruefer => {
            let seq = args
                .seq
                .as_deref()
                .ok_or_else(|| usage("--seq is required for --family pruefer"))?;
            let seq = parse_pruefer(seq)?;
            (tree_from_pruefer(&seq)?, format!("pruefer({})", format_pruefer(&seq)))
        }
        Family::Edges => {
            let file = args
                .edges_file
                .as_ref()
                .ok_or_else(|| usage("--edges-file is required for --family edges"))?;
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?
            };
            (parse_edge_list(&text)?, format!("edges({})", file.display()))
        }
    };
    if let Some(n) = args.n {
        if n != tree.0.order() {
            return Err(usage(format!("--n {n} does not match the tree's order {}", tree.0.order())));
        }
    }
    Ok(tree)
}

#[derive(Serialize)]
struct TreeOut {
    name: String,
    n: usize,
    diameter: u32,
    code: CanonicalCode,
    edges: Vec<(usize, usize)>,
}

impl TreeOut {
    fn new(tree: &Tree, name: String) -> CliResult<Self> {
        Ok(TreeOut {
            name,
            n: tree.order(),
            diameter: tree.ecc_info()?.diameter,
            code: CanonicalCode::of(tree),
            edges: tree.edges(),
        })
    }
}

#[derive(Serialize)]
struct Group {
    value: f64,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SpectrumOut {
    tree: TreeOut,
    of: &'static str,
    matrix: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grouped: Option<Vec<Group>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectral_radius: Option<f64>,
    energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    entries: Option<SymMatrix>,
}

fn spectrum(args: SpectrumArgs, energy_only: bool) -> CliResult<ExitCode> {
    let (tree, name) = build_tree(&args.tree)?;
    let graph: Graph = match args.of {
        Of::Tree => tree.as_graph().clone(),
        Of::Complement => {
            let c = tree.complement();
            if !c.is_connected() {
                return Err(usage("the complement is disconnected (the tree is a star)"));
            }
            c
        }
    };
    let (m, matrix) = match args.matrix {
        MatrixKind::Ecc => (eccentricity_matrix(&graph)?, "eccentricity"),
        MatrixKind::Adjacency => (adjacency_matrix(&graph), "adjacency"),
        MatrixKind::Distance => (distance_matrix(&graph)?, "distance"),
    };
    let s = eigenvalues(&m)?;
    let grouped = s
        .group(args.group_tol)
        .groups
        .into_iter()
        .map(|(value, multiplicity)| Group { value, multiplicity })
        .collect();
    let out = SpectrumOut {
        tree: TreeOut::new(&tree, name)?,
        of: if args.of == Of::Tree { "tree" } else { "complement" },
        matrix,
        values: (!energy_only).then(|| s.values().to_vec()),
        grouped: (!energy_only).then_some(grouped),
        spectral_radius: (!energy_only).then(|| s.spectral_radius()),
        energy: s.energy(),
        entries: args.print_matrix.then_some(m),
    };
    emit_json(&args.output, &out)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct FormulaSpectrum {
    values: Vec<f64>,
    grouped: Vec<Group>,
    energy: f64,
}

impl From<ClosedFormSpectrum> for FormulaSpectrum {
    fn from(s: ClosedFormSpectrum) -> Self {
        FormulaSpectrum {
            values: s.values_desc(),
            energy: s.energy(),
            grouped: s
                .pairs
                .iter()
                .map(|&(value, multiplicity)| Group { value, multiplicity })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct CubicOut {
    s: usize,
    n: usize,
    resolved_form: String,
    resolved_root: f64,
    literal_form: String,
    literal_root: f64,
}

fn formula(args: FormulaArgs) -> CliResult<ExitCode> {
    let n = || require(args.n, "n", "this formula");
    let split = |n: usize| -> CliResult<(usize, usize)> {
        let a = args.a.unwrap_or(0);
        let b = match args.b {
            Some(b) => b,
            None => n.checked_sub(4 + a).ok_or_else(|| usage("a + b = n - 4 cannot hold"))?,
        };
        Ok((a, b))
    };
    let o = &args.output;
    match args.name {
        FormulaName::SpecT3 => {
            let n = n()?;
            let (a, b) = split(n)?;
            emit_json(o, &FormulaSpectrum::from(spec_t3_complement(n, a, b)?))?
        }
        FormulaName::EnergyT3 => {
            let n = n()?;
            let (a, b) = split(n)?;
            emit_json(o, &energy_t3_complement(n, a, b)?)?
        }
        FormulaName::SpecT4 => emit_json(o, &FormulaSpectrum::from(spec_t4_complement(n()?)?))?,
        FormulaName::EnergyT4 => emit_json(o, &energy_t4_complement(n()?)?)?,
        FormulaName::PathEnergy => emit_json(o, &path_adjacency_energy(n()?))?,
        FormulaName::PathComplementEnergy => emit_json(o, &path_complement_energy(n()?)?)?,
        FormulaName::Xi1PathComplement => emit_json(o, &xi1_path_complement(n()?)?)?,
        FormulaName::BoundsDiam3 => emit_json(o, &bounds_diam3(n()?)?)?,
        FormulaName::EnergyBoundsDiam3 => {
            let (min, max) = energy_bounds_diam3(n()?)?;
            emit_json(o, &[min, max])?
        }
        FormulaName::AdjacencyBounds => emit_json(o, &adjacency_tree_bounds(n()?, args.s)?)?,
        FormulaName::TreeMinima => emit_json(o, &tree_ecc_minima(n()?)?)?,
        FormulaName::NordhausGaddum => {
            let (xi2, energy) = nordhaus_gaddum_bounds(n()?)?;
            emit_json(o, &[xi2, energy])?
        }
        FormulaName::Cubic => {
            let s = args
                .s
                .ok_or_else(|| usage("--s is required for the cubic"))?;
            emit_json(
                o,
                &CubicOut {
                    s,
                    n: 2 * s + 4,
                    resolved_form: CubicForm::Resolved.to_string(),
                    resolved_root: CubicForm::Resolved.positive_root(s)?,
                    literal_form: CubicForm::Literal.to_string(),
                    literal_root: CubicForm::Literal.positive_root(s)?,
                },
            )?
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(args: EnumerateArgs) -> CliResult<ExitCode> {
    let stream = if args.connected_complement {
        enumerate_with_connected_complement(args.n)?
    } else {
        enumerate_free_trees(args.n)?
    };
    let mut text = String::new();
    for (i, (code, tree)) in stream.iter().enumerate() {
        match args.format {
            TreeFormat::Edges => {
                if i > 0 {
                    text.push('\n');
                }
                text.push_str(&format_tree_record(tree));
            }
            TreeFormat::Codes => {
                text.push_str(code.as_str());
                text.push('\n');
            }
            TreeFormat::Pruefer => {
                text.push_str(&format_pruefer(&tree_to_pruefer(tree)?));
                text.push('\n');
            }
        }
    }
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verifier(pool: &PoolArgs, hi: usize) -> CliResult<Verifier> {
    if hi > DEFAULT_MAX_ORDER && !pool.allow_large {
        return Err(usage(format!(
            "orders above {DEFAULT_MAX_ORDER} need --allow-large"
        )));
    }
    Ok(Verifier::new(CheckOptions {
        jobs: pool.jobs.map(usize::from),
        ..CheckOptions::default()
    })?)
}

fn extremal(args: ExtremalArgs) -> CliResult<ExitCode> {
    let mut v = verifier(&args.pool, args.n)?;
    let table = v.extremal_table(args.stat, args.n)?;
    if !args.csv {
        emit_json(&args.output, &table)?;
        return Ok(ExitCode::SUCCESS);
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "canonical_code", "statistic", "value", "rank"])?;
    for row in &table {
        w.write_record([
            row.n.to_string(),
            row.code.to_string(),
            row.statistic.to_string(),
            json::format_float(row.value, args.output.precision.into()),
            row.rank.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
    emit(&args.output.out, &String::from_utf8(bytes).map_err(|e| usage(e.to_string()))?)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyOut {
    n_range: [usize; 2],
    all_asserted_hold: bool,
    reports: Vec<TheoremReport>,
}

fn finish_reports(reports: &[TheoremReport]) -> ExitCode {
    if reports.iter().any(|r| r.verdict == Verdict::Fails) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn verify(args: VerifyArgs) -> CliResult<ExitCode> {
    let mut v = verifier(&args.pool, args.n_max)?;
    let ids: Vec<TheoremId> = if args.all {
        TheoremId::ALL.to_vec()
    } else {
        args.id.clone()
    };
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        let r = v.check(id, args.n, args.n_max)?;
        reports.push(if args.timings { r } else { r.without_timing() });
    }
    let code = finish_reports(&reports);
    let out = VerifyOut {
        n_range: [args.n, args.n_max],
        all_asserted_hold: reports.iter().all(TheoremReport::holds),
        reports,
    };
    emit_json(&args.output, &out)?;
    for r in &out.reports {
        eprintln!("{:<22} {:?}", r.id.name(), r.verdict);
    }
    Ok(code)
}

fn table_check(output: OutputArgs) -> CliResult<ExitCode> {
    let report = ecc_spectra::appendix_table_crosscheck()?.without_timing();
    emit_json(&output, &report)?;
    Ok(finish_reports(std::slice::from_ref(&report)))
}
