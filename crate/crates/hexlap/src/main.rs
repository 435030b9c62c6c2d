//! `hexlap`: iterated k-hexagonal graphs, their normalized Laplacian
//! spectra, and the derived graph invariants.
//!
//! Exit codes: 0 success, 1 validation or numerical failure, 2 input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hexlap::edgelist::{parse_edge_list, serialize_edge_list, ParseError};
use hexlap::report::{
    render_invariants_text, render_spectrum_text, InvariantsJson, SpectrumJson,
};
use hexlap::validate::{run_oracle, run_tables};
use hexlap_core::{
    generate, hexagonal_iter, invariants_closed, invariants_spectral, spectrum_oracle, spectrum_n,
    Error as CoreError, Graph, GraphKind, TransformParams, DEFAULT_VERTEX_BUDGET,
};

#[derive(Parser)]
#[command(name = "hexlap", version, about = "iterated k-hexagonal graph spectra and invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cycle,
    Path,
    Complete,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cycle => GraphKind::Cycle,
            KindArg::Path => GraphKind::Path,
            KindArg::Complete => GraphKind::Complete,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumMethod {
    /// Build the transformed graph and diagonalize its normalized Laplacian.
    Oracle,
    /// Derive the spectrum by the iterative root mapping; never builds the graph.
    Iterative,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantMethod {
    /// Closed-form recursions seeded with oracle values of the input graph.
    Closed,
    /// Accumulate from the iteratively derived spectrum.
    Spectrum,
}

#[derive(Args)]
struct TransformArgs {
    /// Number of added length-5 paths per edge.
    #[arg(short)]
    k: u64,
    /// Iteration depth.
    #[arg(short)]
    n: u64,
    /// Input edge-list file; `-` reads standard input.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a cycle, path or complete graph as an edge list.
    Gen {
        #[arg(value_enum)]
        kind: KindArg,
        /// Number of vertices.
        m: usize,
    },
    /// Apply the k-hexagonal transform n times and print the edge list.
    Transform(TransformArgs),
    /// Normalized Laplacian spectrum of the n-fold transform.
    Spectrum {
        #[command(flatten)]
        common: TransformArgs,
        #[arg(long, value_enum)]
        method: SpectrumMethod,
        #[arg(long)]
        json: bool,
    },
    /// Kemeny's constant, Kirchhoff index and spanning-tree count of the
    /// n-fold transform.
    Invariants {
        #[command(flatten)]
        common: TransformArgs,
        #[arg(long, value_enum)]
        method: InvariantMethod,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate: published tables or the internal oracle suite.
    Validate {
        /// Recompute the published reference tables at printed precision.
        #[arg(long, conflicts_with = "oracle", required_unless_present = "oracle")]
        tables: bool,
        /// Run the iterative engine against the dense eigensolver and the
        /// matrix-tree determinant.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) => ExitCode::from(2),
            CliError::Internal(_) => ExitCode::from(1),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn read_input(path: &str) -> Result<Graph, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {path}: {e}")))?
    };
    Ok(parse_edge_list(&text)?)
}

fn vertex_budget() -> Result<u64, CliError> {
    match std::env::var("HEXLAP_VERTEX_BUDGET") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| CliError::Input(format!("HEXLAP_VERTEX_BUDGET is not an integer: {raw:?}"))),
        Err(_) => Ok(DEFAULT_VERTEX_BUDGET),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen { kind, m } => {
            let g = generate(kind.into(), m)?;
            print!("{}", serialize_edge_list(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform(args) => {
            let g = read_input(&args.input)?;
            let params = TransformParams::new(args.k, args.n)?;
            let out = hexagonal_iter(&g, params, vertex_budget()?)?;
            print!("{}", serialize_edge_list(&out));
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { common, method, json } => {
            let g = read_input(&common.input)?;
            let params = TransformParams::new(common.k, common.n)?;
            let (spectrum, method_name) = match method {
                SpectrumMethod::Oracle => {
                    let built = hexagonal_iter(&g, params, vertex_budget()?)?;
                    (spectrum_oracle(&built)?, "oracle")
                }
                SpectrumMethod::Iterative => (spectrum_n(&g, params)?, "iterative"),
            };
            if json {
                let payload = SpectrumJson::new(&spectrum, common.k, common.n);
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                print!("{}", render_spectrum_text(&spectrum, common.k, common.n, method_name));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { common, method, json } => {
            let g = read_input(&common.input)?;
            let params = TransformParams::new(common.k, common.n)?;
            let report = match method {
                InvariantMethod::Closed => invariants_closed(&g, params.k, params.n)?,
                InvariantMethod::Spectrum => invariants_spectral(&g, params)?,
            };
            if json {
                let payload = InvariantsJson::new(&report, common.k, common.n)?;
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                print!("{}", render_invariants_text(&report, common.k, common.n));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { tables, oracle, json } => {
            let report = if tables { run_tables() } else { run_oracle() };
            let _ = oracle;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
