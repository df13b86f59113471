use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gkm_cli::suite::{verify_document, Fault, Suite};
use gkm_cli::{
    betti_document, character_document, exit_code, generate_json, springer_document, DegreeSelection, GraphSpec, ResultDocument,
    EXIT_ASSERTION, EXIT_INVALID_INSTANCE, EXIT_USAGE,
};
use gkm_core::actions::ActionKind;
use gkm_core::graph::MomentGraph;
use gkm_core::partition::Partition;
use gkm_core::Error;

/// Exact GKM cohomology, Weyl group actions and Springer characters.
#[derive(Parser)]
#[command(name = "gkm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bruhat,
    Schubert,
    Hessenberg,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Self::Bruhat => "bruhat",
            Self::Schubert => "schubert",
            Self::Hessenberg => "hessenberg",
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// Rank parameter: graphs live on S_n.
    #[arg(long)]
    n: Option<usize>,
    /// Permutation for a Schubert interval, e.g. 2,3,1.
    #[arg(long)]
    w: Option<String>,
    /// Hessenberg function, e.g. 2,3,3.
    #[arg(long)]
    h: Option<String>,
}

#[derive(Args)]
struct GraphSource {
    /// Graph JSON file, or `-` for stdin.
    #[arg(long, conflicts_with = "kind")]
    graph: Option<PathBuf>,
    /// Built-in family instead of a file.
    #[arg(long)]
    kind: Option<Kind>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Give up if cohomology is not exhausted by this degree.
    #[arg(long, env = "GKM_MAX_DEGREE", default_value_t = 12)]
    max_degree: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Gkm,
    Filtration,
    Springer,
    Actions,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    ZeroWeight,
    BrokenFiltration,
    NonSymmetry,
}

#[derive(Subcommand)]
enum Command {
    /// Print the moment graph of a built-in family as JSON.
    Generate {
        kind: Kind,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Betti numbers and a freeness check.
    Betti {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Character of the left or right action on ordinary cohomology.
    Character {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        action: Action,
        /// A degree, or `total` for all degrees and their sum.
        #[arg(long, default_value = "total")]
        degree: String,
    },
    /// Springer character of a nilpotent with the given Jordan type.
    Springer {
        #[arg(long)]
        n: usize,
        /// Jordan type, e.g. 2,2.
        #[arg(long)]
        lambda: String,
    },
    /// Run a bundled verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Substitute a corrupted fixture; the suite must then fail.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

/// Failure with its exit code.
struct Failure(i32, String);

fn usage(e: impl ToString) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

fn failed(e: Error) -> Failure {
    Failure(exit_code(&e), e.to_string())
}

fn family_spec(kind: Kind, f: &FamilyArgs) -> Result<GraphSpec, Failure> {
    let n = f.n.ok_or_else(|| usage("--n is required"))?;
    GraphSpec::from_params(kind.as_str(), n, f.w.as_deref(), f.h.as_deref()).map_err(usage)
}

fn load_graph(src: &GraphSource) -> Result<MomentGraph, Failure> {
    match (&src.graph, src.kind) {
        (Some(path), _) => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("reading stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))?
            };
            MomentGraph::from_json(&text).map_err(|e| Failure(EXIT_INVALID_INSTANCE, e.to_string()))
        }
        (None, Some(kind)) => family_spec(kind, &src.family)?.build().map_err(failed),
        (None, None) => Err(usage("give --graph or --kind")),
    }
}

fn emit(doc: &ResultDocument) -> Result<(), Failure> {
    print!("{}", doc.to_json());
    if doc.passed {
        Ok(())
    } else {
        Err(Failure(EXIT_ASSERTION, "assertions failed".into()))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { kind, family } => {
            let spec = family_spec(kind, &family)?;
            print!("{}", generate_json(&spec).map_err(usage)?);
            Ok(())
        }
        Command::Betti { source } => {
            let g = load_graph(&source)?;
            emit(&betti_document(&g, source.max_degree).map_err(failed)?)
        }
        Command::Character { source, action, degree } => {
            let g = load_graph(&source)?;
            let degree: DegreeSelection = degree.parse().map_err(usage)?;
            let kind = match action {
                Action::Left => ActionKind::Left,
                Action::Right => ActionKind::Right,
            };
            emit(&character_document(&g, kind, degree, source.max_degree).map_err(failed)?)
        }
        Command::Springer { n, lambda } => {
            let lambda: Partition = lambda.parse().map_err(usage)?;
            if lambda.size() != n {
                return Err(usage(format!("{lambda} is not a partition of {n}")));
            }
            emit(&springer_document(n, &lambda).map_err(failed)?)
        }
        Command::Verify { suite, inject_fault } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Gkm => Suite::Gkm,
                SuiteArg::Filtration => Suite::Filtration,
                SuiteArg::Springer => Suite::Springer,
                SuiteArg::Actions => Suite::Actions,
            };
            let fault = inject_fault.map(|f| match f {
                FaultArg::ZeroWeight => Fault::ZeroWeight,
                FaultArg::BrokenFiltration => Fault::BrokenFiltration,
                FaultArg::NonSymmetry => Fault::NonSymmetry,
            });
            emit(&verify_document(suite, fault))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("gkm: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
