//! The `xing` command line: argument parsing, dispatch to the library
//! crates, report formatting and exit codes.

mod commands;
mod svg;

pub use svg::{render_svg, tutte_layout};

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use xing_hardness::HardnessError;
use xing_solver::SolverError;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "xing", version, about = "Type-restricted 1-planarity: solving, verification and hardness instances")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a graph has a 1-planar drawing with the given crossing types
    Solve(SolveArgs),
    /// Check a drawing JSON file against a type set
    Verify(VerifyArgs),
    /// Type of the crossing between two independent edges
    Classify(ClassifyArgs),
    /// Block-cut tree, SPR-trees and skeleton+ graphs as edge lists
    Decompose(DecomposeArgs),
    /// Reduction graph of a 3-Partition instance
    GenHard(GenHardArgs),
    /// Brute-force decision, for cross-checking small inputs
    Oracle(OracleArgs),
    /// Render a drawing JSON file as SVG
    Draw(DrawArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Edge list (`u v` per line), graph6 if the name ends in `.g6`, `-` for stdin
    #[arg(long, short)]
    pub input: String,
    /// Comma-separated crossing types: full, almostfull, bowtie, arrow, chair, x (or `all`)
    #[arg(long, short)]
    pub types: String,
    /// Straight-line drawings: reject B- and W-configurations
    #[arg(long)]
    pub geometric: bool,
    /// Vertex that must lie on the outer face
    #[arg(long)]
    pub outer: Option<String>,
    /// Print a JSON report instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Search node budget
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
    /// Write the witness drawing as JSON
    #[arg(long)]
    pub witness: Option<String>,
    /// Write the witness drawing as SVG
    #[arg(long)]
    pub svg: Option<String>,
    /// Decide by exhaustive enumeration instead of the solver
    #[arg(long)]
    pub oracle: bool,
    /// Run the top levels of the search on the rayon pool
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, short)]
    pub drawing: String,
    #[arg(long, short)]
    pub types: String,
    /// Also require the drawing to be free of B- and W-configurations
    #[arg(long)]
    pub geometric: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, short)]
    pub input: String,
    /// The two edges as four vertex ids: `u v x y` for uv crossing xy
    #[arg(long, num_args = 4, value_names = ["U", "V", "X", "Y"])]
    pub pair: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long, short)]
    pub input: String,
    /// Directory for the block, tree and skeleton+ files
    #[arg(long, short)]
    pub out: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Arrow,
    Chair,
    X,
}

#[derive(Args, Debug)]
pub struct GenHardArgs {
    /// Element sizes, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<u64>,
    #[arg(long)]
    pub bound: u64,
    #[arg(long, value_enum)]
    pub variant: VariantArg,
    /// Edge list of the generated graph
    #[arg(long)]
    pub out: String,
    /// Role of every vertex and edge, tab separated
    #[arg(long)]
    pub roles: Option<String>,
    /// Partition, witness drawing and path decomposition as JSON
    #[arg(long)]
    pub certificate: Option<String>,
    /// Accept odd m or B
    #[arg(long)]
    pub parity_waiver: bool,
    /// Paths per fence bundle
    #[arg(long, default_value_t = xing_hardness::DEFAULT_BUNDLE_WIDTH)]
    pub bundle_width: usize,
}

#[derive(Args, Debug)]
pub struct DrawArgs {
    #[arg(long, short)]
    pub drawing: String,
    /// SVG output path
    #[arg(long, short)]
    pub out: String,
}

/// Errors that end a command early, by exit code.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Resource(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        let resource = e.chain().any(|c| {
            matches!(
                c.downcast_ref::<SolverError>(),
                Some(SolverError::ResourceExhausted(_) | SolverError::TooLarge(..) | SolverError::UnsupportedTypeset(..))
            ) || matches!(c.downcast_ref::<HardnessError>(), Some(HardnessError::TooLarge(..)))
        });
        if resource {
            Failure::Resource(e)
        } else {
            Failure::Input(e)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(cli.command, out, err).map_err(Failure::from) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
        Err(Failure::Resource(e)) => {
            let _ = writeln!(err, "resource limit: {e:#}");
            EXIT_RESOURCE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_exit_codes() {
        let f = |e: anyhow::Error| Failure::from(e);
        assert!(matches!(f(SolverError::ResourceExhausted(10).into()), Failure::Resource(_)));
        assert!(matches!(f(anyhow::Error::new(SolverError::TooLarge(20, 16)).context("oracle")), Failure::Resource(_)));
        assert!(matches!(f(SolverError::NotBiconnected.into()), Failure::Input(_)));
        assert!(matches!(f(HardnessError::TooLarge(9, 6).into()), Failure::Resource(_)));
    }

    #[test]
    fn usage_errors() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["xing", "solve", "--bogus"], &mut o, &mut e), EXIT_INPUT);
        assert!(!e.is_empty());
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["xing", "--help"], &mut o, &mut e), EXIT_YES);
        assert!(String::from_utf8(o).unwrap().contains("gen-hard"));
    }
}
