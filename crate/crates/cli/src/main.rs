//! `ccx`: generalized cluster complexes, face numbers, polygon models and
//! diagram invariants from the command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ccx", version, about = "Generalized cluster complexes and Coxeter invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the complex Delta^m of a finite type and audit it.
    Complex {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'm', default_value_t = 1)]
        m: usize,
        /// Include vertices, edges and the facet list.
        #[arg(long)]
        facets: bool,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Face numbers f_k(m) from the closed forms.
    Fvector(FaceArgs),
    /// h-vector, the coefficients of F(x - 1).
    Hvector(FaceArgs),
    /// Polygon model of type A, B or D: negative simple roots and facets.
    Dissect {
        #[arg(long, value_name = "A|B|D")]
        family: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'm', default_value_t = 1)]
        m: usize,
        /// Show the k-th facet (1-based) instead of the negative simple roots.
        #[arg(long, value_name = "K")]
        facet: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Coxeter number, exponents, N, N+ and M(G) from the diagram alone.
    Invariants {
        #[command(flatten)]
        target: Target,
        /// all, euler, symmetry, recip, recipm or mg.
        #[arg(long, default_value = "all")]
        method: String,
        #[arg(long, default_value_t = ccx_core::invariants::DEFAULT_MAX_RANK)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        /// oracle, models, catalog or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// A named type such as A4, I2(7), ~D5 or A1xB2.
    #[arg(long = "type", value_name = "T")]
    ty: Option<String>,
    /// A named type or an explicit `n=<k>; i-j:label ...` edge list.
    #[arg(long, value_name = "S")]
    diagram: Option<String>,
}

#[derive(Args)]
struct FaceArgs {
    #[command(flatten)]
    target: Target,
    #[arg(short = 'm', default_value_t = 1)]
    m: i64,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
    Csv,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
