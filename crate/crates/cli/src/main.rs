mod commands;
mod value;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CommandError, Output};

/// Exact computations in combinatorial Hopf algebras.
#[derive(Parser, Debug)]
#[command(name = "hopfcalc", version, about, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Global {
    /// Truncation degree for series commands
    #[arg(long, global = true, default_value_t = 6, allow_negative_numbers = true)]
    pub cap: i64,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Coalgebra structure on the underlying algebra
    #[arg(long, global = true, value_enum)]
    pub structure: Option<Structure>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    Binomial,
    Fdb,
    Bfk,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression; with the variable T it is read as a series
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Algebra to evaluate in (sym, nsym, qsym, fdb, bpoly); inferred from the generators by default
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Coproduct of an element
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Algebra of a constant expression; inferred from the generators by default
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Antipode of an element
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Change the basis of a symmetric function
    Convert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Target basis: e, h, p or m
        #[arg(long)]
        to: String,
        /// Scalar ring the result must lie in: integers or rationals
        #[arg(long, default_value = "rationals")]
        ring: String,
    },
    /// Hall pairing of two symmetric functions, or pairing of Z and M elements
    Pair {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Expand a symmetric or quasisymmetric function in ordered variables x1..xn
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Apply an involution of the symmetric functions: dual, whitney or omega
    Involution {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        which: String,
    },
    /// Send Z_I to e_sort(I), or to t_sort(I) under --structure bfk
    Abelianize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Include a symmetric function into the quasisymmetric functions
    Include {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coaction of formal diffeomorphisms: ψ_S on e-generators, ψ_N on Z-generators
    Coaction {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Use the coaction Z'(T) ↦ Z'(Z(T)) with Z'(T) = Σ Z_n T^n instead of Δ_BFK
        #[arg(long)]
        shifted: bool,
    },
    /// Compose two series in T: OUTER(INNER)
    Compose {
        #[arg(allow_hyphen_values = true)]
        outer: String,
        #[arg(allow_hyphen_values = true)]
        inner: String,
    },
    /// Compositional inverse of a series T + ...
    Revert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Multiplicative inverse of a series
    Invert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exponential of a series without constant term
    Exp {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Logarithm of a series with constant term 1; without an argument, the logarithm of b(T)
    Log {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Coefficient of T^-1 of a Laurent series
    Residue {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The universal formal group law b(b^-1(X) + b^-1(Y))
    Fgl {
        /// The noncommutative series Σ Z_k ((χZ)(X) + (χZ)(Y))^(k+1) instead
        #[arg(long)]
        nc: bool,
    },
    /// The series exp(β log(T)), with log the logarithm of the universal formal group law
    Beta,
    /// The class h{CP_n} = (n+1) χ(b_n)
    Hurewicz { n: u32 },
    /// Characteristic numbers
    Charnum {
        #[command(subcommand)]
        which: Charnum,
    },
    /// The invariant Σ_{|I|=k} Z_I
    Crn {
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// The series (χ_BFK Z)(-T)
    Cumulant,
    /// Rank of the cobar cohomology over the rationals
    CobarRank {
        /// S.B, N.N or N.N-shifted
        #[arg(long, default_value = "S.B")]
        algebroid: String,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 0)]
        degree: usize,
    },
    /// Cobar differential of a level-0 cochain
    CobarDifferential {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// S.B, N.N or N.N-shifted; inferred from the generators by default
        #[arg(long)]
        algebroid: Option<String>,
        /// Apply the differential twice
        #[arg(long)]
        twice: bool,
    },
    /// η_R(Z_k) paired against M_I, as an element of N
    RightUnit {
        k: u32,
        /// Composition I, comma separated; empty for the unit
        #[arg(default_value = "")]
        index: String,
    },
    /// List the compositions or partitions of n
    Enumerate {
        /// compositions or partitions
        kind: String,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Run verification suites; exits with status 3 on any failure
    Verify {
        /// hopf-axioms, antipode, duality, bfk, comodule, algebroid, topology, counts or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Weight bound; each suite has its own default
        #[arg(long)]
        weight: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Charnum {
    /// Coefficient of b_λ in h{CP_n}
    Cp {
        n: u32,
        /// Partition λ, comma separated
        partition: String,
    },
    /// M_I evaluated on the ordered roots of a product of projective spaces
    Quasitoric {
        /// Composition I, comma separated
        index: String,
        /// Space as JSON: {"factors":[1,1],"roots":[[1,0],[1,0],[0,1],[0,1]]}
        #[arg(long, conflicts_with = "space_file")]
        space: Option<String>,
        /// Read the space from a JSON file
        #[arg(long, conflicts_with = "tangent")]
        space_file: Option<std::path::PathBuf>,
        /// Product of projective spaces with their tangent roots, e.g. 1,1 for CP1 x CP1
        #[arg(long, conflicts_with = "space")]
        tangent: Option<String>,
        /// Use the normal bundle with the sign (-1)^|I|
        #[arg(long)]
        normal: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli.command, cli.global) {
        Ok(Output { json, text, failed }) => {
            match cli.global.format {
                Format::Json => println!("{json}"),
                Format::Text => println!("{text}"),
            }
            if failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Engine(e) => write!(f, "{e}"),
            CommandError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}
