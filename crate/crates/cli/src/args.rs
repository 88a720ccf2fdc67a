use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Cubic twists of x^3 + y^3 = 1: residue symbols, Kubota symbols, L-values
/// and central-value statistics.
#[derive(Debug, Parser)]
#[command(name = "cubetwist", version)]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Append-only CSV cache of central values.
    #[arg(long, global = true, env = "CUBETWIST_CACHE")]
    pub cache: Option<PathBuf>,

    /// Worker threads for central-value computation (0 = all cores).
    #[arg(long, global = true, env = "CUBETWIST_THREADS", default_value_t = 0)]
    pub threads: usize,

    /// Ignore cached central values and recompute them.
    #[arg(long, global = true)]
    pub recompute: bool,

    /// Terms summed per central value, as a multiple of sqrt(conductor).
    #[arg(long, global = true, default_value_t = 20.0)]
    pub cutoff_mult: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cubic (Eisenstein) or quadratic (Gaussian) residue symbol (a/b).
    Symbol {
        #[arg(value_enum)]
        kind: SymbolArg,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Primary denominator.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Kubota symbols on the congruence subgroups.
    Kubota {
        #[command(subcommand)]
        command: KubotaCommand,
    },
    /// Dirichlet coefficients a_p of L(E_D, s).
    Ap {
        #[arg(long = "D", allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        pmax: u64,
        #[arg(long, value_enum, default_value_t = ApMethod::Character)]
        method: ApMethod,
    },
    /// Central value L(E_D, 1).
    Lvalue {
        #[arg(long = "D", allow_hyphen_values = true)]
        d: i64,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// Rational points on x^3 + y^3 = D with denominator at most HEIGHT.
    Points {
        #[arg(long = "D", allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        height: u64,
    },
    /// Central values for every filtered cube-free D <= XMAX.
    Scan {
        #[arg(long)]
        xmax: u64,
        #[command(flatten)]
        filter: FilterArgs,
    },
    /// Statistics of central values.
    Stats {
        #[command(subcommand)]
        command: StatsCommand,
    },
    /// The Dirichlet polynomial T(w)_{m,n}.
    Tpoly {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Complex argument as "re,im" (or a real number).
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 3)]
        alpha_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymbolArg {
    Cubic,
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ApMethod {
    Character,
    Pointcount,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// Top-row symbol (a/b)_2.
    Paper,
    /// Bottom-row symbol (c/d)_2.
    Standard,
}

#[derive(Debug, Subcommand)]
pub enum KubotaCommand {
    /// Kappa of a matrix in Gamma(lambda^3) of SL(2, Z[i]).
    Gl2 {
        /// Four comma-separated Gaussian literals, row-major.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Standard)]
        convention: ConventionArg,
    },
    /// Kappa of a matrix in Gamma(3) of SL(3, Z[w]).
    Gl3 {
        /// Nine comma-separated Eisenstein literals, row-major.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Test kappa(gh) = kappa(g) kappa(h) on random pairs.
    CheckHom {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_word: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Standard)]
        convention: ConventionArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum StatsCommand {
    /// Vanishing fraction among even-sign twists at XMAX and XMAX/2.
    Zk {
        #[arg(long)]
        xmax: u64,
    },
    /// Normalized sums of L(E_p, 1) L(E_{p^2}, 1) over primes.
    Gv {
        #[arg(long)]
        xmax: u64,
    },
    /// Fit of the partial sums S(X) against c X^beta and c X log X.
    Growth {
        #[arg(long)]
        xmax: u64,
        /// Smallest checkpoint entering the fit (default XMAX/10).
        #[arg(long)]
        xmin: Option<u64>,
        #[command(flatten)]
        filter: FilterArgs,
    },
    /// Partial sums over m^2 n with cube-free part K.
    Tail {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        w: f64,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct FilterArgs {
    /// Residue class c of D modulo --mod.
    #[arg(long, requires = "modulus", allow_hyphen_values = true)]
    pub class: Option<i64>,
    /// Prime modulus for --class.
    #[arg(long = "mod", id = "modulus", requires = "class")]
    pub modulus: Option<u64>,
    /// Only prime D.
    #[arg(long, conflicts_with_all = ["class", "prime_squares"])]
    pub primes: bool,
    /// Only D = p^2.
    #[arg(long, conflicts_with = "class")]
    pub prime_squares: bool,
}
