use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trace_horizon::spectral::DEFAULT_FLOOR_CONSTANT;

#[derive(Debug, Parser)]
#[command(
    name = "trace-horizon",
    version,
    about = "Trace-positivity searches and dilatation bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find nu with Tr(A^nu) > B for a matrix in SL(m, Z).
    FindNu(FindNuArgs),
    /// Evaluate the closed-form bounds on l_{g,n}.
    Bounds(BoundsArgs),
    /// Lefschetz-number lower bound on the dilatation from a homology action.
    Lefschetz(LefschetzArgs),
    /// Penner transition matrices over a (g, n) grid, checked against the
    /// entry and spectral-radius bounds.
    Penner(PennerArgs),
    /// Standalone checks of the lemmas behind the search.
    Lemmas(LemmasArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Exact scan up to ceil(m^(2+eps)); minimal nu.
    Scan,
    /// Expanding-case route; needs an eigenvalue off the unit circle.
    Expanding,
    /// Constructive route for fully cyclotomic characteristic polynomials.
    Cyclotomic,
    /// Classify, then take the expanding or cyclotomic route.
    Auto,
}

#[derive(Debug, Args, Serialize)]
pub struct FindNuArgs {
    /// Matrix file: dimension, then one row per line.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long = "B", default_value_t = 2, allow_hyphen_values = true)]
    #[serde(rename = "B")]
    pub b: i64,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    /// Constant of the uniform house floor 1 + c/(d ln^3 d).
    #[arg(long, default_value_t = DEFAULT_FLOOR_CONSTANT)]
    pub c: f64,
    #[arg(long, value_enum, default_value_t = Mode::Scan)]
    pub mode: Mode,
    /// Experimental: scan only to ceil(slope * m). A linear horizon is
    /// conjectural.
    #[arg(long)]
    pub linear_slope: Option<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Constant of the main lower bound, or `auto` for the assembled C(alpha, N).
    #[arg(long = "C", default_value = "auto")]
    #[serde(rename = "C")]
    pub c: String,
    /// Genus threshold used when assembling C.
    #[arg(long = "N", default_value_t = 2)]
    #[serde(rename = "N")]
    pub n_threshold: u32,
    /// Constant of the upper bound C g ln|chi|/|chi|.
    #[arg(long = "C-upper", default_value_t = 1.0)]
    #[serde(rename = "C_upper")]
    pub c_upper: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct LefschetzArgs {
    /// Homology action on the closed surface, 2g x 2g.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub g: u32,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct PennerArgs {
    /// Inclusive genus range such as `2..4`, or a single value.
    #[arg(long)]
    pub g: String,
    /// Inclusive puncture range such as `0..5`, or a single value.
    #[arg(long)]
    pub n: String,
    /// CSV output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LemmasArgs {
    #[command(subcommand)]
    pub which: Lemma,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum Lemma {
    /// Pigeonhole power with all terms near the positive real axis.
    Dirichlet {
        /// Complex numbers such as `-1, 0+1i, 0.5-2i`. Without it, random
        /// unit-modulus tuples are tested.
        #[arg(long, allow_hyphen_values = true)]
        zs: Option<String>,
        /// Tuple size for random trials.
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Largest accepted tuple size.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// First nonnegative power sum of a polynomial.
    Newton {
        /// Rational coefficients, lowest degree first, such as `1 3 3 1`.
        /// Without it, random polynomials are tested.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Minimum of Re P(z) for the Fejer polynomial over the unit disk.
    Fejer {
        #[arg(long = "K", default_value_t = 10)]
        #[serde(rename = "K")]
        k: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}
