use clap::{Args, Parser, Subcommand, ValueEnum};
use gtsf_core::verify::Theorem;
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "gtsf",
    version,
    about = "Evaluate the generalized Galue-type Struve function and check its transform identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at a point.
    Eval(EvalArgs),
    /// Check one transform identity.
    Verify(VerifyArgs),
    /// Check an identity over a parameter grid.
    Sweep(SweepArgs),
    /// List the misprints corrected in the implemented identities.
    Errata(ErrataArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Gtsf,
    Wright,
    #[value(name = "struve_h")]
    StruveH,
    Kummer,
    #[value(name = "whittaker_m")]
    WhittakerM,
    #[value(name = "whittaker_w")]
    WhittakerW,
    #[value(name = "bessel_k")]
    BesselK,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Euler,
    Laplace,
    Whittaker,
    Ktransform,
    Frft,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Euler => Theorem::Euler,
            TheoremArg::Laplace => Theorem::Laplace,
            TheoremArg::Whittaker => Theorem::Whittaker,
            TheoremArg::Ktransform => Theorem::KTransform,
            TheoremArg::Frft => Theorem::FracFourier,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Acceptance,
}

/// Parameters named after the symbols of the identities.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamFlags {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub order: Option<f64>,
}

impl ParamFlags {
    /// The flags that were given, by parameter name.
    pub fn to_map(&self) -> BTreeMap<String, f64> {
        [
            ("a", self.a),
            ("p", self.p),
            ("b", self.b),
            ("c", self.c),
            ("lambda", self.lambda),
            ("mu", self.mu),
            ("xi", self.xi),
            ("x", self.x),
            ("r", self.r),
            ("s", self.s),
            ("zeta", self.zeta),
            ("tau", self.tau),
            ("omega", self.omega),
            ("rho", self.rho),
            ("nu", self.nu),
            ("order", self.order),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub function: Function,
    /// Evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    pub z: f64,
    #[command(flatten)]
    pub params: ParamFlags,
    /// Upper Wright pair `coeff,scale`; repeat for each pair.
    #[arg(long, allow_hyphen_values = true)]
    pub upper: Vec<String>,
    /// Lower Wright pair `coeff,scale`; repeat for each pair.
    #[arg(long, allow_hyphen_values = true)]
    pub lower: Vec<String>,
    /// First Kummer parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Second Kummer parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Series stopping tolerance.
    #[arg(long, default_value_t = gtsf_core::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub theorem: TheoremArg,
    #[command(flatten)]
    pub params: ParamFlags,
    /// Relative residual tolerance (default depends on the theorem).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Theorem to sweep; omit with --preset.
    #[arg(required_unless_present = "preset")]
    pub theorem: Option<TheoremArg>,
    /// Grid axis `name=min:max:count` (or `name=value`); repeat per parameter.
    #[arg(long = "grid", allow_hyphen_values = true)]
    pub grid: Vec<String>,
    /// Built-in case list instead of a grid.
    #[arg(long, value_enum, conflicts_with_all = ["theorem", "grid"])]
    pub preset: Option<Preset>,
    /// Fixed values for parameters not on the grid.
    #[command(flatten)]
    pub params: ParamFlags,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Largest number of cases a grid may expand to.
    #[arg(long, default_value_t = gtsf_core::sweep::DEFAULT_CASE_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ErrataArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
