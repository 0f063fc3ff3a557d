use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coherent::Family;

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "pt-revival",
    about = "Coherent-state revivals in the trigonometric Pöschl-Teller well",
    arg_required_else_help = true,
    args_override_self = true
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Expansion coefficients d_n as CSV.
    Coeffs(CoeffsArgs),
    /// Probability density at selected times.
    Snapshot(SnapshotArgs),
    /// Space-time density raster.
    Carpet(CarpetArgs),
    /// Autocorrelation A(t) over [0, t-max]·T_rev.
    Autocorr(AutocorrArgs),
    /// DFT amplitudes of the fractional revival at (r/s)·T_rev.
    Fractional(FractionalArgs),
    /// Position expectation of a general-well state over time.
    Xpect(XpectArgs),
    /// Classical trajectory in the general well.
    Classical(ClassicalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    SptDocs,
    SptAocs,
    PtDocs,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::SptDocs => Family::SptDocs,
            FamilyArg::SptAocs => Family::SptAocs,
            FamilyArg::PtDocs => Family::PtDocs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Pgm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum XpectMethod {
    Closed,
    Quadrature,
}

/// How the closed-form series fixes its normalization constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum XpectNorm {
    /// Reciprocal of the retained coefficient weight.
    Exact,
    /// Matched to the quadrature position at t = 0.
    Anchored,
}

/// Parameters of the well and of the coherent state.
#[derive(Debug, Clone, PartialEq, Args)]
pub struct StateArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long)]
    pub mass: Option<f64>,
    /// Displacement parameter (also accepted for the annihilation-type state).
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Annihilation-operator parameter (also accepted for displacement-type states).
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long, default_value_t = crate::coherent::DEFAULT_TOL)]
    pub tol: f64,
    /// Read d_n from a CSV written by `coeffs` instead of generating them.
    #[arg(long = "coeffs-file")]
    pub coeffs_file: Option<PathBuf>,
    /// key=value file of defaults for any flag of this subcommand.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, short, default_value = "coeffs.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SnapshotArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Comma-separated times in units of T_rev.
    #[arg(long, value_delimiter = ',', default_value = "0,0.125,0.25,0.5")]
    pub times: Vec<f64>,
    #[arg(long, default_value_t = 512)]
    pub nx: usize,
    #[arg(long, short, default_value = "snapshot.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct CarpetArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, default_value_t = 512)]
    pub nx: usize,
    #[arg(long, default_value_t = 512)]
    pub nt: usize,
    #[arg(long = "t-max", default_value_t = 1.0)]
    pub t_max: f64,
    #[arg(long, value_enum, default_value_t = Format::Pgm)]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct AutocorrArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, default_value_t = 2048)]
    pub nt: usize,
    #[arg(long = "t-max", default_value_t = 1.0)]
    pub t_max: f64,
    /// Write |A|² instead of the complex value.
    #[arg(long = "modulus-squared")]
    pub modulus_squared: bool,
    #[arg(long, short, default_value = "autocorr.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct FractionalArgs {
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Optional CSV `p,re,im` of the amplitudes.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct XpectArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, default_value_t = 1001)]
    pub nt: usize,
    #[arg(long = "t-max", default_value_t = 1.0)]
    pub t_max: f64,
    #[arg(long, value_enum, default_value_t = XpectMethod::Closed)]
    pub method: XpectMethod,
    #[arg(long, value_enum, default_value_t = XpectNorm::Exact)]
    pub normalization: XpectNorm,
    /// Quadrature nodes for `--method quadrature` and `--normalization anchored`.
    #[arg(long, default_value_t = 800)]
    pub nodes: usize,
    #[arg(long, short, default_value = "xpect.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct ClassicalArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Length scale of the trajectory; defaults to 1/(2α).
    #[arg(long)]
    pub a: Option<f64>,
    /// Classical energy; defaults to the mean energy of the coherent state.
    #[arg(long)]
    pub energy: Option<f64>,
    #[arg(long, default_value_t = 1001)]
    pub nt: usize,
    #[arg(long = "t-max", default_value_t = 1.0)]
    pub t_max: f64,
    #[arg(long, short, default_value = "classical.csv")]
    pub output: PathBuf,
}

/// Turn `key=value` lines into `--key=value` tokens. `#` starts a comment;
/// `key=true` becomes a bare switch and `key=false` is dropped.
fn config_tokens(text: &str) -> Result<Vec<OsString>, String> {
    let mut tokens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value, found `{line}`", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || key.starts_with('-') || key == "config" {
            return Err(format!("config line {}: invalid key `{key}`", lineno + 1));
        }
        match value {
            "true" => tokens.push(format!("--{key}").into()),
            "false" => {}
            _ => tokens.push(format!("--{key}={value}").into()),
        }
    }
    Ok(tokens)
}

fn find_config(args: &[OsString]) -> Option<Result<PathBuf, ()>> {
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let arg = arg.to_string_lossy();
        if arg == "--config" {
            return Some(iter.next().map(PathBuf::from).ok_or(()));
        }
        if let Some(path) = arg.strip_prefix("--config=") {
            return Some(Ok(PathBuf::from(path)));
        }
    }
    None
}

/// Parse arguments (program name first), merging a `--config` file.
///
/// Every failure is a clap error, which exits with status 2.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let mut args: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let has_subcommand = args.get(1).is_some_and(|a| !a.to_string_lossy().starts_with('-'));
    if has_subcommand {
        if let Some(found) = find_config(&args[2..]) {
            let cmd = <RunConfig as clap::CommandFactory>::command();
            let path = found.map_err(|_| cmd.clone().error(ErrorKind::InvalidValue, "--config needs a path"))?;
            let text = fs::read_to_string(&path).map_err(|e| {
                cmd.clone().error(ErrorKind::Io, format!("cannot read config {}: {e}", path.display()))
            })?;
            let tokens = config_tokens(&text).map_err(|e| cmd.clone().error(ErrorKind::InvalidValue, e))?;
            args.splice(2..2, tokens);
        }
    }
    RunConfig::try_parse_from(args)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines() {
        let t = config_tokens("# preset\nrho = 10\n\nbeta=0.8 # trailing\nmodulus-squared=true\nx=false\n").unwrap();
        assert_eq!(t, vec![OsString::from("--rho=10"), "--beta=0.8".into(), "--modulus-squared".into()]);
        assert!(config_tokens("rho 10").is_err());
        assert!(config_tokens("--rho=10").is_err());
    }

    #[test]
    fn empty_argv_is_usage_error() {
        let err = parse_config(["pt-revival"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn negative_beta_accepted() {
        let cfg = parse_config(["pt-revival", "coeffs", "--beta", "-0.5"]).unwrap();
        let Command::Coeffs(args) = cfg.command else { panic!() };
        assert_eq!(args.state.beta, Some(-0.5));
    }
}
