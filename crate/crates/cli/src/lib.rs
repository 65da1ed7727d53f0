//! Command-line front end for `starsym`.
//!
//! [`run`] does all the work and returns the process exit code, so the binary
//! is a thin wrapper and tests can drive the commands in-process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod output;
pub mod verify;

pub use output::{betti_from_json, SCHEMA};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variable overriding the enumeration cap.
pub const LIMIT_ENV: &str = "STARSYM_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "starsym",
    version,
    about = "Symbolic powers of star configurations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the minimal generators of I_c^(m), or of I_c^(m)/I_c^m with --module.
    Gens(GensArgs),
    /// Number of generators, symbolic defect, regularity and generator degrees.
    Invariants(CommonArgs),
    /// Graded Betti table of R/I_c^(m).
    Betti(CommonArgs),
    /// Check the formulas against the brute-force ideal engine.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Number of forms.
    #[arg(long)]
    pub s: usize,
    /// Codimension.
    #[arg(long)]
    pub c: usize,
    /// Symbolic power.
    #[arg(long)]
    pub m: usize,
    /// Common degree of the forms.
    #[arg(long, default_value_t = 1)]
    pub delta: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct GensArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Only generators outside the ordinary power.
    #[arg(long)]
    pub module: bool,
    /// Refuse to enumerate more than this many generators.
    #[arg(long)]
    pub limit: Option<u64>,
    /// Print the number of generators instead of listing them.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub max_s: usize,
    #[arg(long, default_value_t = 3)]
    pub max_m: usize,
    /// Sample monomials in large cells with this seed instead of testing all of them.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; defaults to the rayon default.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Failure of a command, carrying the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Limit(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Limit(_) => EXIT_LIMIT,
            CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Limit(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<starsym::Error> for CliError {
    fn from(e: starsym::Error) -> Self {
        match e {
            starsym::Error::ResourceLimit { .. } => CliError::Limit(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl ParamArgs {
    pub fn to_params(&self) -> CliResult<starsym::StarParams> {
        Ok(starsym::StarParams::new(
            self.s, self.c, self.m, self.delta,
        )?)
    }
}

/// The enumeration cap: `--limit`, else `STARSYM_LIMIT`, else the library default.
pub fn resolve_limit(flag: Option<u64>, env: Option<String>) -> CliResult<u64> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match env {
        Some(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!("{LIMIT_ENV}={v:?} is not a non-negative integer"))
        }),
        None => Ok(starsym::generators::DEFAULT_GENERATOR_CAP),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Gens(a) => {
            let limit = resolve_limit(a.limit, std::env::var(LIMIT_ENV).ok())?;
            output::gens(a, limit, out)?;
            Ok(EXIT_OK)
        }
        Command::Invariants(a) => {
            output::invariants(&a.params.to_params()?, a.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Betti(a) => {
            output::betti(&a.params.to_params()?, a.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => {
            let config = verify::Config::from_args(a)?;
            let report = verify::run(&config, &verify::Pipelines::default())?;
            verify::render(&report, a.format, out)?;
            Ok(report.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_precedence() {
        assert_eq!(resolve_limit(Some(7), Some("9".into())).unwrap(), 7);
        assert_eq!(resolve_limit(None, Some(" 9 ".into())).unwrap(), 9);
        assert_eq!(
            resolve_limit(None, None).unwrap(),
            starsym::generators::DEFAULT_GENERATOR_CAP
        );
        assert_eq!(
            resolve_limit(None, Some("-1".into()))
                .unwrap_err()
                .exit_code(),
            EXIT_USAGE
        );
    }

    #[test]
    fn in_process_run_matches_binary_contract() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            [
                "starsym", "gens", "--s", "3", "--c", "2", "--m", "2", "--count",
            ],
            &mut out,
            &mut err,
        );
        assert_eq!((code, out.as_slice()), (EXIT_OK, b"4\n".as_slice()));
        let code = run(
            ["starsym", "betti", "--s", "2", "--c", "2", "--m", "1"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_USAGE);
        assert!(String::from_utf8(err).unwrap().starts_with("error: "));
    }
}
