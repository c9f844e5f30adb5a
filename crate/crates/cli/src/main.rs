//! `ntkit`: command-line access to curves, q-expansions, lattices, finite
//! fields and the classical Fermat toolkit.

mod commands;
mod config;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{CliConfig, Format};

#[derive(Parser, Debug)]
#[command(
    name = "ntkit",
    version,
    about = "Elliptic curves, modular forms and friends at desk scale"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// q-series truncation order
    #[arg(long, global = true)]
    pub prec: Option<usize>,
    /// Largest prime to scan
    #[arg(long, global = true)]
    pub pmax: Option<u64>,
    /// Lattice truncation radius
    #[arg(long, global = true)]
    pub radius: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// key=value file with defaults for the flags above
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Curve invariants, reduction and coefficients
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Frey curve of a^P + b^P = c^P
    Frey {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        exponent: u32,
    },
    /// q-expansion of E4, E6, delta or j
    Qexp { form: String },
    /// Hecke operator T_n on a level-one form
    Hecke {
        n: u64,
        #[arg(long, default_value = "delta")]
        form: String,
    },
    /// Genus of X_0(N) = dim S_2(Gamma_0(N))
    Dim { level: u64 },
    /// Reduce a point of the upper half-plane to the fundamental domain
    Reduce {
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
    },
    /// Lattice sums and uniformization checks
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Finite fields and Frobenius
    #[command(subcommand)]
    Galois(GaloisCmd),
    /// Pythagorean triples, exponent reduction, n = 4, Z[rho], abc
    #[command(subcommand)]
    Classical(ClassicalCmd),
}

#[derive(Subcommand, Debug)]
pub enum CurveCmd {
    /// Invariants, 2-torsion, reduction table and conductor
    Analyze {
        #[arg(allow_hyphen_values = true)]
        model: String,
    },
    /// A_n table for n <= pmax coprime to 6
    Ap {
        #[arg(allow_hyphen_values = true)]
        model: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    Check {
        #[arg(long, default_value = "square")]
        shape: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum GaloisCmd {
    Frob { p: u64, k: u32 },
}

#[derive(Subcommand, Debug)]
pub enum ClassicalCmd {
    Pythag {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    ReduceExp {
        n: u64,
    },
    N4 {
        bound: u64,
    },
    Eisenstein {
        range: i64,
    },
    Abc {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    AbcScan {
        cmax: u64,
        #[arg(long, default_value_t = 1.4)]
        threshold: f64,
    },
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(ntkit::Error),
    Io(io::Error),
}

impl From<ntkit::Error> for CliError {
    fn from(e: ntkit::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn settings(g: &GlobalOpts) -> Result<CliConfig, CliError> {
    let mut cfg = CliConfig::default();
    if let Some(path) = &g.config {
        cfg.merge_file(path)
            .map_err(|e| CliError::Usage(format!("{e:#}")))?;
    }
    if let Some(p) = g.prec {
        cfg.prec = p;
    }
    if let Some(p) = g.pmax {
        cfg.pmax = p;
    }
    if let Some(r) = g.radius {
        cfg.radius = r;
    }
    if g.format.is_some() {
        cfg.format = g.format;
    }
    if cfg.prec == 0 || cfg.pmax == 0 || cfg.radius == 0 {
        return Err(CliError::Usage(
            "--prec, --pmax and --radius must be positive".into(),
        ));
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = settings(&cli.global).and_then(|cfg| commands::run(&cli.command, &cfg));
    match result {
        Ok(text) => {
            let mut out = io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
