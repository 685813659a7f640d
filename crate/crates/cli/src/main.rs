use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use satake::bk::BkCase;
use satake::rootdata::CartanType;
use satake::verify::{Suite, VerifyConfig};
use satake::vinberg::CSign;
use satake_cli::commands::{self, Outcome, BK_CHECKS};
use satake_cli::config::{FileConfig, Format, RunConfig};
use satake_cli::output::render;
use satake_cli::CliError;

#[derive(Parser)]
#[command(name = "satake", version, about = "Exact checks of unramified local identities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// TOML file with defaults for n_max, degree, format and c_sign.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Orientation of the grading c: det or inverse-det.
    #[arg(long, global = true)]
    c_sign: Option<CSign>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Standard L-factor against the symmetric-power traces.
    Lfactor {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long)]
        rank: usize,
        /// std, trivial, or comma-separated Dynkin labels.
        #[arg(long, default_value = "std")]
        rep: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Graded layers of the basic function at doubled s.
    Basicfn {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "std")]
        rep: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s2: i32,
        /// Doubled shift applied through the |c| bookkeeping.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift2: i32,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Doubling normalizing factors and the fixed-point identity.
    Doubling {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: usize,
    },
    /// Highest-weight lines, d_P, the normalizer, Mellin and Fourier checks.
    Bk {
        #[arg(long)]
        case: BkCase,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "hwv,dp,gamma,mellin,fourier")]
        check: Vec<String>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Unit group of a Vinberg monoid.
    Monoid {
        #[arg(long, conflicts_with_all = ["ty", "rank", "lambda"])]
        sym_power: Option<u32>,
        #[arg(long = "type", requires_all = ["rank", "lambda"])]
        ty: Option<CartanType>,
        #[arg(long)]
        rank: Option<usize>,
        /// Comma-separated Dynkin labels of lambda.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// gamma(a s + b2/2), or the Tate shell sum for chi = |.|^(s0_2/2).
    Gamma {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i32>,
        #[arg(long, allow_hyphen_values = true)]
        b2: Option<i32>,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "b2"])]
        tate: Option<i32>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Run an identity suite and emit the ledger.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        degree: Option<u32>,
        /// Include per-entry wall-clock times.
        #[arg(long)]
        timings: bool,
        #[arg(long, hide = true)]
        flip_normalizer_sign: bool,
    },
}

fn base_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        let f = FileConfig::load(path)?;
        cfg.n_max = f.n_max.unwrap_or(cfg.n_max);
        cfg.degree = f.degree.unwrap_or(cfg.degree);
        cfg.format = f.format.unwrap_or(cfg.format);
        cfg.c_sign = f.c_sign.unwrap_or(cfg.c_sign);
    }
    cfg.format = cli.format.unwrap_or(cfg.format);
    cfg.c_sign = cli.c_sign.unwrap_or(cfg.c_sign);
    Ok(cfg)
}

fn dispatch(cli: &Cli) -> Result<(RunConfig, Outcome), CliError> {
    let mut cfg = base_config(cli)?;
    let out = match &cli.command {
        Command::Lfactor { ty, rank, rep, degree } => {
            cfg.subcommand = "lfactor".into();
            cfg.degree = degree.unwrap_or(cfg.degree);
            commands::lfactor(*ty, *rank, rep, cfg.degree as usize)?
        }
        Command::Basicfn { ty, rank, rep, s2, shift2, degree } => {
            cfg.subcommand = "basicfn".into();
            cfg.degree = degree.unwrap_or(cfg.degree);
            commands::basicfn(*ty, *rank, rep, *s2, *shift2, cfg.degree as usize)?
        }
        Command::Doubling { case, n } => {
            cfg.subcommand = "doubling".into();
            cfg.case = Some(case.clone());
            cfg.n = Some(*n);
            commands::doubling(case, *n)?
        }
        Command::Bk { case, n, check, degree } => {
            cfg.subcommand = "bk".into();
            cfg.case = Some(format!("{case:?}").to_lowercase());
            cfg.n = Some(*n);
            cfg.degree = degree.unwrap_or(cfg.degree);
            if let Some(bad) = check.iter().find(|c| !BK_CHECKS.contains(&c.as_str())) {
                return Err(CliError::Parse(format!("unknown check {bad:?}")));
            }
            commands::bk(*case, *n, check, &cfg)?
        }
        Command::Monoid { sym_power, ty, rank, lambda } => {
            cfg.subcommand = "monoid".into();
            match (sym_power, ty, rank, lambda) {
                (Some(k), _, _, _) => commands::monoid_sym_power(*k)?,
                (None, Some(ty), Some(rank), Some(l)) => commands::monoid_lambda(*ty, *rank, l)?,
                _ => return Err(CliError::Parse("give --sym-power or --type, --rank and --lambda".into())),
            }
        }
        Command::Gamma { a, b2, tate, degree } => {
            cfg.subcommand = "gamma".into();
            cfg.degree = degree.unwrap_or(cfg.degree);
            match (a, b2, tate) {
                (_, _, Some(s0_2)) => commands::gamma_tate(*s0_2, cfg.degree)?,
                (Some(a), b2, None) => commands::gamma(*a, b2.unwrap_or(0))?,
                _ => return Err(CliError::Parse("give --a [--b2] or --tate".into())),
            }
        }
        Command::Verify { suite, n_max, degree, timings, flip_normalizer_sign } => {
            cfg.subcommand = "verify".into();
            cfg.n_max = n_max.unwrap_or(cfg.n_max);
            cfg.degree = degree.unwrap_or(cfg.degree);
            commands::verify(&VerifyConfig {
                suite: *suite,
                n_max: cfg.n_max,
                degree: cfg.degree,
                c_sign: cfg.c_sign,
                timings: *timings,
                flip_normalizer_sign: *flip_normalizer_sign,
            })
        }
    };
    Ok((cfg, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((cfg, out)) => {
            print!("{}", render(&out.report, cfg.format));
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("satake: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
