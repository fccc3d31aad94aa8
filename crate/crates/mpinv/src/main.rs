use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mpinv::commands::{
    cmd_check, cmd_demo, cmd_fuzz, cmd_mp, cmd_oracle, parse_context, parse_statements,
    CommandOutput, Format, EXIT_INPUT,
};
use mpinv::fuzz::FuzzConfig;
use mpinv_core::toolkit::StatementId;

/// Exact Moore-Penrose inverses and projector identities.
///
/// Exit codes: 0 verified, 1 no MP-inverse or hypothesis skipped,
/// 2 input error, 3 identity falsified.
#[derive(Parser)]
#[command(name = "mpinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the MP-inverse of a matrix file.
    Mp {
        #[arg(long)]
        input: PathBuf,
        /// Require the file to use this ring.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run statements on the p, q (and a, b, d) of a pair file.
    Check {
        /// Statement id, comma-separated ids, or `all`.
        #[arg(long)]
        statement: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run statements over seeded random projector pairs.
    Fuzz {
        #[arg(long, default_value = "QQ")]
        ring: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value = "all")]
        statement: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Negate the inverses of one statement to test the harness.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Check statements on every projector pair of a finite ring.
    Oracle {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value = "all")]
        statement: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// p = q = 1 over ℤ and over ℚ.
    Demo {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn input_error(msg: String) -> CommandOutput {
    CommandOutput {
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
        code: EXIT_INPUT,
    }
}

fn run(cli: Cli) -> CommandOutput {
    match cli.command {
        Command::Mp {
            input,
            ring,
            format,
        } => cmd_mp(&input, ring.as_deref(), format),
        Command::Check {
            statement,
            input,
            format,
        } => cmd_check(&statement, &input, format),
        Command::Fuzz {
            ring,
            seed,
            trials,
            dim,
            statement,
            format,
            corrupt,
        } => {
            let ctx = match parse_context(&ring, dim) {
                Ok(c) => c,
                Err(e) => return input_error(e),
            };
            let mut cfg = FuzzConfig::new(ctx, seed, trials);
            match parse_statements(&statement) {
                Ok(ids) => cfg.statements = ids,
                Err(e) => return input_error(e),
            }
            if let Some(c) = corrupt {
                match c.parse::<StatementId>() {
                    Ok(id) => cfg.corrupt = Some(id),
                    Err(e) => return input_error(e.to_string()),
                }
            }
            cmd_fuzz(&cfg, format)
        }
        Command::Oracle {
            ring,
            dim,
            statement,
            format,
        } => {
            let ctx = match parse_context(&ring, dim) {
                Ok(c) => c,
                Err(e) => return input_error(e),
            };
            match parse_statements(&statement) {
                Ok(ids) => cmd_oracle(ctx, &ids, format),
                Err(e) => input_error(e),
            }
        }
        Command::Demo { format } => cmd_demo(format),
    }
}

fn main() -> ExitCode {
    let out = run(Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code)
}
