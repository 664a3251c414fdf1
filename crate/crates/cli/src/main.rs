use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "nestdim", version, about = "Restricted roots and dimensions of spherical representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
pub struct Target {
    /// Family id or instance key, e.g. FII, BI or "slpq(p=2,q=4)".
    pub pair: String,
    /// Parameter bindings such as l=5 r=2.
    pub params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog families and their default instances.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the restricted-root table and the marked Satake diagram.
    Describe {
        /// Family id or instance key; omit with --from-json.
        pair: Option<String>,
        params: Vec<String>,
        /// Re-render a description previously written with --format json.
        #[arg(long, value_name = "FILE", conflicts_with = "pair")]
        from_json: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension of the representation with highest weight Σ kᵢμᵢ.
    Dim {
        #[command(flatten)]
        target: Target,
        /// Coefficients k on the spherical generators, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
        /// Evaluate the nest product only, without the cross-checks.
        #[arg(long)]
        fast: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check every λ with Σk ≤ max-total; all default instances when no pair is given.
    Verify {
        pair: Option<String>,
        params: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_total: u32,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate d(λ) for every λ with Σk ≤ max-total.
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        max_total: u32,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        fast: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Exit status 2 for bad input, 1 for failed verification.
pub enum Failure {
    Input(String),
    Check(String),
}

impl From<nestdim::Error> for Failure {
    fn from(e: nestdim::Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List { format } => commands::list(format),
        Command::Describe {
            pair,
            params,
            from_json,
            format,
        } => commands::describe(pair, &params, from_json, format),
        Command::Dim {
            target,
            lambda,
            fast,
            format,
        } => commands::dim(&target, &lambda, fast, format),
        Command::Verify {
            pair,
            params,
            max_total,
            parallel,
            format,
        } => commands::verify(pair, &params, max_total, parallel, format),
        Command::Table {
            target,
            max_total,
            parallel,
            fast,
            format,
        } => commands::table(&target, max_total, parallel, fast, format),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_errors_map_to_exit_codes() {
        let mismatch = nestdim::Error::Mismatch {
            pair: "X".into(),
            lambda: "[1]".into(),
            detail: "d".into(),
        };
        assert!(matches!(Failure::from(mismatch), Failure::Check(_)));
        assert!(matches!(Failure::from(nestdim::Error::Pole("p".into())), Failure::Check(_)));
        assert!(matches!(Failure::from(nestdim::Error::UnknownPair("p".into())), Failure::Input(_)));
        assert!(matches!(Failure::from(nestdim::Error::NotSpherical("p".into())), Failure::Input(_)));
    }
}
