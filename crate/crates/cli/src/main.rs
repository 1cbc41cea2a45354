use std::process::ExitCode;

use clap::{Parser, Subcommand};
use colorful_cli::{
    cmd_count, cmd_fixed, cmd_table, cmd_verify, parse_kind, CountRequest, OutputFormat,
    DEFAULT_FIXED_MAX_N, DEFAULT_ORBIT_MAX_N,
};
use colorful_necklaces::Oracle;

/// Exact counts of colorful three-color necklaces and bracelets.
#[derive(Parser)]
#[command(name = "colorful", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one sequence value.
    Count {
        /// alpha, necklace, bracelet, classical-necklace or classical-bracelet
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: u64,
        /// Count only classes that use all three colors.
        #[arg(long)]
        exact_colors: bool,
        /// Count only classes of minimal period exactly n.
        #[arg(long)]
        exact_period: bool,
        /// Number of colors for the classical kinds.
        #[arg(long)]
        colors: Option<u64>,
    },
    /// Print a table of one or more sequences over a range of n.
    Table {
        /// Comma-separated kind names, e.g. necklace,bracelet
        #[arg(long, value_delimiter = ',', required = true)]
        kinds: Vec<String>,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// plain, csv, markdown or bfile
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
        /// Number of colors for the classical kinds.
        #[arg(long)]
        colors: Option<u64>,
    },
    /// Compare the closed forms against brute-force enumeration.
    Verify {
        #[arg(long, default_value_t = DEFAULT_ORBIT_MAX_N)]
        max_n: u64,
        #[arg(long, default_value_t = DEFAULT_FIXED_MAX_N)]
        fixed_max_n: u64,
    },
    /// Fixed points of one group element: closed form and oracle scan.
    Fixed {
        #[arg(long)]
        n: u64,
        /// id, t12, t13, t23, c or c2
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        eps: u8,
        #[arg(long, allow_hyphen_values = true)]
        shift: i64,
    },
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Count {
            kind,
            n,
            exact_colors,
            exact_period,
            colors,
        } => {
            let req = CountRequest {
                kind,
                n,
                exact_colors,
                exact_period,
                colors,
            };
            print!("{}", cmd_count(&req)?);
        }
        Command::Table {
            kinds,
            from,
            to,
            format,
            colors,
        } => {
            let kinds = kinds
                .iter()
                .map(|k| parse_kind(k.trim(), colors))
                .collect::<anyhow::Result<Vec<_>>>()?;
            print!("{}", cmd_table(&kinds, from, to, format)?);
        }
        Command::Verify { max_n, fixed_max_n } => {
            let report = cmd_verify(max_n, fixed_max_n, Oracle::default())?;
            print!("{}", report.text);
            if !report.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Fixed {
            n,
            sigma,
            eps,
            shift,
        } => {
            let oracle = Oracle::default();
            let report = cmd_fixed(n, &sigma, eps, shift, oracle)?;
            print!("{}", report.line());
            match report.scanned {
                None => {
                    eprintln!(
                        "error: n = {n} exceeds the enumeration cap {}; oracle scan skipped",
                        oracle.cap()
                    );
                    return Ok(ExitCode::FAILURE);
                }
                Some(scan) if scan != report.closed => return Ok(ExitCode::FAILURE),
                Some(_) => {}
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
