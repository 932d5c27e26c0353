use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use propwheel_cli::commands::{
    cmd_basis, cmd_check, cmd_dims, cmd_eval, cmd_oracle, Format, OracleQuery, Output,
};
use propwheel_cli::suites::SuiteConfig;
use propwheel_cli::CliError;
use propwheel_oracle::{Limits, Side};

#[derive(Parser)]
#[command(
    name = "propwheel",
    version,
    about = "Wheeled PROP of Ext groups: evaluation, tables and oracle checks"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Bound on basis sizes and total cochain dimension.
    #[arg(long, default_value_t = 10_000, global = true)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of dim E(q, l).
    Dims {
        q_max: usize,
        /// Defaults to q_max.
        l_max: Option<usize>,
    },
    /// Canonical basis of E(q, l).
    Basis { q: usize, l: usize },
    /// Evaluate an expression; `-` reads it from stdin.
    Eval { expr: String },
    /// Run a check suite; exits with status 1 on any failure.
    Check {
        #[arg(default_value = "all")]
        suite: String,
        /// Random trials per property.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Bar-resolution oracle computations.
    Oracle {
        #[command(subcommand)]
        query: OracleCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Inputs,
    Outputs,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Ext*(a^l ⊗ Λ^j a, a^q).
    Ext {
        l: usize,
        q: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
    },
    /// Ext*(Λ^j a, a^q).
    Lambda { j: usize, q: usize },
    /// Ext*(Λ^n a, Λ^m a).
    Lambdalambda { n: usize, m: usize },
    /// Matrix of a permutation on Ext^{q-l}(a^l, a^q), e.g. `--side inputs 1 3 "(1 2)"`.
    Action {
        #[arg(long, value_enum, default_value = "inputs")]
        side: SideArg,
        l: usize,
        q: usize,
        perm: String,
    },
    /// Characters of the symmetric group on Ext*(Λ^j a, a^q).
    Characters {
        q: usize,
        #[arg(long)]
        max_wheels: Option<usize>,
    },
    /// Engine actions against the oracle on E(q, l).
    Compare { q: usize, l: usize },
    /// Sign of the Yoneda composite of [π^m] with [π^n] in slot i.
    Yoneda { m: usize, n: usize, i: usize },
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid permutation `{text}`; use cycle notation like \"(1 2)(3 4)\""
        ))
    };
    let mut cycles = Vec::new();
    for chunk in text.split(')') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let body = chunk.strip_prefix('(').ok_or_else(bad)?;
        let cycle = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| bad()))
            .collect::<Result<Vec<usize>, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let limits = Limits {
        max_cochain_dim: cli.max_dim,
        ..Limits::default()
    };
    match cli.command {
        Command::Dims { q_max, l_max } => cmd_dims(q_max, l_max.unwrap_or(q_max), cli.format),
        Command::Basis { q, l } => cmd_basis(q, l, cli.format, cli.max_dim),
        Command::Eval { expr } => {
            let text = if expr == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                expr
            };
            cmd_eval(&text, cli.format)
        }
        Command::Check { suite, trials } => {
            let config = SuiteConfig {
                seed: cli.seed,
                trials,
                limits,
            };
            cmd_check(&suite, &config, cli.format)
        }
        Command::Oracle { query } => {
            let query = match query {
                OracleCommand::Ext { l, q, lambda } => OracleQuery::Ext { l, j: lambda, q },
                OracleCommand::Lambda { j, q } => OracleQuery::Ext { l: 0, j, q },
                OracleCommand::Lambdalambda { n, m } => OracleQuery::LambdaLambda { n, m },
                OracleCommand::Action { side, l, q, perm } => OracleQuery::Action {
                    side: match side {
                        SideArg::Inputs => Side::Inputs,
                        SideArg::Outputs => Side::Outputs,
                    },
                    l,
                    q,
                    cycles: parse_cycles(&perm)?,
                },
                OracleCommand::Characters { q, max_wheels } => OracleQuery::Characters {
                    q,
                    max_wheels: max_wheels.unwrap_or(q),
                },
                OracleCommand::Compare { q, l } => OracleQuery::Compare { q, l },
                OracleCommand::Yoneda { m, n, i } => OracleQuery::Yoneda { m, n, i },
            };
            cmd_oracle(&query, cli.format, &limits)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
