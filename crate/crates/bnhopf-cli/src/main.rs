// SPDX-License-Identifier: MIT
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Outcome;

#[derive(Parser, Debug)]
#[command(name = "bnhopf", version, about = "Mod 2 cohomology Hopf rings of B_n and B_n^+")]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    #[value(name = "B")]
    B,
    #[value(name = "Bplus")]
    Bplus,
}

#[derive(Args, Debug)]
pub struct RingArg {
    #[arg(long, value_enum, default_value = "B")]
    pub ring: Ring,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the additive basis in bidegree (n, d).
    Basis {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Cup product of two classes.
    Mul {
        #[command(flatten)]
        ring: RingArg,
        x: String,
        y: String,
    },
    /// Transfer product of two classes.
    Transfer {
        #[command(flatten)]
        ring: RingArg,
        x: String,
        y: String,
    },
    /// Coproduct, optionally restricted to one left component.
    Comul {
        #[command(flatten)]
        ring: RingArg,
        x: String,
        #[arg(long)]
        component: Option<u32>,
    },
    /// Restriction from B_n to B_n^+.
    Res { x: String },
    /// Transfer from B_n^+ to B_n.
    Tr { x: String },
    /// Restriction to the elementary abelian subgroup of a partition.
    Restrict {
        #[arg(long)]
        partition: String,
        /// Use the second restriction map, through the conjugate subgroup.
        #[arg(long)]
        prime: bool,
        x: String,
    },
    /// Evaluate an arbitrary expression.
    Eval { expr: String },
    /// Table of dimensions for components 0..=n and degrees 0..=d.
    Poincare {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 8)]
        d: u32,
    },
    /// Rank of the stacked restriction matrices on the charged basis.
    Detect {
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        d: u32,
    },
    /// Run a verification suite.
    Verify {
        /// Suite name; all suites when omitted.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli.cmd) {
        Ok(report) => {
            output::emit(&report, cli.pretty);
            match report.outcome {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            output::emit_error(&e, cli.pretty);
            ExitCode::from(2)
        }
    }
}
