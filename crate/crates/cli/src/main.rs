//! `bmw`: operator identities, dimension counts and decomposition matrices
//! of BMW algebras realized on quantum-group tensor space.
//!
//! Exit status: 0 when every check holds, 1 when a mathematical check
//! fails, 2 on a usage error. `BMW_THREADS` sets the worker count.

mod commands;
mod job;
mod output;

use std::io::Write;
use std::process::ExitCode;

use bmw_core::BmwError;
use clap::{Parser, Subcommand};

use job::JobArgs;

#[derive(Parser)]
#[command(name = "bmw", version, about = "Exact computations for BMW algebras through Schur-Weyl duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining relations and the operator identities on V^{⊗r}.
    Relations(JobArgs),
    /// Operator-span rank and the dimensions of highest-weight spaces.
    Dims(JobArgs),
    /// Decomposition matrix of cell modules into simple modules.
    Decomp(JobArgs),
}

const THREADS_VAR: &str = "BMW_THREADS";

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("bmw: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    return usage(format!("cannot start {n} threads: {e}"));
                }
            }
            _ => return usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")),
        }
    }
    let (name, args) = match &cli.command {
        Command::Relations(a) => ("relations", a),
        Command::Dims(a) => ("dims", a),
        Command::Decomp(a) => ("decomp", a),
    };
    let job = match args.resolve() {
        Ok(j) => j,
        Err(e) => return usage(e),
    };
    let result = match &cli.command {
        Command::Relations(_) => commands::relations(&job),
        Command::Dims(_) => commands::dims(&job),
        Command::Decomp(_) => commands::decomp(&job),
    };
    let out = match result {
        Ok(o) => o,
        Err(BmwError::Usage(m)) => return usage(m),
        Err(e) => {
            eprintln!("bmw: {e}");
            return ExitCode::from(1);
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Err(e) = out.write(&job, name, &mut lock).and_then(|_| lock.flush()) {
        eprintln!("bmw: cannot write output: {e}");
        return ExitCode::from(1);
    }
    match &out.failure {
        Some(f) => {
            eprintln!("bmw: check failed: {f}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
