//! The `h2cm` binary: argument parsing and exit codes around
//! [`cli::commands::run`].
//!
//! Exit status 0 means every verdict in the report holds, 1 means some
//! verdict is false, and 2 means the invocation or the instance file is bad.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use cli::commands::{run, Request};

#[derive(Parser)]
#[command(
    name = "h2cm",
    version,
    about = "Exact low-degree cohomology of crossed modules and 2-truncated simplicial groups"
)]
struct Args {
    /// Print the canonical JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every object in an instance file and say what it contains.
    Validate { instance: PathBuf },
    /// Homotopy groups of the file's crossed module or simplicial group.
    Homotopy {
        instance: PathBuf,
        /// Crossed module to use when the file defines several.
        #[arg(long)]
        target: Option<String>,
    },
    /// Cohomology in one degree over named or shorthand coefficients.
    Cohomology {
        instance: PathBuf,
        /// Degree, 0 through 2.
        #[arg(long)]
        dim: usize,
        /// A module name from the file, or Z, Z/n, Zn for trivial cyclic
        /// coefficients.
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        target: Option<String>,
    },
    /// The first Postnikov invariant of a crossed module.
    Postnikov {
        instance: PathBuf,
        #[arg(long)]
        target: Option<String>,
    },
    /// H² computed through cocycle pairs over the homotopy data, compared
    /// with the direct H² unless --z3 picks an explicit cocycle.
    #[command(name = "em-h2")]
    EmH2 {
        instance: PathBuf,
        #[arg(long)]
        coeffs: String,
        /// A named 3-cocycle from the file instead of the Postnikov
        /// representative.
        #[arg(long)]
        z3: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
    /// Compare the pair-based H² of two named 3-cocycles over the same
    /// crossed module.
    #[command(name = "compare-em")]
    CompareEm {
        instance: PathBuf,
        /// Exactly two cocycle names, one per flag.
        #[arg(long = "z3", required = true)]
        z3: Vec<String>,
        #[arg(long)]
        coeffs: String,
    },
    /// Build the 1-coskeleton of a crossed module and truncate it back.
    Coskeleton {
        instance: PathBuf,
        #[arg(long)]
        target: Option<String>,
        /// Also write the coskeleton as a standalone instance file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Truncate the file's simplicial group to its crossed module segment.
    Truncate { instance: PathBuf },
    /// Realise a named 3-cocycle as a symbolic extension and verify it.
    #[command(name = "std-ext")]
    StdExt {
        instance: PathBuf,
        #[arg(long)]
        z3: String,
        /// Sampler seed; the H2_SEED environment variable is the fallback.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random samples.
        #[arg(long)]
        count: Option<usize>,
        /// Longest random word the sampler draws.
        #[arg(long = "word-cap")]
        word_cap: Option<usize>,
    },
}

fn split(cmd: Cmd) -> (PathBuf, Request) {
    match cmd {
        Cmd::Validate { instance } => (instance, Request::Validate),
        Cmd::Homotopy { instance, target } => (instance, Request::Homotopy { target }),
        Cmd::Cohomology {
            instance,
            dim,
            coeffs,
            target,
        } => (instance, Request::Cohomology { dim, coeffs, target }),
        Cmd::Postnikov { instance, target } => (instance, Request::Postnikov { target }),
        Cmd::EmH2 {
            instance,
            coeffs,
            z3,
            target,
        } => (instance, Request::EmH2 { coeffs, z3, target }),
        Cmd::CompareEm { instance, z3, coeffs } => (instance, Request::CompareEm { z3, coeffs }),
        Cmd::Coskeleton {
            instance,
            target,
            emit,
        } => (instance, Request::Coskeleton { target, emit }),
        Cmd::Truncate { instance } => (instance, Request::Truncate),
        Cmd::StdExt {
            instance,
            z3,
            seed,
            count,
            word_cap,
        } => (
            instance,
            Request::StdExt {
                z3,
                seed,
                count,
                word_cap,
            },
        ),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let started = Instant::now();
    let (instance, request) = split(args.command);
    match run(&instance, &request) {
        Ok(report) => {
            if args.json {
                println!("{}", report.render_json());
            } else {
                print!("{}", report.render_text(Some(started.elapsed().as_millis())));
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
