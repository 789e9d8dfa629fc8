use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use leibniz::commands::{
    cmd_check, cmd_normalize, cmd_profile, cmd_search, exit_code, NormalizeArgs, ProfileArgs,
    SearchArgs,
};

#[derive(Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Identity checks, nilpotency profiles and normal forms for Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the right and left Leibniz identities on all basis triples
    Check { path: PathBuf },
    /// Compute every nilpotency series of an ideal and check the index bound
    Profile {
        path: PathBuf,
        /// Named ideal from the algebra file
        #[arg(long, conflicts_with = "full")]
        ideal: Option<String>,
        /// Use the whole algebra (the default)
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 64)]
        nmax: usize,
        /// Bound for the Es translates [default: dim+1]
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rewrite an expression into right-normed words
    Normalize {
        expression: String,
        /// Algebra to evaluate both sides in
        algebra: Option<PathBuf>,
        /// name=vector, e.g. x=e1 or y=1,0,-1/2
        #[arg(long = "assign", requires = "algebra")]
        assign: Vec<String>,
        /// Ideal containing the generators tagged with '!'
        #[arg(long, requires = "algebra")]
        ideal: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_term_length: usize,
    },
    /// Enumerate and sample small algebras over GF(p) and profile them
    Search {
        #[arg(long)]
        dim: usize,
        /// Prime field, e.g. F3
        #[arg(long, default_value = "F3")]
        field: String,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        nmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include every right Leibniz algebra found in the JSON report
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let outcome = match Cli::parse().command {
        Command::Check { path } => cmd_check(&path),
        Command::Profile {
            path,
            ideal,
            full: _,
            nmax,
            kmax,
            seed,
            json,
        } => cmd_profile(&ProfileArgs {
            path,
            ideal,
            n_max: nmax,
            k_max: kmax,
            seed,
            json,
        }),
        Command::Normalize {
            expression,
            algebra,
            assign,
            ideal,
            max_term_length,
        } => cmd_normalize(&NormalizeArgs {
            expression,
            algebra,
            assign,
            ideal,
            max_term_length,
        }),
        Command::Search {
            dim,
            field,
            samples,
            seed,
            nmax,
            json,
            list,
        } => cmd_search(&SearchArgs {
            dim,
            field,
            samples,
            seed,
            n_max: nmax,
            json,
            list,
        }),
    };
    match outcome {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
