mod commands;
mod config;
mod example;

use std::io::Write;
use std::process::ExitCode;

use akspecht::Error;
use clap::{Parser, Subcommand};
use config::{ModeArg, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "akspecht", version, about = "Exact computations in Ariki-Koike algebras and their Specht modules")]
struct Cli {
    /// Number of components (the order of the cyclic factor).
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Rank of the symmetric group part.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Generic)]
    mode: ModeArg,
    /// Value of q in rational mode, e.g. `2/3`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Comma-separated values of Q_1..Q_r. Cyclotomic mode accepts Laurent monomials such as `q^5`.
    #[arg(long = "Q", global = true, allow_hyphen_values = true)]
    big_q: Option<String>,
    /// Order of the root of unity q in cyclotomic mode.
    #[arg(long, global = true)]
    e: Option<u32>,
    /// Seed for randomly drawn rational parameters.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List standard tableaux of a shape, or semistandard ones of a given type.
    Tableaux {
        #[arg(long)]
        shape: String,
        #[arg(long = "type")]
        ty: Option<String>,
    },
    /// Build one algebra element and print its normal form.
    Element(commands::ElementArgs),
    /// The 𝔡 and 𝔩 generator families of a multipartition.
    Generators {
        #[arg(long)]
        lambda: String,
    },
    /// Solve the generator conditions for homomorphisms S^λ → S^ν.
    Solve {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
    },
    /// Compare the ideal generated by the 𝔡 and 𝔩 elements with M^λ ∩ Ȟ^λ.
    VerifyIdeal {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
    },
    /// Recompute the worked example for λ=((2,2),(2,1)), ν=((5),(2)) and compare with the reference values.
    ReproduceExample,
}

pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    pub mismatch: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::InvalidIndex(_) | Error::InvalidMode(_) | Error::Specialization(_) | Error::Parse { .. } => 1,
        Error::Arithmetic(_) | Error::NotInModule(_) | Error::NoCandidates { .. } | Error::NonConvergence(_) => 2,
    }
}

fn run(cli: &Cli) -> akspecht::Result<Output> {
    let cfg = RunConfig {
        r: cli.r,
        n: cli.n,
        mode: cli.mode,
        q: cli.q.clone(),
        big_q: cli.big_q.clone(),
        e: cli.e,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Tableaux { shape, ty } => commands::tableaux(shape, ty.as_deref()),
        Command::Element(args) => commands::element(&cfg, args),
        Command::Generators { lambda } => commands::generators(&cfg, lambda),
        Command::Solve { lambda, nu } => commands::solve(&cfg, lambda, nu),
        Command::VerifyIdeal { lambda, max_iter } => commands::verify_ideal(&cfg, lambda, *max_iter),
        Command::ReproduceExample => example::reproduce(cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let mut body = if cli.pretty { out.text } else { serde_json::to_string_pretty(&out.json).expect("JSON values always serialize") };
    body.push('\n');
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(if out.mismatch { 3 } else { 0 })
}
