mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

/// Construct, verify, sieve and replicate flag-transitive 2-design data.
#[derive(Parser)]
#[command(name = "flagsieve", version, about)]
struct Cli {
    /// Output format for verdicts and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the classified designs and write design/group files.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Verify properties of design and group files.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Run the arithmetic parameter filters.
    Sieve {
        #[command(subcommand)]
        what: SieveCmd,
    },
    /// Reproduce the recorded computer-verified facts.
    Replicate {
        /// Claim identifier, or `all`.
        claim: String,
        /// Worker count for the subset scan.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The design of points and lines of PG(n-1, q).
    PgDesign {
        /// Vector space dimension n (>= 3).
        n: usize,
        /// Field order q (a prime power).
        q: u32,
        #[arg(long)]
        design_out: Option<String>,
        #[arg(long)]
        group_out: Option<String>,
    },
    /// The derived design of a linear space read from a design file.
    Derived {
        file: String,
        #[arg(long)]
        design_out: Option<String>,
    },
    /// The complement of the Fano plane with its natural group.
    FanoComplement {
        #[arg(long)]
        design_out: Option<String>,
        #[arg(long)]
        group_out: Option<String>,
    },
    /// The 16-point biplane with a flag-transitive imprimitive group.
    Biplane16 {
        #[arg(long)]
        design_out: Option<String>,
        #[arg(long)]
        group_out: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Verify a design file as a 2-design and print its parameters.
    Design { file: String },
    /// Verify that the group in a group file acts flag-transitively on the
    /// design in a design file.
    FlagTransitive { design: String, group: String },
    /// Test the group in a group file for point-primitivity.
    Primitive { group: String },
}

#[derive(Subcommand)]
enum SieveCmd {
    /// Admissible (r, k, b) candidates for given v and lambda.
    Rk { v: u64, lambda: u64 },
    /// The nine extension-field rows (q, v, R).
    Table3,
    /// The lambda = 2 imprimitive parameter families.
    Imprimitive,
    /// Socle-order bounds for PSL(n, q) with a stabilizer of the given order.
    Bounds { n: u32, q: u64, stab: u128 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.format == Format::Json;
    let result = match cli.command {
        Command::Construct { what } => commands::construct(what, json),
        Command::Verify { what } => commands::verify(what, json),
        Command::Sieve { what } => commands::sieve(what, json),
        Command::Replicate { claim, jobs } => commands::replicate(&claim, jobs, json),
    };
    match result {
        Ok(verified) => {
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
