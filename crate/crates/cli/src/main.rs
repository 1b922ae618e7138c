use std::process::ExitCode;

use apolar_cli::config::{parse_action, parse_field};
use apolar_cli::{commands, CliError, OutputFormat, RunConfig};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Hilbert functions of inverse systems and pencils of forms"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Coefficient field: q or gf:P
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// diff, contract, or auto (differentiation unless the characteristic is at most the degree)
    #[arg(long, global = true, default_value = "auto")]
    action: String,
    /// Pencil points drawn besides 0 and infinity
    #[arg(long, global = true, default_value_t = 8)]
    samples: usize,
    #[arg(long, global = true, env = "APOLAR_SEED", default_value_t = 0)]
    seed: u64,
    /// Visit every point of the projective line (default for gf:P with P <= 257)
    #[arg(long, global = true, overrides_with = "sampled")]
    exhaustive: bool,
    /// Sample the projective line even over a small prime field
    #[arg(long, global = true)]
    sampled: bool,
    /// Emit JSON instead of a table
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of R / Ann F
    Hf {
        #[arg(long = "r")]
        r: usize,
        form: String,
    },
    /// Hilbert function, socle type and level check for R / Ann W
    Level {
        #[arg(long = "r")]
        r: usize,
        #[arg(required = true)]
        forms: Vec<String>,
    },
    /// Sweep the pencil F + lambda G and check its bounds
    Pencil {
        #[arg(long = "r")]
        r: usize,
        f: String,
        g: String,
    },
    /// Macaulay growth check of a sequence such as 1,3,6,8,6,4,2
    Osequence { sequence: String },
    /// Regression suites
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Golden worked examples
    Paperbook,
}

fn config(args: &GlobalArgs) -> Result<RunConfig, CliError> {
    Ok(RunConfig {
        field: parse_field(&args.field)?,
        action: parse_action(&args.action)?,
        samples: args.samples,
        seed: args.seed,
        exhaustive: if args.exhaustive {
            Some(true)
        } else if args.sampled {
            Some(false)
        } else {
            None
        },
        output: if args.json {
            OutputFormat::Json
        } else {
            OutputFormat::Table
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config(&cli.global).and_then(|c| match &cli.command {
        Command::Hf { r, form } => commands::hf(form, *r, &c),
        Command::Level { r, forms } => commands::level(forms, *r, &c),
        Command::Pencil { r, f, g } => commands::pencil(f, g, *r, &c),
        Command::Osequence { sequence } => commands::osequence(sequence, &c),
        Command::Verify {
            suite: Suite::Paperbook,
        } => commands::paperbook(&c),
    });
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
