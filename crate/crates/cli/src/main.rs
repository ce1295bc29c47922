//! Command-line front end: `analyze` and `fixtures list`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rook_spectral::io::{self, OutputFormat, RunConfig};
use rook_spectral::spectral::{Association, InnerProduct};
use rook_spectral::{Dataset, Error, IntegerPartition};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser)]
#[command(name = "rook-spectral", version, about = "Spectral analysis of partially ranked data on the rook monoid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a ballot file or an embedded fixture.
    Analyze(AnalyzeArgs),
    /// Embedded datasets.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Print the embedded fixture names.
    List,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// CSV/JSON ballot file, or the name of an embedded fixture.
    #[arg(long)]
    input: String,
    /// Number of candidates; inferred from the ballots when omitted.
    #[arg(long)]
    n: Option<String>,
    /// groupoid | semigroup
    #[arg(long, default_value = "groupoid")]
    association: String,
    /// groupoid | natural
    #[arg(long, default_value = "groupoid")]
    ip: String,
    /// Highest interpretable order to report.
    #[arg(long, default_value = "2")]
    order: String,
    /// Comma-separated ranks to report (default: all).
    #[arg(long)]
    ranks: Option<String>,
    /// Partition whose energy share is reported, e.g. `2,1`; repeatable.
    #[arg(long = "energy")]
    energy: Vec<String>,
    /// text | csv | json
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_usize(flag: &str, value: &str) -> Result<usize, Error> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("--{flag} expects a nonnegative integer, got {value:?}")))
}

fn config_from(args: &AnalyzeArgs) -> Result<RunConfig, Error> {
    let ranks = args
        .ranks
        .as_deref()
        .map(|list| list.split(',').map(|k| parse_usize("ranks", k)).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let energy_subset = args
        .energy
        .iter()
        .map(|p| {
            p.parse::<IntegerPartition>()
                .map_err(|e| Error::Config(format!("--energy {p:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RunConfig {
        association: args.association.parse::<Association>()?,
        inner_product: args.ip.parse::<InnerProduct>()?,
        max_order: parse_usize("order", &args.order)?,
        ranks,
        format: args.format.parse::<OutputFormat>()?,
        energy_subset,
    })
}

fn load_input(input: &str, n: Option<usize>) -> Result<Dataset, Error> {
    let path = PathBuf::from(input);
    if path.is_file() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        return io::parse_ballots(&text, n);
    }
    match io::fixture(input) {
        Some(f) => io::parse_ballots(f.csv, Some(n.unwrap_or(f.n))),
        None => Err(Error::Config(format!("{input:?} is neither a readable file nor a fixture name"))),
    }
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Error> {
    let config = config_from(args)?;
    let n = args.n.as_deref().map(|v| parse_usize("n", v)).transpose()?;
    let dataset = load_input(&args.input, n)?;
    let report = io::run(&config, &dataset)?;
    match &args.out {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{report}");
            Ok(())
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Config(_) => EXIT_CONFIG,
        _ => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Fixtures { action: FixturesAction::List } => {
            for f in io::FIXTURES {
                println!("{}\tn={}\t{}", f.name, f.n, f.description);
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
