//! `objutil`: evaluate alternatives against a society described in a scenario file.
//!
//! Exit status: 0 success, 1 invalid scenario or failed evaluation, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use objutil_core::number::DEFAULT_PRECISION;
use objutil_core::{
    check_scenario, render_validation, run_pipeline, Aggregator, OutputFormat, PipelineOptions,
    Scenario, UtilityMeasure, View,
};

#[derive(Debug, Parser)]
#[command(
    name = "objutil",
    version,
    about = "Set-based utility evaluation of alternatives"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Fractional digits in rendered utilities.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a scenario file and list findings.
    Validate { file: PathBuf },
    /// Show the universe, opportunity and exigence universes and their partition.
    Universes { file: PathBuf },
    /// Show every individual's utility profile.
    Utilities {
        file: PathBuf,
        #[arg(long, value_enum)]
        measure: MeasureArg,
    },
    /// Full report: universes, profiles, social profile and ranking.
    Evaluate(EvalArgs),
    /// Social profile and ranking only.
    Rank(EvalArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    measure: MeasureArg,
    #[arg(long, value_enum, default_value_t = AggregatorArg::Mean)]
    aggregator: AggregatorArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeasureArg {
    Cardinal,
    Normalized,
    Fuzzy,
}

impl From<MeasureArg> for UtilityMeasure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Cardinal => UtilityMeasure::Cardinal,
            MeasureArg::Normalized => UtilityMeasure::Normalized,
            MeasureArg::Fuzzy => UtilityMeasure::Fuzzy,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AggregatorArg {
    Mean,
}

impl From<AggregatorArg> for Aggregator {
    fn from(a: AggregatorArg) -> Self {
        match a {
            AggregatorArg::Mean => Aggregator::Mean,
        }
    }
}

enum Failure {
    Usage(String),
    Invalid(Vec<String>),
}

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Scenario, Failure> {
    let text = read(path)?;
    match check_scenario(&text) {
        (Some(scenario), _) => Ok(scenario),
        (None, report) => Err(Failure::Invalid(
            report
                .errors()
                .map(|f| format!("{}: {f}", path.display()))
                .collect(),
        )),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let format = OutputFormat::from(cli.format);
    let (file, view, measure, aggregator) = match &cli.command {
        Command::Validate { file } => {
            let text = read(file)?;
            let (scenario, report) = check_scenario(&text);
            return Ok((
                render_validation(&report, scenario.as_ref(), format),
                scenario.is_some(),
            ));
        }
        Command::Universes { file } => (
            file,
            View::Universes,
            UtilityMeasure::Normalized,
            Aggregator::Mean,
        ),
        Command::Utilities { file, measure } => {
            (file, View::Utilities, (*measure).into(), Aggregator::Mean)
        }
        Command::Evaluate(args) => (
            &args.file,
            View::Evaluate,
            args.measure.into(),
            args.aggregator.into(),
        ),
        Command::Rank(args) => (
            &args.file,
            View::Rank,
            args.measure.into(),
            args.aggregator.into(),
        ),
    };
    let scenario = load(file)?;
    let options = PipelineOptions {
        view,
        measure,
        aggregator,
        format,
        precision: cli.precision,
    };
    run_pipeline(&scenario, &options)
        .map(|out| (out, true))
        .map_err(|e| Failure::Invalid(vec![format!("{}: error: {e}", file.display())]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INVALID)
            }
        }
        Err(Failure::Invalid(lines)) => {
            for line in lines {
                eprintln!("{line}");
            }
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("objutil: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
