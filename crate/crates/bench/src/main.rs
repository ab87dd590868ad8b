use std::path::PathBuf;
use std::process::ExitCode;

use bergman_bench::{run_suite, BenchError, RunConfig, Suite};
use clap::{Parser, Subcommand};

const CONFIG_HELP: &str = "\
Config file (JSON, every field optional):
  seed         sampling seed                         [default: 42]
  pairs        pairs per Lipschitz verification      [default: 100000 disk, 10000 ball]
  ball_points  quasi-random points per ball integral [default: 1048576]
  tolerances   {\"<check name>\": threshold} overrides  [default: {}]
--seed overrides the file. A report's `config` object is a valid config file.

Exit status: 0 all checks pass, 1 a check failed or the run errored,
2 usage or config error.";

#[derive(Parser)]
#[command(version, about = "Run numerical property suites for weighted Bergman spaces", after_help = CONFIG_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite and write <out>/<suite>.json plus CSV series
    Run {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "reports")]
        out: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// List suites
    List,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: BenchError| e.to_string())
}

fn run(suite: Suite, seed: Option<u64>, out: PathBuf, config: Option<PathBuf>) -> Result<bool, BenchError> {
    let mut cfg = match config {
        Some(p) => RunConfig::load(&p)?,
        None => RunConfig::default(),
    };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let report = run_suite(suite, &cfg)?;
    for c in &report.checks {
        println!("{}", c.line());
    }
    let paths = report.emit(&out)?;
    let failed = report.failed_checks().count();
    println!(
        "{suite}: {} checks, {failed} failed, {:.2} s, report {}",
        report.checks.len(),
        report.wall_time_s,
        paths[0].display()
    );
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for s in Suite::ALL {
                println!("{:<12} {}", s.name(), s.about());
            }
            ExitCode::SUCCESS
        }
        Command::Run { suite, seed, out, config } => match run(suite, seed, out, config) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
    }
}
