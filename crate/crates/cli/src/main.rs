use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use epw_verify::{run, Options, Suite, DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS};

#[derive(Parser)]
#[command(name = "epw-verify", version, about = "Run verification suites for double EPW sextics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite and print one line per check
    Run {
        /// exterior, epw, incidence, quadrics, chow, schubert, bbf or all
        #[arg(value_name = "SUITE", conflicts_with = "suite_flag")]
        suite: Option<String>,
        #[arg(long = "suite", value_name = "SUITE")]
        suite_flag: Option<String>,
        #[arg(long, env = "EPW_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Write the JSON report to a file, or to stdout with `-`
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
        #[arg(long)]
        fail_fast: bool,
        /// Record wall time in `ms`
        #[arg(long)]
        timing: bool,
    },
    /// List check ids and the statements they exercise
    List {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Print the derived Chern class relations as JSON
    Relations,
}

// Write errors (a closed pipe, say) end output quietly instead of panicking.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
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
    match cli.command {
        Command::Run { suite, suite_flag, seed, prime, trials, json, fail_fast, timing } => {
            let name = suite.or(suite_flag).unwrap_or_else(|| "all".into());
            let suite: Suite = match name.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let opts = Options { seed, prime, trials, fail_fast, timing };
            let report = match run(suite, &opts) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let to_stdout = json.as_deref() == Some("-");
            if !to_stdout {
                for c in &report.checks {
                    emit(&c.to_string());
                }
            }
            match json.as_deref() {
                Some("-") => emit(&report.to_json()),
                Some(path) => {
                    if let Err(e) = fs::write(path, report.to_json() + "\n") {
                        eprintln!("error: cannot write {path}: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => {}
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::List { suite } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            for c in suite.checks() {
                emit(&format!("{}\t{}", c.id, c.anchor));
            }
            ExitCode::SUCCESS
        }
        Command::Relations => match epw_verify::suites::chow::section8() {
            Ok(s) => {
                emit(&serde_json::to_string_pretty(&s.relations).expect("serializes"));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
    }
}
