use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use qcongruence::{emit_report, human_summary, run, Claim, Cli, Command, RunConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args = match cli.command {
        Command::ListClaims => {
            let mut out = std::io::stdout().lock();
            for claim in Claim::CONCRETE {
                // a closed pipe (e.g. `| head`) is not an error
                if writeln!(out, "{:<15} {}", claim.id(), claim.describe()).is_err() {
                    break;
                }
            }
            return ExitCode::SUCCESS;
        }
        Command::Verify(args) => args,
    };
    let config = match RunConfig::from_args(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let report = run(&config);
    let _ = std::io::stdout().write_all(human_summary(&report).as_bytes());
    if let Some(path) = &config.out {
        if let Err(e) = emit_report(&report, path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_IO);
        }
    }
    if report.summary.fail > 0 {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}
