//! Command-line front end. [`execute`] does all the work and returns the
//! rendered output, so tests can drive it without spawning a process.

pub mod args;
mod commands;
mod input;
pub mod report;
mod suites;

use std::ffi::OsString;
use std::fmt;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use report::{Check, Report, Timing};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(chromahom::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<chromahom::Error> for CliError {
    fn from(e: chromahom::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit codes: 0 when every check passes, 1 when a check fails (including
/// an internal consistency failure), 2 for usage and input errors.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome {
                code: e.exit_code(),
                stdout,
                stderr,
            };
        }
    };
    let echo = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut report = Report::new(echo);
    let start = Instant::now();
    let ran = match &cli.command {
        Command::Chromatic(a) => commands::chromatic(a, &mut report),
        Command::Dichromatic(a) => commands::dichromatic(a, &mut report),
        Command::Impropriety(a) => commands::impropriety(a, &mut report),
        Command::Potts(a) => commands::potts(a, &mut report),
        Command::Penrose(a) => commands::penrose(a, &mut report),
        Command::ColorHomology(a) => commands::color_homology(a, &mut report),
        Command::Verify(a) => suites::verify(a, &mut report),
        Command::Catalog(a) => commands::catalog(a, &mut report),
    };
    match ran {
        Ok(()) => {}
        Err(CliError::Core(e @ (chromahom::Error::TheoryViolation(_) | chromahom::Error::Integrity { .. }))) => {
            report.check(Check::failed("consistency", e));
        }
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
    if cli.timing {
        report.timing = Some(Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    let stdout = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    Outcome {
        code: if report.all_passed() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
