//! Command-line surface over the workspace crates: bundled complexes,
//! 2-sphere enumeration, and JSON or text reports.

pub mod args;
pub mod commands;
pub mod enumerate;
pub mod error;
pub mod library;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

pub use args::{Cli, Format};
pub use commands::{load_input, run};
pub use error::CliError;

/// Exit status with what goes to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli) {
        Ok(v) => Outcome { status: 0, stdout: report::render(&v, cli.format), stderr: String::new() },
        Err(e) => {
            let d = e.diagnostic();
            let stderr = match cli.format {
                Format::Json => serde_json::to_string(&d).expect("serializable") + "\n",
                Format::Text => format!("error ({}): {}\n", d.kind, d.message),
            };
            Outcome { status: e.exit_code(), stdout: String::new(), stderr }
        }
    }
}
