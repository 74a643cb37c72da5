//! Text front end for `pml-core`: expression and file parsers, the
//! canonical printer and the `pml` command dispatcher.

pub mod commands;
pub mod constants;
pub mod expr;
pub mod manifold;
pub mod print;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{Cli, Command, Failure, Style};
pub use expr::{parse_expression, parse_form, parse_multivector, parse_polynomial, parse_rational, ParseError, Value};
pub use manifold::{parse_manifold, ManifoldFile};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
/// Exit codes: 0 success, 1 failed check, 2 bad input.
pub fn run<I, T>(args: I, style: Style) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::execute(&cli.command, style) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Check(report)) => Outcome { code: 1, stdout: report, stderr: String::new() },
        Err(Failure::Input(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
