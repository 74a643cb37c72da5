use std::io::Write;
use std::process::ExitCode;

use pml_cli::{run, Style};

fn main() -> ExitCode {
    let color = std::env::var("PML_COLOR").is_ok_and(|v| v == "1");
    let outcome = run(std::env::args_os(), Style { color });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
