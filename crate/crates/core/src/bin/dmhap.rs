use std::io::Write;
use std::process::ExitCode;

use degen_appell::cli;

fn main() -> ExitCode {
    let outcome = cli::run(std::env::args_os());
    if let Some(message) = &outcome.message {
        if outcome.code == cli::EXIT_OK {
            print!("{message}");
        } else {
            eprintln!("{}", message.trim_end());
        }
    }
    if !outcome.document.is_empty() {
        let written = match &outcome.output {
            Some(path) => std::fs::write(path, &outcome.document),
            None => std::io::stdout().write_all(outcome.document.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("cannot write output: {e}");
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    }
    ExitCode::from(outcome.code as u8)
}
