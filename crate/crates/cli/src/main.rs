use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gmconn_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // usage errors are domain errors here; 2 is reserved for failed verification
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (code, out, err) = run(&cli);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
