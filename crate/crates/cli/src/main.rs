use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = vwp_cli::run(std::env::args_os(), &mut io::stdin().lock());
    io::stdout().write_all(outcome.stdout.as_bytes()).ok();
    io::stderr().write_all(outcome.stderr.as_bytes()).ok();
    ExitCode::from(outcome.exit_code)
}
