use std::io::{self, Write};
use std::process;

use clap::Parser;

use polycert_cli::{run, Cli, Outcome};

/// Prints to stdout, tolerating a closed pipe downstream (`polycert … | head`).
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(err) = writeln!(out, "{text}") {
        if err.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {err}");
            process::exit(2);
        }
    }
}

fn main() {
    // clap's own exit code for bad arguments is 2 only in some error kinds;
    // map every stderr-bound parse failure to 2 so usage errors are uniform.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            process::exit(code);
        }
    };
    match run(cli) {
        Outcome::Success(out) => emit(&out),
        Outcome::MathNegative(out) => {
            emit(&out);
            process::exit(1);
        }
        Outcome::Usage(message) => {
            eprintln!("error: {message}");
            process::exit(2);
        }
    }
}
