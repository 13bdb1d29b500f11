use std::io;
use std::process::ExitCode;

use clap::Parser;

use dunkl_morse_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let mut err = io::stderr();
    match run(&cli, &mut out, &mut err) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dunkl-morse: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
