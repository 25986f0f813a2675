mod args;
mod commands;
mod family;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Emitter, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let mut out = Emitter::new(cli.format, &mut lock);
    let result = match &cli.command {
        Command::Verify(args) => commands::cmd_verify(args, &mut out),
        Command::Construct(args) => commands::cmd_construct(args, &mut out),
        Command::Decide(args) => commands::cmd_decide(args, &mut out),
        Command::Search(args) => commands::cmd_search(args, &mut out),
    };
    let status = match result {
        Ok(status) => status,
        Err(err @ CliError::Input(_)) => {
            eprintln!("error: {err}");
            Status::InputError
        }
        Err(err @ CliError::Io(_)) => {
            eprintln!("error: {err}");
            Status::InputError
        }
    };
    let _ = lock.flush();
    ExitCode::from(status as u8)
}
