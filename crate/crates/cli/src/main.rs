//! `romdom`: exit status 0 on success or a yes-answer, 1 on a no-answer,
//! 2 on usage, input or precondition errors.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::Answer;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(message) => {
            eprintln!("romdom: {message}");
            ExitCode::from(2)
        }
    }
}
