mod args;
mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Exit;
use config::Config;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match Config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: config {e}");
            return ExitCode::from(2);
        }
    };
    let out = match &cli.command {
        Command::Build(a) => commands::build(a, &cfg),
        Command::Run(a) => commands::run(a),
        Command::Mc(a) => commands::mc(a, &cfg),
        Command::Cert(a) => commands::cert(a),
        Command::Soundness(a) => commands::soundness(a, &cfg),
        Command::Coin(a) => commands::coin(a, &cfg),
        Command::Suite(a) => commands::suite(a, &cfg),
    };
    match out {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Exit::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Exit::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
