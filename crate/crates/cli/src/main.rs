use std::process::ExitCode;

use bchcert_cli::{run, Cli, EXIT_BAD_ARGS};
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_BAD_ARGS,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", e.to_json());
            if !cli.json {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.exit_code)
        }
    }
}
