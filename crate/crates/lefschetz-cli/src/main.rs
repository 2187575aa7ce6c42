mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match run::dispatch(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(w) = out.warning {
                eprintln!("warning: {w}");
            }
            let _ = std::io::stdout().flush();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            ExitCode::from(run::INVALID_INPUT)
        }
    }
}
