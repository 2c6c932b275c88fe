use std::process::ExitCode;

use clap::Parser;
use umbral_cli::args::Cli;
use umbral_cli::{render, run, EXIT_CONFIG};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match run(&cli) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let rendered = render(&doc, cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_CONFIG as u8);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(doc.exit_code() as u8)
}
