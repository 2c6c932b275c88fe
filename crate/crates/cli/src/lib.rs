//! Library side of the `umbral` command: argument types, the report
//! document and the subcommand implementations.

pub mod args;
pub mod commands;
pub mod report;

use std::time::Instant;

use anyhow::Result;

use args::{Cli, Command, Format};
use report::ReportDocument;

/// Exit status for malformed configuration.
pub const EXIT_CONFIG: i32 = 2;

/// Runs a parsed command. Errors are configuration errors; check failures
/// are reported through the document.
pub fn run(cli: &Cli) -> Result<ReportDocument> {
    let start = Instant::now();
    let items = match &cli.command {
        Command::Compute(a) => commands::compute(a)?,
        Command::Verify(a) => commands::verify_cmd(a)?,
        Command::Mc(a) => commands::mc(a)?,
        Command::Quad(a) => commands::quad(a)?,
        Command::All(a) => commands::all(a)?,
    };
    let config = serde_json::to_value(cli)?;
    Ok(ReportDocument::new(config, items, start.elapsed().as_millis() as u64))
}

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json() + "\n",
    }
}
