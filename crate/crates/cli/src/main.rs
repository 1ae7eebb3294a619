mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use report::RunReport;

fn run(cli: &Cli) -> coc_core::Result<RunReport> {
    match &cli.command {
        Command::Sinks { n, property } => commands::sinks(*n, property),
        Command::Conditions { n, property } => commands::conditions(*n, property),
        Command::Check { seq, n, property } => commands::check(seq, *n, property),
        Command::Realize {
            seq,
            all,
            k,
            s,
            variant,
            force,
        } => {
            let test = match (k, s, variant) {
                (Some(k), Some(s), Some(v)) => Some((*k, *s, (*v).into())),
                _ => None,
            };
            commands::realize_cmd(seq, *all, test, *force)
        }
        Command::Oracle {
            file,
            k,
            measure,
            force,
        } => commands::oracle(file, *k, *measure, *force),
        Command::Transform { from, to } => commands::transform(from, to),
        Command::Reduce { parts, k } => commands::reduce(parts, *k),
        Command::Validate(a) => commands::validate_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut out = std::io::stdout().lock();
    let written = match cli.format {
        Format::Json => serde_json::to_writer_pretty(&mut out, &report)
            .map_err(std::io::Error::from)
            .and_then(|()| writeln!(out)),
        Format::Text => out.write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    eprintln!("wall time: {} ms", start.elapsed().as_millis());
    ExitCode::from(report.exit)
}
