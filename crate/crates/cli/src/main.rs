use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use kframes_cli::{run, Cli, EXIT_INPUT};

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(path: &str, text: &str) -> anyhow::Result<()> {
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).context("writing stdout")?;
        out.flush().context("writing stdout")
    } else {
        std::fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result =
        read_input(&cli.input).and_then(|text| run(&cli, &text).map_err(anyhow::Error::from));
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let mut text =
        serde_json::to_string_pretty(&outcome.output).expect("JSON values always serialize");
    text.push('\n');
    if let Err(e) = write_output(&cli.output, &text) {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_INPUT as u8);
    }
    ExitCode::from(outcome.code as u8)
}
