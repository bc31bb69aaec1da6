mod args;
mod commands;
mod failure;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, ConfigFile};
use failure::{Failure, EXIT_USAGE};

fn run(cli: Cli) -> Result<(), Failure> {
    let file = ConfigFile::load(cli.config.as_deref())?;
    let (stops, source) = commands::load_stopwords(cli.stopwords.as_deref(), &file)?;
    match &cli.command {
        Command::Summarize(a) => commands::summarize_cmd(a, &stops, &file),
        Command::Evaluate(a) => commands::evaluate_cmd(a, &stops, source, &file),
        Command::Freq(a) => commands::freq_cmd(a, &stops, &file),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("summarax: {f}");
            ExitCode::from(f.code)
        }
    }
}
