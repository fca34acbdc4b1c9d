//! `tracekit`: command-line surface over the trace-recursion toolkit.
//!
//! One subcommand per operation, structured JSON output by default, optional
//! plain tables. Exit codes: 0 success, 2 usage, 3 parse, 4 contract.

use std::process::ExitCode;

use clap::{Arg, ArgAction, Command};
use tracekit_cli::error::CliError;
use tracekit_cli::verbs::VerbRegistry;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    let registry = VerbRegistry::standard();
    let mut cmd = Command::new("tracekit")
        .about("Characteristic coefficients from power traces, null identities, resolvents, and closed-form metric inversion")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .arg(
            Arg::new("output")
                .long("output")
                .value_name("PATH")
                .global(true)
                .help("Write the result document to a file instead of stdout"),
        )
        .arg(
            Arg::new("table")
                .long("table")
                .action(ArgAction::SetTrue)
                .global(true)
                .help("Render a plain table instead of JSON"),
        );
    for verb in registry.iter() {
        cmd = cmd.subcommand(verb.command().about(verb.about()));
    }

    // Unknown verbs and malformed flags are rejected here, before any file
    // is opened. Help and version requests land here too and exit 0.
    let matches = match cmd.try_get_matches() {
        Ok(matches) => matches,
        Err(e) if e.use_stderr() => {
            let err = CliError::Usage(e.render().to_string());
            eprintln!("{}", err.record());
            return ExitCode::from(err.exit_code());
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };

    let (name, sub) = matches.subcommand().expect("subcommand required");
    let verb = registry.get(name).expect("every subcommand is registered");
    match verb.run(sub) {
        Ok(doc) => {
            let rendered = if sub.get_flag("table") {
                doc.render_table()
            } else {
                doc.to_json_string()
            };
            match sub.get_one::<String>("output") {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, rendered + "\n") {
                        let err = CliError::Parse(format!("cannot write {path}: {e}"));
                        eprintln!("{}", err.record());
                        return ExitCode::from(err.exit_code());
                    }
                }
                None => println!("{rendered}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.record());
            ExitCode::from(e.exit_code())
        }
    }
}
