use clap::{Arg, ArgMatches, Command};
use serde_json::Value;

use super::{input_arg, with_any_matrix, Verb};
use crate::error::CliError;
use crate::input::load_matrix;
use crate::output::{field_to_json, Document};

pub struct Traces;

impl Verb for Traces {
    fn name(&self) -> &'static str {
        "traces"
    }

    fn about(&self) -> &'static str {
        "Power traces T_1..T_m (m defaults to the dimension)"
    }

    fn command(&self) -> Command {
        Command::new(self.name()).arg(input_arg()).arg(
            Arg::new("m")
                .long("m")
                .value_name("M")
                .value_parser(clap::value_parser!(u64).range(1..))
                .help("How many power traces to compute"),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_matrix(matches.get_one::<String>("input").expect("required"))?;
        let m = matches
            .get_one::<u64>("m")
            .map_or(loaded.matrix.dim(), |&m| m as usize);
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        doc.insert("n", Value::from(loaded.matrix.dim()));
        doc.insert("m", Value::from(m));
        let traces = with_any_matrix!(&loaded.matrix, |a| {
            a.power_traces(m)
                .values()
                .iter()
                .map(field_to_json)
                .collect::<Vec<_>>()
        });
        doc.insert("traces", Value::Array(traces));
        Ok(doc)
    }
}
