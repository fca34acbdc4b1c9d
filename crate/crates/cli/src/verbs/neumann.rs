use clap::{Arg, ArgMatches, Command};
use serde_json::{json, Value};
use tracekit::{inverse_metric, neumann_error_report};

use super::{input_arg, tolerance_arg, tolerance_for, with_any_metric, Verb};
use crate::error::CliError;
use crate::input::load_metric;
use crate::output::{matrix_to_json, report_to_json, Document};

pub struct NeumannCompare;

impl Verb for NeumannCompare {
    fn name(&self) -> &'static str {
        "neumann-compare"
    }

    fn about(&self) -> &'static str {
        "Max-norm error of each Neumann truncation against the closed-form inverse"
    }

    fn command(&self) -> Command {
        Command::new(self.name())
            .arg(input_arg())
            .arg(
                Arg::new("max-order")
                    .long("max-order")
                    .value_name("M")
                    .value_parser(clap::value_parser!(u64))
                    .default_value("10")
                    .help("Largest truncation order in the report"),
            )
            .arg(tolerance_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_metric(matches.get_one::<String>("input").expect("required"))?;
        let tolerance = tolerance_for(matches, loaded.mode)?;
        let max_order = *matches.get_one::<u64>("max-order").expect("defaulted") as usize;
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        doc.insert("max_order", Value::from(max_order));
        with_any_metric!(&loaded.metric, |g0, h| {
            let report = neumann_error_report(g0, h, max_order, tolerance)?;
            let inverse = inverse_metric(g0, h, tolerance)?;
            doc.insert("report", report_to_json(g0.components(), &report));
            doc.insert(
                "closed_form_inverse",
                json!({
                    "n": 4,
                    "mode": loaded.mode.as_str(),
                    "entries": matrix_to_json(inverse.components()),
                }),
            );
        });
        Ok(doc)
    }
}
