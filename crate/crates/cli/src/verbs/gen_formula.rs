use clap::{Arg, ArgMatches, Command};
use serde_json::Value;
use tracekit::{symbolic_trace_formula, Mode};

use super::Verb;
use crate::error::CliError;
use crate::output::Document;

pub struct GenFormula;

impl Verb for GenFormula {
    fn name(&self) -> &'static str {
        "gen-formula"
    }

    fn about(&self) -> &'static str {
        "Emit the closed-form trace formula D_k(T_1..T_k) in canonical order"
    }

    fn command(&self) -> Command {
        Command::new(self.name()).arg(
            Arg::new("k")
                .long("k")
                .value_name("K")
                .required(true)
                .value_parser(clap::value_parser!(u32).range(1..))
                .help("Weighted degree of the formula"),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let k = *matches.get_one::<u32>("k").expect("required");
        let formula = symbolic_trace_formula(k);
        let mut doc = Document::new(self.name(), Mode::Rational);
        doc.insert("k", Value::from(k));
        doc.insert("display", Value::String(formula.to_string()));
        doc.insert(
            "terms",
            serde_json::to_value(formula.to_terms()).expect("plain records"),
        );
        Ok(doc)
    }
}
