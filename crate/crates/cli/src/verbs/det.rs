use clap::{ArgMatches, Command};
use serde_json::Value;

use super::{input_arg, with_any_matrix, Verb};
use crate::error::CliError;
use crate::input::load_matrix;
use crate::output::{field_to_json, Document};

pub struct Determinant;

impl Verb for Determinant {
    fn name(&self) -> &'static str {
        "det"
    }

    fn about(&self) -> &'static str {
        "Determinant, as (-1)^n times the constant characteristic coefficient"
    }

    fn command(&self) -> Command {
        Command::new(self.name()).arg(input_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_matrix(matches.get_one::<String>("input").expect("required"))?;
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        doc.insert("n", Value::from(loaded.matrix.dim()));
        let det = with_any_matrix!(&loaded.matrix, |m| field_to_json(&m.determinant()));
        doc.insert("determinant", det);
        Ok(doc)
    }
}
