use clap::{ArgMatches, Command};
use serde_json::Value;

use super::{input_arg, with_any_matrix, Verb};
use crate::error::CliError;
use crate::input::load_matrix;
use crate::output::{field_to_json, Document};

pub struct CharPoly;

impl Verb for CharPoly {
    fn name(&self) -> &'static str {
        "charpoly"
    }

    fn about(&self) -> &'static str {
        "Characteristic coefficients D_1..D_n, computed from the power traces"
    }

    fn command(&self) -> Command {
        Command::new(self.name()).arg(input_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_matrix(matches.get_one::<String>("input").expect("required"))?;
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        doc.insert("n", Value::from(loaded.matrix.dim()));
        let coefficients = with_any_matrix!(&loaded.matrix, |m| {
            m.char_poly()
                .coefficients()
                .iter()
                .map(field_to_json)
                .collect::<Vec<_>>()
        });
        doc.insert("coefficients", Value::Array(coefficients));
        Ok(doc)
    }
}
