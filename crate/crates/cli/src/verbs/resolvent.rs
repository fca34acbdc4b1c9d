use clap::{Arg, ArgMatches, Command};
use serde_json::Value;
use tracekit::Field;

use super::{input_arg, tolerance_arg, tolerance_for, verify_arg, with_any_matrix, Verb};
use crate::error::CliError;
use crate::input::{load_matrix, parse_scalar_arg};
use crate::output::{field_to_json, Document};

pub struct Resolvent;

impl Verb for Resolvent {
    fn name(&self) -> &'static str {
        "resolvent"
    }

    fn about(&self) -> &'static str {
        "Evaluate (zI - A)^{-1} by the rational formula; fails on spectrum points"
    }

    fn command(&self) -> Command {
        Command::new(self.name())
            .arg(input_arg())
            .arg(
                Arg::new("z")
                    .long("z")
                    .value_name("SCALAR")
                    .required(true)
                    .help("Evaluation point, encoded per the input's mode"),
            )
            .arg(tolerance_arg())
            .arg(verify_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_matrix(matches.get_one::<String>("input").expect("required"))?;
        let tolerance = tolerance_for(matches, loaded.mode)?;
        let z = parse_scalar_arg(
            loaded.mode,
            matches.get_one::<String>("z").expect("required"),
        )?;
        let verify = matches.get_flag("verify");

        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        with_any_matrix!(&loaded.matrix, |a| {
            let z = Field::from_scalar(&z).expect("parsed against the input mode");
            let mut value = a.resolvent(&z, tolerance)?;
            if verify {
                value = value.verified(a, tolerance)?;
            }
            doc.insert("z", field_to_json(value.point()));
            doc.insert("denominator", field_to_json(value.denominator()));
            doc.insert("verified", Value::Bool(verify));
            doc.embed_matrix(value.value());
        });
        Ok(doc)
    }
}
