use clap::{ArgMatches, Command};

use super::{input_arg, tolerance_arg, tolerance_for, with_any_matrix, Verb};
use crate::error::CliError;
use crate::input::load_matrix;
use crate::output::Document;

pub struct Invert;

impl Verb for Invert {
    fn name(&self) -> &'static str {
        "invert"
    }

    fn about(&self) -> &'static str {
        "Invert through the null identity; the output document is itself a matrix file"
    }

    fn command(&self) -> Command {
        Command::new(self.name())
            .arg(input_arg())
            .arg(tolerance_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_matrix(matches.get_one::<String>("input").expect("required"))?;
        let tolerance = tolerance_for(matches, loaded.mode)?;
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        with_any_matrix!(&loaded.matrix, |a| {
            doc.embed_matrix(&a.inverse(tolerance)?);
        });
        Ok(doc)
    }
}
