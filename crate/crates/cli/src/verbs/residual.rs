use clap::{ArgMatches, Command};

use super::{input_arg, with_any_matrix, Verb};
use crate::error::CliError;
use crate::input::load_matrix;
use crate::output::{matrix_max_norm_json, Document};

pub struct ChResidual;

impl Verb for ChResidual {
    fn name(&self) -> &'static str {
        "ch-residual"
    }

    fn about(&self) -> &'static str {
        "Cayley-Hamilton residual p(A): exactly zero in exact mode, a roundoff probe otherwise"
    }

    fn command(&self) -> Command {
        Command::new(self.name()).arg(input_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_matrix(matches.get_one::<String>("input").expect("required"))?;
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        with_any_matrix!(&loaded.matrix, |a| {
            let residual = a.cayley_hamilton_residual();
            doc.insert("max_norm", matrix_max_norm_json(&residual));
            doc.embed_matrix(&residual);
        });
        Ok(doc)
    }
}
