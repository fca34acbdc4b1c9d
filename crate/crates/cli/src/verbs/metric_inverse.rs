use clap::{ArgMatches, Command};
use tracekit::inverse_metric;

use super::{input_arg, tolerance_arg, tolerance_for, with_any_metric, Verb};
use crate::error::CliError;
use crate::input::load_metric;
use crate::output::Document;

pub struct MetricInverse;

impl Verb for MetricInverse {
    fn name(&self) -> &'static str {
        "metric-inverse"
    }

    fn about(&self) -> &'static str {
        "Closed-form inverse of g0 + h as a cubic polynomial in the mixed tensor"
    }

    fn command(&self) -> Command {
        Command::new(self.name())
            .arg(input_arg())
            .arg(tolerance_arg())
    }

    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError> {
        let loaded = load_metric(matches.get_one::<String>("input").expect("required"))?;
        let tolerance = tolerance_for(matches, loaded.mode)?;
        let mut doc = Document::new(self.name(), loaded.mode);
        doc.echo_input(&loaded.input);
        with_any_metric!(&loaded.metric, |g0, h| {
            let inverse = inverse_metric(g0, h, tolerance)?;
            doc.embed_matrix(inverse.components());
        });
        Ok(doc)
    }
}
