use clap::{ArgMatches, Command};
use tracekit::det_ratio;

use super::{input_arg, tolerance_arg, tolerance_for, with_any_metric, Verb};
use crate::error::CliError;
use crate::input::load_metric;
use crate::output::{field_to_json, Document};

pub struct DetRatio;

impl Verb for DetRatio {
    fn name(&self) -> &'static str {
        "det-ratio"
    }

    fn about(&self) -> &'static str {
        "det(g0 + h) / det(g0) as the quartic trace expansion in the mixed tensor"
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
        let ratio = with_any_metric!(&loaded.metric, |g0, h| {
            field_to_json(&det_ratio(g0, h, tolerance)?)
        });
        doc.insert("det_ratio", ratio);
        Ok(doc)
    }
}
