//! The verb registry: every command is a strategy behind one trait,
//! registered by name and selected at runtime from the command line.

use std::collections::BTreeMap;

use clap::{Arg, ArgAction, ArgMatches, Command};
use tracekit::Mode;

use crate::error::CliError;
use crate::output::Document;

mod charpoly;
mod det;
mod det_ratio;
mod gen_formula;
mod invert;
mod metric_inverse;
mod neumann;
mod residual;
mod resolvent;
mod traces;

/// One command verb: self-describing flags plus an execution strategy.
pub trait Verb: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    /// Verb-specific flags; name and about are applied by the registry.
    fn command(&self) -> Command;
    fn run(&self, matches: &ArgMatches) -> Result<Document, CliError>;
}

/// Name-keyed registry of verbs. Lookup happens during argument parsing,
/// before any file is touched.
pub struct VerbRegistry {
    verbs: BTreeMap<&'static str, Box<dyn Verb>>,
}

impl VerbRegistry {
    pub fn empty() -> Self {
        VerbRegistry {
            verbs: BTreeMap::new(),
        }
    }

    /// All built-in verbs.
    pub fn standard() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(charpoly::CharPoly));
        registry.register(Box::new(det::Determinant));
        registry.register(Box::new(traces::Traces));
        registry.register(Box::new(residual::ChResidual));
        registry.register(Box::new(resolvent::Resolvent));
        registry.register(Box::new(invert::Invert));
        registry.register(Box::new(gen_formula::GenFormula));
        registry.register(Box::new(metric_inverse::MetricInverse));
        registry.register(Box::new(det_ratio::DetRatio));
        registry.register(Box::new(neumann::NeumannCompare));
        registry
    }

    pub fn register(&mut self, verb: Box<dyn Verb>) {
        self.verbs.insert(verb.name(), verb);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Verb> {
        self.verbs.get(name).map(Box::as_ref)
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Verb> {
        self.verbs.values().map(Box::as_ref)
    }
}

pub(crate) fn input_arg() -> Arg {
    Arg::new("input")
        .long("input")
        .value_name("PATH")
        .required(true)
        .help("Input file (JSON, schema per mode)")
}

pub(crate) fn tolerance_arg() -> Arg {
    Arg::new("tolerance")
        .long("tolerance")
        .value_name("T")
        .value_parser(clap::value_parser!(f64))
        .help("Zero-detection tolerance; float modes only")
}

pub(crate) fn verify_arg() -> Arg {
    Arg::new("verify")
        .long("verify")
        .action(ArgAction::SetTrue)
        .help("Check the defining identity on the result before emitting it")
}

/// Resolve the tolerance flag against the input's mode: only float modes
/// accept one, exact mode always uses 0.
pub(crate) fn tolerance_for(matches: &ArgMatches, mode: Mode) -> Result<f64, CliError> {
    match matches.get_one::<f64>("tolerance") {
        None => Ok(0.0),
        Some(_) if mode == Mode::Rational => Err(CliError::Usage(
            "--tolerance applies only in float modes; rational mode has exactly one notion of zero"
                .into(),
        )),
        Some(t) if *t < 0.0 => Err(CliError::Usage(format!(
            "--tolerance must be nonnegative, got {t}"
        ))),
        Some(t) => Ok(*t),
    }
}

/// Dispatch a generic closure over the concrete scalar type of a matrix.
macro_rules! with_any_matrix {
    ($any:expr, |$m:ident| $body:expr) => {
        match $any {
            $crate::input::AnyMatrix::Rational($m) => $body,
            $crate::input::AnyMatrix::Real($m) => $body,
            $crate::input::AnyMatrix::Complex($m) => $body,
        }
    };
}

/// Dispatch a generic closure over the concrete scalar type of a metric pair.
macro_rules! with_any_metric {
    ($any:expr, |$g0:ident, $h:ident| $body:expr) => {
        match $any {
            $crate::input::AnyMetric::Rational($g0, $h) => $body,
            $crate::input::AnyMetric::Real($g0, $h) => $body,
            $crate::input::AnyMetric::Complex($g0, $h) => $body,
        }
    };
}

pub(crate) use with_any_matrix;
pub(crate) use with_any_metric;
