//! Command-level error taxonomy and the mapping from library errors to
//! stable, machine-readable error codes.
//!
//! Exit codes: 0 success, 2 usage, 3 parse, 4 contract. Every library error
//! variant maps to a distinct contract code; the table in the repository
//! README documents them and a test keeps it exhaustive.

use serde_json::json;
use tracekit::{AlgebraError, MatrixError, MetricError, ScalarError};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag combinations; exit code 2.
    Usage(String),
    /// Malformed or unreadable input files; exit code 3.
    Parse(String),
    /// A library contract was violated; exit code 4 with a stable code.
    Contract { code: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Contract { .. } => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Contract { .. } => "contract",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) => m,
            CliError::Contract { message, .. } => message,
        }
    }

    /// The machine-readable record emitted on stderr.
    pub fn record(&self) -> serde_json::Value {
        let mut error = json!({
            "kind": self.kind(),
            "message": self.message(),
        });
        if let CliError::Contract { code, .. } = self {
            error["code"] = json!(code);
        }
        json!({ "error": error })
    }
}

pub fn scalar_code(e: &ScalarError) -> &'static str {
    match e {
        ScalarError::ModeMismatch { .. } => "mode-mismatch",
        ScalarError::DivisionByZero => "division-by-zero",
        ScalarError::NegativeTolerance(_) => "negative-tolerance",
        ScalarError::ExactModeTolerance(_) => "exact-mode-tolerance",
    }
}

pub fn algebra_code(e: &AlgebraError) -> &'static str {
    match e {
        AlgebraError::EmptyInput => "empty-input",
        AlgebraError::InvalidFormulaTerm(_) => "invalid-formula-term",
    }
}

pub fn matrix_code(e: &MatrixError) -> &'static str {
    match e {
        MatrixError::ZeroDimension => "zero-dimension",
        MatrixError::ShapeMismatch { .. } => "shape-mismatch",
        MatrixError::SpectrumPoint => "spectrum-point",
        MatrixError::SingularMatrix => "singular-matrix",
        MatrixError::VerificationFailed => "verification-failed",
        MatrixError::Scalar(inner) => scalar_code(inner),
    }
}

pub fn metric_code(e: &MetricError) -> &'static str {
    match e {
        MetricError::WrongDimension(_) => "wrong-dimension",
        MetricError::AsymmetricComponents { .. } => "asymmetric-components",
        MetricError::DegenerateBackground => "degenerate-background",
        MetricError::DegenerateTotalMetric => "degenerate-total-metric",
        MetricError::Matrix(inner) => matrix_code(inner),
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        CliError::Contract {
            code: scalar_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Contract {
            code: algebra_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::Contract {
            code: matrix_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<MetricError> for CliError {
    fn from(e: MetricError) -> Self {
        CliError::Contract {
            code: metric_code(&e),
            message: e.to_string(),
        }
    }
}

/// Every contract code, one per library error variant (wrapper variants
/// share the code of what they wrap). Kept in sync with the match arms above
/// by the exhaustiveness of those matches, and with the README by a test.
pub const CONTRACT_CODES: &[&str] = &[
    "mode-mismatch",
    "division-by-zero",
    "negative-tolerance",
    "exact-mode-tolerance",
    "empty-input",
    "invalid-formula-term",
    "zero-dimension",
    "shape-mismatch",
    "spectrum-point",
    "singular-matrix",
    "verification-failed",
    "wrong-dimension",
    "asymmetric-components",
    "degenerate-background",
    "degenerate-total-metric",
];

#[cfg(test)]
mod tests {
    use super::*;
    use tracekit::Mode;

    #[test]
    fn codes_are_distinct_and_listed() {
        let mut seen = std::collections::BTreeSet::new();
        for code in CONTRACT_CODES {
            assert!(seen.insert(*code), "duplicate contract code {code}");
        }

        // One representative per variant; the match functions are exhaustive,
        // so any new variant forces an update here too.
        let samples: Vec<&'static str> = vec![
            scalar_code(&ScalarError::ModeMismatch {
                left: Mode::Rational,
                right: Mode::Real,
            }),
            scalar_code(&ScalarError::DivisionByZero),
            scalar_code(&ScalarError::NegativeTolerance(-1.0)),
            scalar_code(&ScalarError::ExactModeTolerance(0.5)),
            algebra_code(&AlgebraError::EmptyInput),
            algebra_code(&AlgebraError::InvalidFormulaTerm(String::new())),
            matrix_code(&MatrixError::ZeroDimension),
            matrix_code(&MatrixError::ShapeMismatch {
                n: 2,
                expected: 4,
                got: 3,
            }),
            matrix_code(&MatrixError::SpectrumPoint),
            matrix_code(&MatrixError::SingularMatrix),
            matrix_code(&MatrixError::VerificationFailed),
            metric_code(&MetricError::WrongDimension(3)),
            metric_code(&MetricError::AsymmetricComponents { row: 0, col: 1 }),
            metric_code(&MetricError::DegenerateBackground),
            metric_code(&MetricError::DegenerateTotalMetric),
        ];
        for code in samples {
            assert!(
                CONTRACT_CODES.contains(&code),
                "code {code} missing from CONTRACT_CODES"
            );
        }
        assert_eq!(seen.len(), CONTRACT_CODES.len());
    }

    #[test]
    fn wrappers_share_inner_codes() {
        assert_eq!(
            matrix_code(&MatrixError::Scalar(ScalarError::DivisionByZero)),
            "division-by-zero"
        );
        assert_eq!(
            metric_code(&MetricError::Matrix(MatrixError::SpectrumPoint)),
            "spectrum-point"
        );
    }

    #[test]
    fn exit_codes_follow_the_documented_scheme() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::Parse(String::new()).exit_code(), 3);
        assert_eq!(
            CliError::Contract {
                code: "spectrum-point",
                message: String::new()
            }
            .exit_code(),
            4
        );
    }
}
