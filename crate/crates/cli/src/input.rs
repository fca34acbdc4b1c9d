//! Input file schemas, scalar decoding, and digests.
//!
//! Matrix files: `{"n": int, "mode": "rational"|"real"|"complex",
//! "entries": [[scalar, ...], ...]}`, row-major, exactly n rows of n entries.
//! Metric files: `{"mode": ..., "g0": [[...] x4], "h": [[...] x4]}`.
//!
//! Scalar encodings per mode: rationals are `"p/q"` or `"p"` strings, reals
//! are JSON numbers, complex values are two-element `[re, im]` arrays.
//! Unknown keys are ignored, which lets command output documents double as
//! input files.

use num_complex::Complex64;
use serde_json::Value;
use sha2::{Digest, Sha256};
use tracekit::{
    Field, MetricError, MetricTensor, Mode, Perturbation, Rational, Scalar, SquareMatrix,
};

use crate::error::CliError;

/// Echo of one input file, carried into the output document.
#[derive(Debug, Clone)]
pub struct InputEcho {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone)]
pub enum AnyMatrix {
    Rational(SquareMatrix<Rational>),
    Real(SquareMatrix<f64>),
    Complex(SquareMatrix<Complex64>),
}

impl AnyMatrix {
    pub fn mode(&self) -> Mode {
        match self {
            AnyMatrix::Rational(_) => Mode::Rational,
            AnyMatrix::Real(_) => Mode::Real,
            AnyMatrix::Complex(_) => Mode::Complex,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.dim(),
            AnyMatrix::Real(m) => m.dim(),
            AnyMatrix::Complex(m) => m.dim(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LoadedMatrix {
    pub matrix: AnyMatrix,
    pub mode: Mode,
    pub input: InputEcho,
}

#[derive(Debug, Clone)]
pub enum AnyMetric {
    Rational(MetricTensor<Rational>, Perturbation<Rational>),
    Real(MetricTensor<f64>, Perturbation<f64>),
    Complex(MetricTensor<Complex64>, Perturbation<Complex64>),
}

#[derive(Debug, Clone)]
pub struct LoadedMetric {
    pub metric: AnyMetric,
    pub mode: Mode,
    pub input: InputEcho,
}

fn read_document(path: &str) -> Result<(Value, InputEcho), CliError> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::Parse(format!("cannot read {path}: {e}")))?;
    let echo = InputEcho {
        path: path.to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    };
    let doc: Value = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Parse(format!("{path} is not valid JSON: {e}")))?;
    Ok((doc, echo))
}

fn mode_of(doc: &Value, path: &str) -> Result<Mode, CliError> {
    let name = doc
        .get("mode")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Parse(format!("{path}: missing string field \"mode\"")))?;
    Mode::parse(name).ok_or_else(|| {
        CliError::Parse(format!(
            "{path}: unknown mode {name:?} (expected rational, real, or complex)"
        ))
    })
}

/// Decode one entry against the declared mode.
fn decode_scalar(mode: Mode, value: &Value) -> Result<Scalar, String> {
    match mode {
        Mode::Rational => {
            let text = value
                .as_str()
                .ok_or("rational entries are \"p/q\" or \"p\" strings")?;
            let r: Rational = text.parse().map_err(|e| format!("{e}"))?;
            Ok(Scalar::Rational(r))
        }
        Mode::Real => {
            let x = value.as_f64().ok_or("real entries are JSON numbers")?;
            Ok(Scalar::Real(x))
        }
        Mode::Complex => {
            let pair = value
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or("complex entries are two-element [re, im] arrays")?;
            let re = pair[0].as_f64().ok_or("re must be a JSON number")?;
            let im = pair[1].as_f64().ok_or("im must be a JSON number")?;
            Ok(Scalar::Complex(Complex64::new(re, im)))
        }
    }
}

/// Parse an `n x n` grid of mode-checked scalars, reporting the row and
/// column of the first offending entry.
fn parse_grid(
    doc: &Value,
    field: &str,
    n: usize,
    mode: Mode,
    path: &str,
) -> Result<Vec<Vec<Scalar>>, CliError> {
    let rows = doc
        .get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse(format!("{path}: missing array field {field:?}")))?;
    if rows.len() != n {
        return Err(CliError::Parse(format!(
            "{path}: {field} has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut grid = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| CliError::Parse(format!("{path}: {field} row {i} is not an array")))?;
        if row.len() != n {
            return Err(CliError::Parse(format!(
                "{path}: {field} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (j, value) in row.iter().enumerate() {
            let scalar = decode_scalar(mode, value).map_err(|why| {
                CliError::Parse(format!("{path}: {field} entry ({i},{j}): {why}"))
            })?;
            out.push(scalar);
        }
        grid.push(out);
    }
    Ok(grid)
}

fn typed_matrix<K: Field>(grid: &[Vec<Scalar>]) -> SquareMatrix<K> {
    let rows = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| K::from_scalar(s).expect("mode checked during decoding"))
                .collect()
        })
        .collect();
    SquareMatrix::from_rows(rows).expect("shape checked during parsing")
}

/// Load and validate a matrix file.
pub fn load_matrix(path: &str) -> Result<LoadedMatrix, CliError> {
    let (doc, input) = read_document(path)?;
    let mode = mode_of(&doc, path)?;
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Parse(format!("{path}: missing integer field \"n\"")))?;
    if n == 0 {
        return Err(CliError::Parse(format!("{path}: n must be at least 1")));
    }
    let grid = parse_grid(&doc, "entries", n as usize, mode, path)?;
    let matrix = match mode {
        Mode::Rational => AnyMatrix::Rational(typed_matrix(&grid)),
        Mode::Real => AnyMatrix::Real(typed_matrix(&grid)),
        Mode::Complex => AnyMatrix::Complex(typed_matrix(&grid)),
    };
    Ok(LoadedMatrix {
        matrix,
        mode,
        input,
    })
}

/// First `(mu, nu)` pair above the diagonal where the grid fails symmetry.
fn symmetry_violation(grid: &[Vec<Scalar>]) -> Option<(usize, usize)> {
    let n = grid.len();
    for mu in 0..n {
        for nu in (mu + 1)..n {
            if grid[mu][nu] != grid[nu][mu] {
                return Some((mu, nu));
            }
        }
    }
    None
}

fn typed_metric<K: Field>(
    g0: &[Vec<Scalar>],
    h: &[Vec<Scalar>],
) -> Result<(MetricTensor<K>, Perturbation<K>), CliError> {
    // Ingestion checks degeneracy at exact zero only; the operations apply
    // the caller's tolerance on top.
    let g0 = MetricTensor::new(typed_matrix::<K>(g0), 0.0).map_err(map_ingest_error)?;
    let h = Perturbation::new(typed_matrix::<K>(h)).map_err(map_ingest_error)?;
    Ok((g0, h))
}

fn map_ingest_error(e: MetricError) -> CliError {
    match e {
        // Shape and symmetry problems are file problems.
        MetricError::WrongDimension(_) | MetricError::AsymmetricComponents { .. } => {
            CliError::Parse(e.to_string())
        }
        other => other.into(),
    }
}

/// Load and validate a metric file against the fixed dimension 4.
///
/// Symmetry violations are parse errors naming the offending `(mu, nu)`
/// pair; a degenerate background is a contract error.
pub fn load_metric(path: &str) -> Result<LoadedMetric, CliError> {
    let (doc, input) = read_document(path)?;
    let mode = mode_of(&doc, path)?;
    let g0 = parse_grid(&doc, "g0", 4, mode, path)?;
    let h = parse_grid(&doc, "h", 4, mode, path)?;
    for (field, grid) in [("g0", &g0), ("h", &h)] {
        if let Some((mu, nu)) = symmetry_violation(grid) {
            return Err(CliError::Parse(format!(
                "{path}: {field} is not symmetric at (mu, nu) = ({mu}, {nu})"
            )));
        }
    }
    let metric = match mode {
        Mode::Rational => {
            let (g0, h) = typed_metric::<Rational>(&g0, &h)?;
            AnyMetric::Rational(g0, h)
        }
        Mode::Real => {
            let (g0, h) = typed_metric::<f64>(&g0, &h)?;
            AnyMetric::Real(g0, h)
        }
        Mode::Complex => {
            let (g0, h) = typed_metric::<Complex64>(&g0, &h)?;
            AnyMetric::Complex(g0, h)
        }
    };
    Ok(LoadedMetric {
        metric,
        mode,
        input,
    })
}

/// Parse a scalar command-line argument (e.g. `--z`) against a mode:
/// `p/q` for rational, a decimal literal for real, `[re, im]` for complex.
pub fn parse_scalar_arg(mode: Mode, text: &str) -> Result<Scalar, CliError> {
    let bad =
        |why: &str| CliError::Usage(format!("scalar argument {text:?} in {mode} mode: {why}"));
    match mode {
        Mode::Rational => text
            .parse::<Rational>()
            .map(Scalar::Rational)
            .map_err(|_| bad("expected p/q or p")),
        Mode::Real => text
            .parse::<f64>()
            .map(Scalar::Real)
            .map_err(|_| bad("expected a decimal literal")),
        Mode::Complex => {
            let value: Value = serde_json::from_str(text).map_err(|_| bad("expected [re, im]"))?;
            decode_scalar(Mode::Complex, &value).map_err(|why| bad(&why))
        }
    }
}
