//! Perturbed metric tensors in dimension 4: determinant ratio, closed-form
//! inverse metric, and comparison against truncated Neumann series.
//!
//! For a background `g0` and perturbation `h`, both symmetric, the mixed
//! tensor is `H = g0^{-1} h` with traces `H_k = tr(H^k)`. The determinant
//! ratio `det(g0 + h) / det(g0)` and the inverse of `g0 + h` are degree-4 and
//! degree-3 polynomial expressions in `H`, valid with no smallness assumption
//! on `h` - unlike the Neumann series `(I + H)^{-1} = I - H + H^2 - ...`,
//! which requires the spectral radius of `H` below 1.
//!
//! This module is hard-coded to dimension 4; the general-dimension machinery
//! lives in [`crate::matrix`].

use thiserror::Error;

use crate::algebra::TraceSequence;
use crate::matrix::{tolerance_guard, MatrixError, SquareMatrix};
use crate::scalar::{Field, Rational, ScalarError};

/// The fixed dimension of this module.
pub const DIM: usize = 4;

/// Errors from metric construction and the perturbation operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("metric components must be {DIM}x{DIM}, got {0}x{0}")]
    WrongDimension(usize),
    #[error("components are not symmetric: entry ({row},{col}) differs from ({col},{row})")]
    AsymmetricComponents { row: usize, col: usize },
    #[error("background metric is degenerate")]
    DegenerateBackground,
    #[error("total metric g0 + h is degenerate")]
    DegenerateTotalMetric,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl From<ScalarError> for MetricError {
    fn from(e: ScalarError) -> Self {
        MetricError::Matrix(MatrixError::Scalar(e))
    }
}

fn check_components<K: Field>(components: &SquareMatrix<K>) -> Result<(), MetricError> {
    if components.dim() != DIM {
        return Err(MetricError::WrongDimension(components.dim()));
    }
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            if components.entry(i, j) != components.entry(j, i) {
                return Err(MetricError::AsymmetricComponents { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// A symmetric, nondegenerate 4x4 metric tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTensor<K> {
    components: SquareMatrix<K>,
}

impl<K: Field> MetricTensor<K> {
    /// Validate symmetry and nondegeneracy (the latter within the scale-aware
    /// tolerance in floating modes; exact mode requires tolerance 0).
    pub fn new(components: SquareMatrix<K>, tolerance: f64) -> Result<Self, MetricError> {
        tolerance_guard::<K>(tolerance)?;
        check_components(&components)?;
        match components.inverse(tolerance) {
            Ok(_) => Ok(MetricTensor { components }),
            Err(MatrixError::SingularMatrix) => Err(MetricError::DegenerateBackground),
            Err(e) => Err(MetricError::Matrix(e)),
        }
    }

    /// Wrap a value this module computed itself; symmetry is algebraically
    /// forced, so it is only debug-asserted (exact mode).
    fn from_computed(components: SquareMatrix<K>) -> Self {
        debug_assert!(!K::EXACT || components.is_symmetric());
        MetricTensor { components }
    }

    pub fn components(&self) -> &SquareMatrix<K> {
        &self.components
    }

    pub fn into_components(self) -> SquareMatrix<K> {
        self.components
    }
}

/// A symmetric 4x4 perturbation of a background metric.
#[derive(Debug, Clone, PartialEq)]
pub struct Perturbation<K> {
    components: SquareMatrix<K>,
}

impl<K: Field> Perturbation<K> {
    /// Validate symmetry; asymmetric input is rejected, never symmetrized.
    pub fn new(components: SquareMatrix<K>) -> Result<Self, MetricError> {
        check_components(&components)?;
        Ok(Perturbation { components })
    }

    pub fn components(&self) -> &SquareMatrix<K> {
        &self.components
    }
}

/// The mixed tensor `H = g0^{-1} h` with its four power traces.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedPerturbation<K> {
    matrix: SquareMatrix<K>,
    traces: TraceSequence<K>,
}

impl<K: Field> MixedPerturbation<K> {
    pub fn matrix(&self) -> &SquareMatrix<K> {
        &self.matrix
    }

    /// `[H_1, H_2, H_3, H_4]`.
    pub fn traces(&self) -> &TraceSequence<K> {
        &self.traces
    }
}

fn background_inverse<K: Field>(
    g0: &MetricTensor<K>,
    tolerance: f64,
) -> Result<SquareMatrix<K>, MetricError> {
    g0.components().inverse(tolerance).map_err(|e| match e {
        MatrixError::SingularMatrix => MetricError::DegenerateBackground,
        other => MetricError::Matrix(other),
    })
}

fn mixed_with_inverse<K: Field>(
    g0: &MetricTensor<K>,
    h: &Perturbation<K>,
    tolerance: f64,
) -> Result<(SquareMatrix<K>, MixedPerturbation<K>), MetricError> {
    let g0_inv = background_inverse(g0, tolerance)?;
    let matrix = g0_inv.matmul(h.components());
    let traces = matrix.power_traces(DIM);
    Ok((g0_inv, MixedPerturbation { matrix, traces }))
}

/// Compute `H = g0^{-1} h` and its power traces.
pub fn mixed_perturbation<K: Field>(
    g0: &MetricTensor<K>,
    h: &Perturbation<K>,
    tolerance: f64,
) -> Result<MixedPerturbation<K>, MetricError> {
    tolerance_guard::<K>(tolerance)?;
    mixed_with_inverse(g0, h, tolerance).map(|(_, mixed)| mixed)
}

/// Partial sums of the determinant-ratio expansion:
///
/// ```text
/// s_0 = 1
/// s_1 = s_0 + H_1
/// s_2 = s_1 + (H_1^2 - H_2) / 2
/// s_3 = s_2 + (H_1^3 - 3 H_1 H_2 + 2 H_3) / 6
/// s_4 = s_3 + (H_1^4 - 6 H_1^2 H_2 + 8 H_1 H_3 + 3 H_2^2 - 6 H_4) / 24
/// ```
///
/// `s_4` is `det(g0 + h) / det(g0)`; `s_1..s_3` are the scalar coefficients
/// of the cubic inverse-metric numerator.
fn expansion_sums<K: Field>(traces: &TraceSequence<K>) -> [K; 5] {
    let h1 = traces.power(1);
    let h2 = traces.power(2);
    let h3 = traces.power(3);
    let h4 = traces.power(4);

    let h1_sq = h1.mul(h1);
    let c = |n: i64, d: i64| K::from_rational(&Rational::new(n, d));

    let t2 = h1_sq.sub(h2);
    let t3 = h1_sq
        .mul(h1)
        .sub(&c(3, 1).mul(h1).mul(h2))
        .add(&c(2, 1).mul(h3));
    let t4 = h1_sq
        .mul(&h1_sq)
        .sub(&c(6, 1).mul(&h1_sq).mul(h2))
        .add(&c(8, 1).mul(h1).mul(h3))
        .add(&c(3, 1).mul(h2).mul(h2))
        .sub(&c(6, 1).mul(h4));

    let s0 = K::one();
    let s1 = s0.add(h1);
    let s2 = s1.add(&t2.mul(&c(1, 2)));
    let s3 = s2.add(&t3.mul(&c(1, 6)));
    let s4 = s3.add(&t4.mul(&c(1, 24)));
    [s0, s1, s2, s3, s4]
}

/// Zero test for the expansion value `s_4`, scaled by the magnitudes of the
/// four increments in floating modes.
fn ratio_within_tolerance<K: Field>(sums: &[K; 5], tolerance: f64) -> bool {
    if K::EXACT {
        return sums[4].is_zero();
    }
    let scale: f64 = (1..=4)
        .map(|k| K::norm_to_f64(&sums[k].sub(&sums[k - 1]).norm()))
        .sum();
    K::norm_to_f64(&sums[4].norm()) <= tolerance * (1.0 + scale)
}

/// `det(g0 + h) / det(g0)` as the quartic trace expansion in `H`.
pub fn det_ratio<K: Field>(
    g0: &MetricTensor<K>,
    h: &Perturbation<K>,
    tolerance: f64,
) -> Result<K, MetricError> {
    tolerance_guard::<K>(tolerance)?;
    let (_, mixed) = mixed_with_inverse(g0, h, tolerance)?;
    let sums = expansion_sums(&mixed.traces);
    let [.., s4] = sums;
    Ok(s4)
}

/// The closed-form inverse of `g0 + h`:
///
/// ```text
/// g^{-1} = [ -H^3 + s_1 H^2 - s_2 H + s_3 I ] g0^{-1} / s_4
/// ```
///
/// computed as a cubic polynomial in `H`, never by generic inversion of the
/// total metric.
pub fn inverse_metric<K: Field>(
    g0: &MetricTensor<K>,
    h: &Perturbation<K>,
    tolerance: f64,
) -> Result<MetricTensor<K>, MetricError> {
    tolerance_guard::<K>(tolerance)?;
    let (g0_inv, mixed) = mixed_with_inverse(g0, h, tolerance)?;
    let sums = expansion_sums(&mixed.traces);
    if ratio_within_tolerance(&sums, tolerance) {
        return Err(MetricError::DegenerateTotalMetric);
    }
    let m = &mixed.matrix;
    let m2 = m.matmul(m);
    let m3 = m2.matmul(m);
    let numerator = m3
        .neg()
        .add(&m2.scale(&sums[1]))
        .sub(&m.scale(&sums[2]))
        .plus_diagonal(&sums[3]);
    let value = numerator.matmul(&g0_inv).scale(&sums[4].inv()?);
    Ok(MetricTensor::from_computed(value))
}

/// Truncated Neumann series for the same inverse:
/// `(sum_{j=0}^{order} (-1)^j H^j) g0^{-1}`.
///
/// No convergence requirement is imposed; the caller inspects the error.
pub fn neumann_truncation<K: Field>(
    g0: &MetricTensor<K>,
    h: &Perturbation<K>,
    order: usize,
    tolerance: f64,
) -> Result<MetricTensor<K>, MetricError> {
    tolerance_guard::<K>(tolerance)?;
    let (g0_inv, mixed) = mixed_with_inverse(g0, h, tolerance)?;
    let mut sum = g0_inv.clone();
    let mut term = g0_inv;
    for j in 1..=order {
        term = mixed.matrix.matmul(&term);
        sum = if j % 2 == 1 {
            sum.sub(&term)
        } else {
            sum.add(&term)
        };
    }
    Ok(MetricTensor::from_computed(sum))
}

/// Max-norm distance of each Neumann truncation from the closed-form inverse,
/// for orders `0..=max_order`.
///
/// The errors decrease toward zero exactly when the series converges
/// (spectral radius of `H` below 1); otherwise they grow, while the closed
/// form stays valid.
pub fn neumann_error_report<K: Field>(
    g0: &MetricTensor<K>,
    h: &Perturbation<K>,
    max_order: usize,
    tolerance: f64,
) -> Result<Vec<(usize, K::Norm)>, MetricError> {
    let exact = inverse_metric(g0, h, tolerance)?;
    let (g0_inv, mixed) = mixed_with_inverse(g0, h, tolerance)?;
    let mut report = Vec::with_capacity(max_order + 1);
    let mut sum = g0_inv.clone();
    let mut term = g0_inv;
    report.push((0, sum.sub(exact.components()).max_norm()));
    for j in 1..=max_order {
        term = mixed.matrix.matmul(&term);
        sum = if j % 2 == 1 {
            sum.sub(&term)
        } else {
            sum.add(&term)
        };
        report.push((j, sum.sub(exact.components()).max_norm()));
    }
    Ok(report)
}
