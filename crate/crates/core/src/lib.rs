//! Exact and floating linear algebra built on the recursion between power
//! traces and characteristic coefficients.
//!
//! The toolkit computes characteristic polynomials from the traces of matrix
//! powers, emits the closed-form trace formulas symbolically, checks the
//! Cayley-Hamilton null identity, evaluates the rational resolvent formula,
//! and specializes the dimension-4 case to invert perturbed metric tensors in
//! closed form.
//!
//! Everything is generic over one scalar abstraction:
//!
//! - [`scalar`]: exact rationals, real and complex floats behind [`scalar::Field`]
//! - [`algebra`]: the Newton recursion, polynomial evaluation, symbolic formulas
//! - [`matrix`]: dense square matrices and the operator-level operations
//! - [`metric`]: the dimension-4 specialization for perturbed metric tensors

pub mod algebra;
pub mod matrix;
pub mod metric;
pub mod scalar;

pub use algebra::{
    newton_coefficients, newton_traces, symbolic_trace_formula, AlgebraError, CharPoly,
    FormulaTerm, Partition, TraceFormula, TraceSequence,
};
pub use matrix::{MatrixError, ResolventValue, SquareMatrix};
pub use metric::{
    det_ratio, inverse_metric, mixed_perturbation, neumann_error_report, neumann_truncation,
    MetricError, MetricTensor, MixedPerturbation, Perturbation,
};
pub use scalar::{Field, Mode, Rational, Scalar, ScalarError};
