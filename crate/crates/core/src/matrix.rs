//! Dense square matrices over a scalar field: power traces, characteristic
//! polynomial, determinant, null-identity residual, rational resolvent, and
//! inversion through the annihilation relation.
//!
//! None of the operations factorize or solve: everything reduces to matrix
//! products, traces, and the coefficient recursion in [`crate::algebra`].

use thiserror::Error;

use crate::algebra::{newton_coefficients, CharPoly, TraceSequence};
use crate::scalar::{Field, ScalarError};

/// Above this dimension the floating-mode coefficient recursion is known to
/// lose accuracy to cancellation among trace monomials; larger inputs are
/// allowed but warned about.
pub const FLOAT_MODE_SOFT_CAP: usize = 12;

/// Errors from matrix construction and the contract-bearing operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,
    #[error("entry data has {got} values, expected {expected} for a {n}x{n} matrix")]
    ShapeMismatch {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("z lies in the spectrum: the characteristic polynomial vanishes there")]
    SpectrumPoint,
    #[error("singular matrix: the constant characteristic coefficient vanishes")]
    SingularMatrix,
    #[error("resolvent verification failed: the defining identity does not hold within tolerance")]
    VerificationFailed,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Dense n-by-n matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<K> {
    n: usize,
    entries: Vec<K>,
}

impl<K: Field> SquareMatrix<K> {
    /// Build from a row-major entry vector of length `n * n`.
    pub fn new(n: usize, entries: Vec<K>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::ZeroDimension);
        }
        if entries.len() != n * n {
            return Err(MatrixError::ShapeMismatch {
                n,
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::ShapeMismatch {
                    n,
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    /// Panics when `n` is zero.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = K::one();
        }
        m
    }

    /// Panics when `n` is zero.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        SquareMatrix {
            n,
            entries: vec![K::zero(); n * n],
        }
    }

    /// Panics on an empty diagonal.
    pub fn diagonal(diag: Vec<K>) -> Self {
        assert!(!diag.is_empty());
        let n = diag.len();
        let mut m = Self::zero(n);
        for (i, value) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = value;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &K {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[K]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<K>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.entries[i * n + j].clone());
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.entries[i * n + j] != self.entries[j * n + i] {
                    return false;
                }
            }
        }
        true
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&K, &K) -> K) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, K::add)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, K::sub)
    }

    pub fn neg(&self) -> Self {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(K::neg).collect(),
        }
    }

    pub fn scale(&self, factor: &K) -> Self {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.mul(factor)).collect(),
        }
    }

    /// Classical cubic matrix product. Panics on dimension mismatch.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = K::zero();
                for k in 0..n {
                    acc = acc.add(&self.entries[i * n + k].mul(&rhs.entries[k * n + j]));
                }
                entries.push(acc);
            }
        }
        SquareMatrix { n, entries }
    }

    /// `self + c I`.
    pub fn plus_diagonal(&self, c: &K) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            let idx = i * self.n + i;
            out.entries[idx] = out.entries[idx].add(c);
        }
        out
    }

    pub fn trace(&self) -> K {
        let mut acc = K::zero();
        for i in 0..self.n {
            acc = acc.add(&self.entries[i * self.n + i]);
        }
        acc
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> K::Norm {
        let mut best = self.entries[0].norm();
        for e in &self.entries[1..] {
            let norm = e.norm();
            if norm > best {
                best = norm;
            }
        }
        best
    }

    /// Traces of the first `m` powers, `[tr A, tr A^2, ..., tr A^m]`,
    /// accumulating only the running power.
    ///
    /// Panics when `m` is zero.
    pub fn power_traces(&self, m: usize) -> TraceSequence<K> {
        assert!(m >= 1, "at least one power trace");
        let mut values = Vec::with_capacity(m);
        let mut power = self.clone();
        values.push(power.trace());
        for _ in 1..m {
            power = power.matmul(self);
            values.push(power.trace());
        }
        TraceSequence::new(values).expect("nonempty by construction")
    }

    /// Monic characteristic coefficients of `det(zI - A)`, computed from the
    /// power traces by the coefficient recursion.
    ///
    /// In floating modes accuracy degrades with dimension (cancellation among
    /// trace monomials); beyond [`FLOAT_MODE_SOFT_CAP`] a warning is logged
    /// but the computation proceeds.
    pub fn char_poly(&self) -> CharPoly<K> {
        if !K::EXACT && self.n > FLOAT_MODE_SOFT_CAP {
            log::warn!(
                "floating-mode characteristic recursion above n = {FLOAT_MODE_SOFT_CAP} \
                 (n = {}) is prone to cancellation; consider exact mode",
                self.n
            );
        }
        newton_coefficients(&self.power_traces(self.n))
    }

    /// `det A = (-1)^n D_n`.
    pub fn determinant(&self) -> K {
        let constant = self.char_poly().coefficient(self.n).clone();
        if self.n % 2 == 0 {
            constant
        } else {
            constant.neg()
        }
    }

    /// `A^n + D_1 A^{n-1} + ... + D_{n-1} A + D_n I`: exactly zero in exact
    /// mode, a roundoff residual worth inspecting in floating modes.
    pub fn cayley_hamilton_residual(&self) -> Self {
        let cp = self.char_poly();
        let mut acc = self.plus_diagonal(cp.coefficient(1));
        for k in 2..=self.n {
            acc = acc.matmul(self).plus_diagonal(cp.coefficient(k));
        }
        acc
    }

    /// The numerator matrices `B_0..B_{n-1}` of the resolvent:
    /// `B_0 = I`, `B_j = A B_{j-1} + D_j I`, so that
    /// `(zI - A)^{-1} = (sum_j z^{n-1-j} B_j) / p(z)`, and
    /// `A B_{n-1} + D_n I = 0` restates the null identity.
    pub fn adjugate_polynomial(&self) -> Vec<Self> {
        let cp = self.char_poly();
        let mut list = Vec::with_capacity(self.n);
        list.push(Self::identity(self.n));
        for j in 1..self.n {
            let next = list[j - 1].matmul(self).plus_diagonal(cp.coefficient(j));
            list.push(next);
        }
        list
    }

    /// Evaluate `(zI - A)^{-1}` as the polynomial-in-`A` formula
    /// `sum_j c_j A^{n-1-j} / p(z)` with `c_j` the Horner partial sums.
    ///
    /// Fails with [`MatrixError::SpectrumPoint`] when `p(z)` is zero within
    /// the scale-aware tolerance.
    pub fn resolvent(&self, z: &K, tolerance: f64) -> Result<ResolventValue<K>, MatrixError> {
        tolerance_guard::<K>(tolerance)?;
        let cp = self.char_poly();
        let denominator = cp.evaluate(z);
        let scale = coefficient_scale(&cp, K::norm_to_f64(&z.norm()));
        if value_within_tolerance(&denominator, scale, tolerance) {
            return Err(MatrixError::SpectrumPoint);
        }
        let sums = cp.horner_partial_sums(z);
        let mut numerator = Self::identity(self.n).scale(&sums[0]);
        for c in &sums[1..] {
            numerator = numerator.matmul(self).plus_diagonal(c);
        }
        let value = numerator.scale(&denominator.inv()?);
        Ok(ResolventValue {
            point: z.clone(),
            value,
            denominator,
        })
    }

    /// Invert through the annihilation relation:
    /// `A^{-1} = -(A^{n-1} + D_1 A^{n-2} + ... + D_{n-1} I) / D_n`.
    ///
    /// Fails with [`MatrixError::SingularMatrix`] when `D_n` is zero within
    /// the scale-aware tolerance.
    pub fn inverse(&self, tolerance: f64) -> Result<Self, MatrixError> {
        tolerance_guard::<K>(tolerance)?;
        let cp = self.char_poly();
        let constant = cp.coefficient(self.n);
        let scale = coefficient_scale(&cp, 1.0);
        if value_within_tolerance(constant, scale, tolerance) {
            return Err(MatrixError::SingularMatrix);
        }
        let mut acc = Self::identity(self.n);
        for k in 1..self.n {
            acc = acc.matmul(self).plus_diagonal(cp.coefficient(k));
        }
        let factor = constant.inv()?.neg();
        Ok(acc.scale(&factor))
    }
}

/// A resolvent evaluation: the matrix value of `(zI - A)^{-1}` together with
/// the point and the characteristic denominator `p(z)` it was assembled from.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolventValue<K: Field> {
    point: K,
    value: SquareMatrix<K>,
    denominator: K,
}

impl<K: Field> ResolventValue<K> {
    pub fn point(&self) -> &K {
        &self.point
    }

    pub fn value(&self) -> &SquareMatrix<K> {
        &self.value
    }

    pub fn denominator(&self) -> &K {
        &self.denominator
    }

    pub fn into_value(self) -> SquareMatrix<K> {
        self.value
    }

    /// Check the defining identity `(zI - A) R = R (zI - A) = I` (exact
    /// equality in exact mode, max-norm within `tolerance` otherwise) and
    /// return the value on success.
    pub fn verified(self, a: &SquareMatrix<K>, tolerance: f64) -> Result<Self, MatrixError> {
        tolerance_guard::<K>(tolerance)?;
        let shifted = a.neg().plus_diagonal(&self.point);
        let id = SquareMatrix::identity(a.dim());
        let left = shifted.matmul(&self.value).sub(&id);
        let right = self.value.matmul(&shifted).sub(&id);
        let ok = if K::EXACT {
            left == SquareMatrix::zero(a.dim()) && right == SquareMatrix::zero(a.dim())
        } else {
            K::norm_to_f64(&left.max_norm()) <= tolerance
                && K::norm_to_f64(&right.max_norm()) <= tolerance
        };
        if ok {
            Ok(self)
        } else {
            Err(MatrixError::VerificationFailed)
        }
    }
}

pub(crate) fn tolerance_guard<K: Field>(tolerance: f64) -> Result<(), ScalarError> {
    if tolerance < 0.0 {
        return Err(ScalarError::NegativeTolerance(tolerance));
    }
    if K::EXACT && tolerance != 0.0 {
        return Err(ScalarError::ExactModeTolerance(tolerance));
    }
    Ok(())
}

/// The scale `sum_k |D_k| |z|^{n-k}` for tolerance comparisons of
/// characteristic values; with `|z| = 1` it is the plain coefficient sum used
/// for singularity detection.
pub(crate) fn coefficient_scale<K: Field>(cp: &CharPoly<K>, z_abs: f64) -> f64 {
    let n = cp.dimension();
    cp.coefficients()
        .iter()
        .enumerate()
        .map(|(i, d)| K::norm_to_f64(&d.norm()) * z_abs.powi((n - (i + 1)) as i32))
        .sum()
}

/// Structural zero in exact mode; `|value| <= tolerance * (1 + scale)` in
/// floating modes.
pub(crate) fn value_within_tolerance<K: Field>(value: &K, scale: f64, tolerance: f64) -> bool {
    if K::EXACT {
        value.is_zero()
    } else {
        K::norm_to_f64(&value.norm()) <= tolerance * (1.0 + scale)
    }
}
