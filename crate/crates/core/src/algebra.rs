//! The recursion between power traces and characteristic coefficients, its
//! symbolic unrolling over a sparse polynomial ring, and the polynomial
//! evaluation helpers the resolvent is assembled from.
//!
//! The central identity is
//!
//! ```text
//! T_k + D_1 T_{k-1} + ... + D_{k-1} T_1 + k D_k = 0,   k = 1..=n,
//! ```
//!
//! where `T_k` is the trace of the k-th power and `D_k` the k-th monic
//! characteristic coefficient. Run over numbers it converts traces to
//! coefficients and back; run over the polynomial ring with the `T_k` as
//! indeterminates it produces the closed-form trace formulas.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Field, Rational};

/// Errors from building trace sequences, coefficient lists, and formulas.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("empty input: at least one element is required")]
    EmptyInput,
    #[error("invalid formula term: {0}")]
    InvalidFormulaTerm(String),
}

/// Power traces `[T_1, ..., T_m]`. Non-empty by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceSequence<K> {
    values: Vec<K>,
}

impl<K: Field> TraceSequence<K> {
    pub fn new(values: Vec<K>) -> Result<Self, AlgebraError> {
        if values.is_empty() {
            return Err(AlgebraError::EmptyInput);
        }
        Ok(TraceSequence { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[K] {
        &self.values
    }

    /// `T_k`, 1-based. Panics when `k` is out of range.
    pub fn power(&self, k: usize) -> &K {
        &self.values[k - 1]
    }
}

/// Monic characteristic coefficients `[D_1, ..., D_n]` of
/// `p(z) = z^n + D_1 z^{n-1} + ... + D_n`. Non-empty by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> CharPoly<K> {
    pub fn new(coeffs: Vec<K>) -> Result<Self, AlgebraError> {
        if coeffs.is_empty() {
            return Err(AlgebraError::EmptyInput);
        }
        Ok(CharPoly { coeffs })
    }

    /// Degree of the polynomial = dimension of the underlying space.
    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[K] {
        &self.coeffs
    }

    /// `D_k`, 1-based. Panics when `k` is out of range.
    pub fn coefficient(&self, k: usize) -> &K {
        &self.coeffs[k - 1]
    }

    /// Horner evaluation of `p(z)`.
    pub fn evaluate(&self, z: &K) -> K {
        self.coeffs
            .iter()
            .fold(K::one(), |acc, d| acc.mul(z).add(d))
    }

    /// The partial sums `c_j = z^j + D_1 z^{j-1} + ... + D_j` for
    /// `j = 0..n-1`, i.e. `c_0 = 1` and `c_j = z c_{j-1} + D_j`.
    ///
    /// These are the quotient coefficients of `(p(z) - p(w)) / (z - w)` and
    /// become the resolvent numerator: `c_j` multiplies `A^{n-1-j}`.
    pub fn horner_partial_sums(&self, z: &K) -> Vec<K> {
        let mut sums = Vec::with_capacity(self.coeffs.len());
        sums.push(K::one());
        for d in &self.coeffs[..self.coeffs.len() - 1] {
            let last = sums.last().expect("nonempty");
            sums.push(last.mul(z).add(d));
        }
        sums
    }
}

/// Ring operations the recursion needs; implemented by every scalar field and
/// by the symbolic polynomial ring, so both run the same code path.
pub(crate) trait NewtonRing: Clone {
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_div_int(&self, k: usize) -> Self;
}

impl<K: Field> NewtonRing for K {
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn ring_neg(&self) -> Self {
        self.neg()
    }

    fn ring_div_int(&self, k: usize) -> Self {
        self.div_int(k)
    }
}

/// The recursion `k D_k = -(T_k + sum_{j<k} D_j T_{k-j})`, over any ring that
/// supports division by an integer.
fn newton_from_power_sums<E: NewtonRing>(power_sums: &[E]) -> Vec<E> {
    let mut coeffs: Vec<E> = Vec::with_capacity(power_sums.len());
    for k in 1..=power_sums.len() {
        let mut acc = power_sums[k - 1].clone();
        for (i, d) in coeffs.iter().enumerate() {
            // i + 1 = j, the index of D_j; pair it with T_{k-j}.
            acc = acc.ring_add(&d.ring_mul(&power_sums[k - (i + 1) - 1]));
        }
        coeffs.push(acc.ring_neg().ring_div_int(k));
    }
    coeffs
}

/// Characteristic coefficients `D_1..D_n` from the power traces `T_1..T_n`.
pub fn newton_coefficients<K: Field>(traces: &TraceSequence<K>) -> CharPoly<K> {
    CharPoly {
        coeffs: newton_from_power_sums(traces.values()),
    }
}

/// Power traces `T_1..T_m` from characteristic coefficients.
///
/// For `k <= n` this inverts the recursion; beyond `n` it extends by the
/// annihilation relation `T_k = -(D_1 T_{k-1} + ... + D_n T_{k-n})`, which is
/// the trace of the null identity multiplied through by `A^{k-n}`.
///
/// Panics when `m` is zero.
pub fn newton_traces<K: Field>(coeffs: &CharPoly<K>, m: usize) -> TraceSequence<K> {
    assert!(m >= 1, "at least one trace must be requested");
    let n = coeffs.dimension();
    let mut traces: Vec<K> = Vec::with_capacity(m);
    for k in 1..=m {
        let mut acc = K::zero();
        for j in 1..=usize::min(k - 1, n) {
            acc = acc.add(&coeffs.coefficient(j).mul(&traces[k - j - 1]));
        }
        if k <= n {
            acc = acc.add(&K::from_integer(k as i64).mul(coeffs.coefficient(k)));
        }
        traces.push(acc.neg());
    }
    TraceSequence { values: traces }
}

/// A monomial index: the multiset of trace subscripts, e.g. `T_1^2 T_2` is
/// the partition with parts `[2, 1, 1]`.
///
/// Ordering is the canonical output order for formulas: partitions with
/// larger parts come first (descending comparison of the descending part
/// lists), so `T_4` precedes `T_3 T_1` precedes `T_2^2` precedes
/// `T_2 T_1^2` precedes `T_1^4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    /// Parts sorted descending; no zeros.
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts in any order; zeros are rejected.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Build from `(j, a_j)` multiplicity pairs.
    pub fn from_multiplicities(mults: &[(u32, u32)]) -> Self {
        let mut parts = Vec::new();
        for &(j, a) in mults {
            assert!(
                j > 0 && a > 0,
                "multiplicities must pair positive j with positive a_j"
            );
            parts.extend(std::iter::repeat_n(j, a as usize));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    fn single(j: u32) -> Self {
        Partition { parts: vec![j] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Multiplicity pairs `(j, a_j)` in ascending `j` - the serialized form.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut mults: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match mults.last_mut() {
                Some((j, a)) if *j == p => *a += 1,
                _ => mults.push((p, 1)),
            }
        }
        mults
    }

    /// The weighted degree `sum_j j * a_j`.
    pub fn weighted_degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Reverse lexicographic on descending part lists: larger parts first.
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, a) in self.multiplicities() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "T{j}")?;
            } else {
                write!(f, "T{j}^{a}")?;
            }
        }
        Ok(())
    }
}

/// One monomial record in the serialized formula format: the partition as
/// `[j, a_j]` pairs in ascending `j`, the coefficient as a rational literal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaTerm {
    pub partition: Vec<(u32, u32)>,
    pub coefficient: String,
}

/// An exact multivariate polynomial in the trace indeterminates `T_1, T_2,
/// ...`: the closed form of one characteristic coefficient.
///
/// Every stored monomial has weighted degree exactly `k` and a nonzero
/// rational coefficient; iteration follows the canonical [`Partition`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceFormula {
    degree: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl TraceFormula {
    fn zero(degree: u32) -> Self {
        TraceFormula {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The bare indeterminate `T_j`.
    fn indeterminate(j: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::single(j), Rational::one());
        TraceFormula { degree: j, terms }
    }

    /// The weighted degree `k` shared by every monomial.
    pub fn weighted_degree(&self) -> u32 {
        self.degree
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, partition: &Partition) -> Option<&Rational> {
        self.terms.get(partition)
    }

    fn insert(&mut self, partition: Partition, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        debug_assert_eq!(partition.weighted_degree(), self.degree);
        match self.terms.entry(partition) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coefficient;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Substitute numeric traces for the indeterminates.
    ///
    /// Panics when the sequence is shorter than the largest subscript used.
    pub fn evaluate<K: Field>(&self, traces: &TraceSequence<K>) -> K {
        let mut acc = K::zero();
        for (partition, coefficient) in &self.terms {
            let mut term = K::from_rational(coefficient);
            for &j in partition.parts() {
                assert!(
                    (j as usize) <= traces.len(),
                    "trace sequence too short: needs T_{j}"
                );
                term = term.mul(traces.power(j as usize));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Serialized form: terms in canonical order.
    pub fn to_terms(&self) -> Vec<FormulaTerm> {
        self.terms
            .iter()
            .map(|(partition, coefficient)| FormulaTerm {
                partition: partition.multiplicities(),
                coefficient: coefficient.to_string(),
            })
            .collect()
    }

    /// Rebuild from serialized terms; the inverse of [`TraceFormula::to_terms`].
    pub fn from_terms(degree: u32, terms: &[FormulaTerm]) -> Result<Self, AlgebraError> {
        let mut formula = TraceFormula::zero(degree);
        for term in terms {
            if term.partition.iter().any(|&(j, a)| j == 0 || a == 0) {
                return Err(AlgebraError::InvalidFormulaTerm(format!(
                    "zero subscript or multiplicity in {:?}",
                    term.partition
                )));
            }
            let partition = Partition::from_multiplicities(&term.partition);
            if partition.weighted_degree() != degree {
                return Err(AlgebraError::InvalidFormulaTerm(format!(
                    "monomial {partition} has weighted degree {}, expected {degree}",
                    partition.weighted_degree()
                )));
            }
            let coefficient: Rational = term
                .coefficient
                .parse()
                .map_err(|e| AlgebraError::InvalidFormulaTerm(format!("{e}")))?;
            if coefficient.is_zero() {
                return Err(AlgebraError::InvalidFormulaTerm(format!(
                    "zero coefficient on {partition}"
                )));
            }
            formula.insert(partition, coefficient);
        }
        Ok(formula)
    }
}

impl fmt::Display for TraceFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (partition, coefficient)) in self.terms.iter().enumerate() {
            let magnitude = coefficient.abs();
            if i == 0 {
                if coefficient.is_negative() {
                    write!(f, "-")?;
                }
            } else if coefficient.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if magnitude == Rational::one() {
                write!(f, "{partition}")?;
            } else {
                write!(f, "{magnitude}*{partition}")?;
            }
        }
        Ok(())
    }
}

impl NewtonRing for TraceFormula {
    fn ring_add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (partition, coefficient) in &rhs.terms {
            out.insert(partition.clone(), coefficient.clone());
        }
        out
    }

    fn ring_mul(&self, rhs: &Self) -> Self {
        let mut out = TraceFormula::zero(self.degree + rhs.degree);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.insert(p.merge(q), a * b);
            }
        }
        out
    }

    fn ring_neg(&self) -> Self {
        TraceFormula {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    fn ring_div_int(&self, k: usize) -> Self {
        let factor = Rational::new(1, k as i64);
        TraceFormula {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c * &factor))
                .collect(),
        }
    }
}

/// The closed-form polynomial `D_k(T_1, ..., T_k)`, produced by running the
/// recursion over the polynomial ring with the traces as indeterminates.
///
/// Panics when `k` is zero.
pub fn symbolic_trace_formula(k: u32) -> TraceFormula {
    assert!(k >= 1, "formulas start at k = 1");
    let generators: Vec<TraceFormula> = (1..=k).map(TraceFormula::indeterminate).collect();
    newton_from_power_sums(&generators)
        .pop()
        .expect("nonempty generator list")
}
