//! Scalar modes: exact arbitrary-precision rationals, real floats, and
//! complex floats.
//!
//! Higher layers are generic over [`Field`], so a single implementation of
//! each recursion serves every mode. The dynamic [`Scalar`] enum is the
//! boundary representation used by file parsing and command output, where the
//! mode is data rather than a type parameter. Arithmetic never crosses modes:
//! mixing them is [`ScalarError::ModeMismatch`], not a coercion.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arithmetic mode of a [`Scalar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Rational,
    Real,
    Complex,
}

impl Mode {
    /// Name used in file schemas and command output.
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Rational => "rational",
            Mode::Real => "real",
            Mode::Complex => "complex",
        }
    }

    /// Inverse of [`Mode::as_str`].
    pub fn parse(name: &str) -> Option<Mode> {
        match name {
            "rational" => Some(Mode::Rational),
            "real" => Some(Mode::Real),
            "complex" => Some(Mode::Complex),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Errors from scalar arithmetic and tolerance handling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalarError {
    #[error("scalar mode mismatch: {left} vs {right}")]
    ModeMismatch { left: Mode, right: Mode },
    #[error("division by zero")]
    DivisionByZero,
    #[error("tolerance must be nonnegative, got {0}")]
    NegativeTolerance(f64),
    #[error("exact mode admits only tolerance 0, got {0}")]
    ExactModeTolerance(f64),
}

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Build `numer/denom`, normalizing sign and common factors:
    /// `Rational::new(6, -4)` stores -3/2.
    ///
    /// Panics on a zero denominator; [`Rational::from_big`] is the fallible
    /// constructor.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, ScalarError> {
        if denom.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exponent: u32) -> Self {
        Rational(self.0.pow(exponent as i32))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Nearest `f64`; saturates to signed infinity when out of range.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Error from parsing a `"p"` / `"p/q"` rational literal.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("invalid rational literal {literal:?}")]
pub struct ParseRationalError {
    pub literal: String,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError {
            literal: s.to_string(),
        };
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer: BigInt = numer.trim().parse().map_err(|_| err())?;
        let denom: BigInt = denom.trim().parse().map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

macro_rules! rational_binop {
    ($op:ident, $method:ident) => {
        impl $op<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
// Division panics on a zero divisor; checked division goes through Field::inv.
rational_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Field arithmetic the toolkit's algorithms are generic over.
///
/// `EXACT` distinguishes bit-exact arithmetic from floating arithmetic:
/// exact mode admits only tolerance 0 and structural zero tests, floating
/// modes compare magnitudes against caller-supplied tolerances.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Magnitude type: exact mode keeps exact magnitudes, floating modes use
    /// `f64`.
    type Norm: PartialOrd + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static;

    const EXACT: bool;
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;
    /// Embed an exact rational constant into the field.
    fn from_rational(r: &Rational) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. [`ScalarError::DivisionByZero`] on zero, or in
    /// floating modes when the reciprocal is not finite.
    fn inv(&self) -> Result<Self, ScalarError>;

    fn is_zero(&self) -> bool;
    /// Absolute value (modulus in complex mode).
    fn norm(&self) -> Self::Norm;
    fn norm_to_f64(norm: &Self::Norm) -> f64;
    /// Magnitudes as dynamic scalars, for report output.
    fn norm_scalar(norm: &Self::Norm) -> Scalar;

    fn to_scalar(&self) -> Scalar;
    /// Back out of the dynamic representation; `None` when the mode differs.
    fn from_scalar(s: &Scalar) -> Option<Self>;

    /// Division by a positive integer: exact in exact mode, multiplication by
    /// the rounded reciprocal in floating modes.
    fn div_int(&self, k: usize) -> Self {
        debug_assert!(k >= 1);
        self.mul(
            &Self::from_integer(k as i64)
                .inv()
                .expect("positive integer"),
        )
    }
}

impl Field for Rational {
    type Norm = Rational;

    const EXACT: bool = true;
    const MODE: Mode = Mode::Rational;

    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn norm(&self) -> Rational {
        self.abs()
    }

    fn norm_to_f64(norm: &Rational) -> f64 {
        norm.to_f64()
    }

    fn norm_scalar(norm: &Rational) -> Scalar {
        Scalar::Rational(norm.clone())
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }
}

impl Field for f64 {
    type Norm = f64;

    const EXACT: bool = false;
    const MODE: Mode = Mode::Real;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if *self == 0.0 {
            return Err(ScalarError::DivisionByZero);
        }
        let r = self.recip();
        if r.is_finite() {
            Ok(r)
        } else {
            Err(ScalarError::DivisionByZero)
        }
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn norm(&self) -> f64 {
        self.abs()
    }

    fn norm_to_f64(norm: &f64) -> f64 {
        *norm
    }

    fn norm_scalar(norm: &f64) -> Scalar {
        Scalar::Real(*norm)
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Real(*self)
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Real(x) => Some(*x),
            _ => None,
        }
    }
}

impl Field for Complex64 {
    type Norm = f64;

    const EXACT: bool = false;
    const MODE: Mode = Mode::Complex;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_integer(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64(), 0.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if Zero::is_zero(self) {
            return Err(ScalarError::DivisionByZero);
        }
        let r = Complex64::new(1.0, 0.0) / self;
        if r.re.is_finite() && r.im.is_finite() {
            Ok(r)
        } else {
            Err(ScalarError::DivisionByZero)
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }

    fn norm_to_f64(norm: &f64) -> f64 {
        *norm
    }

    fn norm_scalar(norm: &f64) -> Scalar {
        Scalar::Real(*norm)
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Complex(*self)
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Complex(z) => Some(*z),
            _ => None,
        }
    }
}

/// Dynamic scalar: the mode travels with the value.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Real(f64),
    Complex(Complex64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rational(_) => Mode::Rational,
            Scalar::Real(_) => Mode::Real,
            Scalar::Complex(_) => Mode::Complex,
        }
    }

    fn mismatch(&self, rhs: &Scalar) -> ScalarError {
        ScalarError::ModeMismatch {
            left: self.mode(),
            right: rhs.mode(),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(Field::add(a, b))),
            (Scalar::Real(a), Scalar::Real(b)) => Ok(Scalar::Real(a + b)),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(a + b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(Field::sub(a, b))),
            (Scalar::Real(a), Scalar::Real(b)) => Ok(Scalar::Real(a - b)),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(a - b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(Field::mul(a, b))),
            (Scalar::Real(a), Scalar::Real(b)) => Ok(Scalar::Real(a * b)),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(a * b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(Field::neg(a)),
            Scalar::Real(a) => Scalar::Real(-a),
            Scalar::Complex(a) => Scalar::Complex(-a),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(a) => Ok(Scalar::Rational(Field::inv(a)?)),
            Scalar::Real(a) => Ok(Scalar::Real(Field::inv(a)?)),
            Scalar::Complex(a) => Ok(Scalar::Complex(Field::inv(a)?)),
        }
    }

    /// Zero test: structural in exact mode (which admits only tolerance 0),
    /// magnitude-vs-tolerance in floating modes.
    pub fn is_zero(&self, tolerance: f64) -> Result<bool, ScalarError> {
        if tolerance < 0.0 {
            return Err(ScalarError::NegativeTolerance(tolerance));
        }
        match self {
            Scalar::Rational(r) => {
                if tolerance != 0.0 {
                    return Err(ScalarError::ExactModeTolerance(tolerance));
                }
                Ok(r.is_zero())
            }
            Scalar::Real(x) => Ok(x.abs() <= tolerance),
            Scalar::Complex(z) => Ok(z.norm() <= tolerance),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Real(x)
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Complex(z)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Real(x) => write!(f, "{x}"),
            Scalar::Complex(z) => write!(f, "{z}"),
        }
    }
}
