//! Independent oracles: cofactor (Laplace) expansion for determinants and
//! characteristic polynomials, Gaussian elimination for inverses.
//!
//! Nothing here touches the trace recursion, the resolvent formula, or the
//! polynomial inversion path under test; the only shared code is the matrix
//! container and exact rational arithmetic.

use tracekit::{Rational, SquareMatrix};

/// Determinant by recursive cofactor expansion along the first row.
pub fn laplace_det(m: &SquareMatrix<Rational>) -> Rational {
    det_rows(&m.to_rows())
}

fn det_rows(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Rational::zero();
    for (j, pivot) in rows[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let signed = if j % 2 == 0 { pivot.clone() } else { -pivot };
        acc = &acc + &(&signed * &det_rows(&minor));
    }
    acc
}

/// Dense univariate polynomial over the rationals, ascending powers. Just
/// enough ring structure for the characteristic-polynomial oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct RatPoly(pub Vec<Rational>);

impl RatPoly {
    pub fn constant(c: Rational) -> Self {
        RatPoly(vec![c])
    }

    /// `c + z`.
    pub fn linear(c: Rational) -> Self {
        RatPoly(vec![c, Rational::one()])
    }

    pub fn zero() -> Self {
        RatPoly(vec![])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.0.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.0.get(i).cloned().unwrap_or_else(Rational::zero);
            out.push(&a + &b);
        }
        RatPoly(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.0.is_empty() || rhs.0.is_empty() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RatPoly(out)
    }

    pub fn neg(&self) -> Self {
        RatPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Coefficient of `z^p`, zero-padded.
    pub fn coefficient(&self, p: usize) -> Rational {
        self.0.get(p).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Monic characteristic coefficients `[D_1, ..., D_n]` of `det(zI - A)`,
/// obtained by cofactor expansion over the polynomial ring.
pub fn laplace_char_poly(m: &SquareMatrix<Rational>) -> Vec<Rational> {
    let n = m.dim();
    let rows: Vec<Vec<RatPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        RatPoly::linear(-m.entry(i, j))
                    } else {
                        RatPoly::constant(-m.entry(i, j))
                    }
                })
                .collect()
        })
        .collect();
    let det = poly_det(&rows);
    assert_eq!(det.coefficient(n), Rational::one(), "monic by construction");
    (1..=n).map(|k| det.coefficient(n - k)).collect()
}

fn poly_det(rows: &[Vec<RatPoly>]) -> RatPoly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = RatPoly::zero();
    for j in 0..n {
        let minor: Vec<Vec<RatPoly>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].mul(&poly_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.add(&term.neg())
        };
    }
    acc
}

/// Inverse by Gauss-Jordan elimination on the augmented system; `None` when
/// no pivot can be found in some column.
pub fn gauss_inverse(m: &SquareMatrix<Rational>) -> Option<SquareMatrix<Rational>> {
    let n = m.dim();
    let mut a = m.to_rows();
    let mut b = SquareMatrix::<Rational>::identity(n).to_rows();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);

        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &pivot;
            b[col][j] = &b[col][j] / &pivot;
        }

        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                b[r][j] = &b[r][j] - &(&factor * &b[col][j]);
            }
        }
    }
    Some(SquareMatrix::from_rows(b).expect("square by construction"))
}
