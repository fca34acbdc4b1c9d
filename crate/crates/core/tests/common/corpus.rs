//! Seeded random corpora: exact rational matrices with small entries, float
//! matrices with entries in [-1, 1], and symmetric metric pairs.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracekit::{MetricTensor, Perturbation, Rational, SquareMatrix};

use super::oracle;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerators in [-5, 5], denominators in [1, 5].
pub fn rational_entry(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=5))
}

pub fn rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix<Rational> {
    let entries = (0..n * n).map(|_| rational_entry(rng)).collect();
    SquareMatrix::new(n, entries).expect("well-shaped")
}

/// Rejection-sample until the cofactor-expansion determinant is nonzero.
pub fn nonsingular_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix<Rational> {
    loop {
        let m = rational_matrix(rng, n);
        if !oracle::laplace_det(&m).is_zero() {
            return m;
        }
    }
}

pub fn upper_triangular_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix<Rational> {
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            if j >= i {
                *e = rational_entry(rng);
            }
        }
    }
    SquareMatrix::from_rows(rows).expect("well-shaped")
}

pub fn symmetric_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix<Rational> {
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = rational_entry(rng);
            rows[i][j] = e.clone();
            rows[j][i] = e;
        }
    }
    SquareMatrix::from_rows(rows).expect("well-shaped")
}

/// A random symmetric background and perturbation with both `g0` and
/// `g0 + h` nondegenerate, enforced by rejection against the determinant
/// oracle.
pub fn metric_pair(rng: &mut ChaCha8Rng) -> (MetricTensor<Rational>, Perturbation<Rational>) {
    loop {
        let g0 = symmetric_rational_matrix(rng, 4);
        let h = symmetric_rational_matrix(rng, 4);
        if oracle::laplace_det(&g0).is_zero() {
            continue;
        }
        if oracle::laplace_det(&g0.add(&h)).is_zero() {
            continue;
        }
        let g0 = MetricTensor::new(g0, 0.0).expect("nondegenerate by rejection");
        let h = Perturbation::new(h).expect("symmetric by construction");
        return (g0, h);
    }
}

/// Entries uniform in [-1, 1].
pub fn float_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix<f64> {
    let entries = (0..n * n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    SquareMatrix::new(n, entries).expect("well-shaped")
}
