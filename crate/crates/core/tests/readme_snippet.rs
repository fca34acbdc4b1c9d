//! Keeps the README's library example honest.

use tracekit::{newton_coefficients, Rational, SquareMatrix, TraceSequence};

#[test]
fn readme_library_example() {
    let a = SquareMatrix::diagonal(vec![Rational::new(2, 1), Rational::new(3, 1)]);
    let coefficients = a.char_poly(); // z^2 - 5z + 6
    assert_eq!(
        coefficients.coefficients(),
        &[Rational::new(-5, 1), Rational::new(6, 1)]
    );

    let traces = a.power_traces(4); // 5, 13, 35, 97
    let roundtrip =
        newton_coefficients(&TraceSequence::new(traces.values()[..2].to_vec()).unwrap());
    assert_eq!(roundtrip, coefficients);

    let inverse = a.inverse(0.0).unwrap(); // exact: diag(1/2, 1/3)
    assert_eq!(a.matmul(&inverse), SquareMatrix::identity(2));
}
