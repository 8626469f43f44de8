//! Fraction-free (Bareiss) determinant over an integer ring.

use num_integer::Integer;

/// Exact determinant of a square matrix by single-step fraction-free
/// elimination. Every division in the schedule is exact.
///
/// # Panics
///
/// If `matrix` is not square.
pub fn determinant_fraction_free<T: Clone + Integer>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return T::one();
    }
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut prev = T::one();
    let mut negate = false;
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&i| !a[i][p].is_zero()) {
                Some(i) => {
                    a.swap(p, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let t = a[i][j].clone() * a[p][p].clone() - a[i][p].clone() * a[p][j].clone();
                a[i][j] = t / prev.clone();
            }
            a[i][p] = T::zero();
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        T::zero() - det
    } else {
        det
    }
}
