//! Floating-point linear algebra at the evaluation boundary: hermitian
//! eigenvalues and numeric matrix rank, backed by nalgebra.

use nalgebra::{Complex, DMatrix};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex<f64>>;

pub fn to_cmatrix(rows: usize, cols: usize, data: &[Complex64]) -> CMatrix {
    assert_eq!(data.len(), rows * cols);
    CMatrix::from_fn(rows, cols, |r, c| {
        let z = data[r * cols + c];
        Complex::new(z.re, z.im)
    })
}

/// Eigenvalues of a hermitian matrix, ascending. The input is symmetrized
/// as (M + M^H)/2 first; the caller should check hermiticity separately
/// when it is a correctness condition.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let sym = (m + m.adjoint()) * Complex::new(0.5, 0.0);
    let mut eigs: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

/// Largest deviation from hermiticity, relative to the matrix scale.
pub fn hermitian_defect(m: &CMatrix) -> f64 {
    let scale = m.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    let d = m - m.adjoint();
    d.iter().map(|z| z.norm()).fold(0.0f64, f64::max) / scale
}

/// Singular values, descending (square roots of the eigenvalues of M M^H).
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let gram = m * m.adjoint();
    let mut svs: Vec<f64> = hermitian_eigenvalues(&gram)
        .into_iter()
        .map(|e| e.max(0.0).sqrt())
        .collect();
    svs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    svs
}

/// Numeric rank: singular values above `rel_tol` times the largest one.
/// Matrices whose largest singular value is below `abs_floor` have rank 0.
pub fn numeric_rank(m: &CMatrix, rel_tol: f64, abs_floor: f64) -> usize {
    let svs = singular_values(m);
    let top = svs.first().copied().unwrap_or(0.0);
    if top <= abs_floor {
        return 0;
    }
    svs.iter().filter(|&&s| s > rel_tol * top).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_eigenvalues_of_pauli_like_matrix() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let data = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
        ];
        let m = to_cmatrix(2, 2, &data);
        assert!(hermitian_defect(&m) < 1e-14);
        let e = hermitian_eigenvalues(&m);
        assert!((e[0] - 0.0).abs() < 1e-12 && (e[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rank_of_rank_one_matrix() {
        let data = [
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(4.0, 0.0),
        ];
        let m = to_cmatrix(2, 2, &data);
        assert_eq!(numeric_rank(&m, 1e-8, 1e-12), 1);
    }

    #[test]
    fn tiny_matrix_has_rank_zero() {
        let data = [Complex64::new(1e-15, 0.0); 4];
        let m = to_cmatrix(2, 2, &data);
        assert_eq!(numeric_rank(&m, 1e-8, 1e-12), 0);
    }
}
