//! Dense symmetric eigendecomposition and the numeric tolerances used by the
//! floating-point side of certification.
//!
//! Ball submatrices are small by bounded geometry, so dense decompositions
//! (via nalgebra) are the right tool; no sparse or iterative solver is used.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Tolerances for eigenvalue comparisons, isometry and kernel residuals, and
/// numerical rank. Configurable from the CLI.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerances {
    pub eig: f64,
    pub isometry: f64,
    pub kernel: f64,
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eig: 1e-9, isometry: 1e-12, kernel: 1e-10, rank: 1e-8 }
    }
}

/// Eigenvalues (ascending) with matching eigenvector columns.
pub struct EigenPairs {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

/// Full symmetric eigendecomposition, eigenvalues sorted ascending.
pub fn sym_eigen(mat: &DMatrix<f64>) -> EigenPairs {
    assert_eq!(mat.nrows(), mat.ncols(), "square matrix required");
    let n = mat.nrows();
    if n == 0 {
        return EigenPairs { values: Vec::new(), vectors: DMatrix::zeros(0, 0) };
    }
    if n == 1 {
        return EigenPairs { values: vec![mat[(0, 0)]], vectors: DMatrix::identity(1, 1) };
    }
    let decomp = mat.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| decomp.eigenvalues[a].total_cmp(&decomp.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&i| decomp.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        vectors.set_column(new, &decomp.eigenvectors.column(old));
    }
    EigenPairs { values, vectors }
}

/// Smallest eigenvalue with an eigenvector.
pub fn min_eigenpair(mat: &DMatrix<f64>) -> (f64, DVector<f64>) {
    let pairs = sym_eigen(mat);
    let v = pairs.vectors.column(0).into_owned();
    (pairs.values[0], v)
}

/// Largest absolute eigenvalue (operator norm of a symmetric matrix).
pub fn operator_norm(mat: &DMatrix<f64>) -> f64 {
    let pairs = sym_eigen(mat);
    pairs.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn diagonal_matrix() {
        let m = DMatrix::from_diagonal(&DVector::from_vec(vec![3.0, -1.0, 2.0]));
        let pairs = sym_eigen(&m);
        assert_relative_eq!(pairs.values[0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(pairs.values[2], 3.0, epsilon = 1e-12);
        assert_relative_eq!(operator_norm(&m), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn path_laplacian_spectrum() {
        // P3 Laplacian: eigenvalues 0, 1, 3.
        let m = DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]);
        let pairs = sym_eigen(&m);
        assert_relative_eq!(pairs.values[0], 0.0, epsilon = 1e-10);
        assert_relative_eq!(pairs.values[1], 1.0, epsilon = 1e-10);
        assert_relative_eq!(pairs.values[2], 3.0, epsilon = 1e-10);
        // Eigenvector of 0 is constant.
        let (val, vec) = min_eigenpair(&m);
        assert!(val.abs() < 1e-10);
        let c = vec[0];
        assert!(vec.iter().all(|x| (x - c).abs() < 1e-9));
    }
}
