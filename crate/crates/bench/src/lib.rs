//! Fixtures shared by the benchmarks.

use ecc_spectra::{build_dnd, eccentricity_matrix, path, SymMatrix, Tree};

/// A spread of trees of order `n`: the path, a double broom and a caterpillar of diameter 4.
pub fn sample_trees(n: usize) -> Vec<Tree> {
    let mut out = vec![path(n).expect("n >= 1")];
    if n >= 5 {
        out.push(ecc_spectra::build_t3(n, 0, n - 4).expect("valid broom"));
        out.push(build_dnd(n, 4, (n - 5) / 2, n - 5 - (n - 5) / 2).expect("valid tree"));
    }
    out
}

/// Eccentricity matrices of the complements of [`sample_trees`].
pub fn complement_matrices(n: usize) -> Vec<SymMatrix> {
    sample_trees(n)
        .iter()
        .map(|t| eccentricity_matrix(&t.complement()).expect("connected complement"))
        .collect()
}
