//! Single-qubit operators and the two-qubit basis convention.
//!
//! Vectors are ordered `|1>, |0>` for one qubit, so the two-qubit product
//! basis produced by `kron` is `|11>, |10>, |01>, |00>`. In this ordering
//! `sigma_z |1> = +|1>` and `sigma_+ = (sigma_x + i sigma_y)/2` raises
//! `|0>` to `|1>`.

use super::matrix::{ComplexMatrix, ComplexScalar};

const fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[&[c(0.0, 0.0), c(0.0, -1.0)], &[c(0.0, 1.0), c(0.0, 0.0)]])
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
}

/// Vector index of the single-qubit computational state `|x>`.
pub fn qubit_index(x: u8) -> usize {
    assert!(x < 2, "qubit label must be 0 or 1");
    1 - x as usize
}

/// Vector index of the two-qubit product state `|x1 x2>`.
pub fn basis_index(x1: u8, x2: u8) -> usize {
    2 * qubit_index(x1) + qubit_index(x2)
}

/// The single-qubit state `|x>` as a column vector.
pub fn qubit_state(x: u8) -> Vec<ComplexScalar> {
    let mut v = vec![c(0.0, 0.0); 2];
    v[qubit_index(x)] = c(1.0, 0.0);
    v
}

/// The two-qubit product state `|x1 x2>` as a column vector.
pub fn basis_state(x1: u8, x2: u8) -> Vec<ComplexScalar> {
    let mut v = vec![c(0.0, 0.0); 4];
    v[basis_index(x1, x2)] = c(1.0, 0.0);
    v
}

/// `(a|01> + b|10>)` as a column vector.
pub fn one_excitation(a: ComplexScalar, b: ComplexScalar) -> Vec<ComplexScalar> {
    let mut v = vec![c(0.0, 0.0); 4];
    v[basis_index(0, 1)] = a;
    v[basis_index(1, 0)] = b;
    v
}

/// Bell states `(|01> ± |10>)/sqrt 2`.
pub fn psi_plus() -> Vec<ComplexScalar> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    one_excitation(c(s, 0.0), c(s, 0.0))
}

pub fn psi_minus() -> Vec<ComplexScalar> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    one_excitation(c(s, 0.0), c(-s, 0.0))
}
