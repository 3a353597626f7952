//! Wootters concurrence of two-qubit states.

use crate::error::Result;
use crate::numkernel::qubit::pauli_y;
use crate::numkernel::{
    clamp_noise, hermitian_eigendecompose, ComplexMatrix, DensityMatrix, SpectralDecomposition,
};

/// Concurrence in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ConcurrenceValue(f64);

impl ConcurrenceValue {
    pub fn new(c: f64) -> Self {
        Self(c.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `C = max(0, l1 - l2 - l3 - l4)`, where `l_i` are the decreasing square
/// roots of the eigenvalues of `rho (Y⊗Y) rho* (Y⊗Y)`.
///
/// The `l_i` are the singular values of `M = sqrt(rho) (Y⊗Y) sqrt(rho)*`,
/// read off as the non-negative eigenvalues of the Hermitian embedding
/// `[[0, M], [M†, 0]]`. Squaring `M` instead would lose every `l_i` below
/// roughly `1e-8`.
pub fn concurrence(rho: &DensityMatrix) -> Result<ConcurrenceValue> {
    let spectrum = rho.spectrum()?;
    let clamped: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .map(|&p| clamp_noise(p))
        .collect::<Result<_>>()?;
    let sqrt_rho = SpectralDecomposition {
        eigenvalues: clamped,
        eigenvectors: spectrum.eigenvectors,
    }
    .map_eigenvalues(f64::sqrt);

    let y = pauli_y();
    let flip = y.kron(&y);
    let m = &(&sqrt_rho * &flip) * &sqrt_rho.conj();

    let mut roots = singular_values(&m)?;
    roots.sort_by(|a, b| b.total_cmp(a));

    let c = roots[0] - roots[1..].iter().sum::<f64>();
    Ok(ConcurrenceValue::new(c))
}

fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    let mut embedded = ComplexMatrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            embedded[(i, n + j)] = m[(i, j)];
            embedded[(n + j, i)] = m[(i, j)].conj();
        }
    }
    let eigenvalues = hermitian_eigendecompose(&embedded)?.eigenvalues;
    eigenvalues[n..].iter().map(|&s| clamp_noise(s)).collect()
}
