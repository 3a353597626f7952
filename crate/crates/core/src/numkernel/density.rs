use super::eigen::{hermitian_eigendecompose, SpectralDecomposition, HERMITIAN_TOL};
use super::matrix::{ComplexMatrix, ComplexScalar};
use crate::error::{Error, Result};

pub const TRACE_TOL: f64 = 1e-12;

/// Eigenvalues in `[-NOISE_FLOOR, 0)` are treated as zero; anything more
/// negative is a genuine positivity violation.
pub const NOISE_FLOOR: f64 = 1e-10;

/// A validated two-qubit state: 4x4, Hermitian, unit trace, PSD.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        mat.expect_dim(4)?;
        let deviation = mat.hermiticity_defect();
        if deviation.is_nan() || deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = mat.trace();
        if !((trace.re - 1.0).abs() <= TRACE_TOL && trace.im.abs() <= TRACE_TOL) {
            return Err(Error::NotNormalized { trace: trace.re });
        }
        let spectrum = hermitian_eigendecompose(&mat)?;
        let lowest = spectrum.eigenvalues[0];
        if lowest < -NOISE_FLOOR {
            return Err(Error::NotPositiveSemidefinite { eigenvalue: lowest });
        }
        Ok(Self { mat })
    }

    /// `|psi><psi| / <psi|psi>`.
    pub fn pure(psi: &[ComplexScalar]) -> Result<Self> {
        let norm_sqr: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        Self::new(ComplexMatrix::outer(psi).scale(1.0 / norm_sqr))
    }

    /// Equal-weight mixture of the given unit vectors.
    pub fn uniform_mixture(states: &[Vec<ComplexScalar>]) -> Result<Self> {
        let weight = 1.0 / states.len() as f64;
        let mut mat = ComplexMatrix::zeros(4);
        for psi in states {
            mat = &mat + &ComplexMatrix::outer(psi).scale(weight);
        }
        Self::new(mat)
    }

    pub fn maximally_mixed() -> Self {
        Self {
            mat: ComplexMatrix::identity(4).scale(0.25),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn spectrum(&self) -> Result<SpectralDecomposition> {
        hermitian_eigendecompose(&self.mat)
    }

    /// Eigenvalues with the numerical noise window clamped to zero.
    pub fn probabilities(&self) -> Result<Vec<f64>> {
        self.spectrum()?
            .eigenvalues
            .into_iter()
            .map(clamp_noise)
            .collect()
    }
}

pub(crate) fn clamp_noise(x: f64) -> Result<f64> {
    if x >= 0.0 {
        Ok(x)
    } else if x >= -NOISE_FLOOR {
        Ok(0.0)
    } else {
        Err(Error::NotPositiveSemidefinite { eigenvalue: x })
    }
}

/// Shannon entropy in bits of a probability vector, `0 log 0 = 0`.
pub fn shannon_entropy_bits(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// `S(rho) = -tr(rho log2 rho)` in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let entropy = shannon_entropy_bits(&rho.probabilities()?);
    // Rounding can leave -0.0 or a few ulps below zero for pure states.
    Ok(entropy.max(0.0))
}

/// Reduced state of the second qubit, `tr_1 rho`.
pub fn partial_trace_first(rho: &DensityMatrix) -> ComplexMatrix {
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = (0..2).map(|k| m[(2 * k + i, 2 * k + j)]).sum();
        }
    }
    out
}
