//! Dense complex linear algebra and entropy for 2x2 and 4x4 matrices.

mod density;
mod eigen;
mod matrix;
pub mod qubit;

pub use density::{
    partial_trace_first, shannon_entropy_bits, von_neumann_entropy, DensityMatrix, NOISE_FLOOR,
    TRACE_TOL,
};
pub(crate) use density::clamp_noise;
pub use eigen::{hermitian_eigendecompose, SpectralDecomposition, HERMITIAN_TOL};
pub use matrix::{ComplexMatrix, ComplexScalar};
