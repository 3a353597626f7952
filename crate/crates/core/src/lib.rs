//! Optimal dense-coding capacity of thermal two-qubit Heisenberg states.
//!
//! Two exactly solvable models are covered: the anisotropic XXZ chain and the
//! isotropic chain with a z-aligned Dzyaloshinski-Moriya (DM) term. For each
//! the crate builds the Gibbs state, evaluates the Holevo capacity of the
//! optimal orthogonal-unitary encoding both numerically and in closed form,
//! and provides the Wootters concurrence for comparison.
//!
//! Two-qubit vectors are ordered `|11>, |10>, |01>, |00>`; see
//! [`numkernel::qubit`].

pub mod densecoding;
pub mod entanglement;
mod error;
pub mod numkernel;
pub mod spinmodels;

pub use error::{Error, Result};
