//! Two-qubit XXZ and DM Heisenberg models: Hamiltonians, exact spectra,
//! Gibbs states and zero-temperature ground-manifold states.

use std::fmt;

use crate::error::{Error, Result};
use crate::numkernel::qubit::{basis_state, one_excitation, pauli_x, pauli_y, pauli_z};
use crate::numkernel::{ComplexMatrix, ComplexScalar, DensityMatrix, SpectralDecomposition};

/// Relative tolerance for grouping exactly degenerate analytic levels.
pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Anisotropic XXZ exchange, anisotropy is Delta.
    Xxz,
    /// Isotropic exchange plus a z-aligned DM term, anisotropy is D.
    Dm,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::Xxz => f.write_str("XXZ"),
            ModelKind::Dm => f.write_str("DM"),
        }
    }
}

/// A full physical configuration, in units where Boltzmann's constant is 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub kind: ModelKind,
    /// Exchange coupling; `J > 0` is antiferromagnetic.
    pub j: f64,
    /// Delta for XXZ, D for DM.
    pub anisotropy: f64,
    pub t: f64,
}

impl ModelParams {
    pub fn xxz(j: f64, delta: f64, t: f64) -> Self {
        Self {
            kind: ModelKind::Xxz,
            j,
            anisotropy: delta,
            t,
        }
    }

    pub fn dm(j: f64, d: f64, t: f64) -> Self {
        Self {
            kind: ModelKind::Dm,
            j,
            anisotropy: d,
            t,
        }
    }

    pub fn with_temperature(self, t: f64) -> Self {
        Self { t, ..self }
    }

    pub(crate) fn require_kind(&self, expected: ModelKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::WrongModelKind {
                expected,
                found: self.kind,
            })
        }
    }

    pub(crate) fn require_temperature(&self) -> Result<()> {
        if self.t > 0.0 && self.t.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidTemperature(self.t))
        }
    }
}

/// Gibbs state `exp(-H/T)/Z` of one model.
#[derive(Debug, Clone)]
pub struct ThermalState {
    pub rho: DensityMatrix,
    /// `ln Z`; kept in log form because `Z` itself overflows as `T -> 0`.
    pub log_partition_function: f64,
    pub params: ModelParams,
}

impl ThermalState {
    pub fn partition_function(&self) -> f64 {
        self.log_partition_function.exp()
    }
}

/// Auxiliary quantities of the XXZ closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XxzAux {
    /// `1 + exp(J Delta / T) cosh(J / T)`.
    pub lambda: f64,
    /// `Delta cosh(J / T) + sinh(J / T)`.
    pub xi: f64,
}

/// Auxiliary quantities of the DM closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DmAux {
    /// `1 + exp(J / T) cosh(delta / 2T)`.
    pub eta: f64,
    /// `2 J cosh(delta / 2T) + delta sinh(delta / 2T)`.
    pub zeta: f64,
    /// `2 J sqrt(1 + D^2)`.
    pub delta: f64,
    /// `arctan D`.
    pub theta: f64,
}

fn pauli_pair(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// The 4x4 Hamiltonian in the `|11>, |10>, |01>, |00>` basis.
///
/// XXZ: `J/2 (XX + YY + Delta ZZ)`.
/// DM:  `J/2 (XX + YY + ZZ + D (XY - YX))`.
pub fn hamiltonian(params: &ModelParams) -> ComplexMatrix {
    let (x, y, z) = (pauli_x(), pauli_y(), pauli_z());
    let xx = pauli_pair(&x, &x);
    let yy = pauli_pair(&y, &y);
    let zz = pauli_pair(&z, &z);
    let exchange = &xx + &yy;
    let h = match params.kind {
        ModelKind::Xxz => &exchange + &zz.scale(params.anisotropy),
        ModelKind::Dm => {
            let dm = &pauli_pair(&x, &y) - &pauli_pair(&y, &x);
            &(&exchange + &zz) + &dm.scale(params.anisotropy)
        }
    };
    h.scale(params.j / 2.0)
}

/// Exact eigenpairs, ascending in energy.
///
/// XXZ: `J Delta/2` on `|00>, |11>`; `-J Delta/2 ± J` on
/// `(|01> ± |10>)/sqrt 2`.
/// DM: `J/2` on `|00>, |11>`; `±J sqrt(1+D^2) - J/2` on
/// `(|01> ± e^{i theta}|10>)/sqrt 2` with `theta = arctan D`.
pub fn eigensystem(params: &ModelParams) -> SpectralDecomposition {
    let j = params.j;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let (product_energy, split, centre, phase) = match params.kind {
        ModelKind::Xxz => {
            let delta = params.anisotropy;
            (j * delta / 2.0, j, -j * delta / 2.0, ComplexScalar::new(1.0, 0.0))
        }
        ModelKind::Dm => {
            let d = params.anisotropy;
            (
                j / 2.0,
                j * d.hypot(1.0),
                -j / 2.0,
                ComplexScalar::from_polar(1.0, d.atan()),
            )
        }
    };
    let a = ComplexScalar::new(s, 0.0);
    let plus = one_excitation(a, phase * s);
    let minus = one_excitation(a, -phase * s);

    let mut pairs = vec![
        (product_energy, basis_state(0, 0)),
        (product_energy, basis_state(1, 1)),
        (centre - split, minus),
        (centre + split, plus),
    ];
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    }
}

/// Gibbs state built from the exact spectrum.
///
/// Boltzmann factors are formed relative to the ground energy,
/// `exp(-(E_k - E_min)/T)`, and normalized by their sum, so the state stays
/// finite down to arbitrarily small `T`.
pub fn thermal_state(params: &ModelParams) -> Result<ThermalState> {
    params.require_temperature()?;
    let spectrum = eigensystem(params);
    let e_min = spectrum.eigenvalues[0];
    let factors: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .map(|e| (-(e - e_min) / params.t).exp())
        .collect();
    let total: f64 = factors.iter().sum();

    let mut mat = ComplexMatrix::zeros(4);
    for (w, v) in factors.iter().zip(&spectrum.eigenvectors) {
        if *w == 0.0 {
            continue;
        }
        mat = &mat + &ComplexMatrix::outer(v).scale(w / total);
    }

    Ok(ThermalState {
        rho: DensityMatrix::new(mat)?,
        log_partition_function: total.ln() - e_min / params.t,
        params: *params,
    })
}

/// Equal mixture over the ground manifold, the `T -> 0+` limit of the Gibbs
/// state. Levels within `degeneracy_tol * max(1, |E_min|)` of the ground
/// energy count as degenerate.
pub fn ground_state_mixture(params: &ModelParams, degeneracy_tol: f64) -> Result<DensityMatrix> {
    let spectrum = eigensystem(params);
    let e_min = spectrum.eigenvalues[0];
    let window = degeneracy_tol * e_min.abs().max(1.0);
    let manifold: Vec<Vec<ComplexScalar>> = spectrum
        .eigenvalues
        .iter()
        .zip(spectrum.eigenvectors)
        .filter(|(e, _)| **e - e_min <= window)
        .map(|(_, v)| v)
        .collect();
    DensityMatrix::uniform_mixture(&manifold)
}

pub fn xxz_aux(params: &ModelParams) -> Result<XxzAux> {
    params.require_kind(ModelKind::Xxz)?;
    params.require_temperature()?;
    let ModelParams { j, anisotropy: delta, t, .. } = *params;
    Ok(XxzAux {
        lambda: 1.0 + (j * delta / t).exp() * (j / t).cosh(),
        xi: delta * (j / t).cosh() + (j / t).sinh(),
    })
}

pub fn dm_aux(params: &ModelParams) -> Result<DmAux> {
    params.require_kind(ModelKind::Dm)?;
    params.require_temperature()?;
    let ModelParams { j, anisotropy: d, t, .. } = *params;
    let delta = 2.0 * j * d.hypot(1.0);
    let half = delta / (2.0 * t);
    Ok(DmAux {
        eta: 1.0 + (j / t).exp() * half.cosh(),
        zeta: 2.0 * j * half.cosh() + delta * half.sinh(),
        delta,
        theta: d.atan(),
    })
}
