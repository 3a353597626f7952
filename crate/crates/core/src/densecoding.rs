//! Optimal dense coding over a thermal two-qubit channel.
//!
//! The sender applies one of four mutually orthogonal single-qubit unitaries
//! with equal probability; the Holevo capacity of that ensemble is
//! `chi = S(avg) - S(rho)` bits, where `avg` is the ensemble-averaged state.

use std::f64::consts::LN_2;

use crate::entanglement::concurrence;
use crate::error::{Error, Result};
use crate::numkernel::qubit::qubit_index;
use crate::numkernel::{von_neumann_entropy, ComplexMatrix, ComplexScalar, DensityMatrix};
use crate::spinmodels::{thermal_state, ModelKind, ModelParams};

/// Default temperature bracket for critical-temperature searches.
pub const DEFAULT_T_LO: f64 = 1e-3;
pub const DEFAULT_T_HI: f64 = 20.0;
/// Grid step used to locate sign changes of `chi - 1` before bisecting.
pub const SCAN_RESOLUTION: f64 = 1e-3;

const MAX_BISECTIONS: usize = 200;

/// Four unitaries on the sender's qubit with their prior probabilities.
#[derive(Debug, Clone)]
pub struct EncodingEnsemble {
    pub unitaries: [ComplexMatrix; 4],
    pub probabilities: [f64; 4],
}

impl EncodingEnsemble {
    /// Worst deviation from unitarity and from `tr(U_i† U_j) = 2 delta_ij`.
    pub fn orthogonality_defect(&self) -> f64 {
        let identity = ComplexMatrix::identity(2);
        let mut worst: f64 = 0.0;
        for (i, u) in self.unitaries.iter().enumerate() {
            worst = worst.max((&u.adjoint() * u).max_abs_diff(&identity));
            for (j, v) in self.unitaries.iter().enumerate() {
                let overlap = (&u.adjoint() * v).trace();
                let want = if i == j { 2.0 } else { 0.0 };
                worst = worst.max((overlap - want).norm());
            }
        }
        worst
    }
}

/// The optimal ensemble on a qubit, indexed `00, 10, 01, 11`:
/// `U00|x> = |x>`, `U10|x> = e^{i pi x}|x>`, `U01|x> = |x+1>`,
/// `U11|x> = e^{i pi x}|x+1>` (addition mod 2), each with probability 1/4.
pub fn standard_ensemble() -> EncodingEnsemble {
    let build = |phase: bool, flip: bool| {
        let mut u = ComplexMatrix::zeros(2);
        for x in 0..2u8 {
            let target = if flip { 1 - x } else { x };
            let amplitude = if phase && x == 1 { -1.0 } else { 1.0 };
            u[(qubit_index(target), qubit_index(x))] = ComplexScalar::new(amplitude, 0.0);
        }
        u
    };
    EncodingEnsemble {
        unitaries: [
            build(false, false),
            build(true, false),
            build(false, true),
            build(true, true),
        ],
        probabilities: [0.25; 4],
    }
}

/// `sum_i p_i (U_i ⊗ I) rho (U_i ⊗ I)†`.
pub fn average_signal_state(rho: &DensityMatrix, ensemble: &EncodingEnsemble) -> Result<DensityMatrix> {
    let identity = ComplexMatrix::identity(2);
    let mut avg = ComplexMatrix::zeros(4);
    for (u, &p) in ensemble.unitaries.iter().zip(&ensemble.probabilities) {
        let local = u.kron(&identity);
        avg = &avg + &rho.matrix().conjugate_by(&local).scale(p);
    }
    DensityMatrix::new(avg)
}

/// Capacity and supporting quantities at one state.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityResult {
    /// Holevo capacity in bits.
    pub chi: f64,
    pub entropy_rho: f64,
    pub entropy_avg: f64,
    pub concurrence: f64,
    /// `chi > 1`: the channel beats one classical bit per qubit.
    pub valid_for_dense_coding: bool,
    /// Set when the state is a model's thermal state.
    pub params: Option<ModelParams>,
}

/// Holevo capacity of the optimal ensemble, computed from spectra.
pub fn capacity_generic(rho: &DensityMatrix) -> Result<CapacityResult> {
    let avg = average_signal_state(rho, &standard_ensemble())?;
    let entropy_rho = von_neumann_entropy(rho)?;
    let entropy_avg = von_neumann_entropy(&avg)?;
    let chi = entropy_avg - entropy_rho;
    Ok(CapacityResult {
        chi,
        entropy_rho,
        entropy_avg,
        concurrence: concurrence(rho)?.value(),
        valid_for_dense_coding: chi > 1.0,
        params: None,
    })
}

/// [`capacity_generic`] on the Gibbs state of `params`. Accepts `J = 0`.
pub fn evaluate(params: &ModelParams) -> Result<CapacityResult> {
    let state = thermal_state(params)?;
    Ok(CapacityResult {
        params: Some(*params),
        ..capacity_generic(&state.rho)?
    })
}

/// Both sides of the validity inequality, rescaled by a common positive
/// factor so nothing overflows, plus the rescaled normalizer.
///
/// For XXZ the inequality is `J xi e^{J Delta/T} > T lambda ln lambda`,
/// for DM it is `zeta e^{J/T} > 2 T eta ln eta`. Both sides are divided by
/// `T e^m` (XXZ) or `2 T e^m` (DM) with `m` the largest exponent, and
/// `chi = 1 + (lhs - rhs) / (norm ln 2)` where `norm = lambda e^{-m}`
/// (resp. `eta e^{-m}`).
struct ScaledInequality {
    lhs: f64,
    rhs: f64,
    norm: f64,
}

impl ScaledInequality {
    fn chi(&self) -> f64 {
        1.0 + (self.lhs - self.rhs) / (self.norm * LN_2)
    }

    fn holds(&self) -> bool {
        self.lhs > self.rhs
    }
}

fn check_closed_form(params: &ModelParams, kind: ModelKind) -> Result<()> {
    params.require_kind(kind)?;
    params.require_temperature()?;
    if params.j == 0.0 || !params.j.is_finite() {
        return Err(Error::ZeroCoupling);
    }
    Ok(())
}

/// `(e^{-m}, e^{a+b-m}, e^{a-b-m}, m)` with `m = max(0, a + |b|)`, the
/// largest of the three exponents.
fn scaled_exponentials(a: f64, b: f64) -> (f64, f64, f64, f64) {
    let m = (a + b.abs()).max(0.0);
    ((-m).exp(), (a + b - m).exp(), (a - b - m).exp(), m)
}

fn xxz_inequality(params: &ModelParams) -> ScaledInequality {
    let ModelParams { j, anisotropy: delta, t, .. } = *params;
    let (base, up, down, m) = scaled_exponentials(j * delta / t, j / t);
    // lambda e^{-m}
    let norm = base + 0.5 * (up + down);
    // xi e^{J Delta/T} e^{-m}
    let xi_scaled = 0.5 * ((delta + 1.0) * up + (delta - 1.0) * down);
    ScaledInequality {
        lhs: (j / t) * xi_scaled,
        rhs: norm * (m + norm.ln()),
        norm,
    }
}

fn dm_inequality(params: &ModelParams) -> ScaledInequality {
    let ModelParams { j, anisotropy: d, t, .. } = *params;
    let delta = 2.0 * j * d.hypot(1.0);
    let (base, up, down, m) = scaled_exponentials(j / t, delta / (2.0 * t));
    // eta e^{-m}
    let norm = base + 0.5 * (up + down);
    // zeta e^{J/T} e^{-m}
    let zeta_scaled = 0.5 * ((2.0 * j + delta) * up + (2.0 * j - delta) * down);
    ScaledInequality {
        lhs: zeta_scaled / (2.0 * t),
        rhs: norm * (m + norm.ln()),
        norm,
    }
}

/// Closed-form XXZ capacity
/// `chi = [T lambda (ln 4 - 2 ln lambda) + 2 J xi e^{J Delta/T}] / (T lambda ln 4)`,
/// evaluated in rescaled form so it stays finite for any `J Delta / T`.
pub fn capacity_closed_xxz(params: &ModelParams) -> Result<f64> {
    check_closed_form(params, ModelKind::Xxz)?;
    Ok(xxz_inequality(params).chi())
}

/// Closed-form DM capacity
/// `chi = [T eta (ln 4 - 2 ln eta) + zeta e^{J/T}] / (T eta ln 4)`.
pub fn capacity_closed_dm(params: &ModelParams) -> Result<f64> {
    check_closed_form(params, ModelKind::Dm)?;
    Ok(dm_inequality(params).chi())
}

pub fn capacity_closed(params: &ModelParams) -> Result<f64> {
    match params.kind {
        ModelKind::Xxz => capacity_closed_xxz(params),
        ModelKind::Dm => capacity_closed_dm(params),
    }
}

/// Whether the thermal channel supports dense coding (`chi > 1`), decided by
/// the model's closed-form inequality.
pub fn validity(params: &ModelParams) -> Result<bool> {
    check_closed_form(params, params.kind)?;
    Ok(match params.kind {
        ModelKind::Xxz => xxz_inequality(params).holds(),
        ModelKind::Dm => dm_inequality(params).holds(),
    })
}

/// Capacity in the `Delta -> +inf, J = 1` (equivalently `Delta -> -inf,
/// J = -1`) limit:
/// `[1 + T ln 4 - T ln(1 + e^{2/T}) + tanh(1/T)] / (T ln 2)`.
pub fn asymptotic_chi_large_anisotropy(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidTemperature(t));
    }
    let ln4 = 2.0 * LN_2;
    let numerator = if t < 0.2 {
        // T ln(1 + e^{2/T}) = 2 + T ln(1 + e^{-2/T}), 1 - 2 + tanh(1/T) = -2 e^{-2/T}/(1 + e^{-2/T}).
        let small = (-2.0 / t).exp();
        -2.0 * small / (1.0 + small) + t * ln4 - t * small.ln_1p()
    } else {
        1.0 + t * ln4 - t * (2.0 / t).exp().ln_1p() + (1.0 / t).tanh()
    };
    Ok(numerator / (t * LN_2))
}

fn check_bracket(t_lo: f64, t_hi: f64) -> Result<()> {
    if t_lo > 0.0 && t_lo < t_hi && t_hi.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidBracket { lo: t_lo, hi: t_hi })
    }
}

/// Consecutive grid intervals `[a, b]` on which `chi - 1` changes sign,
/// sampled with step at most `resolution`.
pub fn sign_change_intervals(
    params: &ModelParams,
    t_lo: f64,
    t_hi: f64,
    resolution: f64,
) -> Result<Vec<(f64, f64)>> {
    check_bracket(t_lo, t_hi)?;
    check_closed_form(&params.with_temperature(t_lo), params.kind)?;
    let steps = ((t_hi - t_lo) / resolution).ceil().max(1.0) as usize;
    let at = |k: usize| t_lo + (t_hi - t_lo) * (k as f64) / (steps as f64);

    let mut intervals = Vec::new();
    let mut prev_t = t_lo;
    let mut prev_valid = validity(&params.with_temperature(prev_t))?;
    for k in 1..=steps {
        let t = at(k);
        let valid = validity(&params.with_temperature(t))?;
        if valid != prev_valid {
            intervals.push((prev_t, t));
        }
        prev_t = t;
        prev_valid = valid;
    }
    Ok(intervals)
}

/// Smallest temperature in `[t_lo, t_hi]` where the closed-form `chi`
/// crosses 1, or `None` when it never does.
///
/// The bracket is scanned at [`SCAN_RESOLUTION`] and the first sign change
/// is refined by bisection.
pub fn critical_temperature(params: &ModelParams, t_lo: f64, t_hi: f64) -> Result<Option<f64>> {
    let intervals = sign_change_intervals(params, t_lo, t_hi, SCAN_RESOLUTION)?;
    match intervals.first() {
        Some(&(a, b)) => refine_crossing(params, a, b).map(Some),
        None => Ok(None),
    }
}

/// Bisects `chi(T) - 1` on `[a, b]`, which must straddle a sign change.
pub fn refine_crossing(params: &ModelParams, mut a: f64, mut b: f64) -> Result<f64> {
    check_bracket(a, b)?;
    let excess = |t: f64| capacity_closed(&params.with_temperature(t)).map(|chi| chi - 1.0);
    let a_valid = validity(&params.with_temperature(a))?;
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if excess(mid)? == 0.0 {
            return Ok(mid);
        }
        if validity(&params.with_temperature(mid))? == a_valid {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(if excess(a)?.abs() <= excess(b)?.abs() { a } else { b })
}
