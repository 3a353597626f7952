//! Cyclic Jacobi eigensolver for small Hermitian matrices.

use super::matrix::{ComplexMatrix, ComplexScalar};
use crate::error::{Error, Result};

/// Input must be Hermitian to this absolute tolerance.
pub const HERMITIAN_TOL: f64 = 1e-12;

const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;
const TIE_TOL: f64 = 1e-12;
const PHASE_TOL: f64 = 1e-12;

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<ComplexScalar>>,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Rebuilds `sum_k lambda_k v_k v_k†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_eigenvalues(|x| x)
    }

    /// `sum_k f(lambda_k) v_k v_k†`.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim());
        for (&lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            out = &out + &ComplexMatrix::outer(v).scale(w);
        }
        out
    }

    /// Orders pairs by ascending eigenvalue and fixes eigenvector phases so
    /// the first non-negligible component is real and positive. Eigenvalues
    /// tied within tolerance are ordered by the position of that component.
    pub(crate) fn canonicalize(mut self) -> Self {
        for v in &mut self.eigenvectors {
            if let Some(lead) = v.iter().find(|z| z.norm() > PHASE_TOL).copied() {
                let phase = lead.conj() / lead.norm();
                for z in v.iter_mut() {
                    *z *= phase;
                }
            }
        }

        let lead_index =
            |v: &[ComplexScalar]| v.iter().position(|z| z.norm() > PHASE_TOL).unwrap_or(v.len());

        let mut pairs: Vec<(f64, Vec<ComplexScalar>)> =
            self.eigenvalues.into_iter().zip(self.eigenvectors).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

        let mut start = 0;
        while start < pairs.len() {
            let mut end = start + 1;
            while end < pairs.len() {
                let (a, b) = (pairs[end - 1].0, pairs[end].0);
                if (b - a).abs() > TIE_TOL * a.abs().max(1.0) {
                    break;
                }
                end += 1;
            }
            pairs[start..end].sort_by_key(|(_, v)| lead_index(v));
            start = end;
        }

        let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
        Self {
            eigenvalues,
            eigenvectors,
        }
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn frobenius_norm(a: &ComplexMatrix) -> f64 {
    a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` with a diagonal
/// unitary, then applies the real symmetric Jacobi rotation to that pair.
pub fn hermitian_eigendecompose(m: &ComplexMatrix) -> Result<SpectralDecomposition> {
    let deviation = m.hermiticity_defect();
    if !m.is_finite() || deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }

    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * frobenius_norm(&a).max(1.0);

    let mut converged = off_diagonal_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= threshold;
    }

    let eigenvalues = (0..n).map(|i| a[(i, i)].re).collect();
    let eigenvectors = (0..n)
        .map(|k| (0..n).map(|i| v[(i, k)]).collect())
        .collect();
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    }
    .canonicalize())
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let n = a.dim();
    let phase = apq.conj() / b;

    let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // G restricted to (p, q): [[c, s], [-s * phase, c * phase]].
    let g_pp = ComplexScalar::new(c, 0.0);
    let g_pq = ComplexScalar::new(s, 0.0);
    let g_qp = phase * -s;
    let g_qq = phase * c;

    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;

        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }

    a[(p, q)] = ComplexScalar::new(0.0, 0.0);
    a[(q, p)] = ComplexScalar::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}
