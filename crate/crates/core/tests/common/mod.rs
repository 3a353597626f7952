#![allow(dead_code)]

use dense_coding::numkernel::{ComplexMatrix, ComplexScalar, DensityMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_complex(rng: &mut ChaCha8Rng) -> ComplexScalar {
    ComplexScalar::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

pub fn random_square(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = random_complex(rng);
        }
    }
    m
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        m[(i, i)] = ComplexScalar::new(rng.gen_range(-1.0..=1.0), 0.0);
        for j in (i + 1)..dim {
            let z = random_complex(rng);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn random_density(rng: &mut ChaCha8Rng) -> DensityMatrix {
    let g = random_square(rng, 4);
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / tr).hermitian_part()).unwrap()
}

/// Random unitary by Gram-Schmidt on the columns of a random matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let g = random_square(rng, dim);
    let mut cols: Vec<Vec<ComplexScalar>> = Vec::new();
    for k in 0..dim {
        let mut v: Vec<ComplexScalar> = (0..dim).map(|i| g[(i, k)]).collect();
        for u in &cols {
            let overlap: ComplexScalar = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= overlap * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    let mut u = ComplexMatrix::zeros(dim);
    for (k, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            u[(i, k)] = z;
        }
    }
    u
}

pub fn random_qubit(rng: &mut ChaCha8Rng) -> Vec<ComplexScalar> {
    let v = vec![random_complex(rng), random_complex(rng)];
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn kron_vec(a: &[ComplexScalar], b: &[ComplexScalar]) -> Vec<ComplexScalar> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

/// `n` evenly spaced points on `[lo, hi]`, endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}
