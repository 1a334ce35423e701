#![allow(dead_code)]

use incomparable::{Complex64, ComplexMatrix, IppParams, Ket, SchmidtVector, UnitaryParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pi_initial_spectrum() -> [f64; 3] {
    let h = 1.0 / (2.0 * 3f64.sqrt());
    [1.0 / 3.0 + h, 1.0 / 3.0, 1.0 / 3.0 - h]
}

pub const CHI_INITIAL_SPECTRUM: [f64; 3] = [2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0];

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn random_unitary_params(r: &mut impl Rng) -> UnitaryParams {
    UnitaryParams::new(
        r.random_range(0.0..TAU),
        r.random_range(0.0..TAU),
        r.random_range(0.0..TAU),
    )
    .unwrap()
}

pub fn random_complex(r: &mut impl Rng) -> Complex64 {
    c(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))
}

pub fn random_ket(r: &mut impl Rng, dim: usize) -> Ket {
    Ket::normalized((0..dim).map(|_| random_complex(r)).collect()).unwrap()
}

pub fn random_ipp(r: &mut impl Rng) -> IppParams {
    loop {
        let (a, b) = (random_complex(r), random_complex(r));
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if n > 1e-3 {
            return IppParams::new(a / n, b / n).unwrap();
        }
    }
}

pub fn random_hermitian(r: &mut impl Rng, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = c(r.random_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let z = random_complex(r);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// Haar-ish unitary by Gram-Schmidt on random columns.
pub fn random_unitary(r: &mut impl Rng, n: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n).map(|_| random_complex(r)).collect();
        for u in &cols {
            let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= proj * y;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let mut m = ComplexMatrix::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            m[(i, j)] = *z;
        }
    }
    m
}

/// Uniform point on the probability simplex, sorted descending.
pub fn random_schmidt(r: &mut impl Rng, d: usize) -> SchmidtVector {
    let mut cuts: Vec<f64> = (0..d - 1).map(|_| r.random::<f64>()).collect();
    cuts.push(0.0);
    cuts.push(1.0);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let parts: Vec<f64> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    SchmidtVector::new(parts).unwrap()
}

/// Eigenvalues of a Hermitian 3x3 matrix by bisection on its characteristic
/// polynomial, evaluated as a determinant. Independent of both solvers.
pub fn eig3_by_bisection(m: &ComplexMatrix) -> [f64; 3] {
    let det = |lam: f64| -> f64 {
        let a = |i: usize, j: usize| {
            if i == j {
                m[(i, j)] - lam
            } else {
                m[(i, j)]
            }
        };
        (a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
            - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
            + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)))
        .re
    };
    // Gershgorin bound
    let bound = (0..3)
        .map(|i| (0..3).map(|j| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    let steps = 200_000;
    let mut roots = Vec::new();
    let mut prev_x = -bound;
    let mut prev = det(prev_x);
    for k in 1..=steps {
        let x = -bound + 2.0 * bound * k as f64 / steps as f64;
        let v = det(x);
        if v == 0.0 {
            roots.push(x);
        } else if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
            let (mut lo, mut hi) = (prev_x, x);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if (det(mid) > 0.0) == (det(lo) > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev = v;
    }
    assert_eq!(roots.len(), 3, "bisection found {roots:?}");
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    [roots[0], roots[1], roots[2]]
}
