//! Bipartite pure states, Alice's reduced density matrix, Schmidt vectors
//! and the entropy of entanglement.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_hermitian_jacobi, sort_descending, ComplexMatrix, Ket, NORM_TOL};

/// Allowed deviation of a Schmidt vector's sum from 1.
pub const SCHMIDT_SUM_TOL: f64 = 1e-10;

/// Coefficients below this are treated as exactly zero.
pub const SCHMIDT_ZERO_CLAMP: f64 = 1e-13;

/// Pure state of a `dim_a x dim_b` system; amplitude `(i, j)` is stored at
/// `i * dim_b + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    dim_a: usize,
    dim_b: usize,
    amps: Vec<Complex64>,
}

impl BipartiteState {
    pub fn new(dim_a: usize, dim_b: usize, amps: Vec<Complex64>) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::Dimension(
                "subsystem dimensions must be positive".into(),
            ));
        }
        if amps.len() != dim_a * dim_b {
            return Err(Error::Dimension(format!(
                "{} amplitudes for a {dim_a}x{dim_b} system",
                amps.len()
            )));
        }
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { dim_a, dim_b, amps })
    }

    pub fn from_ket(dim_a: usize, dim_b: usize, ket: Ket) -> Result<Self> {
        Self::new(dim_a, dim_b, ket.into_amplitudes())
    }

    /// `(1/√n) Σ_i |i⟩_A ⊗ |b_i⟩_B` for `n` branches of equal dimension.
    pub fn uniform_branches(branches: &[Ket]) -> Result<Self> {
        let first = branches
            .first()
            .ok_or_else(|| Error::Dimension("at least one branch is required".into()))?;
        let dim_b = first.dim();
        if branches.iter().any(|b| b.dim() != dim_b) {
            return Err(Error::Dimension(
                "branches have different dimensions".into(),
            ));
        }
        let w = 1.0 / (branches.len() as f64).sqrt();
        let amps = branches
            .iter()
            .flat_map(|b| b.amplitudes().iter().map(move |&z| z * w))
            .collect();
        Self::new(branches.len(), dim_b, amps)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amps[i * self.dim_b + j]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Multiplies every amplitude by `c`; `|c|` must be 1.
    pub fn phased(&self, c: Complex64) -> Result<Self> {
        Self::new(
            self.dim_a,
            self.dim_b,
            self.amps.iter().map(|&z| z * c).collect(),
        )
    }

    /// Applies `I_A ⊗ op` where `op` acts on Bob's whole space.
    pub fn apply_local_b(&self, op: &ComplexMatrix) -> Result<Self> {
        if op.rows() != self.dim_b || op.cols() != self.dim_b {
            return Err(Error::Dimension(format!(
                "{}x{} operator on a dim-{} subsystem",
                op.rows(),
                op.cols(),
                self.dim_b
            )));
        }
        let mut amps = Vec::with_capacity(self.amps.len());
        for row in self.amps.chunks(self.dim_b) {
            amps.extend(op.apply(row)?);
        }
        Self::new(self.dim_a, self.dim_b, amps)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim_a != other.dim_a || self.dim_b != other.dim_b {
            return f64::INFINITY;
        }
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `ρ_A = Tr_B |ψ⟩⟨ψ|`, entry `(i, k) = Σ_j ψ(i, j) conj(ψ(k, j))`.
pub fn reduced_density_a(s: &BipartiteState) -> ComplexMatrix {
    let n = s.dim_a;
    let mut rho = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for k in i..n {
            let v: Complex64 = (0..s.dim_b)
                .map(|j| s.amplitude(i, j) * s.amplitude(k, j).conj())
                .sum();
            rho[(i, k)] = v;
            rho[(k, i)] = v.conj();
        }
        rho[(i, i)] = Complex64::new(rho[(i, i)].re, 0.0);
    }
    rho
}

/// Schmidt coefficients (squared), nonincreasing, summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SchmidtVector(Vec<f64>);

impl SchmidtVector {
    /// Validates and canonicalizes: entries must be finite, at least
    /// `-SCHMIDT_SUM_TOL`, and sum to 1 within `SCHMIDT_SUM_TOL`. Negative
    /// round-off is clamped to 0 and the result sorted descending.
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Dimension("Schmidt vector must be non-empty".into()));
        }
        if let Some(bad) = coefficients
            .iter()
            .find(|x| !x.is_finite() || **x < -SCHMIDT_SUM_TOL)
        {
            return Err(Error::Precondition(format!(
                "Schmidt coefficient {bad} is not a nonnegative real"
            )));
        }
        let sum: f64 = coefficients.iter().sum();
        if (sum - 1.0).abs() > SCHMIDT_SUM_TOL {
            return Err(Error::NotNormalized { norm_sqr: sum });
        }
        let mut v: Vec<f64> = coefficients.into_iter().map(|x| x.max(0.0)).collect();
        sort_descending(&mut v);
        Ok(Self(v))
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Copy extended with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<f64> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0.0);
        }
        v
    }

    /// Largest componentwise difference after zero-padding both.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.len().max(other.len());
        self.padded(n)
            .iter()
            .zip(other.padded(n))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn entropy(&self) -> f64 {
        entropy_of_entanglement(self)
    }
}

impl AsRef<[f64]> for SchmidtVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Descending eigenvalues of `ρ_A`, truncated to `min(dim_a, dim_b)`.
pub fn schmidt_vector(s: &BipartiteState) -> Result<SchmidtVector> {
    let rho = reduced_density_a(s);
    let mut eig = eigenvalues_hermitian_jacobi(&rho)?;
    eig.truncate(s.dim_a.min(s.dim_b));
    SchmidtVector::new(eig)
}

/// `-Σ λ log2 λ` in bits, with coefficients below [`SCHMIDT_ZERO_CLAMP`]
/// contributing nothing.
pub fn entropy_of_entanglement(v: &SchmidtVector) -> f64 {
    -v.0.iter()
        .filter(|&&x| x >= SCHMIDT_ZERO_CLAMP)
        .map(|&x| x * x.log2())
        .sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> BipartiteState {
        BipartiteState::new(
            2,
            2,
            vec![c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)],
        )
        .unwrap()
    }

    #[test]
    fn product_state_reduces_to_projector() {
        let s = BipartiteState::new(2, 2, vec![c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        let rho = reduced_density_a(&s);
        let want = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(rho.max_abs_diff(&want) < 1e-15);
        assert_eq!(schmidt_vector(&s).unwrap().coefficients(), &[1.0, 0.0]);
    }

    #[test]
    fn bell_state_is_maximally_mixed() {
        let rho = reduced_density_a(&bell());
        let want = ComplexMatrix::from_real_diagonal(&[0.5, 0.5]);
        assert!(rho.max_abs_diff(&want) < 1e-15);
        let v = schmidt_vector(&bell()).unwrap();
        assert!((entropy_of_entanglement(&v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn schmidt_truncates_to_smaller_side() {
        // 3x2 state with rank 2
        let s = BipartiteState::new(3, 2, vec![c(0.6), c(0.0), c(0.0), c(0.8), c(0.0), c(0.0)])
            .unwrap();
        let v = schmidt_vector(&s).unwrap();
        assert_eq!(v.len(), 2);
        assert!((v.coefficients()[0] - 0.64).abs() < 1e-14);
        assert!((v.coefficients()[1] - 0.36).abs() < 1e-14);
    }

    #[test]
    fn entropy_examples() {
        let half = SchmidtVector::new(vec![0.5, 0.5]).unwrap();
        assert!((entropy_of_entanglement(&half) - 1.0).abs() < 1e-15);
        let pure = SchmidtVector::new(vec![1.0, 0.0, 0.0]).unwrap();
        assert_eq!(entropy_of_entanglement(&pure), 0.0);

        let v = SchmidtVector::new(vec![2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0]).unwrap();
        let direct =
            -(2.0 / 3.0) * (2.0f64 / 3.0).log2() - 2.0 * (1.0 / 6.0) * (1.0f64 / 6.0).log2();
        assert!((entropy_of_entanglement(&v) - direct).abs() < 1e-15);
        // log2(3) - 1/3 + ... = 1.2516291673878228
        assert!((direct - 1.251_629_167_387_822_8).abs() < 1e-14);
    }

    #[test]
    fn schmidt_vector_validation() {
        assert!(SchmidtVector::new(vec![]).is_err());
        assert!(SchmidtVector::new(vec![0.7, 0.7]).is_err());
        assert!(SchmidtVector::new(vec![1.2, -0.2]).is_err());
        assert!(SchmidtVector::new(vec![f64::NAN, 1.0]).is_err());
        let v = SchmidtVector::new(vec![0.2, 0.5, 0.3]).unwrap();
        assert_eq!(v.coefficients(), &[0.5, 0.3, 0.2]);
        let noisy = SchmidtVector::new(vec![1.0, -1e-17]).unwrap();
        assert_eq!(noisy.coefficients(), &[1.0, 0.0]);
    }

    #[test]
    fn global_phase_does_not_change_schmidt() {
        let s = bell();
        let p = s.phased(Complex64::from_polar(1.0, 0.7)).unwrap();
        let a = schmidt_vector(&s).unwrap();
        let b = schmidt_vector(&p).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-14);
    }

    #[test]
    fn state_construction_errors() {
        assert!(matches!(
            BipartiteState::new(2, 2, vec![c(1.0); 3]),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            BipartiteState::new(1, 2, vec![c(1.0), c(1.0)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(BipartiteState::uniform_branches(&[]).is_err());
        assert!(bell().apply_local_b(&ComplexMatrix::identity(3)).is_err());
    }
}
