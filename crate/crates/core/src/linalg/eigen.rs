//! Two independent Hermitian eigensolvers.
//!
//! The trigonometric solver handles 3x3 matrices in closed form through the
//! depressed characteristic cubic. The Jacobi solver works for any size and
//! serves as the cross-check for the closed form.

use std::f64::consts::PI;

use num_complex::Complex64;
use twofloat::TwoFloat;

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Below this value of the cubic's `A` coefficient all roots coincide.
pub const DEGENERATE_A: f64 = 1e-15;

/// Roots of `x^3 - 3 A x + B = 0` in trigonometric form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigRoots {
    /// Principal angle `θ ∈ [0, π/3]` with `cos 3θ = -B / (2 A^{3/2})`.
    pub angle: f64,
    /// `2√A cos(2π/3 + θ)`, `2√A cos θ`, `2√A cos(2π/3 - θ)` in that order.
    pub roots: [f64; 3],
}

/// Solves `x^3 - 3 a x + b = 0` for its three real roots.
///
/// The discriminant `4a^3 - b^2` is formed in double-double arithmetic, so
/// inputs that sit exactly on the double-root boundary stay there. Inputs
/// slightly past it collapse onto the double-root case. Returns
/// [`Error::Degenerate`] with value 0 when `a < DEGENERATE_A`.
pub fn trig_cubic_roots(a: f64, b: f64) -> Result<TrigRoots> {
    let ta = TwoFloat::from(a);
    let tb = TwoFloat::from(b);
    let disc = ta * ta * ta * 4.0 - tb * tb;
    trig_cubic_roots_with_discriminant(a, b, f64::from(disc))
}

/// As [`trig_cubic_roots`], with the caller supplying `disc = 4a^3 - b^2`.
///
/// Near a double root the roots depend on `√disc`, so an absolute error `ε`
/// in `disc` moves them by roughly `√ε`. Callers that can form the
/// discriminant more accurately than from rounded `a` and `b` should use
/// this entry point. Negative `disc` is treated as zero.
pub fn trig_cubic_roots_with_discriminant(a: f64, b: f64, disc: f64) -> Result<TrigRoots> {
    if a.is_nan() || a < DEGENERATE_A {
        return Err(Error::Degenerate { value: 0.0 });
    }
    let s = a.sqrt();
    let angle = disc.max(0.0).sqrt().atan2(-b) / 3.0;
    let third = 2.0 * PI / 3.0;
    Ok(TrigRoots {
        angle,
        roots: [
            2.0 * s * (third + angle).cos(),
            2.0 * s * angle.cos(),
            2.0 * s * (third - angle).cos(),
        ],
    })
}

/// Sorts descending; equal values keep their original relative order.
pub fn sort_descending(values: &mut [f64]) {
    values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
}

/// Eigenvalues of a 3x3 Hermitian matrix by the trigonometric cubic formula,
/// in descending order.
///
/// The matrix is shifted by `c = tr/3`; the traceless remainder `N` has
/// characteristic polynomial `x^3 - 3Ax + B` in `x = c - λ` with
/// `3A = tr(N^2)/2` and `B = det N`. For unit trace this is the familiar
/// substitution `x = 1 - 3λ` up to an overall factor of three.
pub fn eigenvalues_hermitian_trig(m: &ComplexMatrix) -> Result<[f64; 3]> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(Error::Dimension(format!(
            "trigonometric solver needs 3x3, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }

    let shift = m.trace().re / 3.0;
    let mut n = m.clone();
    for i in 0..3 {
        n[(i, i)] = Complex64::new(n[(i, i)].re - shift, 0.0);
    }
    let half_tr_sq = 0.5 * n.entries().iter().map(|z| z.norm_sqr()).sum::<f64>();
    let a = half_tr_sq / 3.0;
    let b = det3(&n).re;

    let roots = match trig_cubic_roots(a, b) {
        Ok(r) => r,
        Err(Error::Degenerate { .. }) => return Err(Error::Degenerate { value: shift }),
        Err(e) => return Err(e),
    };
    let mut eig = roots.roots.map(|x| shift - x);
    sort_descending(&mut eig);
    Ok(eig)
}

fn det3(m: &ComplexMatrix) -> Complex64 {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
#[derive(Debug, Clone, Copy)]
pub struct JacobiSolver {
    /// Stop once the off-diagonal Frobenius mass falls below
    /// `tol * max(1, ||M||_F)`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiSolver {
    fn default() -> Self {
        Self {
            tol: 1e-14,
            max_sweeps: 100,
        }
    }
}

impl JacobiSolver {
    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self, m: &ComplexMatrix) -> Result<Vec<f64>> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "Jacobi solver needs a square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let deviation = m.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }

        let n = m.rows();
        let mut a = m.clone();
        // symmetrize so round-off in the input cannot seed drift
        for i in 0..n {
            a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
            for j in i + 1..n {
                let avg = 0.5 * (a[(i, j)] + a[(j, i)].conj());
                a[(i, j)] = avg;
                a[(j, i)] = avg.conj();
            }
        }
        let threshold = self.tol * a.frobenius_norm().max(1.0);

        let mut converged = off_diagonal_mass(&a) < threshold;
        let mut sweeps = 0;
        while !converged {
            if sweeps == self.max_sweeps {
                return Err(Error::NoConvergence { sweeps });
            }
            for p in 0..n {
                for q in p + 1..n {
                    rotate(&mut a, p, q);
                }
            }
            sweeps += 1;
            converged = off_diagonal_mass(&a) < threshold;
        }

        let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
        sort_descending(&mut eig);
        Ok(eig)
    }
}

/// Eigenvalues of a Hermitian matrix of any size with the default
/// [`JacobiSolver`], descending.
pub fn eigenvalues_hermitian_jacobi(m: &ComplexMatrix) -> Result<Vec<f64>> {
    JacobiSolver::default().eigenvalues(m)
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with `A <- G† A G`, where `G = D R`: `D` removes the
/// phase of `a[p][q]` and `R` is the real Jacobi rotation of the resulting
/// symmetric 2x2 block.
fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g; // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let tau = (aqq - app) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // G columns: p -> (c at p, -s e^{-iφ} at q), q -> (s at p, c e^{-iφ} at q)
    let e_minus = phase.conj();
    let gpp = Complex64::new(c, 0.0);
    let gqp = -s * e_minus;
    let gpq = Complex64::new(s, 0.0);
    let gqq = c * e_minus;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * gpp + akq * gqp;
        a[(k, q)] = akp * gpq + akq * gqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = gpp.conj() * apk + gqp.conj() * aqk;
        a[(q, k)] = gpq.conj() * apk + gqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}
