//! The two joint states, the action of the candidate operations on Bob's
//! last qubit, and the cubic that governs the final Schmidt spectrum.
//!
//! Subsystem order is Alice's qutrit, then Bob's first qubit, then Bob's
//! second qubit. Candidate operations always act on Bob's second qubit.

use num_complex::Complex64;
use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::linalg::{
    sort_descending, tensor_product, trig_cubic_roots_with_discriminant, Ket, NORM_TOL,
};
use crate::qubit::{
    apply_antiunitary, apply_unitary, ipp_image, IppParams, SpinAxis, UnitaryParams,
};
use crate::state::BipartiteState;

/// Allowed excess of `B² - 4A³` before the cubic is declared to have
/// complex roots.
pub const REAL_ROOT_TOL: f64 = 1e-12;

/// Bob's `(first, second)` qubit axes per Alice branch in the anti-unitary
/// scenario.
const CHI_AXES: [(SpinAxis, SpinAxis); 3] = [
    (SpinAxis::Z, SpinAxis::Z),
    (SpinAxis::X, SpinAxis::Y),
    (SpinAxis::Y, SpinAxis::X),
];

/// Same for the inner-product-preserving scenario.
const PI_AXES: [(SpinAxis, SpinAxis); 3] = [
    (SpinAxis::Z, SpinAxis::Z),
    (SpinAxis::X, SpinAxis::X),
    (SpinAxis::Y, SpinAxis::Y),
];

fn joint<F>(axes: &[(SpinAxis, SpinAxis); 3], mut last: F) -> Result<BipartiteState>
where
    F: FnMut(SpinAxis) -> Result<Ket>,
{
    let branches = axes
        .iter()
        .map(|&(first, second)| Ok(tensor_product(&first.zero_ket(), &last(second)?)))
        .collect::<Result<Vec<_>>>()?;
    BipartiteState::uniform_branches(&branches)
}

/// `(1/√3)(|0⟩|0_z 0_z⟩ + |1⟩|0_x 0_y⟩ + |2⟩|0_y 0_x⟩)`.
pub fn build_chi_initial() -> BipartiteState {
    joint(&CHI_AXES, |axis| Ok(axis.zero_ket())).expect("fixed construction")
}

/// `Γ = C U` applied to Bob's last qubit in every branch.
pub fn chi_final(p: &UnitaryParams) -> Result<BipartiteState> {
    joint(&CHI_AXES, |axis| apply_antiunitary(p, &axis.zero_ket()))
}

/// `U` alone on Bob's last qubit.
pub fn chi_final_unitary_only(p: &UnitaryParams) -> Result<BipartiteState> {
    joint(&CHI_AXES, |axis| apply_unitary(p, &axis.zero_ket()))
}

/// `(1/√3)(|0⟩|0_z 0_z⟩ + |1⟩|0_x 0_x⟩ + |2⟩|0_y 0_y⟩)`.
pub fn build_pi_initial() -> BipartiteState {
    joint(&PI_AXES, |axis| Ok(axis.zero_ket())).expect("fixed construction")
}

/// The restricted inner-product-preserving map on Bob's last qubit.
pub fn pi_final(p: &IppParams) -> Result<BipartiteState> {
    joint(&PI_AXES, |axis| Ok(ipp_image(axis, p)))
}

/// Spectrum shared by every `Γ`-transformed state and by the initial
/// state of the inner-product-preserving scenario:
/// `(1/3 + 1/(2√3), 1/3, 1/3 - 1/(2√3))`.
pub fn antiunitary_final_spectrum() -> [f64; 3] {
    let h = 1.0 / (2.0 * 3f64.sqrt());
    [1.0 / 3.0 + h, 1.0 / 3.0, 1.0 / 3.0 - h]
}

/// Off-diagonal coefficients of `3ρ_A - I` for the final IPP state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PqrCoefficients {
    pub p: Complex64,
    pub q: Complex64,
    pub r: Complex64,
}

/// `p = ½(|α|² - |β|² + αβ̄ + βᾱ)`, `q = ½(|α|² + i|β|² + αβ̄ - iβᾱ)`,
/// `r = ½(αβ̄ + βᾱ - i)`.
pub fn pqr(params: &IppParams) -> PqrCoefficients {
    let a = params.alpha();
    let b = params.beta();
    let i = Complex64::i();
    let aa = a.norm_sqr();
    let bb = b.norm_sqr();
    let ab = a * b.conj();
    let ba = b * a.conj();
    PqrCoefficients {
        p: 0.5 * (Complex64::from(aa - bb) + ab + ba),
        q: 0.5 * (Complex64::from(aa) + i * bb + ab - i * ba),
        r: 0.5 * (ab + ba - i),
    }
}

/// `(A, B)` of `x³ - 3Ax + B = 0` with `x = 1 - 3λ`:
/// `A = (|p|² + |q|² + |r|²)/3`, `B = p r q̄ + conj(p r) q`.
pub fn cubic_coefficients(c: &PqrCoefficients) -> (f64, f64) {
    let a = (c.p.norm_sqr() + c.q.norm_sqr() + c.r.norm_sqr()) / 3.0;
    let b = c.p * c.r * c.q.conj() + (c.p * c.r).conj() * c.q;
    (a, b.re)
}

/// Closed-form `(A, B)` for real amplitudes.
pub fn real_ab(alpha: f64, beta: f64) -> Result<(f64, f64)> {
    let norm_sqr = alpha * alpha + beta * beta;
    if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > NORM_TOL {
        return Err(Error::Precondition(format!(
            "real amplitudes must satisfy alpha^2 + beta^2 = 1, got {norm_sqr}"
        )));
    }
    let (a2, b2, ab) = (alpha * alpha, beta * beta, alpha * beta);
    let big_a = 0.25 + (2.0 * a2 * b2 + 3.0 * ab * (a2 - b2)) / 6.0;
    let big_b = beta / 4.0 * (a2 - b2 + 2.0 * ab) * (alpha * (2.0 * a2 + 1.0) + beta * (a2 - b2));
    Ok((big_a, big_b))
}

/// The cubic's coefficients together with its eigen-angle and spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicSpectrum {
    pub big_a: f64,
    pub big_b: f64,
    /// `θ ∈ [0, π/3]`, `cos 3θ = -B / (2√(A³))`.
    pub eigen_angle: f64,
    /// Descending.
    pub eigenvalues: [f64; 3],
}

/// Eigenvalues `(1/3)[1 - 2√A cos(2π/3 ± θ)]` and `(1/3)[1 - 2√A cos θ]`.
pub fn spectrum_from_ab(big_a: f64, big_b: f64) -> Result<CubicSpectrum> {
    if !(big_a.is_finite() && big_b.is_finite()) || big_a < 0.0 {
        return Err(Error::Precondition(format!(
            "need finite A >= 0 and finite B, got ({big_a}, {big_b})"
        )));
    }
    let (a, b) = (TwoFloat::from(big_a), TwoFloat::from(big_b));
    spectrum_with_discriminant(big_a, big_b, f64::from(a * a * a * 4.0 - b * b))
}

fn spectrum_with_discriminant(big_a: f64, big_b: f64, disc: f64) -> Result<CubicSpectrum> {
    if big_a < crate::linalg::DEGENERATE_A {
        return Err(Error::Degenerate { value: 1.0 / 3.0 });
    }
    if -disc > REAL_ROOT_TOL {
        return Err(Error::Domain { excess: -disc });
    }
    let roots = trig_cubic_roots_with_discriminant(big_a, big_b, disc)?;
    let mut eigenvalues = roots.roots.map(|x| (1.0 - x) / 3.0);
    sort_descending(&mut eigenvalues);
    Ok(CubicSpectrum {
        big_a,
        big_b,
        eigen_angle: roots.angle,
        eigenvalues,
    })
}

/// `(A, B, 4A³ - B²)` straight from the amplitudes in double-double
/// arithmetic. With `g + ih = αβ̄`, `p` is real, `r = g - i/2` and
/// `B = p (2g Re q - Im q)`.
fn precise_cubic(params: &IppParams) -> (TwoFloat, TwoFloat, TwoFloat) {
    let a = params.alpha();
    let b = params.beta();
    let t = TwoFloat::from;
    let (ar, ai, br, bi) = (t(a.re), t(a.im), t(b.re), t(b.im));
    let aa = ar * ar + ai * ai;
    let bb = br * br + bi * bi;
    let g = ar * br + ai * bi;
    let h = ai * br - ar * bi;
    let p = (aa - bb) / 2.0 + g;
    let q_re = (aa + g - h) / 2.0;
    let q_im = (bb + h - g) / 2.0;
    let big_a = (p * p + q_re * q_re + q_im * q_im + g * g + 0.25) / 3.0;
    let big_b = p * (g * q_re * 2.0 - q_im);
    let disc = big_a * big_a * big_a * 4.0 - big_b * big_b;
    (big_a, big_b, disc)
}

/// Shortcut from IPP amplitudes to the closed-form final spectrum.
///
/// Agrees with [`spectrum_from_ab`] applied to
/// [`cubic_coefficients`]`(`[`pqr`]`(params))`, but keeps full accuracy at
/// the double roots reached by the flipping-type maps.
pub fn ipp_spectrum(params: &IppParams) -> Result<CubicSpectrum> {
    let (a, b, disc) = precise_cubic(params);
    spectrum_with_discriminant(f64::from(a), f64::from(b), f64::from(disc))
}

/// Alice's reduced density matrices written out by hand. Nothing in the
/// crate computes with these; they exist so tests can compare them against
/// partial traces of the constructed states.
pub mod closed_form {
    use num_complex::Complex64;

    use super::PqrCoefficients;
    use crate::linalg::ComplexMatrix;

    /// `(1/3)[I + p(|0⟩⟨1| + h.c.) + q|0⟩⟨2| + q̄|2⟩⟨0| + r|1⟩⟨2| + r̄|2⟩⟨1|]`.
    fn third_of(p: Complex64, q: Complex64, r: Complex64) -> ComplexMatrix {
        let one = Complex64::new(1.0, 0.0);
        ComplexMatrix::from_rows(&[[one, p, q], [p.conj(), one, r], [q.conj(), r.conj(), one]])
            .scale(Complex64::new(1.0 / 3.0, 0.0))
    }

    /// Initial anti-unitary scenario: every off-diagonal equals 1/2.
    pub fn rho_chi_initial() -> ComplexMatrix {
        let h = Complex64::new(0.5, 0.0);
        third_of(h, h, h)
    }

    /// After `Γ`: the (1,2) entry becomes `-i/2`.
    pub fn rho_chi_final() -> ComplexMatrix {
        let h = Complex64::new(0.5, 0.0);
        third_of(h, h, Complex64::new(0.0, -0.5))
    }

    /// Initial IPP scenario; identical to [`rho_chi_final`].
    pub fn rho_pi_initial() -> ComplexMatrix {
        let h = Complex64::new(0.5, 0.0);
        third_of(h, h, Complex64::new(0.0, -0.5))
    }

    pub fn rho_pi_final(c: &PqrCoefficients) -> ComplexMatrix {
        third_of(c.p, c.q, c.r)
    }
}
