//! Single-qubit operations: the general SU(2)-type unitary, the
//! anti-unitary `Γ = C U`, the six spin kets along x, y, z, and the
//! inner-product-preserving map that is only defined on `|0_x⟩, |0_y⟩, |0_z⟩`.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Ket, NORM_TOL};

/// Angles `(θ, φ_a, φ_b)` of
/// `U = [[cos θ, e^{iφ_a} sin θ], [-e^{iφ_b} sin θ, e^{i(φ_a+φ_b)} cos θ]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitaryParams {
    pub theta: f64,
    pub phi_a: f64,
    pub phi_b: f64,
}

impl UnitaryParams {
    pub fn new(theta: f64, phi_a: f64, phi_b: f64) -> Result<Self> {
        if !(theta.is_finite() && phi_a.is_finite() && phi_b.is_finite()) {
            return Err(Error::Precondition("unitary angles must be finite".into()));
        }
        Ok(Self {
            theta,
            phi_a,
            phi_b,
        })
    }

    pub const fn identity() -> Self {
        Self {
            theta: 0.0,
            phi_a: 0.0,
            phi_b: 0.0,
        }
    }

    /// The universal flipper's unitary part, `θ = π/2` with zero phases.
    pub const fn flipper() -> Self {
        Self {
            theta: std::f64::consts::FRAC_PI_2,
            phi_a: 0.0,
            phi_b: 0.0,
        }
    }

    /// Same operator with every angle reduced into `[0, 2π)`.
    pub fn reduced(&self) -> Self {
        let r = |x: f64| {
            let y = x.rem_euclid(TAU);
            if y >= TAU {
                0.0
            } else {
                y
            }
        };
        Self {
            theta: r(self.theta),
            phi_a: r(self.phi_a),
            phi_b: r(self.phi_b),
        }
    }
}

pub fn general_unitary(p: &UnitaryParams) -> ComplexMatrix {
    let (s, c) = p.theta.sin_cos();
    let ea = Complex64::from_polar(1.0, p.phi_a);
    let eb = Complex64::from_polar(1.0, p.phi_b);
    ComplexMatrix::from_rows(&[[Complex64::new(c, 0.0), ea * s], [-eb * s, ea * eb * c]])
}

/// `Γ k = conj(U k)`: the unitary first, then complex conjugation in the
/// computational basis. Anti-linear: `Γ(c k) = conj(c) Γ(k)`.
pub fn apply_antiunitary(p: &UnitaryParams, k: &Ket) -> Result<Ket> {
    if k.dim() != 2 {
        return Err(Error::Dimension(format!(
            "Γ acts on a qubit, got dim {}",
            k.dim()
        )));
    }
    Ok(k.transformed(&general_unitary(p))?.conj())
}

/// Applies `U` alone, for the no-signalling comparison.
pub fn apply_unitary(p: &UnitaryParams, k: &Ket) -> Result<Ket> {
    if k.dim() != 2 {
        return Err(Error::Dimension(format!(
            "U acts on a qubit, got dim {}",
            k.dim()
        )));
    }
    k.transformed(&general_unitary(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinAxis {
    X,
    Y,
    Z,
}

impl SpinAxis {
    pub const ALL: [SpinAxis; 3] = [SpinAxis::X, SpinAxis::Y, SpinAxis::Z];

    /// `|0_n⟩`, the +1 eigenvector of the Pauli operator along this axis.
    pub fn zero_ket(self) -> Ket {
        named_ket(self, false)
    }

    /// `|1_n⟩`, the -1 eigenvector, with the phase convention
    /// `(|0⟩ - |1⟩)/√2`, `(|0⟩ - i|1⟩)/√2`, `|1⟩`.
    pub fn one_ket(self) -> Ket {
        named_ket(self, true)
    }
}

impl fmt::Display for SpinAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinAxis::X => "x",
            SpinAxis::Y => "y",
            SpinAxis::Z => "z",
        })
    }
}

/// `|0_n⟩` when `one` is false, `|1_n⟩` otherwise.
pub fn named_ket(axis: SpinAxis, one: bool) -> Ket {
    let h = FRAC_1_SQRT_2;
    let sign = if one { -1.0 } else { 1.0 };
    let amps = match axis {
        SpinAxis::Z if one => vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        SpinAxis::Z => vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        SpinAxis::X => vec![Complex64::new(h, 0.0), Complex64::new(sign * h, 0.0)],
        SpinAxis::Y => vec![Complex64::new(h, 0.0), Complex64::new(0.0, sign * h)],
    };
    Ket::from_raw(amps)
}

/// Amplitudes `(α, β)` of the restricted map `|0_n⟩ -> α|0_n⟩ + β|1_n⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IppParams {
    alpha: Complex64,
    beta: Complex64,
}

impl IppParams {
    /// Fails unless `|α|² + |β|² = 1` within 1e-12.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { alpha, beta })
    }

    /// `α = cos φ`, `β = e^{iδ} sin φ`.
    pub fn from_angles(phi: f64, delta: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self {
            alpha: Complex64::new(c, 0.0),
            beta: Complex64::from_polar(s, delta),
        }
    }

    pub fn real(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))
    }

    pub fn identity() -> Self {
        Self::from_angles(0.0, 0.0)
    }

    /// `α = 0, β = 1`.
    pub fn flipping() -> Self {
        Self {
            alpha: Complex64::new(0.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        }
    }

    /// `α = β = 1/√2`.
    pub fn hadamard() -> Self {
        Self {
            alpha: Complex64::new(FRAC_1_SQRT_2, 0.0),
            beta: Complex64::new(FRAC_1_SQRT_2, 0.0),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }
}

/// Image of `|0_axis⟩` under the restricted map. The map is a labeled
/// partial function on the three axes; it has no matrix form.
pub fn ipp_image(axis: SpinAxis, p: &IppParams) -> Ket {
    let z = axis.zero_ket();
    let o = axis.one_ket();
    let amps = z
        .amplitudes()
        .iter()
        .zip(o.amplitudes())
        .map(|(a, b)| p.alpha * a + p.beta * b)
        .collect();
    Ket::from_raw(amps)
}
