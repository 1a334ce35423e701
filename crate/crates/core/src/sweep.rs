//! Parameter sweeps over the inner-product-preserving family and over the
//! anti-unitary parameters.
//!
//! Grid points are evaluated in parallel; results always come back in grid
//! order.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::cases::{verify_prediction, Prediction};
use crate::error::{Error, Result};
use crate::majorization::PairLabel;
use crate::qubit::{IppParams, UnitaryParams};
use crate::scenarios::{antiunitary_final_spectrum, chi_final, ipp_spectrum, pi_final};
use crate::state::schmidt_vector;

/// Closed-form and traced spectra must agree this closely.
pub const SOLVER_AGREEMENT_TOL: f64 = 1e-10;

/// One classified grid point, `α = cos φ`, `β = e^{iδ} sin φ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub phi: f64,
    /// Absent in the real sweep.
    pub delta: Option<f64>,
    #[serde(rename = "A")]
    pub big_a: f64,
    #[serde(rename = "B")]
    pub big_b: f64,
    pub lam1: f64,
    pub lam2: f64,
    pub lam3: f64,
    #[serde(rename = "entropy_i")]
    pub entropy_initial: f64,
    #[serde(rename = "entropy_f")]
    pub entropy_final: f64,
    pub observed: PairLabel,
    pub predicted: Prediction,
    pub agree: bool,
}

/// Classifies a single `(φ, δ)` point. The reported eigenvalues come from
/// the trigonometric closed form and are checked against the Jacobi
/// spectrum of the traced state.
pub fn evaluate_point(phi: f64, delta: Option<f64>) -> Result<SweepRecord> {
    let params = IppParams::from_angles(phi, delta.unwrap_or(0.0));
    let check = verify_prediction(&params)?;
    let spectrum = ipp_spectrum(&params)?;
    let traced = schmidt_vector(&pi_final(&params)?)?;
    let gap = spectrum
        .eigenvalues
        .iter()
        .zip(traced.coefficients())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if gap > SOLVER_AGREEMENT_TOL {
        return Err(Error::Contract(format!(
            "closed-form and Jacobi spectra differ by {gap:e} at phi={phi}, delta={delta:?}"
        )));
    }
    let [lam1, lam2, lam3] = spectrum.eigenvalues;
    Ok(SweepRecord {
        phi,
        delta,
        big_a: check.big_a,
        big_b: check.big_b,
        lam1,
        lam2,
        lam3,
        entropy_initial: check.entropy_initial,
        entropy_final: check.entropy_final,
        observed: check.observed.label,
        predicted: check.predicted.predicted,
        agree: check.agree,
    })
}

fn grid(n: usize) -> impl IndexedParallelIterator<Item = f64> {
    (0..n)
        .into_par_iter()
        .map(move |k| TAU * k as f64 / n as f64)
}

/// `n` equally spaced `φ ∈ [0, 2π)` with real amplitudes.
pub fn sweep_real(n: usize) -> Result<Vec<SweepRecord>> {
    if n < 2 {
        return Err(Error::Precondition(format!("sweep needs n >= 2, got {n}")));
    }
    grid(n).map(|phi| evaluate_point(phi, None)).collect()
}

/// Full `φ x δ` grid, `φ` outer. `n_delta = 1` is the `δ = 0` row alone.
pub fn sweep_complex(n_phi: usize, n_delta: usize) -> Result<Vec<SweepRecord>> {
    if n_phi < 2 || n_delta < 1 {
        return Err(Error::Precondition(format!(
            "sweep needs n_phi >= 2 and n_delta >= 1, got ({n_phi}, {n_delta})"
        )));
    }
    (0..n_phi * n_delta)
        .into_par_iter()
        .map(|idx| {
            let phi = TAU * (idx / n_delta) as f64 / n_phi as f64;
            let delta = TAU * (idx % n_delta) as f64 / n_delta as f64;
            evaluate_point(phi, Some(delta))
        })
        .collect()
}

/// Record counts by observed label.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub incomparable: usize,
    /// Final strictly more entangled (`CONVERTIBLE_BACKWARD`).
    pub increase: usize,
    pub equal: usize,
    /// Initial converts to final (`CONVERTIBLE_FORWARD`).
    pub convertible: usize,
    pub disagreements: usize,
}

impl SweepSummary {
    pub fn from_records(records: &[SweepRecord]) -> Self {
        let mut s = Self {
            total: records.len(),
            ..Self::default()
        };
        for r in records {
            match r.observed {
                PairLabel::Incomparable => s.incomparable += 1,
                PairLabel::ConvertibleBackward => s.increase += 1,
                PairLabel::Equal => s.equal += 1,
                PairLabel::ConvertibleForward => s.convertible += 1,
            }
            if !r.agree {
                s.disagreements += 1;
            }
        }
        s
    }

    fn frac(&self, count: usize) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            count as f64 / self.total as f64
        }
    }

    pub fn incomparable_fraction(&self) -> f64 {
        self.frac(self.incomparable)
    }

    pub fn increase_fraction(&self) -> f64 {
        self.frac(self.increase)
    }

    pub fn equal_fraction(&self) -> f64 {
        self.frac(self.equal)
    }

    pub fn convertible_fraction(&self) -> f64 {
        self.frac(self.convertible)
    }
}

/// Result of a `Γ` parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaSummary {
    pub points: usize,
    /// Largest componentwise distance of any final Schmidt vector from
    /// [`antiunitary_final_spectrum`].
    pub max_deviation: f64,
    /// The grid point where that distance occurs.
    pub worst: UnitaryParams,
}

/// Sweeps `(θ, φ_a, φ_b)` over `2πk/n` grids starting at the origin.
pub fn sweep_gamma(n_theta: usize, n_a: usize, n_b: usize) -> Result<GammaSummary> {
    sweep_gamma_from(UnitaryParams::identity(), n_theta, n_a, n_b)
}

/// As [`sweep_gamma`], with every grid offset by `origin`.
pub fn sweep_gamma_from(
    origin: UnitaryParams,
    n_theta: usize,
    n_a: usize,
    n_b: usize,
) -> Result<GammaSummary> {
    if n_theta == 0 || n_a == 0 || n_b == 0 {
        return Err(Error::Precondition(
            "gamma sweep counts must be >= 1".into(),
        ));
    }
    let target = antiunitary_final_spectrum();
    let points = n_theta * n_a * n_b;
    let deviations = (0..points)
        .into_par_iter()
        .map(|idx| {
            let (i, rest) = (idx / (n_a * n_b), idx % (n_a * n_b));
            let (j, k) = (rest / n_b, rest % n_b);
            let p = UnitaryParams::new(
                origin.theta + TAU * i as f64 / n_theta as f64,
                origin.phi_a + TAU * j as f64 / n_a as f64,
                origin.phi_b + TAU * k as f64 / n_b as f64,
            )?;
            let v = schmidt_vector(&chi_final(&p)?)?;
            let dev = v
                .coefficients()
                .iter()
                .zip(target)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            Ok((dev, p))
        })
        .collect::<Result<Vec<_>>>()?;
    let (max_deviation, worst) =
        deviations.into_iter().fold(
            (0.0, origin),
            |acc, cur| if cur.0 > acc.0 { cur } else { acc },
        );
    Ok(GammaSummary {
        points,
        max_deviation,
        worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_tiny_grids() {
        assert!(sweep_real(1).is_err());
        assert!(sweep_complex(1, 3).is_err());
        assert!(sweep_complex(4, 0).is_err());
        assert!(sweep_gamma(0, 1, 1).is_err());
    }

    #[test]
    fn quarter_grid() {
        let r = sweep_real(4).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r[0].observed, PairLabel::Equal);
        assert_eq!(r[1].observed, PairLabel::Incomparable);
        assert!(r.iter().all(|x| x.delta.is_none()));
    }

    #[test]
    fn summary_counts_add_up() {
        let r = sweep_real(36).unwrap();
        let s = SweepSummary::from_records(&r);
        assert_eq!(
            s.incomparable + s.increase + s.equal + s.convertible,
            s.total
        );
    }

    #[test]
    fn gamma_origin_and_flipper() {
        assert!(sweep_gamma(1, 1, 1).unwrap().max_deviation < 1e-10);
        let f = sweep_gamma_from(UnitaryParams::flipper(), 1, 1, 1).unwrap();
        assert_eq!(f.points, 1);
        assert!(f.max_deviation < 1e-10);
    }
}
