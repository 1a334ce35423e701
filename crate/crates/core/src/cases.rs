//! Predicting the fate of the inner-product-preserving map from `(A, B)`
//! alone, and checking the prediction against direct classification.
//!
//! The sign of `B` fixes the range of the eigen-angle and the position of
//! `A` relative to 1/4 fixes whether the final extreme eigenvalues sit above
//! or below the initial ones:
//!
//! | `B` | `A < 1/4`                  | `A = 1/4`        | `A > 1/4`   |
//! |-----|----------------------------|------------------|-------------|
//! | < 0 | incomparable or increase   | incomparable     | conditional |
//! | = 0 | entanglement increase      | not incomparable | not incomparable |
//! | > 0 | incomparable or increase   | incomparable     | conditional |
//!
//! For the conditional cells two boundary expressions are in circulation.
//! Both are evaluated and recorded; the one that decides is the one that
//! matches direct classification (see [`BoundaryForm`]).

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::majorization::{classify_pair, PairLabel, PairVerdict, MAJORIZATION_TOL};
use crate::qubit::IppParams;
use crate::scenarios::{build_pi_initial, cubic_coefficients, pi_final, pqr};
use crate::state::{entropy_of_entanglement, schmidt_vector};

/// Half-width of the bands around `B = 0` and `A = 1/4`.
pub const CASE_BAND: f64 = 1e-12;

const HALF_SQRT_3: f64 = 0.866_025_403_784_438_6;

/// A boundary form only counts as satisfied once it clears `±√3/2` by this
/// much. With `λ = (1 - x)/3` it is the majorization tolerance carried over
/// to `x`, so points the classifier calls ties are not called incomparable.
pub const BOUNDARY_MARGIN: f64 = 3.0 * MAJORIZATION_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseId {
    BNeg,
    BZero,
    BPos,
}

impl CaseId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::BNeg => "B_NEG",
            CaseId::BZero => "B_ZERO",
            CaseId::BPos => "B_POS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Subcase {
    ALtQuarter,
    AEqQuarter,
    AGtQuarter,
}

impl Subcase {
    pub fn as_str(&self) -> &'static str {
        match self {
            Subcase::ALtQuarter => "A_LT_QUARTER",
            Subcase::AEqQuarter => "A_EQ_QUARTER",
            Subcase::AGtQuarter => "A_GT_QUARTER",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Prediction {
    Incomparable,
    EntanglementIncrease,
    IncomparableOrIncrease,
    NotIncomparable,
    /// Decided by the recorded [`BoundaryCheck`].
    Conditional,
}

impl Prediction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Prediction::Incomparable => "INCOMPARABLE",
            Prediction::EntanglementIncrease => "ENTANGLEMENT_INCREASE",
            Prediction::IncomparableOrIncrease => "INCOMPARABLE_OR_INCREASE",
            Prediction::NotIncomparable => "NOT_INCOMPARABLE",
            Prediction::Conditional => "CONDITIONAL",
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The two candidate boundary expressions for `A > 1/4`, with `θ ∈ [0, π/3]`
/// the principal eigen-angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundaryForm {
    /// `2√A cos(2π/3 + θ) > -√3/2`: the final largest eigenvalue stays
    /// below the initial one. Decides `B < 0`, where the smallest eigenvalue
    /// always drops.
    SumForm,
    /// `2√A cos φ < √3/2`, `φ = min(θ, 2π/3 - θ)`: the final smallest
    /// eigenvalue rises above the initial one. Decides `B > 0`, where the
    /// largest eigenvalue always rises.
    MinForm,
}

impl BoundaryForm {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryForm::SumForm => "SUM_FORM",
            BoundaryForm::MinForm => "MIN_FORM",
        }
    }

    /// Why this form was chosen, for output metadata.
    pub fn note(&self) -> &'static str {
        match self {
            BoundaryForm::SumForm => {
                "B<0: min-form is identically false for theta in [0, pi/6); sum-form decides"
            }
            BoundaryForm::MinForm => {
                "B>0: sum-form is identically false for A>1/4, theta in (pi/6, pi/3]; min-form decides (validated by sweep)"
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryCheck {
    pub form: BoundaryForm,
    pub sum_form_value: f64,
    pub min_form_value: f64,
    pub sum_form_holds: bool,
    pub min_form_holds: bool,
    /// Verdict of the deciding form.
    pub implies_incomparable: bool,
}

impl BoundaryCheck {
    fn evaluate(big_a: f64, big_b: f64, form: BoundaryForm) -> Self {
        let angle = eigen_angle(big_a, big_b);
        let s = big_a.max(0.0).sqrt();
        let phi = angle.min(2.0 * PI / 3.0 - angle);
        let sum_form_value = 2.0 * s * (2.0 * PI / 3.0 + angle).cos();
        let min_form_value = 2.0 * s * phi.cos();
        let sum_form_holds = sum_form_value > -HALF_SQRT_3 + BOUNDARY_MARGIN;
        let min_form_holds = min_form_value < HALF_SQRT_3 - BOUNDARY_MARGIN;
        let implies_incomparable = match form {
            BoundaryForm::SumForm => sum_form_holds,
            BoundaryForm::MinForm => min_form_holds,
        };
        Self {
            form,
            sum_form_value,
            min_form_value,
            sum_form_holds,
            min_form_holds,
            implies_incomparable,
        }
    }

    pub fn deciding_value(&self) -> f64 {
        match self.form {
            BoundaryForm::SumForm => self.sum_form_value,
            BoundaryForm::MinForm => self.min_form_value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseVerdict {
    pub case_id: CaseId,
    pub subcase: Subcase,
    pub predicted: Prediction,
    /// Value of the deciding boundary expression, for `Conditional` only.
    pub condition_value: Option<f64>,
    pub boundary: Option<BoundaryCheck>,
}

impl CaseVerdict {
    /// Whether an observed classification of (initial, final) is what this
    /// verdict predicts.
    pub fn admits(&self, observed: PairLabel) -> bool {
        use PairLabel::*;
        match self.predicted {
            Prediction::Incomparable => observed == Incomparable,
            Prediction::EntanglementIncrease => observed == ConvertibleBackward,
            Prediction::IncomparableOrIncrease => {
                matches!(observed, Incomparable | ConvertibleBackward)
            }
            Prediction::NotIncomparable => observed != Incomparable,
            Prediction::Conditional => {
                let incomparable = self.boundary.is_some_and(|b| b.implies_incomparable);
                (observed == Incomparable) == incomparable
            }
        }
    }
}

/// Principal eigen-angle `arccos(-B / 2A^{3/2}) / 3`, zero when `A` is
/// degenerate.
fn eigen_angle(big_a: f64, big_b: f64) -> f64 {
    if big_a < crate::linalg::DEGENERATE_A {
        return 0.0;
    }
    (-big_b / (2.0 * big_a.powf(1.5))).clamp(-1.0, 1.0).acos() / 3.0
}

pub fn predict_case(big_a: f64, big_b: f64) -> CaseVerdict {
    let case_id = if big_b.abs() < CASE_BAND {
        CaseId::BZero
    } else if big_b < 0.0 {
        CaseId::BNeg
    } else {
        CaseId::BPos
    };
    let subcase = if (big_a - 0.25).abs() < CASE_BAND {
        Subcase::AEqQuarter
    } else if big_a < 0.25 {
        Subcase::ALtQuarter
    } else {
        Subcase::AGtQuarter
    };

    let (predicted, form) = match (case_id, subcase) {
        (CaseId::BZero, Subcase::ALtQuarter) => (Prediction::EntanglementIncrease, None),
        (CaseId::BZero, _) => (Prediction::NotIncomparable, None),
        (_, Subcase::AEqQuarter) => (Prediction::Incomparable, None),
        (_, Subcase::ALtQuarter) => (Prediction::IncomparableOrIncrease, None),
        (CaseId::BNeg, Subcase::AGtQuarter) => {
            (Prediction::Conditional, Some(BoundaryForm::SumForm))
        }
        (CaseId::BPos, Subcase::AGtQuarter) => {
            (Prediction::Conditional, Some(BoundaryForm::MinForm))
        }
    };
    let boundary = form.map(|f| BoundaryCheck::evaluate(big_a, big_b, f));
    CaseVerdict {
        case_id,
        subcase,
        predicted,
        condition_value: boundary.map(|b| b.deciding_value()),
        boundary,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictionCheck {
    pub big_a: f64,
    pub big_b: f64,
    pub predicted: CaseVerdict,
    pub observed: PairVerdict,
    pub entropy_initial: f64,
    pub entropy_final: f64,
    /// `E(final) - E(initial)` in bits.
    pub entropy_delta: f64,
    pub agree: bool,
}

/// Classifies (initial, final) directly from the constructed states and
/// compares with [`predict_case`].
pub fn verify_prediction(params: &IppParams) -> Result<PredictionCheck> {
    let initial = schmidt_vector(&build_pi_initial())?;
    let fin = schmidt_vector(&pi_final(params)?)?;
    let observed = classify_pair(&initial, &fin);
    let (big_a, big_b) = cubic_coefficients(&pqr(params));
    let predicted = predict_case(big_a, big_b);
    let entropy_initial = entropy_of_entanglement(&initial);
    let entropy_final = entropy_of_entanglement(&fin);
    Ok(PredictionCheck {
        big_a,
        big_b,
        agree: predicted.admits(observed.label),
        predicted,
        observed,
        entropy_initial,
        entropy_final,
        entropy_delta: entropy_final - entropy_initial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn flipping_point() {
        let v = predict_case(0.25, 0.25);
        assert_eq!(v.case_id, CaseId::BPos);
        assert_eq!(v.subcase, Subcase::AEqQuarter);
        assert_eq!(v.predicted, Prediction::Incomparable);
        assert_eq!(v.condition_value, None);
    }

    #[test]
    fn identity_point() {
        let v = predict_case(0.25, 0.0);
        assert_eq!(v.case_id, CaseId::BZero);
        assert_eq!(v.predicted, Prediction::NotIncomparable);
    }

    #[test]
    fn b_zero_below_quarter_increases() {
        assert_eq!(
            predict_case(1.0 / 6.0, 0.0).predicted,
            Prediction::EntanglementIncrease
        );
        // φ = 67.5° realizes A = 1/6, B = 0 for real amplitudes
        let phi = 67.5f64.to_radians();
        let (a, b) = crate::scenarios::real_ab(phi.cos(), phi.sin()).unwrap();
        assert!((a - 1.0 / 6.0).abs() < 1e-15 && b.abs() < 1e-15);
    }

    #[test]
    fn bands() {
        assert_eq!(predict_case(0.25 + 5e-13, -5e-13).case_id, CaseId::BZero);
        assert_eq!(
            predict_case(0.25 + 5e-13, 1e-3).subcase,
            Subcase::AEqQuarter
        );
        assert_eq!(
            predict_case(0.2, -1e-3).predicted,
            Prediction::IncomparableOrIncrease
        );
        assert_eq!(
            predict_case(0.2, 1e-3).predicted,
            Prediction::IncomparableOrIncrease
        );
    }

    #[test]
    fn conditional_records_both_forms() {
        let v = predict_case(1.0 / 3.0, 0.25);
        assert_eq!(v.predicted, Prediction::Conditional);
        let b = v.boundary.unwrap();
        assert_eq!(b.form, BoundaryForm::MinForm);
        assert_eq!(v.condition_value, Some(b.min_form_value));
        // θ ∈ (π/6, π/3] for B > 0, so cos(2π/3 + θ) < -√3/2 and 2√A > 1
        assert!(!b.sum_form_holds);

        let v = predict_case(0.3, -0.01);
        assert_eq!(v.boundary.unwrap().form, BoundaryForm::SumForm);
        assert!(!v.boundary.unwrap().min_form_holds);
    }

    #[test]
    fn admits_table() {
        let v = predict_case(0.2, 0.01);
        assert!(v.admits(PairLabel::Incomparable));
        assert!(v.admits(PairLabel::ConvertibleBackward));
        assert!(!v.admits(PairLabel::ConvertibleForward));
        let n = predict_case(0.25, 0.0);
        assert!(n.admits(PairLabel::Equal) && !n.admits(PairLabel::Incomparable));
    }

    #[test]
    fn verification_examples() {
        let f = verify_prediction(&IppParams::flipping()).unwrap();
        assert_eq!(f.observed.label, PairLabel::Incomparable);
        assert!(f.agree);

        let h = verify_prediction(&IppParams::real(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap()).unwrap();
        assert_eq!(h.observed.label, PairLabel::Incomparable);
        assert!(h.agree);

        let id = verify_prediction(&IppParams::identity()).unwrap();
        assert_eq!(id.observed.label, PairLabel::Equal);
        assert!(id.entropy_delta.abs() < 1e-12);
        assert!(id.agree);
    }
}
