//! Nielsen's majorization test for deterministic LOCC conversion of pure
//! bipartite states, and the resulting pair classification.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::state::SchmidtVector;

/// Slack on every partial-sum inequality. Ties count as satisfied.
pub const MAJORIZATION_TOL: f64 = 1e-10;

/// Running sums `Σ_{i<=k} v_i`, one per `k`.
pub fn partial_sums(v: &[f64]) -> Vec<f64> {
    v.iter()
        .scan(0.0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// True iff `a ≺ b`: every partial sum of `a` is at most the matching partial
/// sum of `b`, i.e. a state with Schmidt vector `a` converts to one with `b`
/// by deterministic LOCC. Shorter vectors are zero-padded.
pub fn majorizes(b: &SchmidtVector, a: &SchmidtVector) -> bool {
    let n = a.len().max(b.len());
    let sa = partial_sums(&a.padded(n));
    let sb = partial_sums(&b.padded(n));
    sa.iter().zip(&sb).all(|(x, y)| *x <= *y + MAJORIZATION_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairLabel {
    /// Source converts to destination, not conversely.
    ConvertibleForward,
    /// Destination converts to source, not conversely.
    ConvertibleBackward,
    /// Both directions convert.
    Equal,
    Incomparable,
}

impl PairLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairLabel::ConvertibleForward => "CONVERTIBLE_FORWARD",
            PairLabel::ConvertibleBackward => "CONVERTIBLE_BACKWARD",
            PairLabel::Equal => "EQUAL",
            PairLabel::Incomparable => "INCOMPARABLE",
        }
    }

    /// Label of the same pair with source and destination exchanged.
    pub fn mirrored(&self) -> Self {
        match self {
            PairLabel::ConvertibleForward => PairLabel::ConvertibleBackward,
            PairLabel::ConvertibleBackward => PairLabel::ConvertibleForward,
            other => *other,
        }
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairVerdict {
    pub label: PairLabel,
    pub partial_sums_src: Vec<f64>,
    pub partial_sums_dst: Vec<f64>,
}

pub fn classify_pair(src: &SchmidtVector, dst: &SchmidtVector) -> PairVerdict {
    let forward = majorizes(dst, src);
    let backward = majorizes(src, dst);
    let label = match (forward, backward) {
        (true, true) => PairLabel::Equal,
        (true, false) => PairLabel::ConvertibleForward,
        (false, true) => PairLabel::ConvertibleBackward,
        (false, false) => PairLabel::Incomparable,
    };
    let n = src.len().max(dst.len());
    PairVerdict {
        label,
        partial_sums_src: partial_sums(&src.padded(n)),
        partial_sums_dst: partial_sums(&dst.padded(n)),
    }
}

/// The two-clause incomparability test for three strictly decreasing
/// Schmidt coefficients: incomparable iff the largest and smallest entries
/// move in the same direction.
///
/// Strictness and both clauses use [`MAJORIZATION_TOL`], which keeps the
/// result identical to [`classify_pair`] including its tie convention.
/// Inputs that are not strictly decreasing yield [`Error::Precondition`];
/// use [`classify_pair`] for those.
pub fn incomparable_strict3(a: &SchmidtVector, b: &SchmidtVector) -> Result<bool> {
    let (a, b) = (strict3(a, "first")?, strict3(b, "second")?);
    let tol = MAJORIZATION_TOL;
    Ok((a[0] > b[0] + tol && a[2] > b[2] + tol) || (a[0] < b[0] - tol && a[2] < b[2] - tol))
}

fn strict3<'a>(v: &'a SchmidtVector, which: &str) -> Result<&'a [f64]> {
    let c = v.coefficients();
    if c.len() != 3 {
        return Err(Error::Precondition(format!(
            "{which} vector has {} entries, expected 3",
            c.len()
        )));
    }
    if !(c[0] > c[1] + MAJORIZATION_TOL && c[1] > c[2] + MAJORIZATION_TOL) {
        return Err(Error::Precondition(format!(
            "{which} vector {c:?} is not strictly decreasing"
        )));
    }
    Ok(c)
}
