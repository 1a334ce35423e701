//! Detecting nonphysical local operations through pairs of pure bipartite
//! states that are incomparable under deterministic LOCC.
//!
//! A local operation that maps one member of an incomparable pair exactly
//! onto the other cannot be physical. This crate builds the joint states,
//! applies candidate operations (general anti-unitaries, and an
//! inner-product-preserving map defined only on the x, y, z spin-up kets),
//! computes Schmidt spectra two independent ways, and classifies the
//! resulting pairs with Nielsen's majorization criterion.

pub mod cases;
pub mod error;
pub mod linalg;
pub mod majorization;
pub mod qubit;
pub mod scenarios;
pub mod state;
pub mod sweep;

pub use cases::{
    predict_case, verify_prediction, CaseId, CaseVerdict, Prediction, PredictionCheck, Subcase,
};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Ket};
pub use majorization::{classify_pair, incomparable_strict3, majorizes, PairLabel, PairVerdict};
pub use qubit::{IppParams, SpinAxis, UnitaryParams};
pub use scenarios::{CubicSpectrum, PqrCoefficients};
pub use state::{
    entropy_of_entanglement, reduced_density_a, schmidt_vector, BipartiteState, SchmidtVector,
};
pub use sweep::{sweep_complex, sweep_gamma, sweep_real, GammaSummary, SweepRecord, SweepSummary};

pub use num_complex::Complex64;
