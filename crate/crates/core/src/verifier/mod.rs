//! Finite-field cross-checks against the minors of the reduced Kalman matrix.

pub mod field;
mod hilbert_function;
mod jacobian;
mod kalman;

pub use field::{PrimeFieldMatrix, DEFAULT_PRIME};
pub use hilbert_function::{
    numeric_hilbert_function, numeric_hilbert_function_with, HfConfig, NumericHilbertFunction,
};
pub use jacobian::{expected_codim, jacobian_codim};
pub use kalman::{
    minors_vanish, reduced_kalman_matrix, sample_generic, sample_member, KalmanPoint,
};
