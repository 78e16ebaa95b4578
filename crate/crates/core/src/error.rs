use thiserror::Error;

/// Errors raised by the simulation, circuit-building and analysis routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("two-qubit gate targets must be distinct, got ({0}, {0})")]
    RepeatedTarget(usize),

    #[error("diagonal entry {index} has modulus {modulus}, expected 1")]
    NonUnitaryDiagonal { index: usize, modulus: f64 },

    #[error("diagonal has {got} entries, expected {expected}")]
    DiagonalLength { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid depolarizing probability {0}, must lie in [0, 1]")]
    InvalidProbability(f64),

    #[error("density matrix is not a valid state: {0}")]
    InvalidDensityMatrix(String),

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("empty histogram")]
    EmptyHistogram,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("optimization diverged at iteration {iteration}: cost is {cost}")]
    Diverged { iteration: usize, cost: f64 },

    #[error("gate {0} cannot be lowered to the native gateset")]
    NotCompilable(String),

    #[error("circuit is not a QFT built by this crate: {0}")]
    NotQft(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("nonzero initial velocity is not supported")]
    NonStaticInitialState,
}

pub type Result<T> = std::result::Result<T, Error>;
