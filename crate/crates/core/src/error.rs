use thiserror::Error;

/// Errors surfaced by simulation, coupling and harness operations.
///
/// `NumericalAbort` and `IdentityViolation` indicate a broken run (exit
/// code 3 in the CLI), everything else is a usage or configuration problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate grid")]
    DegenerateGrid,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("oracle regime exceeded; use coupled_a_distance (n = {n} > {max})")]
    OracleRegimeExceeded { n: usize, max: usize },

    #[error("state invariant violated upstream: {0}")]
    StateInvariant(String),

    #[error("non-finite state at t = {time:.6} (particle {particle})")]
    NumericalAbort { time: f64, particle: usize },

    #[error(
        "slot identity violated at slot {slot}: relative error {relative:.3e} exceeds 2^-40"
    )]
    IdentityViolation { slot: usize, relative: f64 },

    #[error("missing slot-start state for slot {0}")]
    MissingSlotState(usize),

    #[error("gap in slot indices at {0}")]
    SlotGap(usize),

    #[error("mismatched run layout: {0}")]
    MismatchedRun(String),

    #[error("validation failure: {0}")]
    ValidationFailure(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("config error: {0}")]
    Config(String),
}
