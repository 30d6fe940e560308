//! Crate-wide error type.

/// Errors reported by game constructors, checkers and samplers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty deviation set for player {player}")]
    EmptyDeviationSet { player: usize },

    #[error("player index {player} out of range for a {n}-player game")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("profile has {found} strategies, expected {expected}")]
    ProfileLength { expected: usize, found: usize },

    #[error("epsilon must be finite and >= 0, got {epsilon}")]
    InvalidEpsilon { epsilon: f64 },

    #[error("probability {value} outside [0, 1]")]
    ProbabilityOutOfRange { value: f64 },

    #[error("security level {level} outside [0, {max}]")]
    LevelOutOfRange { level: f64, max: f64 },

    #[error("invalid game parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("additive-increase parameter must be >= 0, got {alpha}")]
    NegativeAlpha { alpha: f64 },

    #[error("aggregate opponent rate must be > 0 for the closed-form gain")]
    ZeroAggregate,

    #[error("grid step {step} does not divide the interval length {length}")]
    StepDoesNotDivide { step: f64, length: f64 },

    #[error("enumeration of {profiles} profiles exceeds the guard of {limit}")]
    EnumerationTooLarge { profiles: u128, limit: u128 },

    #[error(
        "distribution support [{lo}, {hi}] extends outside the strategy space [{space_lo}, {space_hi}]"
    )]
    SupportOutsideSpace {
        lo: f64,
        hi: f64,
        space_lo: f64,
        space_hi: f64,
    },

    #[error("sample count must be >= 1")]
    ZeroSamples,

    #[error("max_rounds must be >= 1")]
    ZeroRounds,

    #[error("invalid topology: {reason}")]
    InvalidTopology { reason: String },

    #[error("topology parse error at line {line}: {reason}")]
    TopologyParse { line: usize, reason: String },

    #[error("full-subset deviations are limited to {limit} nodes, got {n}")]
    SubsetGuard { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
