use thiserror::Error;

/// Structural violations raised while constructing domain values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid objective name `{0}`: must be non-empty and contain no whitespace")]
    InvalidObjective(String),
    #[error("duplicate objective `{0}`")]
    DuplicateObjective(String),
    #[error("universe must declare at least one objective")]
    EmptyUniverse,
    #[error("unknown objective `{0}`")]
    UnknownObjective(String),
    #[error("alternative `{0}` offers no objectives")]
    EmptyOffers(String),
    #[error("individual `{id}`: membership of `{objective}` is {value}, outside [0, 1]")]
    MembershipOutOfRange {
        id: String,
        objective: String,
        value: String,
    },
    #[error("individual `{id}` has {found} membership values, universe has {expected}")]
    MembershipLength {
        id: String,
        expected: usize,
        found: usize,
    },
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("invalid id `{0}`: must be non-empty and contain no whitespace")]
    InvalidId(String),
    #[error("environment must contain at least one alternative")]
    EmptyEnvironment,
    #[error("society must contain at least one individual")]
    EmptySociety,
    #[error("objective sets range over universes of different sizes ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },
}

/// Failures of a single utility measurement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("individual `{0}` is fuzzy; the cardinal measures need a crisp individual")]
    NonCrispIndividual(String),
    #[error("individual `{0}` requires no objectives")]
    EmptyIndividual(String),
    #[error("individual `{0}` has zero total membership over the universe")]
    ZeroMembershipMass(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvaluationError {
    #[error("alternative `{alternative}`: {source}")]
    Alternative {
        alternative: String,
        #[source]
        source: MeasureError,
    },
    #[error("individual `{individual}`: {source}")]
    Individual {
        individual: String,
        #[source]
        source: Box<EvaluationError>,
    },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("profile {position} belongs to `{found}`, expected `{expected}`")]
    ProfileOrder {
        position: usize,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
}
