use thiserror::Error;

/// Which enumeration guard stopped a knitting run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CapKind {
    TotalDimension,
    ItemCount,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra is not finite dimensional within path length cap {0}")]
    NotFiniteDimensional(usize),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("structure constants are not associative at basis triple {0:?}")]
    NotAssociative((usize, usize, usize)),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("this computation requires characteristic zero")]
    UnsupportedCharacteristic,
    #[error(
        "endomorphism ring does not split over the base field (summand dimension vector {0:?})"
    )]
    NonSplitEndomorphism(Vec<usize>),
    #[error("module is projective")]
    IsProjective,
    #[error(
        "representation-infinite at cap: {kind:?} limit {limit} ({found} indecomposables found)"
    )]
    RepInfiniteAtCap {
        kind: CapKind,
        limit: usize,
        found: usize,
    },
    #[error("module not found in census (dimension vector {0:?})")]
    NotInCensus(Vec<usize>),
    #[error("set is not wide: alpha of its torsion closure differs")]
    RoundtripFailure,
    #[error("module is not in the torsion closure")]
    NotMember,
    #[error("silting check failed: {0}")]
    SiltingCheckFailure(String),
    #[error("mapping cone check failed: {0}")]
    ConeCheckFailure(String),
    #[error("localised ring cross-check failed: {0}")]
    CrossCheckFailure(String),
    #[error("reflection factorisation is not unique: {0}")]
    ReflectionNotUnique(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
