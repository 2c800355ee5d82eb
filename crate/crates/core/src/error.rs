use std::fmt;

use thiserror::Error;

/// Which search cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetKind {
    Maps,
    Opens,
    NormalPairs,
    Points,
    CoverNodes,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BudgetKind::Maps => "map",
            BudgetKind::Opens => "open-set",
            BudgetKind::NormalPairs => "normality pair",
            BudgetKind::Points => "point",
            BudgetKind::CoverNodes => "set-cover node",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate point identifier `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("basepoint `{0}` is not a point of the space")]
    BadBasepoint(String),
    #[error("spaces must be non-empty")]
    EmptySpace,
    #[error("map is not order-preserving: {0}")]
    NotContinuous(String),
    #[error("map does not send basepoint to basepoint")]
    NotPointed,
    #[error("pointed computation needs a basepoint on {0}")]
    MissingBasepoint(&'static str),
    #[error("mismatched spaces: {0}")]
    Mismatch(String),
    #[error("codomain is not path-connected")]
    NotPathConnected,
    #[error("{0} budget exceeded (cap {1})")]
    Budget(BudgetKind, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(..))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
