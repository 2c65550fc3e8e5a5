use std::fmt;

use crate::complex::{MultiIndex, SimplexId};
use crate::kan::{Horn, MultiHorn};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which of the two horn fills inside a `T` construction failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    /// The first fill, producing the middle face `y`.
    Y,
    /// The second fill, producing `T` itself.
    Z,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Y => f.write_str("y-stage"),
            Stage::Z => f.write_str("z-stage"),
        }
    }
}

/// A horn of either flavour, carried by [`Error::NoFiller`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnyHorn {
    Single(Horn),
    Multi(MultiHorn),
}

impl fmt::Display for AnyHorn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyHorn::Single(h) => h.fmt(f),
            AnyHorn::Multi(h) => h.fmt(f),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("duplicate simplex id {0}")]
    DuplicateSimplex(SimplexId),
    #[error("simplex {id} declared at degree {degree} above truncation {truncation}")]
    DegreeAboveTruncation { id: SimplexId, degree: usize, truncation: usize },
    #[error("simplex {id} declared at multi-index {index} with wrong arity (expected {axes} axes)")]
    WrongArity { id: SimplexId, index: MultiIndex, axes: usize },
    #[error("face entry for unknown simplex {0}")]
    UnknownSimplex(SimplexId),
    #[error("face {index} of simplex {simplex} is out of range")]
    FaceIndexOutOfRange { simplex: SimplexId, axis: Option<usize>, index: usize },
    #[error("face {index} of simplex {simplex} declared twice")]
    DuplicateFace { simplex: SimplexId, axis: Option<usize>, index: usize },
    #[error("face {index} of simplex {simplex} points to undeclared simplex {target}")]
    DanglingFace { simplex: SimplexId, axis: Option<usize>, index: usize, target: SimplexId },
    #[error("face {index} of simplex {simplex} points to {target}, which has the wrong degree")]
    FaceWrongDegree { simplex: SimplexId, axis: Option<usize>, index: usize, target: SimplexId },
    #[error("face {index} of simplex {simplex} is missing")]
    MissingFace { simplex: SimplexId, axis: Option<usize>, index: usize },
    #[error("axis count must be at least 1")]
    NoAxes,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("horn is malformed: {0}")]
    MalformedHorn(String),
    #[error("horn faces {i} and {j} are incompatible")]
    IncompatibleHorn { i: usize, j: usize },
    #[error("horn faces ({p}, {i}) and ({q}, {j}) are incompatible")]
    IncompatibleMultiHorn { p: usize, i: usize, q: usize, j: usize },
    #[error("index {index} out of range for simplex {simplex}")]
    BadIndex { simplex: SimplexId, index: usize },
    #[error("degree {requested} exceeds truncation {truncation}")]
    BeyondTruncation { requested: usize, truncation: usize },
    #[error("{}no filler for {horn}", stage.map(|s| format!("{s}: ")).unwrap_or_default())]
    NoFiller { stage: Option<Stage>, horn: AnyHorn },

    #[error("horizon {horizon} needs truncation at least {}, input has {truncation}", horizon + 2)]
    InsufficientTruncation { horizon: usize, truncation: usize },
    #[error("input fails the face identities ({0} violations)")]
    InvalidComplex(usize),
    #[error("degeneracy {index} of simplex {simplex} requested before its prerequisites")]
    InductionOrder { simplex: SimplexId, index: usize },
    #[error("internal consistency failure at {stage}: {detail}")]
    Inconsistent { stage: Stage, detail: String },

    #[error("group table: {0}")]
    Group(String),
}
