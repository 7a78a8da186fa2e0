use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("antisymmetry violated at ({0}, {1})")]
    AntisymmetryViolation(String, String),
    #[error("Jacobi identity fails for ({i}, {j}, {k}); defect {defect}")]
    JacobiViolation {
        i: String,
        j: String,
        k: String,
        defect: String,
    },
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("truncation degree {requested} exceeds available ideal degree {available}")]
    DegreeTooSmall { requested: u32, available: u32 },

    #[error("representation violates the bracket relation at ({0}, {1})")]
    BracketViolation(String, String),
    #[error("functional does not vanish on [h, h]")]
    NotSubordinate,
    #[error("functional does not vanish on the derived algebra")]
    NotACharacter,
    #[error("action escapes the module truncation at level {0}")]
    LevelExceeded(usize),
    #[error("probe level insufficient for certification: need level >= {needed}, have {have}")]
    InsufficientLevel { needed: usize, have: usize },
    #[error("central element does not act by a scalar; witness {0}")]
    NotScalarAction(String),

    #[error("no full flag of ideals found")]
    NoIdealFlag,
    #[error("relation check failed: {0}")]
    CheckFailed(String),
    #[error("no one-dimensional twist realizes the inclusion")]
    NoWitness,

    #[error("unsupported root system type {0}")]
    UnsupportedType(String),
    #[error("weight is not dominant integral after the shift")]
    NotDominantIntegral,

    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("generator {0} has no central-character annotation")]
    MissingCharacter(String),
    #[error("relation {relation} not respected by central characters; defect {defect}")]
    RelationNotRespected { relation: String, defect: String },

    #[error("unknown catalog entry {0}")]
    UnknownCatalogEntry(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
