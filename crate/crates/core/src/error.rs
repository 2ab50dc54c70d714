use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("malformed cycle notation: {0}")]
    ParseCycles(String),

    #[error("repeated point {0} in cycle notation")]
    RepeatedPoint(usize),

    #[error("images are not a bijection")]
    NotBijective,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group is not transitive")]
    NotTransitive,

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("outside supported regime: {0}")]
    RegimeExceeded(String),

    #[error("witness `{name}`: {problem}")]
    Witness { name: String, problem: String },

    #[error("unknown group descriptor: {0}")]
    UnknownGroup(String),

    #[error("singular matrix used as group generator")]
    SingularMatrix,

    #[error("degenerate coset graph: {0}")]
    DegenerateCosetGraph(String),

    #[error("hypotheses not met: {0}")]
    Hypothesis(String),

    #[error("manifest: {0}")]
    Manifest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
