use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is malformed: {0}")]
    MalformedTable(String),
    #[error("group order {order} exceeds the supported maximum of {max}")]
    GroupTooLarge { order: usize, max: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("element {0} is not in the subgroup")]
    ElementNotInSubgroup(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("invalid phase `{0}`: expected a reduced or reducible fraction \"num/den\"")]
    InvalidPhase(String),
    #[error("3-cocycle identity fails at ({a},{b},{c},{d})")]
    CocycleViolation { a: usize, b: usize, c: usize, d: usize },
    #[error("3-cocycle is not normalized at ({a},{b},{c})")]
    CocycleNotNormalized { a: usize, b: usize, c: usize },
    #[error("coboundary condition dγ = ω fails at ({a},{b},{c})")]
    CoboundaryViolation { a: usize, b: usize, c: usize },
    #[error(
        "2-cochain is not normalized at {0}: γ(e,h) and γ(h,e) must be 1; \
         rescale γ by a 1-cochain to normalize it"
    )]
    CochainNotNormalized(usize),
    #[error("cyclic cocycle requires the standard cyclic group Z_{m}: {reason}")]
    NotCyclic { m: usize, reason: String },

    #[error("monomial module is inconsistent: {0}")]
    InvalidModule(String),
    #[error("subgroup is not normal")]
    SubgroupNotNormal,
    #[error("3-cocycle is not identically 1")]
    NontrivialOmega,
    #[error("factors are defined over different groups or cocycles")]
    MixedAmbientData,

    #[error("size limit exceeded: {needed} tuples requested, cap is {cap}")]
    SizeLimitExceeded { needed: u128, cap: u128 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeLimitExceeded { .. } => 2,
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}
