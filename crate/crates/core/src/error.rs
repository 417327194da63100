use thiserror::Error;


/// Every failure the library reports. Variants name the violated condition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse rational {input:?} at byte {pos}")]
    Parse { input: String, pos: usize },
    #[error("table has {len} values, order {order} needs {}", order + 1)]
    ShortTable { len: usize, order: usize },
    #[error("hypergeometric term is singular: lower factor vanishes at step {step}")]
    SingularTerm { step: usize },
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("{op} needs constant term {needed}, found {found}")]
    ConstantTerm {
        op: &'static str,
        needed: &'static str,
        found: String,
    },
    #[error("beta and beta' must both be nonzero (got {beta}, {beta_p})")]
    ZeroBeta { beta: String, beta_p: String },
    #[error("trim not applicable: {0}")]
    TrimInapplicable(String),
    #[error("row {row} out of range (triangle has rows 0..={max})")]
    RowOutOfRange { row: usize, max: usize },
    #[error("normalization violated: {0}")]
    Normalization(String),
    #[error("closed form left a non-polynomial residue at z^{order}")]
    Residue { order: usize },
    #[error("Newton iteration did not converge within {0} steps")]
    NoConvergence(usize),
    #[error("derivation produced a monomial off the expected lattice at row {row}")]
    OffLattice { row: usize },
    #[error("unknown name {0:?}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
