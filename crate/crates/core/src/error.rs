use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid grading group: {0}")]
    InvalidGroup(String),
    #[error("invalid grading in component {component}: {reason}")]
    InvalidGrading { component: String, reason: String },
    #[error("tables do not define a commutative ring with unity: {0}")]
    NotARing(String),
    #[error("tables do not define a module over the ring: {0}")]
    NotAModule(String),
    #[error("the zero ring (1 = 0) is excluded")]
    ZeroRing,
    #[error("{what} exceeds the configured bound of {limit}")]
    SizeExceeded { what: &'static str, limit: usize },
    #[error("generator {0} is not homogeneous")]
    NonHomogeneousGenerator(String),
    #[error("objects belong to different rings or modules")]
    RingMismatch,
    #[error("element index {index} out of range for a carrier of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("cannot form the quotient by the improper ideal")]
    ImproperIdeal,
    #[error("subset is not a graded ideal: {0}")]
    NotGradedIdeal(String),
    #[error("subset is not a graded submodule: {0}")]
    NotGradedSubmodule(String),
    #[error("the zero module has no natural map codomain (Ann_R(M) = R)")]
    ZeroModule,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}
