use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum ErgoError {
    /// A point or observable does not live on the system's state space.
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested operation is only defined for a structural class
    /// of systems this crate does not realize.
    #[error("unsupported system: {0}")]
    UnsupportedSystem(String),

    #[error("unsupported set: {0}")]
    UnsupportedSet(String),

    /// A documented precondition was violated; the message names it.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation needs a simple (finite-alphabet) observable.
    #[error("requires a simple observable with a finite alphabet")]
    RequiresSimpleFunction,

    /// No sampled trajectory crossed the divergence threshold.  For
    /// genuine return-time weights this is the expected outcome.
    #[error("no divergence detected: {0}")]
    NoDivergence(String),

    /// The layered construction could not place an interval the
    /// density accounting says must exist; carries the visit-average
    /// diagnostic for the searched span.
    #[error("layer construction failed: {0}")]
    ConstructionFailure(String),

    /// A stack failed its density or gap audit.
    #[error("audit failure: {0}")]
    AuditFailure(String),

    /// A witness table is missing an entry for a flagged visit.
    #[error("missing witness for layer {layer} at position {position}")]
    NoWitness { layer: u32, position: u64 },

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    /// Configuration schema violation; `path` points at the field.
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
