use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DgopError {
    #[error("arity must be at least 1, got {0}")]
    BadArity(usize),
    #[error("label {0} is not an input of the element")]
    MissingLabel(u32),
    #[error("label sets collide during composition")]
    LabelCollision,
    #[error("the given map is not a bijection")]
    NotABijection,
    #[error("unknown operad name `{0}`")]
    UnknownOperad(String),
    #[error("unknown series table entry `{0}`")]
    UnknownSeries(String),
    #[error("pairing is degenerate")]
    DegeneratePairing,
    #[error("series has nonzero constant term; substitution undefined")]
    NonzeroConstantTerm,
    #[error("series transform produced a negative coefficient; wrong direction or misuse")]
    NegativeCoefficient,
    #[error("basis not available for {operad} at arity {arity}")]
    BasisUnavailable { operad: String, arity: usize },
    #[error("quotient lattice has torsion: invariant factor {0}")]
    TorsionFound(String),
}
