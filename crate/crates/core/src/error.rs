use thiserror::Error;

/// Errors raised by algebra construction and verification.
///
/// Residual polynomials are carried pre-rendered so the error stays
/// independent of the scalar type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operands belong to different generator sets")]
    GeneratorMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator name `{0}` is already in use")]
    NameCollision(String),
    #[error("degree mismatch for `{what}`: expected {expected}, found {found}")]
    DegreeMismatch { what: String, expected: i64, found: i64 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("differential is not nilpotent: {}", format_residuals(.0))]
    NotNilpotent(Vec<(String, String)>),
    #[error("not a chain map: {}", format_residuals(.0))]
    NotChainMap(Vec<(String, String)>),
    #[error("element is not closed: d = {0}")]
    NotClosed(String),
    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("structure constants are not antisymmetric in ({0}, {1})")]
    NotAntisymmetric(String, String),
    #[error("bilinear form is not invariant")]
    NonInvariantForm,
    #[error("bilinear form is not symmetric")]
    NonSymmetricForm,
    #[error("matrix realization is inconsistent: {0}")]
    InconsistentRealization(String),
    #[error("cocycle has even degree {0}")]
    EvenCocycle(usize),
    #[error("element is not basic: it has components outside the shifted generators")]
    NotBasic,
    #[error("graded component of degree {0} is infinite-dimensional")]
    InfiniteComponent(usize),
    #[error("no transgression data: {0}")]
    NoTransgression(String),
    #[error("element is not in the span of the given classes")]
    NotInSpan,
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn format_residuals(r: &[(String, String)]) -> String {
    r.iter()
        .map(|(g, p)| format!("{g}: {p}"))
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
