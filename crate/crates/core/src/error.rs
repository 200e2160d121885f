use thiserror::Error;

/// Errors raised by field construction, ideal arithmetic and the experiment drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("defining polynomial must be monic of degree >= 1")]
    NonMonic,
    #[error("defining polynomial is not squarefree (zero discriminant)")]
    NotSquarefree,
    #[error("defining polynomial has the rational root {0}")]
    RationalRootFound(i64),
    #[error("root finding failed: residual {0:e} above tolerance")]
    RootFindingFailed(f64),
    #[error("power-basis matrix is singular")]
    SingularBasis,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not integral")]
    NotIntegral,
    #[error("ideal {0} does not divide {1}")]
    NotDivisible(String, String),
    #[error("m and n must be distinct ideals (got {0} twice)")]
    EqualIdeals(String),
    #[error("enumeration cap exceeded: need {needed}, cap is {cap}")]
    EnumerationCapExceeded { needed: u64, cap: u64 },
    #[error("band upper limit {0} exceeds the enumeration cap {1}")]
    BandTooLarge(u64, u64),
    #[error("no generator found for {0} within search radius {1}")]
    NoGeneratorFound(String, i64),
    #[error("field is not monogenic-asserted")]
    NotMonogenic,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("config invalid: {0}")]
    ConfigInvalid(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status: 2 for bad configuration or arguments, 3 when a
    /// cap is hit, 1 for any other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConfigInvalid(_)
            | Error::InvalidArgument(_)
            | Error::NonMonic
            | Error::NotSquarefree
            | Error::RationalRootFound(_)
            | Error::NotMonogenic => 2,
            Error::EnumerationCapExceeded { .. } | Error::BandTooLarge(..) | Error::NoGeneratorFound(..) => 3,
            _ => 1,
        }
    }
}
