use thiserror::Error;

/// Domain errors. The CLI prints [`Error::name`] on stderr and exits with status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading exponents {0} and {1} differ by a non-integer")]
    IncompatibleBranch(String, String),
    #[error("leading coefficient is {0}, expected 1")]
    NonUnitLeadingCoefficient(String),
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("need coefficients through q^{needed}, series known through q^{known}")]
    InsufficientTruncation { needed: String, known: String },
    #[error("indicial polynomial {0} does not split over Q")]
    IrrationalIndicialRoots(String),
    #[error("root {0} is repeated")]
    DuplicateRoots(String),
    #[error("roots {0} and {1} differ by an integer")]
    CongruentRoots(String, String),
    #[error("indicial polynomial vanishes at {0} with nonzero right-hand side")]
    ResonantRoot(String),
    #[error("{0} is not a root of the indicial polynomial")]
    NotAnIndicialRoot(String),
    #[error("operator order {0} is outside the supported range")]
    UnsupportedOrder(usize),
    #[error("component {0} is identically zero")]
    DegenerateLeading(usize),
    #[error("the Wronskian vanishes to the available precision")]
    ZeroWronskian,
    #[error("12 times the exponent sum {0} is not an integer")]
    NotTUnitarizableData(String),
    #[error("dimension {d} does not divide 12 times the exponent sum {sum}")]
    DivisibilityViolation { d: usize, sum: String },
    #[error("exponent {0} appears more than once")]
    DuplicateExponents(String),
    #[error("exponent {0} is outside [0,1)")]
    ExponentOutOfRange(String),
    #[error("cusp parameter {0} is outside [0,12)")]
    CuspParameterOutOfRange(String),
    #[error("dimension {0} is not supported, expected 1..=5")]
    UnsupportedDimension(usize),
    #[error("dimension 4 needs the representation class rho0 or rho1")]
    MissingClass,
    #[error("{0}")]
    RankDeficient(String),
    #[error("{0}")]
    NoDeltaDivisibleCombination(String),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Variant name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IncompatibleBranch(..) => "IncompatibleBranch",
            Error::NonUnitLeadingCoefficient(..) => "NonUnitLeadingCoefficient",
            Error::DivisionByZeroSeries => "DivisionByZeroSeries",
            Error::InsufficientTruncation { .. } => "InsufficientTruncation",
            Error::IrrationalIndicialRoots(..) => "IrrationalIndicialRoots",
            Error::DuplicateRoots(..) => "DuplicateRoots",
            Error::CongruentRoots(..) => "CongruentRoots",
            Error::ResonantRoot(..) => "ResonantRoot",
            Error::NotAnIndicialRoot(..) => "NotAnIndicialRoot",
            Error::UnsupportedOrder(..) => "UnsupportedOrder",
            Error::DegenerateLeading(..) => "DegenerateLeading",
            Error::ZeroWronskian => "ZeroWronskian",
            Error::NotTUnitarizableData(..) => "NotTUnitarizableData",
            Error::DivisibilityViolation { .. } => "DivisibilityViolation",
            Error::DuplicateExponents(..) => "DuplicateExponents",
            Error::ExponentOutOfRange(..) => "ExponentOutOfRange",
            Error::CuspParameterOutOfRange(..) => "CuspParameterOutOfRange",
            Error::UnsupportedDimension(..) => "UnsupportedDimension",
            Error::MissingClass => "MissingClass",
            Error::RankDeficient(..) => "RankDeficient",
            Error::NoDeltaDivisibleCombination(..) => "NoDeltaDivisibleCombination",
            Error::Parse(..) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
