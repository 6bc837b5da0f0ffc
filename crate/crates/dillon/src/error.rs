use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field degree {degree} is outside the supported range 1..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },

    #[error("modulus {modulus:#x} does not have degree {degree}")]
    WrongModulusDegree { modulus: u64, degree: u32 },

    #[error("modulus {modulus:#x} is reducible (divisible by {factor:#x})")]
    ReducibleModulus { modulus: u64, factor: u64 },

    #[error("element {bits:#x} does not fit in GF(2^{degree})")]
    ElementOutOfRange { bits: u64, degree: u32 },

    #[error("cannot parse {0:?} as a hex element bitmask")]
    BadElementHex(String),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("zero has no discrete logarithm")]
    ZeroDiscreteLog,

    #[error("log tables are not available for this field (degree above threshold)")]
    LogTablesUnavailable,

    #[error("{divisor} does not divide {of}")]
    NotADivisor { divisor: u32, of: u32 },

    #[error("element {bits:#x} does not lie in the subfield of size 2^{degree}")]
    NotInSubfield { bits: u64, degree: u32 },

    #[error("coefficient must be nonzero")]
    ZeroCoefficient,

    #[error("component b must be a nonzero element of the output field")]
    ZeroComponent,

    #[error("bent is only defined for even input dimension, got n = {n}")]
    OddDimension { n: u32 },

    #[error("degree {degree} exceeds the limit {limit} for this operation")]
    DegreeTooLarge { degree: u32, limit: u32 },

    #[error("degree {degree} is below the minimum {minimum} for this operation")]
    DegreeTooSmall { degree: u32, minimum: u32 },

    #[error("table length {len} does not match 2^{n}")]
    BadTableLength { len: usize, n: u32 },

    #[error("table entry {entry:#x} does not fit in {k} output bits")]
    EntryOutOfRange { entry: u64, k: u32 },

    #[error("malformed table file: {0}")]
    BadTableFile(String),

    #[error("{0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
