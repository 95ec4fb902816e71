use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("modulus must be at least 2")]
    ModulusTooSmall,

    #[error("modulus {modulus} exceeds the configured maximum {max}")]
    ModulusTooLarge { modulus: u32, max: u32 },

    #[error("member {value} out of range for modulus {modulus}")]
    MemberOutOfRange { value: u32, modulus: u32 },

    #[error("duplicate member {value}")]
    DuplicateMember { value: u32 },

    #[error("malformed set literal: {0}")]
    Parse(String),

    #[error("undefined period for the empty set")]
    UndefinedPeriod,

    #[error("operation undefined for the empty set")]
    EmptySet,

    #[error("cardinality {cardinality} out of range for modulus {modulus}")]
    InvalidCardinality { modulus: u32, cardinality: u32 },

    #[error("not a half-cardinality set: need even modulus and exactly c/2 members")]
    NotHalfCardinality,

    #[error(
        "enumeration too large: C({modulus},{cardinality}) = {count} subsets exceeds budget {budget}"
    )]
    EnumerationTooLarge {
        modulus: u32,
        cardinality: u32,
        count: u128,
        budget: u64,
    },

    #[error("not coprime: gcd({modulus},{cardinality}) = {gcd}")]
    NotCoprime {
        modulus: u32,
        cardinality: u32,
        gcd: u32,
    },

    #[error("irreducible (type I): gcd(c,d) = 1")]
    Irreducible,

    #[error("not maximally even")]
    NotMaximallyEven,

    #[error("out of theorem scope: modulus {0} is not a composite number greater than 12")]
    OutOfTheoremScope(u32),

    #[error("zero denominator in rational offset")]
    ZeroDenominator,

    #[error("span {span} out of range for cardinality {cardinality}")]
    InvalidSpan { span: u32, cardinality: u32 },

    #[error("cardinality {cardinality} must be below half the modulus {modulus}")]
    CardinalityNotBelowHalf { modulus: u32, cardinality: u32 },

    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
