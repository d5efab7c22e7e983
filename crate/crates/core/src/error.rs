//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the exact-integer operations.
///
/// `NotCubic` and `NotMember` are deliberately *not* here: a lattice failing
/// to be cubic and a vector failing to lie in a lattice are answers, not
/// errors, and are reported as `Option` values by the operations concerned.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("coordinates are not coprime")]
    NotCoprime,
    #[error("basis is singular")]
    Singular,
    #[error("generators span rank {achieved}, need rank {required}")]
    RankDeficient { achieved: usize, required: usize },
    #[error("d² does not divide ‖v‖²")]
    SquareDivisibility,
    #[error("expected a positive integer")]
    NonPositive,
    #[error("vector is not orthogonal to the normal")]
    NotOrthogonal,
    #[error("vectors are parallel")]
    Parallel,
    #[error("d must be odd")]
    EvenD,
    #[error("p = 2: no primitive vector has squared length divisible by 4")]
    PrimeTwo,
    #[error("{0} is not an odd prime")]
    NotPrime(i128),
    #[error("edge {edge} exceeds the enumeration bound {bound}")]
    BoundExceeded { edge: i128, bound: i128 },
    #[error("box holds more than {max} points")]
    BoxTooLarge { max: i128 },
}
